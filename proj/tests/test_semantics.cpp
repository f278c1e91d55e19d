#include <vector>

#include "doctest.h"
#include "tt/nbe.hpp"
#include "tt/semantics.hpp"
#include "tt/syntax.hpp"
#include "tt/value.hpp"

using namespace tt;

namespace {

ValuePtr vnum(unsigned k) {
  ValuePtr v = vzero();
  for (unsigned j = 0; j < k; ++j) v = vsuc(v);
  return v;
}

TermPtr tnum(unsigned k) {
  TermPtr t = zero_term();
  for (unsigned j = 0; j < k; ++j) t = suc(t);
  return t;
}

SemFun const_nat_motive() {
  return [](const ValuePtr&) { return vnat(); };
}

// Step value for a successor-style recursor: \n. \r. suc^m r.
ValuePtr plus_step(unsigned m) {
  return vlam([m](const ValuePtr&) {
    return vlam([m](const ValuePtr& r) {
      ValuePtr out = r;
      for (unsigned j = 0; j < m; ++j) out = vsuc(out);
      return out;
    });
  });
}

// Independent oracle: interprets the same (z, s) data by a plain counting
// loop over machine integers, never touching the semantic domain.
unsigned oracle_rec(unsigned z, unsigned step_add, unsigned n) {
  unsigned r = z;
  for (unsigned j = 0; j < n; ++j) r = r + step_add;
  return r;
}

}  // namespace

TEST_CASE("application") {
  ValuePtr ident = vlam([](const ValuePtr& d) { return d; });
  CHECK(equal(readback(0, apply_v(ident, vzero())), zero_term()));
  CHECK(apply_v(vstar(), vzero())->tag == Dv::Star);
  CHECK_THROWS_AS(apply_v(vzero(), vzero()), NotAFunctionValue);
}

TEST_CASE("projections are totalized") {
  ValuePtr p = vpair(vzero(), vsuc(vzero()));
  CHECK(equal(readback(0, fst_v(p)), zero_term()));
  CHECK(equal(readback(0, snd_v(p)), suc(zero_term())));
  CHECK(fst_v(vstar())->tag == Dv::Star);
  CHECK(snd_v(vstar())->tag == Dv::Star);
  ValuePtr stuck = fst_v(vvar(0));
  REQUIRE(stuck->tag == Dv::NeFst);
  CHECK(equal(readback(1, stuck), fst(q_term())));
  CHECK(equal(readback(1, snd_v(vvar(0))), snd(q_term())));
}

TEST_CASE("natrec computation clauses") {
  SemFun f = const_nat_motive();
  CHECK(equal(readback(0, natrec_v(f, vzero(), plus_step(1), vzero())),
              zero_term()));
  CHECK(equal(readback(0, natrec_v(f, vzero(), plus_step(1), vnum(1))),
              tnum(1)));
  CHECK(natrec_v(f, vzero(), plus_step(1), vstar())->tag == Dv::Star);
  CHECK_THROWS_AS(natrec_v(f, vzero(), plus_step(1), vu()), NotANatural);
}

TEST_CASE("natrec agrees with the counting oracle on numerals") {
  struct Row {
    unsigned z;
    unsigned step_add;
  };
  const Row rows[] = {
      {0, 1},  // identity on naturals
      {3, 1},  // addition with base three
      {0, 2},  // doubling
  };
  SemFun f = const_nat_motive();
  for (const Row& row : rows) {
    for (unsigned n = 0; n <= 10; ++n) {
      ValuePtr got = natrec_v(f, vnum(row.z), plus_step(row.step_add), vnum(n));
      unsigned expect = oracle_rec(row.z, row.step_add, n);
      CHECK(equal(readback(0, got), tnum(expect)));
    }
  }
}

TEST_CASE("natrec on a neutral scrutinee reflects at the motive") {
  SemFun f = const_nat_motive();
  ValuePtr r = natrec_v(f, vzero(), plus_step(1), vvar(0));
  REQUIRE(is_neutral_value(r));
  TermPtr t = readback(1, r);
  CHECK(is_neutral(t));
  // Motive reads back under one binder; base and step are η-long.
  CHECK(equal(t, natrec(nat_term(), zero_term(),
                        lam(lam(suc(mk_var(0)))), q_term())));
}

TEST_CASE("case selects branches and matches direct lookup") {
  SemFun f = const_nat_motive();
  for (unsigned n = 1; n <= 4; ++n) {
    std::vector<ValuePtr> branches;
    for (unsigned i = 0; i < n; ++i) branches.push_back(vnum(i + 1));
    for (unsigned i = 0; i < n; ++i) {
      ValuePtr got = case_v(n, f, branches, vconst(n, i));
      // Oracle: the branch list itself, indexed directly.
      CHECK(equal(readback(0, got), tnum(i + 1)));
    }
  }
}

TEST_CASE("case star and error clauses") {
  SemFun f = const_nat_motive();
  CHECK(case_v(2, f, {vzero(), vzero()}, vstar())->tag == Dv::Star);
  CHECK_THROWS_AS(case_v(2, f, {vzero()}, vconst(2, 0)), BranchCountMismatch);
  CHECK_THROWS_AS(case_v(2, f, {vzero(), vzero()}, vconst(3, 0)),
                  NotAnEnumValue);
  CHECK_THROWS_AS(case_v(2, f, {vzero(), vzero()}, vu()), NotAnEnumValue);
}

TEST_CASE("case weak extensionality returns the scrutinee") {
  for (unsigned n = 0; n <= 4; ++n) {
    SemFun f = [n](const ValuePtr&) { return venum(n); };
    std::vector<ValuePtr> idbr;
    for (unsigned i = 0; i < n; ++i) idbr.push_back(vconst(n, i));
    ValuePtr k = vvar(0);
    ValuePtr got = case_v(n, f, idbr, k);
    CHECK(got.get() == k.get());
  }
}

TEST_CASE("evaluation of variables and substitutions") {
  ValuePtr env = vpair(vtop(), vzero());
  CHECK(equal(readback(0, eval_term(q_term(), env)), zero_term()));
  CHECK(eval_subst(id_sub(), env).get() == env.get());
  CHECK(eval_subst(empty_sub(), env)->tag == Dv::Top);

  ValuePtr env2 = vpair(vtop(), vsuc(vzero()));
  ValuePtr r = eval_subst(ext(p_sub(), zero_term()), env2);
  REQUIRE(r->tag == Dv::Pair);
  CHECK(r->kids[0]->tag == Dv::Top);
  CHECK(equal(readback(0, r->kids[1]), zero_term()));
}

TEST_CASE("evaluation computes redexes and collapses proofs") {
  CHECK(equal(readback(0, eval_term(app(lam(q_term()), zero_term()), vtop())),
              zero_term()));
  CHECK(eval_term(box(zero_term()), vtop())->tag == Dv::Star);
  CHECK(eval_term(star_term(), vtop())->tag == Dv::Star);
  // A where body runs with ⋆ substituted for the proof.
  TermPtr w = where(nat_term(), q_term(), box(zero_term()));
  CHECK(eval_term(w, vtop())->tag == Dv::Star);
  TermPtr w2 = where(nat_term(), sub(zero_term(), p_sub()), box(zero_term()));
  CHECK(equal(readback(0, eval_term(w2, vtop())), zero_term()));
}

TEST_CASE("environment shape errors surface as exceptions") {
  CHECK_THROWS_AS(eval_term(q_term(), vtop()), EnvironmentShapeError);
  CHECK_THROWS_AS(eval_subst(p_sub(), vtop()), EnvironmentShapeError);
}

TEST_CASE("pair and projection equations compose") {
  // fst (a, b) and snd (a, b) through full evaluation.
  TermPtr t1 = fst(pair(zero_term(), suc(zero_term())));
  TermPtr t2 = snd(pair(zero_term(), suc(zero_term())));
  CHECK(equal(readback(0, eval_term(t1, vtop())), zero_term()));
  CHECK(equal(readback(0, eval_term(t2, vtop())), suc(zero_term())));
}

TEST_CASE("depth limit converts runaway recursion into an error") {
  KernelConfig& cfg = kernel_config();
  std::size_t saved = cfg.depth_limit;
  cfg.depth_limit = 16;
  // (\x. x x) (\x. x x) loops under evaluation; ill-typed, so it can only be
  // reached by bypassing the checker, which is exactly what this does.
  TermPtr omega = lam(app(q_term(), q_term()));
  CHECK_THROWS_AS(eval_term(app(omega, omega), vtop()), DepthExceeded);
  cfg.depth_limit = saved;
  CHECK(equal(readback(0, eval_term(app(omega, lam(q_term())), vtop())),
              lam(q_term())));
}
