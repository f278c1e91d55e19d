#include "doctest.h"
#include "tt/syntax.hpp"

using namespace tt;

TEST_CASE("variable encoding uses weakening spines") {
  CHECK(equal(mk_var(0), q_term()));
  CHECK(equal(mk_var(1), sub(q_term(), p_sub())));
  CHECK(equal(mk_var(2), sub(q_term(), comp(p_sub(), p_sub()))));
  CHECK(equal(mk_var(3),
              sub(q_term(), comp(p_sub(), comp(p_sub(), p_sub())))));
}

TEST_CASE("var_index inverts mk_var") {
  for (unsigned i = 0; i < 12; ++i) {
    auto v = var_index(mk_var(i));
    REQUIRE(v.has_value());
    CHECK(*v == i);
  }
  CHECK_FALSE(var_index(zero_term()).has_value());
  CHECK_FALSE(var_index(sub(nat_term(), p_sub())).has_value());
  // A left-nested composition is not the canonical spine.
  CHECK_FALSE(
      var_index(sub(q_term(), comp(comp(p_sub(), p_sub()), p_sub())))
          .has_value());
}

TEST_CASE("lift weakens by composing with the projection spine") {
  CHECK(equal(lift(0, nat_term()), nat_term()));
  CHECK(equal(lift(1, nat_term()), sub(nat_term(), p_sub())));
  CHECK(equal(lift(2, q_term()), mk_var(2)));
}

TEST_CASE("neutral terms") {
  CHECK(is_neutral(q_term()));
  CHECK(is_neutral(mk_var(4)));
  CHECK(is_neutral(star_term()));
  CHECK(is_neutral(app(q_term(), zero_term())));
  CHECK(is_neutral(fst(mk_var(1))));
  CHECK(is_neutral(snd(mk_var(1))));
  CHECK(is_neutral(natrec(nat_term(), zero_term(), lam(lam(suc(q_term()))),
                          mk_var(0))));
  CHECK(is_neutral(case_of(2, nat_term(), {zero_term(), zero_term()},
                           mk_var(0))));
  CHECK(is_neutral(where(nat_term(), zero_term(), mk_var(0))));

  CHECK_FALSE(is_neutral(app(lam(q_term()), zero_term())));
  CHECK_FALSE(is_neutral(zero_term()));
  CHECK_FALSE(is_neutral(lam(q_term())));
  // Eliminators applied to canonical scrutinees are redexes.
  CHECK_FALSE(is_neutral(natrec(nat_term(), zero_term(),
                                lam(lam(suc(q_term()))), zero_term())));
  CHECK_FALSE(is_neutral(
      case_of(2, nat_term(), {zero_term(), zero_term()}, cst(2, 0))));
  CHECK_FALSE(is_neutral(fst(pair(zero_term(), zero_term()))));
}

TEST_CASE("normal forms") {
  CHECK(is_normal(u_term()));
  CHECK(is_normal(fun(nat_term(), nat_term())));
  CHECK(is_normal(sub(q_term(), p_sub())));
  CHECK(is_normal(lam(mk_var(0))));
  CHECK(is_normal(pair(zero_term(), suc(zero_term()))));
  CHECK(is_normal(sing(zero_term(), nat_term())));
  CHECK(is_normal(prf(nat_term())));
  CHECK(is_normal(box(zero_term())));
  CHECK(is_normal(cst(3, 2)));
  CHECK(is_normal(enum_ty(0)));

  CHECK_FALSE(is_normal(app(lam(q_term()), zero_term())));
  CHECK_FALSE(is_normal(sub(nat_term(), p_sub())));
  CHECK_FALSE(is_normal(sub(q_term(), id_sub())));
  CHECK_FALSE(is_normal(sub(q_term(), ext(id_sub(), zero_term()))));
  CHECK_FALSE(is_normal(lam(app(lam(q_term()), zero_term()))));
  // Q under a non-spine substitution buried in an argument.
  CHECK_FALSE(is_normal(app(q_term(), sub(zero_term(), p_sub()))));
}

TEST_CASE("every variable is neutral and normal") {
  for (unsigned i = 0; i < 10; ++i) {
    CHECK(is_neutral(mk_var(i)));
    CHECK(is_normal(mk_var(i)));
  }
}

TEST_CASE("neutral implies normal on a sample of shapes") {
  const TermPtr samples[] = {
      q_term(),
      star_term(),
      app(mk_var(2), lam(q_term())),
      fst(snd(mk_var(0))),
      natrec(nat_term(), zero_term(), lam(lam(q_term())), mk_var(3)),
      where(nat_term(), zero_term(), mk_var(1)),
  };
  for (const auto& t : samples) {
    REQUIRE(is_neutral(t));
    CHECK(is_normal(t));
  }
}

TEST_CASE("star detection descends everywhere") {
  CHECK_FALSE(contains_star(box(zero_term())));
  CHECK(contains_star(where(nat_term(), q_term(), star_term())));
  CHECK(contains_star(sub(q_term(), ext(id_sub(), star_term()))));
  CHECK(contains_star(lam(pair(zero_term(), star_term()))));
  CHECK_FALSE(contains_star(mk_var(5)));
  CHECK(contains_star(sub(star_term(), comp(p_sub(), ext(id_sub(), q_term())))));
}

TEST_CASE("structural equality") {
  CHECK(equal(fun(nat_term(), q_term()), fun(nat_term(), q_term())));
  CHECK_FALSE(equal(fun(nat_term(), q_term()), fun(nat_term(), zero_term())));
  CHECK_FALSE(equal(cst(2, 0), cst(2, 1)));
  CHECK_FALSE(equal(cst(2, 0), cst(3, 0)));
  CHECK(equal(case_of(2, nat_term(), {zero_term(), q_term()}, mk_var(0)),
              case_of(2, nat_term(), {zero_term(), q_term()}, mk_var(0))));
  CHECK(equal(id_sub(), id_sub()));
  CHECK(equal(comp(p_sub(), p_sub()), comp(p_sub(), p_sub())));
  CHECK_FALSE(equal(p_sub(), id_sub()));
  CHECK_FALSE(equal(ext(id_sub(), zero_term()), ext(id_sub(), q_term())));
}

TEST_CASE("shift_free moves free indices and keeps bound ones") {
  // Free variable under one binder: index 1 shifts, index 0 does not.
  TermPtr t = lam(app(mk_var(1), mk_var(0)));
  TermPtr shifted = shift_free(t, 0, 2);
  CHECK(equal(shifted, lam(app(mk_var(3), mk_var(0)))));
  CHECK(is_normal(shifted));

  // Cutoff excludes indices below it.
  CHECK(equal(shift_free(mk_var(0), 1, 5), mk_var(0)));
  CHECK(equal(shift_free(mk_var(1), 1, 5), mk_var(6)));

  // Binder-aware constructs: Fun codomain, Case motive, Where body.
  TermPtr f = fun(mk_var(0), mk_var(1));
  CHECK(equal(shift_free(f, 0, 1), fun(mk_var(1), mk_var(2))));
  TermPtr c = case_of(1, mk_var(1), {mk_var(0)}, mk_var(0));
  CHECK(equal(shift_free(c, 0, 1), case_of(1, mk_var(2), {mk_var(1)}, mk_var(1))));
  TermPtr w = where(mk_var(0), mk_var(1), mk_var(0));
  CHECK(equal(shift_free(w, 0, 1), where(mk_var(1), mk_var(2), mk_var(1))));

  // Zero shift is the identity.
  CHECK(equal(shift_free(t, 0, 0), t));
}

TEST_CASE("case node accessors") {
  TermPtr c = case_of(3, nat_term(), {zero_term(), suc(zero_term()), q_term()},
                      mk_var(1));
  CHECK(equal(case_motive(*c), nat_term()));
  CHECK(equal(case_branch(*c, 0), zero_term()));
  CHECK(equal(case_branch(*c, 1), suc(zero_term())));
  CHECK(equal(case_branch(*c, 2), q_term()));
  CHECK(equal(case_scrut(*c), mk_var(1)));
}

TEST_CASE("context extension binds at position zero") {
  Ctx g;
  g = ctx_extend(g, nat_term());
  g = ctx_extend(g, enum_ty(2));
  REQUIRE(g.size() == 2);
  CHECK(equal(g[0], enum_ty(2)));
  CHECK(equal(g[1], nat_term()));
}
