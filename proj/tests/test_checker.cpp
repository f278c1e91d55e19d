#include <functional>

#include "doctest.h"
#include "tt/check.hpp"
#include "tt/nbe.hpp"
#include "tt/syntax.hpp"

using namespace tt;

namespace {

DiagKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const TypeError& e) {
    return e.diag.kind;
  }
  FAIL("expected a diagnostic");
  return DiagKind::TypeMismatch;
}

}  // namespace

TEST_CASE("erase_tag strips nested singleton layers") {
  CHECK(equal(erase_tag(sing(zero_term(), sing(zero_term(), nat_term()))),
              nat_term()));
  CHECK(equal(erase_tag(nat_term()), nat_term()));
  CHECK(equal(erase_tag(fun(nat_term(), nat_term())),
              fun(nat_term(), nat_term())));
  CHECK(equal(erase_tag(sing(q_term(), u_term())), u_term()));
}

TEST_CASE("equality is decided by normalization") {
  Ctx gf = {fun(nat_term(), nat_term())};
  CHECK(eq_term(gf, fun(nat_term(), sub(nat_term(), p_sub())), q_term(),
                lam(app(sub(q_term(), p_sub()), q_term()))));
  CHECK_FALSE(eq_term({}, nat_term(), zero_term(), suc(zero_term())));
  // Distinct proof variables are equal at a proposition type.
  Ctx gp = {prf(nat_term()), prf(nat_term())};
  CHECK(eq_term(gp, prf(nat_term()), mk_var(0), mk_var(1)));
  CHECK(eq_type({}, fun(nat_term(), sub(nat_term(), p_sub())),
                fun(nat_term(), nat_term())));
  CHECK_FALSE(eq_type({}, nat_term(), u_term()));
}

TEST_CASE("type well-formedness") {
  CHECK_NOTHROW(check_type({}, sing(zero_term(), nat_term())));
  CHECK_NOTHROW(check_type({}, fun(nat_term(), nat_term())));
  CHECK_NOTHROW(check_type({}, sigma(u_term(), q_term())));
  CHECK_NOTHROW(check_type({}, prf(enum_ty(0))));
  CHECK_NOTHROW(check_type({u_term()}, q_term()));  // small type used as type
  CHECK(kind_of([] {
          check_type({}, sing(zero_term(), fun(nat_term(), nat_term())));
        }) == DiagKind::TypeMismatch);
  CHECK(kind_of([] { check_type({}, zero_term()); }) == DiagKind::NotAType);
  CHECK(kind_of([] {
          check_type({}, app(lam(q_term()), nat_term()));
        }) == DiagKind::NotNormalInput);
}

TEST_CASE("term checking accepts the classic judgements") {
  Ctx gs = {sing(zero_term(), nat_term())};
  CHECK_NOTHROW(check_term(gs, sing(zero_term(), nat_term()), q_term()));
  CHECK_NOTHROW(check_term({}, fun(nat_term(), nat_term()), lam(q_term())));
  CHECK_NOTHROW(check_term({}, nat_term(), suc(suc(zero_term()))));
  CHECK_NOTHROW(check_term({}, enum_ty(3), cst(3, 2)));
  CHECK_NOTHROW(check_term({}, prf(nat_term()), box(zero_term())));
  CHECK_NOTHROW(check_term(
      {}, sigma(nat_term(), nat_term()), pair(zero_term(), suc(zero_term()))));
}

TEST_CASE("term checking rejects shape and arity errors") {
  CHECK(kind_of([] { check_term({}, enum_ty(3), cst(3, 5)); }) ==
        DiagKind::TypeMismatch);
  CHECK(kind_of([] { check_term({}, enum_ty(3), cst(2, 1)); }) ==
        DiagKind::TypeMismatch);
  CHECK(kind_of([] { check_term({}, nat_term(), lam(q_term())); }) ==
        DiagKind::TypeMismatch);
  CHECK(kind_of([] {
          check_term({}, fun(nat_term(), nat_term()),
                     app(lam(q_term()), zero_term()));
        }) == DiagKind::NotNormalInput);
}

TEST_CASE("star policy at the checker level") {
  CHECK(kind_of([] { check_term({}, prf(enum_ty(0)), star_term()); }) ==
        DiagKind::StarInUserSyntax);
  Mode allow;
  allow.allow_star = true;
  CHECK_NOTHROW(check_term({}, prf(enum_ty(0)), star_term(), allow));
  CHECK_NOTHROW(check_term({}, enum_ty(0), star_term(), allow));
  CHECK_NOTHROW(check_term({}, prf(nat_term()), star_term(), allow));
  // Star inhabits only propositions and the empty enumeration.
  CHECK(kind_of([&] { check_term({}, nat_term(), star_term(), allow); }) ==
        DiagKind::TypeMismatch);
  CHECK(kind_of([&] { check_term({}, enum_ty(2), star_term(), allow); }) ==
        DiagKind::TypeMismatch);
  // Star is a neutral without an inferable type.
  CHECK(kind_of([&] { infer_type({}, star_term(), allow); }) ==
        DiagKind::NotInferable);
}

TEST_CASE("singleton checking is equality-gated") {
  // zero checks at {zero : Nat} but suc zero does not.
  CHECK_NOTHROW(check_term({}, sing(zero_term(), nat_term()), zero_term()));
  CHECK(kind_of([] {
          check_term({}, sing(zero_term(), nat_term()), suc(zero_term()));
        }) == DiagKind::TypeMismatch);
  // Singleton coherence: acceptance implies equal normal forms.
  Ctx g = {sing(suc(zero_term()), nat_term())};
  CHECK_NOTHROW(
      check_term(g, sing(suc(zero_term()), nat_term()), q_term()));
  CHECK(equal(nbe_term(g, nat_term(), q_term()),
              nbe_term(g, nat_term(), suc(zero_term()))));
}

TEST_CASE("inference on variables and projections") {
  Ctx gn = {nat_term()};
  CHECK(equal(infer_type(gn, q_term()), nat_term()));
  Ctx gs = {sigma(nat_term(), nat_term())};
  CHECK(equal(infer_type(gs, fst(q_term())), nat_term()));
  CHECK(equal(infer_type(gs, snd(q_term())), nat_term()));
  // Dependent second projection instantiates the codomain.
  Ctx gd = {sigma(u_term(), q_term())};
  CHECK(equal(infer_type(gd, snd(q_term())),
              nbe_type(gd, app(lam(q_term()), fst(q_term())))));
  CHECK(kind_of([&] { infer_type(gn, mk_var(2)); }) == DiagKind::UnboundIndex);
  CHECK(kind_of([&] { infer_type(gn, zero_term()); }) ==
        DiagKind::NotInferable);
  CHECK(kind_of([&] { infer_type(gn, fst(q_term())); }) ==
        DiagKind::ExpectedSigma);
}

TEST_CASE("inference on applications") {
  Ctx g = {fun(nat_term(), nat_term())};
  CHECK(equal(infer_type(g, app(q_term(), zero_term())), nat_term()));
  CHECK(kind_of([&] { infer_type(g, app(q_term(), lam(q_term()))); }) ==
        DiagKind::TypeMismatch);
  Ctx gn = {nat_term()};
  CHECK(kind_of([&] { infer_type(gn, app(q_term(), zero_term())); }) ==
        DiagKind::ExpectedFunction);
  // A singleton-typed function applies after tag erasure.
  Ctx gf = {sing(lam(q_term()), fun(nat_term(), nat_term()))};
  CHECK(equal(infer_type(gf, app(q_term(), zero_term())), nat_term()));
}

TEST_CASE("inference on natrec") {
  Ctx g = {nat_term()};
  TermPtr rec = natrec(nat_term(), zero_term(), lam(lam(suc(q_term()))),
                       q_term());
  CHECK(equal(infer_type(g, rec), nat_term()));
  // Scrutinee must be a natural.
  Ctx ge = {enum_ty(2)};
  CHECK(kind_of([&] {
          infer_type(ge, natrec(nat_term(), zero_term(),
                                lam(lam(suc(q_term()))), q_term()));
        }) == DiagKind::ExpectedNat);
  // Base must match the motive at zero.
  CHECK(kind_of([&] {
          infer_type(g, natrec(nat_term(), cst(2, 0),
                               lam(lam(suc(q_term()))), q_term()));
        }) == DiagKind::TypeMismatch);
}

TEST_CASE("inference on case") {
  Ctx g = {enum_ty(2)};
  TermPtr c = case_of(2, nat_term(), {zero_term(), suc(zero_term())},
                      q_term());
  CHECK(equal(infer_type(g, c), nat_term()));
  CHECK(kind_of([&] {
          infer_type(g, case_of(3, nat_term(),
                                {zero_term(), zero_term(), zero_term()},
                                q_term()));
        }) == DiagKind::ExpectedEnum);
  Ctx gn = {nat_term()};
  CHECK(kind_of([&] {
          infer_type(gn, case_of(2, nat_term(), {zero_term(), zero_term()},
                                 q_term()));
        }) == DiagKind::ExpectedEnum);
  // Stored arity and branch count must agree.
  auto malformed = std::make_shared<Term>();
  malformed->tag = Tm::Case;
  malformed->n = 2;
  malformed->kids = {nat_term(), zero_term(), q_term()};  // one branch only
  CHECK(kind_of([&] { infer_type(g, TermPtr(malformed)); }) ==
        DiagKind::BranchCountMismatch);
}

TEST_CASE("inference on where") {
  Ctx g = {prf(nat_term())};
  CHECK(equal(infer_type(g, where(nat_term(), zero_term(), q_term())),
              nat_term()));
  // The body may use its proof variable only irrelevantly.
  CHECK(kind_of([&] {
          infer_type(g, where(nat_term(), q_term(), q_term()));
        }) == DiagKind::IrrelevanceViolation);
  // The bound variable has the underlying type, so a proof-typed body wraps
  // it in box; the wrapped body is insensitive to the proof and passes.
  CHECK(equal(infer_type(g, where(prf(nat_term()), box(q_term()), q_term())),
              prf(nat_term())));
  Ctx gn = {nat_term()};
  CHECK(kind_of([&] {
          infer_type(gn, where(nat_term(), zero_term(), q_term()));
        }) == DiagKind::ExpectedPrf);
}

TEST_CASE("context inference strips weakening spines") {
  Ctx g2 = {nat_term(), u_term()};
  Ctx r = infer_ctx(g2, p_sub());
  REQUIRE(r.size() == 1);
  CHECK(equal(r[0], u_term()));

  Ctx g3 = {nat_term(), enum_ty(2), u_term()};
  Ctx r2 = infer_ctx(g3, comp(p_sub(), p_sub()));
  REQUIRE(r2.size() == 1);
  CHECK(equal(r2[0], u_term()));

  CHECK(kind_of([&] { infer_ctx(g2, ext(id_sub(), zero_term())); }) ==
        DiagKind::NotInferable);
  CHECK(kind_of([] { infer_ctx({}, p_sub()); }) == DiagKind::UnboundIndex);
}

TEST_CASE("context validation runs left to right") {
  Ctx r = check_ctx({nat_term()});
  REQUIRE(r.size() == 1);
  CHECK(equal(r[0], nat_term()));

  // Declaration order input: U first, then a variable of type U used as a
  // type. The returned context lists the innermost entry first.
  Ctx r2 = check_ctx({u_term(), q_term()});
  REQUIRE(r2.size() == 2);
  CHECK(equal(r2[0], q_term()));
  CHECK(equal(r2[1], u_term()));

  CHECK(kind_of([] {
          check_ctx({sing(zero_term(), fun(nat_term(), nat_term()))});
        }) == DiagKind::TypeMismatch);
  // A Nat-typed variable used as a type fails the universe comparison.
  CHECK(kind_of([] { check_ctx({nat_term(), q_term()}); }) ==
        DiagKind::TypeMismatch);
}

TEST_CASE("accepted checks normalize, stay normal, and re-check") {
  struct Row {
    Ctx g;
    TermPtr ty;
    TermPtr t;
  };
  const Row rows[] = {
      {{}, fun(nat_term(), nat_term()), lam(suc(q_term()))},
      {{sing(zero_term(), nat_term())}, sing(zero_term(), nat_term()),
       q_term()},
      {{}, sigma(nat_term(), nat_term()), pair(zero_term(), zero_term())},
      {{prf(enum_ty(2))}, prf(enum_ty(2)), q_term()},
      {{enum_ty(2)}, enum_ty(2),
       case_of(2, enum_ty(2), {cst(2, 1), cst(2, 0)}, q_term())},
  };
  // Normal forms may contain ⋆ (every proof normalizes to it), so re-checking
  // them runs with the ⋆ axioms enabled; that mode exists for exactly this.
  Mode lax;
  lax.allow_star = true;
  for (const Row& row : rows) {
    TermPtr vt = nbe_type(row.g, row.ty);
    REQUIRE_NOTHROW(check_term(row.g, vt, row.t));
    TermPtr v = nbe_term(row.g, row.ty, row.t);
    CHECK(is_normal(v));
    CHECK_NOTHROW(check_term(row.g, vt, v, lax));
  }
}

TEST_CASE("mismatch diagnostics carry normal forms") {
  try {
    check_term({}, nat_term(), lam(q_term()));
    FAIL("expected a diagnostic");
  } catch (const TypeError& e) {
    REQUIRE(e.diag.kind == DiagKind::TypeMismatch);
    REQUIRE(e.diag.expected != nullptr);
    CHECK(is_normal(e.diag.expected));
  }
  try {
    Ctx g = {nat_term()};
    check_term(g, enum_ty(2), q_term());
    FAIL("expected a diagnostic");
  } catch (const TypeError& e) {
    REQUIRE(e.diag.kind == DiagKind::TypeMismatch);
    REQUIRE(e.diag.expected != nullptr);
    REQUIRE(e.diag.got != nullptr);
    CHECK(is_normal(e.diag.expected));
    CHECK(is_normal(e.diag.got));
    CHECK(equal(e.diag.got, nat_term()));
  }
}

TEST_CASE("judgements accepted without star stay accepted with it") {
  struct Row {
    Ctx g;
    TermPtr ty;
    TermPtr t;
  };
  const Row rows[] = {
      {{}, nat_term(), suc(zero_term())},
      {{}, fun(nat_term(), nat_term()), lam(q_term())},
      {{prf(nat_term())}, prf(nat_term()), q_term()},
      {{}, prf(enum_ty(1)), box(cst(1, 0))},
  };
  Mode strict;
  Mode lax;
  lax.allow_star = true;
  for (const Row& row : rows) {
    TermPtr vt = nbe_type(row.g, row.ty);
    REQUIRE_NOTHROW(check_term(row.g, vt, row.t, strict));
    CHECK_NOTHROW(check_term(row.g, vt, row.t, lax));
  }
}
