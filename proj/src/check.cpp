#include "tt/check.hpp"

#include <utility>

#include "tt/nbe.hpp"
#include "tt/semantics.hpp"

namespace tt {

const char* diag_kind_name(DiagKind k) {
  switch (k) {
    case DiagKind::TypeMismatch: return "TypeMismatch";
    case DiagKind::NotInferable: return "NotInferable";
    case DiagKind::NotAType: return "NotAType";
    case DiagKind::UnboundIndex: return "UnboundIndex";
    case DiagKind::StarInUserSyntax: return "StarInUserSyntax";
    case DiagKind::ExpectedFunction: return "ExpectedFunction";
    case DiagKind::ExpectedSigma: return "ExpectedSigma";
    case DiagKind::ExpectedNat: return "ExpectedNat";
    case DiagKind::ExpectedEnum: return "ExpectedEnum";
    case DiagKind::ExpectedPrf: return "ExpectedPrf";
    case DiagKind::IrrelevanceViolation: return "IrrelevanceViolation";
    case DiagKind::BranchCountMismatch: return "BranchCountMismatch";
    case DiagKind::NotNormalInput: return "NotNormalInput";
  }
  return "Unknown";
}

std::string Diagnostic::render() const {
  std::string out = diag_kind_name(kind);
  if (kind == DiagKind::TypeMismatch && expected) {
    out += ": expected " + dump(expected);
    if (expected_erased && !equal(expected_erased, expected))
      out += " (i.e. " + dump(expected_erased) + ")";
    if (got) out += ", got " + dump(got);
  } else if (kind == DiagKind::ExpectedEnum) {
    out += ": arity " + std::to_string(enum_arity);
    if (got) out += ", got " + dump(got);
  } else if (got) {
    out += ": got " + dump(got);
  }
  if (subject) out += " in " + dump(subject);
  out += " (depth " + std::to_string(context_depth) + ")";
  return out;
}

TypeError::TypeError(Diagnostic d) : diag(std::move(d)) {
  message = diag.render();
}

namespace {

[[noreturn]] void fail(DiagKind kind, const Ctx& g, TermPtr subject,
                       TermPtr expected = nullptr, TermPtr got = nullptr,
                       unsigned enum_arity = 0) {
  Diagnostic d;
  d.kind = kind;
  d.context_depth = g.size();
  d.subject = std::move(subject);
  d.expected = std::move(expected);
  if (d.expected) d.expected_erased = erase_tag(d.expected);
  d.got = std::move(got);
  d.enum_arity = enum_arity;
  throw TypeError(std::move(d));
}

TermPtr subst_one(const TermPtr& body, const TermPtr& arg) {
  return sub(body, ext(id_sub(), arg));
}

}  // namespace

TermPtr erase_tag(const TermPtr& v) {
  const TermPtr* cur = &v;
  while ((*cur)->tag == Tm::Sing) cur = &(*cur)->kids[1];
  return *cur;
}

bool eq_type(const Ctx& g, const TermPtr& a, const TermPtr& b) {
  return equal(nbe_type(g, a), nbe_type(g, b));
}

bool eq_term(const Ctx& g, const TermPtr& a, const TermPtr& t,
             const TermPtr& u) {
  return equal(nbe_term(g, a, t), nbe_term(g, a, u));
}

void check_type(const Ctx& g, const TermPtr& v, const Mode& mode) {
  if (!is_normal(v)) fail(DiagKind::NotNormalInput, g, v);
  switch (v->tag) {
    case Tm::U:
    case Tm::Nat:
    case Tm::Enum:
      return;
    case Tm::Fun:
    case Tm::Sigma:
      check_type(g, v->kids[0], mode);
      check_type(ctx_extend(g, v->kids[0]), v->kids[1], mode);
      return;
    case Tm::Sing:
      check_type(g, v->kids[1], mode);
      check_term(g, nbe_type(g, v->kids[1]), v->kids[0], mode);
      return;
    case Tm::Prf:
      check_type(g, v->kids[0], mode);
      return;
    default:
      if (is_neutral(v)) {
        check_term(g, u_term(), v, mode);
        return;
      }
      fail(DiagKind::NotAType, g, v);
  }
}

void check_term(const Ctx& g, const TermPtr& v_ty, const TermPtr& v,
                const Mode& mode) {
  if (!is_normal(v)) fail(DiagKind::NotNormalInput, g, v);

  // A singleton goal takes priority over every term-shape clause: check at
  // the underlying type, then require equality with the distinguished
  // element.
  if (v_ty->tag == Tm::Sing) {
    const TermPtr& elem = v_ty->kids[0];
    const TermPtr& under = v_ty->kids[1];
    check_term(g, under, v, mode);
    if (!eq_term(g, under, elem, v))
      fail(DiagKind::TypeMismatch, g, v, v_ty, nbe_term(g, under, v));
    return;
  }

  switch (v->tag) {
    case Tm::Fun:
    case Tm::Sigma:
      if (v_ty->tag == Tm::U) {
        check_term(g, u_term(), v->kids[0], mode);
        check_term(ctx_extend(g, v->kids[0]), u_term(), v->kids[1], mode);
        return;
      }
      break;
    case Tm::Sing:
      if (v_ty->tag == Tm::U) {
        check_term(g, u_term(), v->kids[1], mode);
        check_term(g, nbe_type(g, v->kids[1]), v->kids[0], mode);
        return;
      }
      break;
    case Tm::Nat:
    case Tm::Enum:
      if (v_ty->tag == Tm::U) return;
      break;
    case Tm::Prf:
      if (v_ty->tag == Tm::U) {
        check_term(g, u_term(), v->kids[0], mode);
        return;
      }
      break;
    case Tm::Lam:
      if (v_ty->tag == Tm::Fun) {
        check_term(ctx_extend(g, v_ty->kids[0]), v_ty->kids[1], v->kids[0],
                   mode);
        return;
      }
      break;
    case Tm::Pair:
      if (v_ty->tag == Tm::Sigma) {
        check_term(g, v_ty->kids[0], v->kids[0], mode);
        check_term(g, nbe_type(g, subst_one(v_ty->kids[1], v->kids[0])),
                   v->kids[1], mode);
        return;
      }
      break;
    case Tm::Zero:
      if (v_ty->tag == Tm::Nat) return;
      break;
    case Tm::Suc:
      if (v_ty->tag == Tm::Nat) {
        check_term(g, nat_term(), v->kids[0], mode);
        return;
      }
      break;
    case Tm::Const:
      if (v_ty->tag == Tm::Enum && v->n == v_ty->n && v->i < v->n) return;
      break;
    case Tm::Box:
      if (v_ty->tag == Tm::Prf) {
        check_term(g, v_ty->kids[0], v->kids[0], mode);
        return;
      }
      break;
    case Tm::Star:
      if (!mode.allow_star) fail(DiagKind::StarInUserSyntax, g, v, v_ty);
      if (v_ty->tag == Tm::Prf) return;
      if (v_ty->tag == Tm::Enum && v_ty->n == 0) return;
      fail(DiagKind::TypeMismatch, g, v, v_ty);
    default:
      break;
  }

  // Neutral terms: infer, erase singleton layers, and compare with the goal.
  // The guard against a singleton goal was handled above.
  if (is_neutral(v)) {
    TermPtr inferred = infer_type(g, v, mode);
    if (!eq_type(g, erase_tag(inferred), v_ty))
      fail(DiagKind::TypeMismatch, g, v, v_ty, inferred);
    return;
  }

  fail(DiagKind::TypeMismatch, g, v, v_ty);
}

TermPtr infer_type(const Ctx& g, const TermPtr& k, const Mode& mode) {
  if (auto idx = var_index(k)) {
    if (*idx >= g.size()) fail(DiagKind::UnboundIndex, g, k);
    return nbe_type(g, lift(*idx + 1, g[*idx]));
  }
  switch (k->tag) {
    case Tm::App: {
      TermPtr head_ty = erase_tag(infer_type(g, k->kids[0], mode));
      if (head_ty->tag != Tm::Fun)
        fail(DiagKind::ExpectedFunction, g, k, nullptr, head_ty);
      check_term(g, head_ty->kids[0], k->kids[1], mode);
      return nbe_type(g, subst_one(head_ty->kids[1], k->kids[1]));
    }
    case Tm::Fst: {
      TermPtr pair_ty = erase_tag(infer_type(g, k->kids[0], mode));
      if (pair_ty->tag != Tm::Sigma)
        fail(DiagKind::ExpectedSigma, g, k, nullptr, pair_ty);
      return pair_ty->kids[0];
    }
    case Tm::Snd: {
      TermPtr pair_ty = erase_tag(infer_type(g, k->kids[0], mode));
      if (pair_ty->tag != Tm::Sigma)
        fail(DiagKind::ExpectedSigma, g, k, nullptr, pair_ty);
      return nbe_type(g, subst_one(pair_ty->kids[1], fst(k->kids[0])));
    }
    case Tm::Natrec: {
      const TermPtr& motive = k->kids[0];
      const TermPtr& base = k->kids[1];
      const TermPtr& step = k->kids[2];
      const TermPtr& scrut = k->kids[3];
      Ctx g_nat = ctx_extend(g, nat_term());
      check_type(g_nat, motive, mode);
      TermPtr scrut_ty = erase_tag(infer_type(g, scrut, mode));
      if (scrut_ty->tag != Tm::Nat)
        fail(DiagKind::ExpectedNat, g, k, nullptr, scrut_ty);
      check_term(g, nbe_type(g, subst_one(motive, zero_term())), base, mode);
      // Step type: Πn:Nat. motive → motive(suc n), with the successor
      // instance normalized in the context extended by both binders.
      Ctx g_step = ctx_extend(g_nat, motive);
      TermPtr suc_inst = nbe_type(
          g_step, sub(motive, ext(comp(p_sub(), p_sub()),
                                  suc(sub(q_term(), p_sub())))));
      check_term(g, fun(nat_term(), fun(motive, suc_inst)), step, mode);
      return nbe_type(g, subst_one(motive, scrut));
    }
    case Tm::Case: {
      if (k->kids.size() != static_cast<std::size_t>(k->n) + 2)
        fail(DiagKind::BranchCountMismatch, g, k, nullptr, nullptr, k->n);
      const TermPtr& motive = case_motive(*k);
      const TermPtr& scrut = case_scrut(*k);
      check_type(ctx_extend(g, enum_ty(k->n)), motive, mode);
      TermPtr scrut_ty = erase_tag(infer_type(g, scrut, mode));
      if (scrut_ty->tag != Tm::Enum || scrut_ty->n != k->n)
        fail(DiagKind::ExpectedEnum, g, k, nullptr, scrut_ty, k->n);
      for (unsigned i = 0; i < k->n; ++i)
        check_term(g, nbe_type(g, subst_one(motive, cst(k->n, i))),
                   case_branch(*k, i), mode);
      return nbe_type(g, subst_one(motive, scrut));
    }
    case Tm::Where: {
      const TermPtr& motive = k->kids[0];
      const TermPtr& body = k->kids[1];
      const TermPtr& scrut = k->kids[2];
      check_type(g, motive, mode);
      TermPtr scrut_ty = erase_tag(infer_type(g, scrut, mode));
      if (scrut_ty->tag != Tm::Prf)
        fail(DiagKind::ExpectedPrf, g, k, nullptr, scrut_ty);
      const TermPtr& proof_ty = scrut_ty->kids[0];
      Ctx g1 = ctx_extend(g, proof_ty);
      check_term(g1, nbe_type(g1, sub(motive, p_sub())), body, mode);
      // Irrelevance: duplicating the proof variable must not change the
      // body. Compare body[⟨p∘p, q⟩] with body[p] over Γ.V.V[p] at the
      // doubly weakened motive.
      Ctx g2 = ctx_extend(g1, sub(proof_ty, p_sub()));
      TermPtr motive2 = sub(motive, subs_chain(1));
      TermPtr lhs = sub(body, ext(subs_chain(1), q_term()));
      TermPtr rhs = sub(body, p_sub());
      if (!eq_term(g2, motive2, lhs, rhs))
        fail(DiagKind::IrrelevanceViolation, g, k);
      return motive;
    }
    default:
      fail(DiagKind::NotInferable, g, k);
  }
}

Ctx infer_ctx(const Ctx& g, const SubstPtr& s) {
  if (s->tag == Sb::P) {
    if (g.empty()) fail(DiagKind::UnboundIndex, g, nullptr);
    return Ctx(g.begin() + 1, g.end());
  }
  if (s->tag == Sb::Comp && s->s1->tag == Sb::P) {
    if (g.empty()) fail(DiagKind::UnboundIndex, g, nullptr);
    return infer_ctx(Ctx(g.begin() + 1, g.end()), s->s2);
  }
  Diagnostic d;
  d.kind = DiagKind::NotInferable;
  d.context_depth = g.size();
  throw TypeError(std::move(d));
}

Ctx check_ctx(const std::vector<TermPtr>& types, const Mode& mode) {
  Ctx g;
  for (const auto& ty : types) {
    check_type(g, ty, mode);
    g = ctx_extend(g, ty);
  }
  return g;
}

}  // namespace tt
