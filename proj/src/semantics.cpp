#include "tt/semantics.hpp"

#include "tt/nbe.hpp"

namespace tt {

ValuePtr apply_v(const ValuePtr& f, const ValuePtr& d) {
  switch (f->tag) {
    case Dv::Lam:
      return apply_fun(f->fn, d);
    case Dv::Star:
      return vstar();
    default:
      throw NotAFunctionValue();
  }
}

ValuePtr fst_v(const ValuePtr& d) {
  switch (d->tag) {
    case Dv::Pair:
      return d->kids[0];
    case Dv::Star:
      return vstar();
    default:
      return vfst_ne(d);
  }
}

ValuePtr snd_v(const ValuePtr& d) {
  switch (d->tag) {
    case Dv::Pair:
      return d->kids[1];
    case Dv::Star:
      return vstar();
    default:
      return vsnd_ne(d);
  }
}

ValuePtr natrec_v(const SemFun& motive, const ValuePtr& z, const ValuePtr& s,
                  const ValuePtr& d) {
  detail::DepthGuard guard;
  switch (d->tag) {
    case Dv::Zero:
      return z;
    case Dv::Suc: {
      const ValuePtr& e = d->kids[0];
      return apply_v(apply_v(s, e), natrec_v(motive, z, s, e));
    }
    case Dv::Star:
      return vstar();
    default:
      break;
  }
  if (!is_neutral_value(d)) throw NotANatural();
  // Stuck recursor: reflect at the motive's type over the scrutinee, with the
  // motive stored in reified form and base/step reified at their types.
  SemFun motive_r = [motive](const ValuePtr& e) {
    return down_t(apply_fun(motive, e));
  };
  ValuePtr z_r = down(apply_fun(motive, vzero()), z);
  ValuePtr step_ty = vfun(vnat(), [motive](const ValuePtr& e) {
    ValuePtr cod = apply_fun(motive, vsuc(e));
    return vfun(apply_fun(motive, e),
                [cod](const ValuePtr&) { return cod; });
  });
  ValuePtr s_r = down(step_ty, s);
  return up(apply_fun(motive, d),
            vnatrec_ne(std::move(motive_r), std::move(z_r), std::move(s_r), d));
}

ValuePtr case_v(unsigned n, const SemFun& motive,
                const std::vector<ValuePtr>& branches, const ValuePtr& d) {
  detail::DepthGuard guard;
  if (branches.size() != n) throw BranchCountMismatch();
  if (d->tag == Dv::Star) return vstar();
  if (d->tag == Dv::Const) {
    if (d->n != n) throw NotAnEnumValue();
    if (d->i >= n) throw BranchCountMismatch();
    return branches[d->i];
  }
  bool identity = true;
  for (unsigned i = 0; i < n; ++i) {
    const ValuePtr& b = branches[i];
    if (!(b->tag == Dv::Const && b->n == n && b->i == i)) {
      identity = false;
      break;
    }
  }
  if (identity) return d;
  if (!is_neutral_value(d)) throw NotAnEnumValue();
  SemFun motive_r = [motive](const ValuePtr& e) {
    return down_t(apply_fun(motive, e));
  };
  std::vector<ValuePtr> branches_r;
  branches_r.reserve(n);
  for (unsigned i = 0; i < n; ++i)
    branches_r.push_back(down(apply_fun(motive, vconst(n, i)), branches[i]));
  return up(apply_fun(motive, d),
            vcase_ne(n, std::move(motive_r), std::move(branches_r), d));
}

namespace {

const ValuePtr& env_fst(const ValuePtr& env) {
  if (env->tag != Dv::Pair) throw EnvironmentShapeError();
  return env->kids[0];
}

const ValuePtr& env_snd(const ValuePtr& env) {
  if (env->tag != Dv::Pair) throw EnvironmentShapeError();
  return env->kids[1];
}

}  // namespace

ValuePtr eval_term(const TermPtr& t, const ValuePtr& env) {
  detail::DepthGuard guard;
  switch (t->tag) {
    case Tm::U:
      return vu();
    case Tm::Fun: {
      TermPtr cod = t->kids[1];
      return vfun(eval_term(t->kids[0], env), [cod, env](const ValuePtr& d) {
        return eval_term(cod, vpair(env, d));
      });
    }
    case Tm::Sigma: {
      TermPtr cod = t->kids[1];
      return vsum(eval_term(t->kids[0], env), [cod, env](const ValuePtr& d) {
        return eval_term(cod, vpair(env, d));
      });
    }
    case Tm::Sing:
      return vsing(eval_term(t->kids[0], env), eval_term(t->kids[1], env));
    case Tm::Lam: {
      TermPtr body = t->kids[0];
      return vlam([body, env](const ValuePtr& d) {
        return eval_term(body, vpair(env, d));
      });
    }
    case Tm::App:
      return apply_v(eval_term(t->kids[0], env), eval_term(t->kids[1], env));
    case Tm::Q:
      return env_snd(env);
    case Tm::Sub:
      return eval_term(t->kids[0], eval_subst(t->sub, env));
    case Tm::Pair:
      return vpair(eval_term(t->kids[0], env), eval_term(t->kids[1], env));
    case Tm::Fst:
      return fst_v(eval_term(t->kids[0], env));
    case Tm::Snd:
      return snd_v(eval_term(t->kids[0], env));
    case Tm::Nat:
      return vnat();
    case Tm::Zero:
      return vzero();
    case Tm::Suc:
      return vsuc(eval_term(t->kids[0], env));
    case Tm::Natrec: {
      TermPtr motive = t->kids[0];
      SemFun f = [motive, env](const ValuePtr& d) {
        return eval_term(motive, vpair(env, d));
      };
      return natrec_v(f, eval_term(t->kids[1], env), eval_term(t->kids[2], env),
                      eval_term(t->kids[3], env));
    }
    case Tm::Enum:
      return venum(t->n);
    case Tm::Const:
      return vconst(t->n, t->i);
    case Tm::Case: {
      TermPtr motive = case_motive(*t);
      SemFun f = [motive, env](const ValuePtr& d) {
        return eval_term(motive, vpair(env, d));
      };
      std::vector<ValuePtr> branches;
      branches.reserve(t->n);
      for (unsigned i = 0; i < t->n && i + 2 < t->kids.size(); ++i)
        branches.push_back(eval_term(case_branch(*t, i), env));
      if (branches.size() != t->n) throw BranchCountMismatch();
      return case_v(t->n, f, branches, eval_term(case_scrut(*t), env));
    }
    case Tm::Prf:
      return vprf(eval_term(t->kids[0], env));
    case Tm::Box:
      if (kernel_config().proof_relevant) return eval_term(t->kids[0], env);
      return vstar();
    case Tm::Star:
      return vstar();
    case Tm::Where: {
      // The motive is not evaluated; the body sees ⋆ for the proof variable
      // (or the scrutinee's value in proof-relevant mode).
      ValuePtr arg = kernel_config().proof_relevant
                         ? eval_term(t->kids[2], env)
                         : vstar();
      return eval_term(t->kids[1], vpair(env, arg));
    }
  }
  throw InternalValueError("eval_term: unhandled term constructor");
}

ValuePtr eval_subst(const SubstPtr& s, const ValuePtr& env) {
  detail::DepthGuard guard;
  switch (s->tag) {
    case Sb::Empty:
      return vtop();
    case Sb::Id:
      return env;
    case Sb::Ext:
      return vpair(eval_subst(s->s1, env), eval_term(s->t, env));
    case Sb::P:
      return env_fst(env);
    case Sb::Comp:
      return eval_subst(s->s1, eval_subst(s->s2, env));
  }
  throw InternalValueError("eval_subst: unhandled substitution constructor");
}

}  // namespace tt
