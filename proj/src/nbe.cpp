#include "tt/nbe.hpp"

#include <cstdio>

#include "tt/semantics.hpp"

namespace tt {

TermPtr readback(unsigned j, const ValuePtr& d) {
  detail::DepthGuard guard;
  switch (d->tag) {
    case Dv::U:
      return u_term();
    case Dv::Var: {
      // Level to index. The clamp keeps the function total; kernel-produced
      // values never carry a level at or above the binder count.
      if (d->n + 1 > j) {
#ifndef NDEBUG
        std::fprintf(stderr,
                     "readback: clamped out-of-scope level %u under %u binders\n",
                     d->n, j);
#endif
        return mk_var(0);
      }
      return mk_var(j - (d->n + 1));
    }
    case Dv::Lam:
      return lam(readback(j + 1, apply_fun(d->fn, vvar(j))));
    case Dv::Fun:
      return fun(readback(j, d->kids[0]),
                 readback(j + 1, apply_fun(d->fn, vvar(j))));
    case Dv::Sum:
      return sigma(readback(j, d->kids[0]),
                   readback(j + 1, apply_fun(d->fn, vvar(j))));
    case Dv::Sing:
      return sing(readback(j, d->kids[0]), readback(j, d->kids[1]));
    case Dv::NeApp:
      return app(readback(j, d->kids[0]), readback(j, d->kids[1]));
    case Dv::Pair:
      return pair(readback(j, d->kids[0]), readback(j, d->kids[1]));
    case Dv::NeFst:
      return fst(readback(j, d->kids[0]));
    case Dv::NeSnd:
      return snd(readback(j, d->kids[0]));
    case Dv::Nat:
      return nat_term();
    case Dv::Zero:
      return zero_term();
    case Dv::Suc:
      return suc(readback(j, d->kids[0]));
    case Dv::NeNatrec:
      return natrec(readback(j + 1, apply_fun(d->fn, vvar(j))),
                    readback(j, d->kids[0]), readback(j, d->kids[1]),
                    readback(j, d->kids[2]));
    case Dv::Prf:
      return prf(readback(j, d->kids[0]));
    case Dv::Star:
      return star_term();
    case Dv::Enum:
      return enum_ty(d->n);
    case Dv::Const:
      return cst(d->n, d->i);
    case Dv::NeCase: {
      std::vector<TermPtr> branches;
      branches.reserve(d->n);
      for (unsigned i = 0; i < d->n; ++i)
        branches.push_back(readback(j, d->kids[i]));
      return case_of(d->n, readback(j + 1, apply_fun(d->fn, vvar(j))),
                     std::move(branches), readback(j, d->kids.back()));
    }
    case Dv::Top:
      break;
  }
  throw InternalValueError("readback: value head has no term counterpart");
}

ValuePtr up(const ValuePtr& ty, const ValuePtr& k) {
  detail::DepthGuard guard;
  switch (ty->tag) {
    case Dv::Fun: {
      ValuePtr dom = ty->kids[0];
      SemFun cod = ty->fn;
      return vlam([dom, cod, k](const ValuePtr& d) {
        return up(apply_fun(cod, d), vapp_ne(k, down(dom, d)));
      });
    }
    case Dv::Sing:
      return ty->kids[0];
    case Dv::Sum: {
      ValuePtr a = up(ty->kids[0], vfst_ne(k));
      return vpair(a, up(apply_fun(ty->fn, a), vsnd_ne(k)));
    }
    case Dv::Enum:
      if (ty->n == 0) return vstar();
      if (ty->n == 1) return vconst(1, 0);
      return k;
    case Dv::Prf:
      if (kernel_config().proof_relevant) return up(ty->kids[0], k);
      return vstar();
    default:
      // U, Nat, Enum n≥2 (handled above), and neutral types embed directly.
      return k;
  }
}

ValuePtr down(const ValuePtr& ty, const ValuePtr& d) {
  detail::DepthGuard guard;
  switch (ty->tag) {
    case Dv::Fun: {
      ValuePtr dom = ty->kids[0];
      SemFun cod = ty->fn;
      return vlam([dom, cod, d](const ValuePtr& e) {
        ValuePtr arg = up(dom, e);
        return down(apply_fun(cod, arg), apply_v(d, arg));
      });
    }
    case Dv::Sing:
      return down(ty->kids[1], ty->kids[0]);
    case Dv::U:
      return down_t(d);
    case Dv::Sum: {
      ValuePtr a = fst_v(d);
      return vpair(down(ty->kids[0], a), down(apply_fun(ty->fn, a), snd_v(d)));
    }
    case Dv::Enum:
      if (ty->n == 1) return vconst(1, 0);
      return d;
    case Dv::Prf:
      // Proofs reify to ⋆ in both semantics.
      return vstar();
    default:
      return d;
  }
}

ValuePtr down_t(const ValuePtr& ty) {
  detail::DepthGuard guard;
  switch (ty->tag) {
    case Dv::Fun: {
      ValuePtr dom = ty->kids[0];
      SemFun cod = ty->fn;
      return vfun(down_t(dom), [dom, cod](const ValuePtr& d) {
        return down_t(apply_fun(cod, up(dom, d)));
      });
    }
    case Dv::Sum: {
      ValuePtr dom = ty->kids[0];
      SemFun cod = ty->fn;
      return vsum(down_t(dom), [dom, cod](const ValuePtr& d) {
        return down_t(apply_fun(cod, up(dom, d)));
      });
    }
    case Dv::Sing:
      return vsing(down(ty->kids[1], ty->kids[0]), down_t(ty->kids[1]));
    case Dv::U:
      return vu();
    case Dv::Prf:
      return vprf(down_t(ty->kids[0]));
    default:
      return ty;
  }
}

ValuePtr canonical_env(const Ctx& g) {
  ValuePtr env = vtop();
  unsigned level = 0;
  // Entry g[0] is innermost; build from the outermost end.
  for (auto it = g.rbegin(); it != g.rend(); ++it, ++level) {
    ValuePtr ty = eval_term(*it, env);
    env = vpair(env, up(ty, vvar(level)));
  }
  return env;
}

TermPtr nbe_type(const Ctx& g, const TermPtr& a) {
  ValuePtr env = canonical_env(g);
  return readback(static_cast<unsigned>(g.size()), down_t(eval_term(a, env)));
}

TermPtr nbe_term(const Ctx& g, const TermPtr& a, const TermPtr& t) {
  ValuePtr env = canonical_env(g);
  return readback(static_cast<unsigned>(g.size()),
                  down(eval_term(a, env), eval_term(t, env)));
}

}  // namespace tt
