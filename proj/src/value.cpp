#include "tt/value.hpp"

#include <utility>

namespace tt {

namespace {

ValuePtr vnode(Dv tag, std::vector<ValuePtr> kids = {}, SemFun fn = nullptr,
               unsigned n = 0, unsigned i = 0) {
  auto v = std::make_shared<Value>();
  v->tag = tag;
  v->kids = std::move(kids);
  v->fn = std::move(fn);
  v->n = n;
  v->i = i;
  return v;
}

}  // namespace

ValuePtr apply_fun(const SemFun& f, const ValuePtr& d) {
  if (!f) throw InternalValueError("applying a missing semantic function");
  return f(d);
}

const ValuePtr& vtop() {
  static const ValuePtr v = vnode(Dv::Top);
  return v;
}
const ValuePtr& vu() {
  static const ValuePtr v = vnode(Dv::U);
  return v;
}
const ValuePtr& vnat() {
  static const ValuePtr v = vnode(Dv::Nat);
  return v;
}
const ValuePtr& vzero() {
  static const ValuePtr v = vnode(Dv::Zero);
  return v;
}
const ValuePtr& vstar() {
  static const ValuePtr v = vnode(Dv::Star);
  return v;
}

ValuePtr vvar(unsigned level) { return vnode(Dv::Var, {}, nullptr, level); }
ValuePtr vlam(SemFun f) { return vnode(Dv::Lam, {}, std::move(f)); }
ValuePtr vfun(ValuePtr dom, SemFun cod) {
  return vnode(Dv::Fun, {std::move(dom)}, std::move(cod));
}
ValuePtr vsing(ValuePtr elem, ValuePtr ty) {
  return vnode(Dv::Sing, {std::move(elem), std::move(ty)});
}
ValuePtr vapp_ne(ValuePtr fn, ValuePtr arg) {
  return vnode(Dv::NeApp, {std::move(fn), std::move(arg)});
}
ValuePtr vsum(ValuePtr dom, SemFun cod) {
  return vnode(Dv::Sum, {std::move(dom)}, std::move(cod));
}
ValuePtr vpair(ValuePtr a, ValuePtr b) {
  return vnode(Dv::Pair, {std::move(a), std::move(b)});
}
ValuePtr vfst_ne(ValuePtr t) { return vnode(Dv::NeFst, {std::move(t)}); }
ValuePtr vsnd_ne(ValuePtr t) { return vnode(Dv::NeSnd, {std::move(t)}); }
ValuePtr vsuc(ValuePtr t) { return vnode(Dv::Suc, {std::move(t)}); }
ValuePtr vnatrec_ne(SemFun motive, ValuePtr base, ValuePtr step,
                    ValuePtr scrut) {
  return vnode(Dv::NeNatrec, {std::move(base), std::move(step), std::move(scrut)},
               std::move(motive));
}
ValuePtr vprf(ValuePtr ty) { return vnode(Dv::Prf, {std::move(ty)}); }
ValuePtr venum(unsigned n) { return vnode(Dv::Enum, {}, nullptr, n); }
ValuePtr vconst(unsigned n, unsigned i) {
  return vnode(Dv::Const, {}, nullptr, n, i);
}
ValuePtr vcase_ne(unsigned n, SemFun motive, std::vector<ValuePtr> branches,
                  ValuePtr scrut) {
  std::vector<ValuePtr> kids = std::move(branches);
  kids.push_back(std::move(scrut));
  return vnode(Dv::NeCase, std::move(kids), std::move(motive), n);
}

bool is_neutral_value(const ValuePtr& d) {
  switch (d->tag) {
    case Dv::Var:
    case Dv::NeApp:
    case Dv::NeFst:
    case Dv::NeSnd:
    case Dv::NeNatrec:
    case Dv::NeCase:
      return true;
    default:
      return false;
  }
}

KernelConfig& kernel_config() {
  thread_local KernelConfig cfg;
  return cfg;
}

namespace detail {

namespace {
thread_local std::size_t depth_counter = 0;
}

DepthGuard::DepthGuard() {
  if (++depth_counter > kernel_config().depth_limit) {
    --depth_counter;
    throw DepthExceeded();
  }
}

DepthGuard::~DepthGuard() { --depth_counter; }

}  // namespace detail

}  // namespace tt
