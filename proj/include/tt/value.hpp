// Semantic domain for normalization by evaluation.
//
// Values are immutable. Environments are values too: the empty environment is
// Top and extension is pairing, so ⟦q⟧ρ projects with snd and ⟦p⟧ρ with fst.
#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <stdexcept>
#include <vector>

#include "tt/syntax.hpp"

namespace tt {

enum class Dv {
  Top,
  U,
  Var,     // free variable by level (counted from the context root)
  Lam,
  Fun,
  Sing,
  NeApp,
  Sum,
  Pair,
  NeFst,
  NeSnd,
  Nat,
  Zero,
  Suc,
  NeNatrec,
  Prf,
  Star,
  Enum,
  Const,
  NeCase,
};

struct Value;
using ValuePtr = std::shared_ptr<const Value>;

// Semantic function; only application is observable.
using SemFun = std::function<ValuePtr(const ValuePtr&)>;

ValuePtr apply_fun(const SemFun& f, const ValuePtr& d);

// Layouts: Fun/Sum hold the domain in kids[0] and the codomain in fn;
// Lam holds its closure in fn; NeNatrec holds {base, step, scrut} in kids and
// the reified motive in fn; NeCase holds {branches..., scrut} in kids and the
// reified motive in fn. Var uses n as its level; Enum/Const use n/i.
struct Value {
  Dv tag;
  std::vector<ValuePtr> kids;
  SemFun fn;
  unsigned n = 0;
  unsigned i = 0;
};

const ValuePtr& vtop();
const ValuePtr& vu();
const ValuePtr& vnat();
const ValuePtr& vzero();
const ValuePtr& vstar();
ValuePtr vvar(unsigned level);
ValuePtr vlam(SemFun f);
ValuePtr vfun(ValuePtr dom, SemFun cod);
ValuePtr vsing(ValuePtr elem, ValuePtr ty);
ValuePtr vapp_ne(ValuePtr fn, ValuePtr arg);
ValuePtr vsum(ValuePtr dom, SemFun cod);
ValuePtr vpair(ValuePtr a, ValuePtr b);
ValuePtr vfst_ne(ValuePtr t);
ValuePtr vsnd_ne(ValuePtr t);
ValuePtr vsuc(ValuePtr t);
ValuePtr vnatrec_ne(SemFun motive, ValuePtr base, ValuePtr step, ValuePtr scrut);
ValuePtr vprf(ValuePtr ty);
ValuePtr venum(unsigned n);
ValuePtr vconst(unsigned n, unsigned i);
ValuePtr vcase_ne(unsigned n, SemFun motive, std::vector<ValuePtr> branches,
                  ValuePtr scrut);

// Neutral heads: Var, NeApp, NeFst, NeSnd, NeNatrec, NeCase.
bool is_neutral_value(const ValuePtr& d);

// Kernel-level failures. These indicate an internal invariant violation or
// ill-typed input that escaped checking; they are exceptions, not diagnostics.
struct KernelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotAFunctionValue : KernelError {
  NotAFunctionValue() : KernelError("application head is not a function value") {}
};
struct NotANatural : KernelError {
  NotANatural() : KernelError("natrec scrutinee is not a natural value") {}
};
struct NotAnEnumValue : KernelError {
  NotAnEnumValue() : KernelError("case scrutinee is not an enumeration value") {}
};
struct BranchCountMismatch : KernelError {
  BranchCountMismatch() : KernelError("case branch count does not match arity") {}
};
struct EnvironmentShapeError : KernelError {
  EnvironmentShapeError()
      : KernelError("environment projection hit a non-pair value") {}
};
struct DepthExceeded : KernelError {
  DepthExceeded() : KernelError("evaluation depth limit exceeded") {}
};
struct InternalValueError : KernelError {
  explicit InternalValueError(const char* what) : KernelError(what) {}
};

// Per-thread kernel configuration.
struct KernelConfig {
  bool proof_relevant = false;      // alternative semantics for Box/Where/Prf
  std::size_t depth_limit = 100000; // recursion budget before DepthExceeded
};
KernelConfig& kernel_config();

namespace detail {
// RAII recursion budget shared by evaluation, reflection, and readback.
struct DepthGuard {
  DepthGuard();
  ~DepthGuard();
};
}  // namespace detail

}  // namespace tt
