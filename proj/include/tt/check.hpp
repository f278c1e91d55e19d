// Bidirectional checking of β-normal forms and type inference for neutrals.
// Definitional equality is decided by normalizing both sides and comparing
// syntactically.
#pragma once

#include <exception>
#include <string>

#include "tt/syntax.hpp"

namespace tt {

enum class DiagKind {
  TypeMismatch,
  NotInferable,
  NotAType,
  UnboundIndex,
  StarInUserSyntax,
  ExpectedFunction,
  ExpectedSigma,
  ExpectedNat,
  ExpectedEnum,
  ExpectedPrf,
  IrrelevanceViolation,
  BranchCountMismatch,
  NotNormalInput,
};

const char* diag_kind_name(DiagKind k);

// Structured checker failure. For TypeMismatch, expected/got hold normal
// forms and expected_erased holds the expected type with singleton layers
// stripped (mismatches frequently stem from those layers).
struct Diagnostic {
  DiagKind kind;
  std::size_t context_depth = 0;
  TermPtr subject;
  TermPtr expected;
  TermPtr expected_erased;
  TermPtr got;
  unsigned enum_arity = 0;  // ExpectedEnum payload

  std::string render() const;
};

struct TypeError : std::exception {
  explicit TypeError(Diagnostic d);
  const char* what() const noexcept override { return message.c_str(); }
  Diagnostic diag;
  std::string message;
};

/// Input policy: with allow_star set, ⋆ checks against Prf V and Enum 0; by
// default any ⋆ is rejected.
struct Mode {
  bool allow_star = false;
};

// Strips nested singleton layers from a normal type.
TermPtr erase_tag(const TermPtr& v);

// Definitional equality via normalization; syntactic equality of outputs.
bool eq_type(const Ctx& g, const TermPtr& a, const TermPtr& b);
bool eq_term(const Ctx& g, const TermPtr& a, const TermPtr& t, const TermPtr& u);

// Well-formedness of a type in g. Throws TypeError on failure.
void check_type(const Ctx& g, const TermPtr& v, const Mode& mode = {});

// Checks v against the type v_ty (a normal form produced by nbe_type or
// decomposed from one). Throws TypeError on failure.
void check_term(const Ctx& g, const TermPtr& v_ty, const TermPtr& v,
                const Mode& mode = {});

// Principal type of a neutral term, in long normal form.
TermPtr infer_type(const Ctx& g, const TermPtr& k, const Mode& mode = {});

// Context a weakening spine lands in: each p drops one entry.
Ctx infer_ctx(const Ctx& g, const SubstPtr& s);

// Validates a telescope given in declaration order (outermost first), each
// entry checked in the context of its predecessors; returns the Ctx
// (innermost entry at position 0) for use with the other operations.
Ctx check_ctx(const std::vector<TermPtr>& types, const Mode& mode = {});

}  // namespace tt
