// Readback, type-directed reflection and reification, canonical environments,
// and the end-to-end normalization functions.
#pragma once

#include "tt/syntax.hpp"
#include "tt/value.hpp"

namespace tt {

// Translates a value into a term under j free variables; a variable at level
// i becomes index j-(i+1). A level at or above j is clamped to index 0; that
// state never arises from kernel-produced values.
TermPtr readback(unsigned j, const ValuePtr& d);

// Reflection ↑: embeds a neutral value at a semantic type, η-expanding at
// functions and pairs and collapsing at singletons, Enum 0/1, and Prf.
ValuePtr up(const ValuePtr& ty, const ValuePtr& k);

// Reification ↓: prepares an inhabitant of a semantic type for readback,
// η-expanding and collapsing dually to up.
ValuePtr down(const ValuePtr& ty, const ValuePtr& d);

// Type reification ⇓.
ValuePtr down_t(const ValuePtr& ty);

// Environment mapping each context variable to its reflected free level.
ValuePtr canonical_env(const Ctx& g);

// Normal form of a type well-formed in g.
TermPtr nbe_type(const Ctx& g, const TermPtr& a);

// Normal form of t at type a in g.
TermPtr nbe_term(const Ctx& g, const TermPtr& a, const TermPtr& t);

}  // namespace tt
