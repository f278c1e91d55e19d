// Evaluation of terms and substitutions into the semantic domain, plus the
// semantic application, projection, and eliminator operations.
#pragma once

#include "tt/syntax.hpp"
#include "tt/value.hpp"

namespace tt {

// Application: Lam applies its closure; ⋆ absorbs every argument.
ValuePtr apply_v(const ValuePtr& f, const ValuePtr& d);

// Projections, totalized: pairs project, ⋆ stays ⋆, anything else becomes a
// stuck projection.
ValuePtr fst_v(const ValuePtr& d);
ValuePtr snd_v(const ValuePtr& d);

// Recursor on naturals. On a neutral scrutinee the result is reflected at the
// motive's type with the base and step reified eagerly (the step at
// Πn:Nat. motive n → motive (suc n)).
ValuePtr natrec_v(const SemFun& motive, const ValuePtr& z, const ValuePtr& s,
                  const ValuePtr& d);

// Branch selection on enumerations. Clause order: ⋆, constant, identity
// branches (a case whose branches are exactly the constants yields its
// scrutinee), neutral.
ValuePtr case_v(unsigned n, const SemFun& motive,
                const std::vector<ValuePtr>& branches, const ValuePtr& d);

// Equation-directed evaluation. The environment is a Top/Pair spine; q
// projects with snd, p with fst.
ValuePtr eval_term(const TermPtr& t, const ValuePtr& env);
ValuePtr eval_subst(const SubstPtr& s, const ValuePtr& env);

}  // namespace tt
