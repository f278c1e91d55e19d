// Core language: de Bruijn terms with explicit substitutions.
//
// Terms double as types. Variables are encoded as q weakened by a spine of
// p's: index 0 is Q, index i > 0 is Sub(Q, P ∘ P ∘ ... ∘ P) with i factors,
// right-nested. Those spines are the only Sub nodes allowed in normal forms.
#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tt {

enum class Tm {
  U,
  Fun,
  Sing,
  Lam,
  App,
  Q,
  Sub,
  Sigma,
  Pair,
  Fst,
  Snd,
  Nat,
  Zero,
  Suc,
  Natrec,
  Enum,
  Const,
  Case,
  Prf,
  Box,
  Star,
  Where,
};

enum class Sb {
  Empty,
  Id,
  Ext,
  P,
  Comp,
};

struct Term;
struct Subst;
using TermPtr = std::shared_ptr<const Term>;
using SubstPtr = std::shared_ptr<const Subst>;

// One node per constructor. `kids` holds the subterms in declaration order
// (for Case: motive, then the n branches, then the scrutinee). `sub` is set
// only on Sub nodes. `n`/`i` carry Enum/Const/Case arities.
struct Term {
  Tm tag;
  std::vector<TermPtr> kids;
  SubstPtr sub;
  unsigned n = 0;
  unsigned i = 0;
};

struct Subst {
  Sb tag;
  SubstPtr s1;  // Ext: rest; Comp: outer
  SubstPtr s2;  // Comp: inner
  TermPtr t;    // Ext: last term
};

// Constructors. Nullary terms are shared singletons.
const TermPtr& u_term();
const TermPtr& q_term();
const TermPtr& nat_term();
const TermPtr& zero_term();
const TermPtr& star_term();
TermPtr fun(TermPtr dom, TermPtr cod);
TermPtr sing(TermPtr elem, TermPtr ty);
TermPtr lam(TermPtr body);
TermPtr app(TermPtr fn, TermPtr arg);
TermPtr sub(TermPtr tm, SubstPtr s);
TermPtr sigma(TermPtr dom, TermPtr cod);
TermPtr pair(TermPtr a, TermPtr b);
TermPtr fst(TermPtr t);
TermPtr snd(TermPtr t);
TermPtr suc(TermPtr t);
TermPtr natrec(TermPtr motive, TermPtr base, TermPtr step, TermPtr scrut);
TermPtr enum_ty(unsigned n);
TermPtr cst(unsigned n, unsigned i);
TermPtr case_of(unsigned n, TermPtr motive, std::vector<TermPtr> branches,
                TermPtr scrut);
TermPtr prf(TermPtr t);
TermPtr box(TermPtr t);
TermPtr where(TermPtr motive, TermPtr body, TermPtr scrut);

const SubstPtr& empty_sub();
const SubstPtr& id_sub();
const SubstPtr& p_sub();
SubstPtr ext(SubstPtr rest, TermPtr last);
SubstPtr comp(SubstPtr outer, SubstPtr inner);

// Accessors for Case nodes (layout: motive, branches..., scrut).
const TermPtr& case_motive(const Term& t);
const TermPtr& case_branch(const Term& t, unsigned i);
const TermPtr& case_scrut(const Term& t);

// Weakening spine p ∘ p ∘ ... ∘ p with k+1 factors, right-nested.
SubstPtr subs_chain(unsigned k);

// De Bruijn index i as a term: Q for 0, Sub(Q, subs_chain(i-1)) otherwise.
TermPtr mk_var(unsigned i);

// Weakens t by i binders: identity for i = 0, Sub(t, subs_chain(i-1)) else.
TermPtr lift(unsigned i, TermPtr t);

// Recognizes mk_var output; returns the encoded index.
std::optional<unsigned> var_index(const TermPtr& t);

// Neutral normal forms: variables, ⋆, and eliminators stuck on a neutral
// scrutinee, with all other arguments normal.
bool is_neutral(const TermPtr& t);

// β-normal forms: constructors over normals, or neutral. No Sub node except
// the variable spines recognized by var_index.
bool is_normal(const TermPtr& t);

// True iff any subterm, including terms inside substitutions, is ⋆.
bool contains_star(const TermPtr& t);

// Structural syntactic equality (with pointer fast path).
bool equal(const TermPtr& a, const TermPtr& b);
bool equal(const SubstPtr& a, const SubstPtr& b);

// Shifts every free index (≥ cutoff) up by k, rebuilding variable spines.
// Defined only on terms whose Sub nodes are variable spines; anything else
// throws. Preserves β-normality.
TermPtr shift_free(const TermPtr& t, unsigned cutoff, unsigned k);

// Compact s-expression rendering for diagnostics and test failure output.
std::string dump(const TermPtr& t);
std::string dump(const SubstPtr& s);

// Typing context: position 0 is the most recently bound variable. Entry i is
// scoped over entries i+1, i+2, ...
using Ctx = std::vector<TermPtr>;

// New context with one more binding (the new variable becomes index 0).
Ctx ctx_extend(const Ctx& g, TermPtr ty);

}  // namespace tt
