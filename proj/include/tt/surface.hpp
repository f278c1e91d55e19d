// Named-binder surface language: parsing, elaboration to the core, and
// pretty-printing of core terms.
//
// Grammar (# starts a line comment):
//   decl  := "assume" NAME ":" term
//          | "define" NAME ":" term "=" term
//          | "check" term ":" term
//          | "normalize" term ":" term
//          | "infer" term
//   term  := "\" NAME "." term
//          | "(" NAME ":" term ")" "->" term
//          | "Sig" "(" NAME ":" term ")" "." term
//          | appterm ("->" term)?
//   app   := head atom*
//   head  := ("suc"|"fst"|"snd"|"box"|"Prf") atom
//          | "Enum" NUMBER
//          | "natrec" "[" NAME "." term "]" atom atom atom
//          | "case" "{" NUMBER "}" "[" NAME "." term "]"
//                "(" term ("|" term)* ")" atom          (0 branches: "()")
//          | "where" "[" NAME "." term "]" "(" "[" NAME "]" "=" term ")" atom
//          | atom
//   atom  := "U" | "Nat" | "zero" | "*" | NAME | "c{" NUMBER "," NUMBER "}"
//          | "{" term ":" term "}"                       (singleton)
//          | "(" term ")" | "(" term "," term ")"        (group / pair)
#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "tt/syntax.hpp"

namespace tt {

enum class Sk {
  Var,
  U,
  Fun,  // dependent when binder name is nonempty, arrow sugar otherwise
  Sing,
  Lam,
  App,
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

struct SExpr;
using SExprPtr = std::shared_ptr<const SExpr>;

// Named AST. `name` holds the variable or binder name (motive binder for
// Natrec/Case/Where); `name2` holds Where's proof-variable binder. Case kids
// are motive, branches..., scrutinee, as in the core.
struct SExpr {
  Sk tag;
  std::string name;
  std::string name2;
  std::vector<SExprPtr> kids;
  unsigned n = 0;
  unsigned i = 0;
  int line = 0;
  int col = 0;
};

enum class DeclKind { Assume, Define, Check, Normalize, Infer };

struct Decl {
  DeclKind kind;
  std::string name;  // Assume/Define
  SExprPtr type;     // absent for Infer
  SExprPtr term;     // absent for Assume
  int line = 0;
};

struct DeclFile {
  std::vector<Decl> decls;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line, int col);
  int line;
  int col;
};

struct ElabError : std::runtime_error {
  ElabError(const std::string& msg, std::string name, int line, int col);
  std::string name;
  int line;
  int col;
};

DeclFile parse(const std::string& text);

// A defined name spliced on reference: the elaborated body and the number of
// context entries in scope when it was elaborated (free indices are shifted
// by the difference at each use site).
struct DefEntry {
  TermPtr body;
  std::size_t depth = 0;
};
using DefMap = std::map<std::string, DefEntry>;

// Replaces names with de Bruijn indices; scope lists bound names innermost
// first. Splices defined names. Rejects ⋆ unless allow_star is set (thrown
// as a TypeError with the star-policy diagnostic).
TermPtr elaborate(const SExprPtr& s, const std::vector<std::string>& scope,
                  const DefMap& defs = {}, bool allow_star = false);

// Renders a core term in the surface syntax under `depth` enclosing binders,
// inventing display names x0, x1, ... outermost first. Normal forms
// round-trip: parsing and elaborating the output yields the input term.
std::string print_term(const TermPtr& t, unsigned depth);

// Same, with caller-supplied names (outermost first) for the free variables.
std::string print_term(const TermPtr& t,
                       const std::vector<std::string>& names);

}  // namespace tt
