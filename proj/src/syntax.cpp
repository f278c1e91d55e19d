#include "tt/syntax.hpp"

#include <stdexcept>
#include <utility>

namespace tt {

namespace {

TermPtr node(Tm tag, std::vector<TermPtr> kids = {}, SubstPtr s = nullptr,
             unsigned n = 0, unsigned i = 0) {
  auto t = std::make_shared<Term>();
  t->tag = tag;
  t->kids = std::move(kids);
  t->sub = std::move(s);
  t->n = n;
  t->i = i;
  return t;
}

SubstPtr snode(Sb tag, SubstPtr s1 = nullptr, SubstPtr s2 = nullptr,
               TermPtr t = nullptr) {
  auto s = std::make_shared<Subst>();
  s->tag = tag;
  s->s1 = std::move(s1);
  s->s2 = std::move(s2);
  s->t = std::move(t);
  return s;
}

}  // namespace

const TermPtr& u_term() {
  static const TermPtr t = node(Tm::U);
  return t;
}
const TermPtr& q_term() {
  static const TermPtr t = node(Tm::Q);
  return t;
}
const TermPtr& nat_term() {
  static const TermPtr t = node(Tm::Nat);
  return t;
}
const TermPtr& zero_term() {
  static const TermPtr t = node(Tm::Zero);
  return t;
}
const TermPtr& star_term() {
  static const TermPtr t = node(Tm::Star);
  return t;
}

TermPtr fun(TermPtr dom, TermPtr cod) {
  return node(Tm::Fun, {std::move(dom), std::move(cod)});
}
TermPtr sing(TermPtr elem, TermPtr ty) {
  return node(Tm::Sing, {std::move(elem), std::move(ty)});
}
TermPtr lam(TermPtr body) { return node(Tm::Lam, {std::move(body)}); }
TermPtr app(TermPtr fn, TermPtr arg) {
  return node(Tm::App, {std::move(fn), std::move(arg)});
}
TermPtr sub(TermPtr tm, SubstPtr s) {
  return node(Tm::Sub, {std::move(tm)}, std::move(s));
}
TermPtr sigma(TermPtr dom, TermPtr cod) {
  return node(Tm::Sigma, {std::move(dom), std::move(cod)});
}
TermPtr pair(TermPtr a, TermPtr b) {
  return node(Tm::Pair, {std::move(a), std::move(b)});
}
TermPtr fst(TermPtr t) { return node(Tm::Fst, {std::move(t)}); }
TermPtr snd(TermPtr t) { return node(Tm::Snd, {std::move(t)}); }
TermPtr suc(TermPtr t) { return node(Tm::Suc, {std::move(t)}); }
TermPtr natrec(TermPtr motive, TermPtr base, TermPtr step, TermPtr scrut) {
  return node(Tm::Natrec, {std::move(motive), std::move(base), std::move(step),
                           std::move(scrut)});
}
TermPtr enum_ty(unsigned n) { return node(Tm::Enum, {}, nullptr, n); }
TermPtr cst(unsigned n, unsigned i) { return node(Tm::Const, {}, nullptr, n, i); }
TermPtr case_of(unsigned n, TermPtr motive, std::vector<TermPtr> branches,
                TermPtr scrut) {
  std::vector<TermPtr> kids;
  kids.reserve(branches.size() + 2);
  kids.push_back(std::move(motive));
  for (auto& b : branches) kids.push_back(std::move(b));
  kids.push_back(std::move(scrut));
  return node(Tm::Case, std::move(kids), nullptr, n);
}
TermPtr prf(TermPtr t) { return node(Tm::Prf, {std::move(t)}); }
TermPtr box(TermPtr t) { return node(Tm::Box, {std::move(t)}); }
TermPtr where(TermPtr motive, TermPtr body, TermPtr scrut) {
  return node(Tm::Where, {std::move(motive), std::move(body), std::move(scrut)});
}

const SubstPtr& empty_sub() {
  static const SubstPtr s = snode(Sb::Empty);
  return s;
}
const SubstPtr& id_sub() {
  static const SubstPtr s = snode(Sb::Id);
  return s;
}
const SubstPtr& p_sub() {
  static const SubstPtr s = snode(Sb::P);
  return s;
}
SubstPtr ext(SubstPtr rest, TermPtr last) {
  return snode(Sb::Ext, std::move(rest), nullptr, std::move(last));
}
SubstPtr comp(SubstPtr outer, SubstPtr inner) {
  return snode(Sb::Comp, std::move(outer), std::move(inner));
}

const TermPtr& case_motive(const Term& t) { return t.kids.front(); }
const TermPtr& case_branch(const Term& t, unsigned i) { return t.kids[1 + i]; }
const TermPtr& case_scrut(const Term& t) { return t.kids.back(); }

SubstPtr subs_chain(unsigned k) {
  SubstPtr s = p_sub();
  while (k-- > 0) s = comp(p_sub(), s);
  return s;
}

TermPtr mk_var(unsigned i) {
  if (i == 0) return q_term();
  return sub(q_term(), subs_chain(i - 1));
}

TermPtr lift(unsigned i, TermPtr t) {
  if (i == 0) return t;
  return sub(std::move(t), subs_chain(i - 1));
}

namespace {

// Length of a weakening spine p ∘ p ∘ ... ∘ p (right-nested), or nullopt.
std::optional<unsigned> spine_length(const SubstPtr& s) {
  unsigned len = 0;
  const Subst* cur = s.get();
  for (;;) {
    if (cur->tag == Sb::P) return len + 1;
    if (cur->tag == Sb::Comp && cur->s1->tag == Sb::P) {
      ++len;
      cur = cur->s2.get();
      continue;
    }
    return std::nullopt;
  }
}

}  // namespace

std::optional<unsigned> var_index(const TermPtr& t) {
  if (t->tag == Tm::Q) return 0u;
  if (t->tag == Tm::Sub && t->kids[0]->tag == Tm::Q) {
    if (auto len = spine_length(t->sub)) return *len;
  }
  return std::nullopt;
}

bool is_neutral(const TermPtr& t) {
  if (var_index(t)) return true;
  switch (t->tag) {
    case Tm::Star:
      return true;
    case Tm::App:
      return is_neutral(t->kids[0]) && is_normal(t->kids[1]);
    case Tm::Fst:
    case Tm::Snd:
      return is_neutral(t->kids[0]);
    case Tm::Natrec:
      return is_normal(t->kids[0]) && is_normal(t->kids[1]) &&
             is_normal(t->kids[2]) && is_neutral(t->kids[3]);
    case Tm::Case: {
      if (!is_normal(case_motive(*t))) return false;
      for (unsigned i = 0; i + 2 < t->kids.size(); ++i)
        if (!is_normal(case_branch(*t, i))) return false;
      return is_neutral(case_scrut(*t));
    }
    case Tm::Where:
      return is_normal(t->kids[0]) && is_normal(t->kids[1]) &&
             is_neutral(t->kids[2]);
    default:
      return false;
  }
}

bool is_normal(const TermPtr& t) {
  if (is_neutral(t)) return true;
  switch (t->tag) {
    case Tm::U:
    case Tm::Nat:
    case Tm::Zero:
    case Tm::Enum:
    case Tm::Const:
      return true;
    case Tm::Fun:
    case Tm::Sigma:
    case Tm::Sing:
    case Tm::Pair:
      return is_normal(t->kids[0]) && is_normal(t->kids[1]);
    case Tm::Lam:
    case Tm::Suc:
    case Tm::Prf:
    case Tm::Box:
      return is_normal(t->kids[0]);
    default:
      // Sub nodes other than variable spines, and eliminators whose
      // scrutinee is not neutral, are redexes.
      return false;
  }
}

bool contains_star(const SubstPtr& s);

bool contains_star(const TermPtr& t) {
  if (t->tag == Tm::Star) return true;
  for (const auto& k : t->kids)
    if (contains_star(k)) return true;
  if (t->sub && contains_star(t->sub)) return true;
  return false;
}

bool contains_star(const SubstPtr& s) {
  if (s->s1 && contains_star(s->s1)) return true;
  if (s->s2 && contains_star(s->s2)) return true;
  if (s->t && contains_star(s->t)) return true;
  return false;
}

bool equal(const SubstPtr& a, const SubstPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->tag != b->tag) return false;
  if (static_cast<bool>(a->s1) != static_cast<bool>(b->s1)) return false;
  if (a->s1 && !equal(a->s1, b->s1)) return false;
  if (static_cast<bool>(a->s2) != static_cast<bool>(b->s2)) return false;
  if (a->s2 && !equal(a->s2, b->s2)) return false;
  if (static_cast<bool>(a->t) != static_cast<bool>(b->t)) return false;
  if (a->t && !equal(a->t, b->t)) return false;
  return true;
}

bool equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->tag != b->tag || a->n != b->n || a->i != b->i) return false;
  if (a->kids.size() != b->kids.size()) return false;
  for (std::size_t k = 0; k < a->kids.size(); ++k)
    if (!equal(a->kids[k], b->kids[k])) return false;
  if (static_cast<bool>(a->sub) != static_cast<bool>(b->sub)) return false;
  if (a->sub && !equal(a->sub, b->sub)) return false;
  return true;
}

TermPtr shift_free(const TermPtr& t, unsigned cutoff, unsigned k) {
  if (k == 0) return t;
  if (auto idx = var_index(t)) {
    return *idx >= cutoff ? mk_var(*idx + k) : t;
  }
  switch (t->tag) {
    case Tm::U:
    case Tm::Nat:
    case Tm::Zero:
    case Tm::Star:
    case Tm::Enum:
    case Tm::Const:
      return t;
    case Tm::Fun:
    case Tm::Sigma:
      return node(t->tag, {shift_free(t->kids[0], cutoff, k),
                           shift_free(t->kids[1], cutoff + 1, k)});
    case Tm::Sing:
    case Tm::Pair:
    case Tm::App:
      return node(t->tag, {shift_free(t->kids[0], cutoff, k),
                           shift_free(t->kids[1], cutoff, k)});
    case Tm::Lam:
      return lam(shift_free(t->kids[0], cutoff + 1, k));
    case Tm::Fst:
    case Tm::Snd:
    case Tm::Suc:
    case Tm::Prf:
    case Tm::Box:
      return node(t->tag, {shift_free(t->kids[0], cutoff, k)});
    case Tm::Natrec:
      return natrec(shift_free(t->kids[0], cutoff + 1, k),
                    shift_free(t->kids[1], cutoff, k),
                    shift_free(t->kids[2], cutoff, k),
                    shift_free(t->kids[3], cutoff, k));
    case Tm::Case: {
      std::vector<TermPtr> branches;
      branches.reserve(t->kids.size() - 2);
      for (unsigned i = 0; i + 2 < t->kids.size(); ++i)
        branches.push_back(shift_free(case_branch(*t, i), cutoff, k));
      return case_of(t->n, shift_free(case_motive(*t), cutoff + 1, k),
                     std::move(branches), shift_free(case_scrut(*t), cutoff, k));
    }
    case Tm::Where:
      return where(shift_free(t->kids[0], cutoff, k),
                   shift_free(t->kids[1], cutoff + 1, k),
                   shift_free(t->kids[2], cutoff, k));
    case Tm::Sub:
    case Tm::Q:
      break;
  }
  throw std::logic_error("shift_free: substitution node outside a variable spine");
}

namespace {

const char* tag_name(Tm t) {
  switch (t) {
    case Tm::U: return "U";
    case Tm::Fun: return "Fun";
    case Tm::Sing: return "Sing";
    case Tm::Lam: return "Lam";
    case Tm::App: return "App";
    case Tm::Q: return "q";
    case Tm::Sub: return "Sub";
    case Tm::Sigma: return "Sigma";
    case Tm::Pair: return "Pair";
    case Tm::Fst: return "Fst";
    case Tm::Snd: return "Snd";
    case Tm::Nat: return "Nat";
    case Tm::Zero: return "Zero";
    case Tm::Suc: return "Suc";
    case Tm::Natrec: return "Natrec";
    case Tm::Enum: return "Enum";
    case Tm::Const: return "Const";
    case Tm::Case: return "Case";
    case Tm::Prf: return "Prf";
    case Tm::Box: return "Box";
    case Tm::Star: return "Star";
    case Tm::Where: return "Where";
  }
  return "?";
}

}  // namespace

std::string dump(const SubstPtr& s) {
  switch (s->tag) {
    case Sb::Empty: return "<>";
    case Sb::Id: return "id";
    case Sb::P: return "p";
    case Sb::Ext: return "(" + dump(s->s1) + " . " + dump(s->t) + ")";
    case Sb::Comp: return "(" + dump(s->s1) + " o " + dump(s->s2) + ")";
  }
  return "?";
}

std::string dump(const TermPtr& t) {
  std::string out = "(";
  out += tag_name(t->tag);
  if (t->tag == Tm::Enum || t->tag == Tm::Case) out += " " + std::to_string(t->n);
  if (t->tag == Tm::Const)
    out += " " + std::to_string(t->n) + " " + std::to_string(t->i);
  for (const auto& k : t->kids) out += " " + dump(k);
  if (t->sub) out += " " + dump(t->sub);
  out += ")";
  if (t->kids.empty() && !t->sub && t->tag != Tm::Enum && t->tag != Tm::Const) {
    // Render leaves without parentheses.
    return tag_name(t->tag);
  }
  return out;
}

Ctx ctx_extend(const Ctx& g, TermPtr ty) {
  Ctx out;
  out.reserve(g.size() + 1);
  out.push_back(std::move(ty));
  out.insert(out.end(), g.begin(), g.end());
  return out;
}

}  // namespace tt
