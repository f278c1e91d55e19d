#include "tt/surface.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "tt/check.hpp"

namespace tt {

ParseError::ParseError(const std::string& msg, int line, int col)
    : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                         std::to_string(col) + ": " + msg),
      line(line),
      col(col) {}

ElabError::ElabError(const std::string& msg, std::string name, int line,
                     int col)
    : std::runtime_error("error at " + std::to_string(line) + ":" +
                         std::to_string(col) + ": " + msg),
      name(std::move(name)),
      line(line),
      col(col) {}

namespace {

enum class Tok {
  Ident,
  Number,
  LParen,
  RParen,
  LBrace,
  RBrace,
  LBracket,
  RBracket,
  Colon,
  Dot,
  Comma,
  Arrow,
  Backslash,
  Pipe,
  Equals,
  Star,
  ConstStart,  // the two characters "c{" with no space between them
  End,
};

struct Token {
  Tok kind;
  std::string text;
  unsigned number = 0;
  int line = 0;
  int col = 0;
};

const std::set<std::string>& keywords() {
  static const std::set<std::string> kw = {
      "assume", "define", "check", "normalize", "infer", "U",   "Nat",
      "zero",   "suc",    "natrec", "Enum",     "case",  "Prf", "box",
      "where",  "fst",    "snd",    "Sig",
  };
  return kw;
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> toks;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto push = [&](Tok k, std::string s, int l, int c) {
    toks.push_back(Token{k, std::move(s), 0, l, c});
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++col;
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    int l = line;
    int cl = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        num += text[i];
        ++i;
        ++col;
      }
      Token t{Tok::Number, num, 0, l, cl};
      try {
        t.number = static_cast<unsigned>(std::stoul(num));
      } catch (const std::out_of_range&) {
        throw ParseError("number out of range", l, cl);
      }
      toks.push_back(std::move(t));
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) ||
              text[i] == '_' || text[i] == '\'')) {
        id += text[i];
        ++i;
        ++col;
      }
      if (id == "c" && i < text.size() && text[i] == '{') {
        ++i;
        ++col;
        push(Tok::ConstStart, "c{", l, cl);
      } else {
        push(Tok::Ident, id, l, cl);
      }
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      i += 2;
      col += 2;
      push(Tok::Arrow, "->", l, cl);
      continue;
    }
    ++i;
    ++col;
    switch (c) {
      case '(':
        push(Tok::LParen, "(", l, cl);
        break;
      case ')':
        push(Tok::RParen, ")", l, cl);
        break;
      case '{':
        push(Tok::LBrace, "{", l, cl);
        break;
      case '}':
        push(Tok::RBrace, "}", l, cl);
        break;
      case '[':
        push(Tok::LBracket, "[", l, cl);
        break;
      case ']':
        push(Tok::RBracket, "]", l, cl);
        break;
      case ':':
        push(Tok::Colon, ":", l, cl);
        break;
      case '.':
        push(Tok::Dot, ".", l, cl);
        break;
      case ',':
        push(Tok::Comma, ",", l, cl);
        break;
      case '\\':
        push(Tok::Backslash, "\\", l, cl);
        break;
      case '|':
        push(Tok::Pipe, "|", l, cl);
        break;
      case '=':
        push(Tok::Equals, "=", l, cl);
        break;
      case '*':
        push(Tok::Star, "*", l, cl);
        break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", l,
                         cl);
    }
  }
  toks.push_back(Token{Tok::End, "", 0, line, col});
  return toks;
}

struct Parser {
  std::vector<Token> toks;
  std::size_t pos = 0;

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t p = pos + ahead;
    if (p >= toks.size()) p = toks.size() - 1;
    return toks[p];
  }

  const Token& next() {
    const Token& t = peek();
    if (t.kind != Tok::End) ++pos;
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    throw ParseError(msg + " (found '" + (t.kind == Tok::End ? "end of input"
                                                             : t.text) +
                         "')",
                     t.line, t.col);
  }

  Token expect(Tok k, const std::string& what) {
    if (peek().kind != k) fail("expected " + what);
    return next();
  }

  bool is_keyword(const Token& t, const std::string& kw) const {
    return t.kind == Tok::Ident && t.text == kw;
  }

  bool is_decl_keyword(const Token& t) const {
    return t.kind == Tok::Ident &&
           (t.text == "assume" || t.text == "define" || t.text == "check" ||
            t.text == "normalize" || t.text == "infer");
  }

  std::string expect_name() {
    const Token& t = peek();
    if (t.kind != Tok::Ident) fail("expected a name");
    if (keywords().count(t.text)) fail("'" + t.text + "' is a reserved word");
    return next().text;
  }

  static SExprPtr node(Sk tag, const Token& at,
                       std::vector<SExprPtr> kids = {}) {
    auto e = std::make_shared<SExpr>();
    e->tag = tag;
    e->kids = std::move(kids);
    e->line = at.line;
    e->col = at.col;
    return e;
  }

  // True when the upcoming token can begin an atom, so the application loop
  // should keep consuming arguments.
  bool starts_atom(const Token& t) const {
    switch (t.kind) {
      case Tok::LParen:
      case Tok::LBrace:
      case Tok::Star:
      case Tok::ConstStart:
        return true;
      case Tok::Ident:
        if (is_decl_keyword(t)) return false;
        // Head keywords start a head, not an atom argument.
        if (t.text == "suc" || t.text == "fst" || t.text == "snd" ||
            t.text == "box" || t.text == "Prf" || t.text == "Enum" ||
            t.text == "natrec" || t.text == "case" || t.text == "where" ||
            t.text == "Sig")
          return false;
        return true;
      default:
        return false;
    }
  }

  SExprPtr parse_term() {
    const Token& t = peek();
    if (t.kind == Tok::Backslash) {
      Token at = next();
      std::string name = expect_name();
      expect(Tok::Dot, "'.'");
      auto e = node(Sk::Lam, at, {parse_term()});
      const_cast<SExpr*>(e.get())->name = name;
      return e;
    }
    if (is_keyword(t, "Sig")) {
      Token at = next();
      expect(Tok::LParen, "'('");
      std::string name = expect_name();
      expect(Tok::Colon, "':'");
      SExprPtr dom = parse_term();
      expect(Tok::RParen, "')'");
      expect(Tok::Dot, "'.'");
      SExprPtr cod = parse_term();
      auto e = node(Sk::Sigma, at, {dom, cod});
      const_cast<SExpr*>(e.get())->name = name;
      return e;
    }
    if (t.kind == Tok::LParen && peek(1).kind == Tok::Ident &&
        !keywords().count(peek(1).text) && peek(2).kind == Tok::Colon) {
      Token at = next();
      std::string name = next().text;
      next();  // ':'
      SExprPtr dom = parse_term();
      expect(Tok::RParen, "')'");
      expect(Tok::Arrow, "'->'");
      SExprPtr cod = parse_term();
      auto e = node(Sk::Fun, at, {dom, cod});
      const_cast<SExpr*>(e.get())->name = name;
      return e;
    }
    SExprPtr lhs = parse_app();
    if (peek().kind == Tok::Arrow) {
      Token at = next();
      SExprPtr rhs = parse_term();
      return node(Sk::Fun, at, {lhs, rhs});  // empty name: arrow sugar
    }
    return lhs;
  }

  SExprPtr parse_app() {
    SExprPtr head = parse_head();
    while (starts_atom(peek())) {
      Token at = peek();
      SExprPtr arg = parse_atom();
      head = node(Sk::App, at, {head, arg});
    }
    return head;
  }

  SExprPtr parse_motive_bracket(std::string* binder) {
    expect(Tok::LBracket, "'['");
    *binder = expect_name();
    expect(Tok::Dot, "'.'");
    SExprPtr motive = parse_term();
    expect(Tok::RBracket, "']'");
    return motive;
  }

  SExprPtr parse_head() {
    const Token& t = peek();
    if (t.kind == Tok::Ident) {
      if (t.text == "suc" || t.text == "fst" || t.text == "snd" ||
          t.text == "box" || t.text == "Prf") {
        Token at = next();
        Sk tag = at.text == "suc"   ? Sk::Suc
                 : at.text == "fst" ? Sk::Fst
                 : at.text == "snd" ? Sk::Snd
                 : at.text == "box" ? Sk::Box
                                    : Sk::Prf;
        return node(tag, at, {parse_atom()});
      }
      if (t.text == "Enum") {
        Token at = next();
        Token num = expect(Tok::Number, "an arity after 'Enum'");
        auto e = node(Sk::Enum, at);
        const_cast<SExpr*>(e.get())->n = num.number;
        return e;
      }
      if (t.text == "natrec") {
        Token at = next();
        std::string binder;
        SExprPtr motive = parse_motive_bracket(&binder);
        SExprPtr z = parse_atom();
        SExprPtr s = parse_atom();
        SExprPtr k = parse_atom();
        auto e = node(Sk::Natrec, at, {motive, z, s, k});
        const_cast<SExpr*>(e.get())->name = binder;
        return e;
      }
      if (t.text == "case") {
        Token at = next();
        expect(Tok::LBrace, "'{' after 'case'");
        Token num = expect(Tok::Number, "a branch count");
        expect(Tok::RBrace, "'}'");
        std::string binder;
        SExprPtr motive = parse_motive_bracket(&binder);
        expect(Tok::LParen, "'('");
        std::vector<SExprPtr> kids = {motive};
        if (num.number > 0) {
          kids.push_back(parse_term());
          while (peek().kind == Tok::Pipe) {
            next();
            kids.push_back(parse_term());
          }
        }
        Token close = expect(Tok::RParen, "')'");
        if (kids.size() - 1 != num.number) {
          throw ParseError(
              "case{" + std::to_string(num.number) + "} has " +
                  std::to_string(kids.size() - 1) + " branches",
              close.line, close.col);
        }
        kids.push_back(parse_atom());
        auto e = node(Sk::Case, at, std::move(kids));
        const_cast<SExpr*>(e.get())->n = num.number;
        const_cast<SExpr*>(e.get())->name = binder;
        return e;
      }
      if (t.text == "where") {
        Token at = next();
        std::string binder;
        SExprPtr motive = parse_motive_bracket(&binder);
        expect(Tok::LParen, "'('");
        expect(Tok::LBracket, "'['");
        std::string proof = expect_name();
        expect(Tok::RBracket, "']'");
        expect(Tok::Equals, "'='");
        SExprPtr body = parse_term();
        expect(Tok::RParen, "')'");
        SExprPtr scrut = parse_atom();
        auto e = node(Sk::Where, at, {motive, body, scrut});
        const_cast<SExpr*>(e.get())->name = binder;
        const_cast<SExpr*>(e.get())->name2 = proof;
        return e;
      }
    }
    return parse_atom();
  }

  SExprPtr parse_atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Star:
        return node(Sk::Star, next());
      case Tok::ConstStart: {
        Token at = next();
        Token n = expect(Tok::Number, "an arity");
        expect(Tok::Comma, "','");
        Token ix = expect(Tok::Number, "an index");
        Token close = expect(Tok::RBrace, "'}'");
        if (ix.number >= n.number) {
          throw ParseError("constant index " + std::to_string(ix.number) +
                               " out of range for c{" +
                               std::to_string(n.number) + ",_}",
                           close.line, close.col);
        }
        auto e = node(Sk::Const, at);
        const_cast<SExpr*>(e.get())->n = n.number;
        const_cast<SExpr*>(e.get())->i = ix.number;
        return e;
      }
      case Tok::LBrace: {
        Token at = next();
        SExprPtr elem = parse_term();
        expect(Tok::Colon, "':'");
        SExprPtr ty = parse_term();
        expect(Tok::RBrace, "'}'");
        return node(Sk::Sing, at, {elem, ty});
      }
      case Tok::LParen: {
        Token at = next();
        SExprPtr first = parse_term();
        if (peek().kind == Tok::Comma) {
          next();
          SExprPtr second = parse_term();
          expect(Tok::RParen, "')'");
          return node(Sk::Pair, at, {first, second});
        }
        expect(Tok::RParen, "')'");
        return first;
      }
      case Tok::Ident: {
        if (is_keyword(t, "U")) return node(Sk::U, next());
        if (is_keyword(t, "Nat")) return node(Sk::Nat, next());
        if (is_keyword(t, "zero")) return node(Sk::Zero, next());
        if (keywords().count(t.text)) fail("unexpected keyword '" + t.text + "'");
        Token at = next();
        auto e = node(Sk::Var, at);
        const_cast<SExpr*>(e.get())->name = at.text;
        return e;
      }
      default:
        fail("expected a term");
    }
  }

  DeclFile parse_file() {
    DeclFile file;
    while (peek().kind != Tok::End) {
      const Token& t = peek();
      if (!is_decl_keyword(t)) {
        fail("expected a declaration (assume, define, check, normalize, infer)");
      }
      Token at = next();
      Decl d;
      d.line = at.line;
      if (at.text == "assume") {
        d.kind = DeclKind::Assume;
        d.name = expect_name();
        expect(Tok::Colon, "':'");
        d.type = parse_term();
      } else if (at.text == "define") {
        d.kind = DeclKind::Define;
        d.name = expect_name();
        expect(Tok::Colon, "':'");
        d.type = parse_term();
        expect(Tok::Equals, "'='");
        d.term = parse_term();
      } else if (at.text == "check") {
        d.kind = DeclKind::Check;
        d.term = parse_term();
        expect(Tok::Colon, "':'");
        d.type = parse_term();
      } else if (at.text == "normalize") {
        d.kind = DeclKind::Normalize;
        d.term = parse_term();
        expect(Tok::Colon, "':'");
        d.type = parse_term();
      } else {
        d.kind = DeclKind::Infer;
        d.term = parse_term();
      }
      file.decls.push_back(std::move(d));
    }
    return file;
  }
};

}  // namespace

DeclFile parse(const std::string& text) {
  Parser p{lex(text)};
  return p.parse_file();
}

namespace {

// Working scope is outermost first so binder entry is a push_back; lookup
// scans from the back (innermost).
struct Elab {
  std::vector<std::string> scope;
  const DefMap* defs;
  bool allow_star;

  TermPtr go(const SExprPtr& s) {
    switch (s->tag) {
      case Sk::Var: {
        for (std::size_t k = 0; k < scope.size(); ++k) {
          std::size_t slot = scope.size() - 1 - k;
          if (scope[slot] == s->name) return mk_var(static_cast<unsigned>(k));
        }
        if (defs) {
          auto it = defs->find(s->name);
          if (it != defs->end()) {
            const DefEntry& def = it->second;
            if (def.depth > scope.size()) {
              throw ElabError("defined name used outside its scope", s->name,
                              s->line, s->col);
            }
            return shift_free(
                def.body, 0,
                static_cast<unsigned>(scope.size() - def.depth));
          }
        }
        throw ElabError("unbound name '" + s->name + "'", s->name, s->line,
                        s->col);
      }
      case Sk::U:
        return u_term();
      case Sk::Nat:
        return nat_term();
      case Sk::Zero:
        return zero_term();
      case Sk::Star:
        if (!allow_star) {
          Diagnostic d;
          d.kind = DiagKind::StarInUserSyntax;
          d.context_depth = scope.size();
          d.subject = star_term();
          throw TypeError(std::move(d));
        }
        return star_term();
      case Sk::Fun: {
        TermPtr dom = go(s->kids[0]);
        // Arrow sugar gets an anonymous binder entry; the empty string can
        // never match a source name, so the codomain is elaborated at the
        // right depth without a substitution node.
        return fun(dom, under(s->name, s->kids[1]));
      }
      case Sk::Sigma: {
        TermPtr dom = go(s->kids[0]);
        return sigma(dom, under(s->name, s->kids[1]));
      }
      case Sk::Lam:
        return lam(under(s->name, s->kids[0]));
      case Sk::App:
        return app(go(s->kids[0]), go(s->kids[1]));
      case Sk::Sing: {
        TermPtr elem = go(s->kids[0]);
        return sing(elem, go(s->kids[1]));
      }
      case Sk::Pair:
        return pair(go(s->kids[0]), go(s->kids[1]));
      case Sk::Fst:
        return fst(go(s->kids[0]));
      case Sk::Snd:
        return snd(go(s->kids[0]));
      case Sk::Suc:
        return suc(go(s->kids[0]));
      case Sk::Natrec: {
        TermPtr motive = under(s->name, s->kids[0]);
        return natrec(motive, go(s->kids[1]), go(s->kids[2]), go(s->kids[3]));
      }
      case Sk::Enum:
        return enum_ty(s->n);
      case Sk::Const:
        return cst(s->n, s->i);
      case Sk::Case: {
        TermPtr motive = under(s->name, s->kids[0]);
        std::vector<TermPtr> branches;
        for (std::size_t k = 1; k + 1 < s->kids.size(); ++k) {
          branches.push_back(go(s->kids[k]));
        }
        return case_of(s->n, motive, branches, go(s->kids.back()));
      }
      case Sk::Prf:
        return prf(go(s->kids[0]));
      case Sk::Box:
        return box(go(s->kids[0]));
      case Sk::Where: {
        // The motive is closed over the current scope; its binder stands for
        // nothing nameable and is not entered.
        TermPtr motive = go(s->kids[0]);
        TermPtr body = under(s->name2, s->kids[1]);
        return where(motive, body, go(s->kids[2]));
      }
    }
    throw std::logic_error("unhandled surface tag");
  }

  TermPtr under(const std::string& name, const SExprPtr& body) {
    scope.push_back(name);
    TermPtr t = go(body);
    scope.pop_back();
    return t;
  }
};

}  // namespace

TermPtr elaborate(const SExprPtr& s, const std::vector<std::string>& scope,
                  const DefMap& defs, bool allow_star) {
  Elab e;
  e.scope.assign(scope.rbegin(), scope.rend());
  e.defs = &defs;
  e.allow_star = allow_star;
  return e.go(s);
}

namespace {

// Precedence levels: 0 binders and arrows may appear, 2 application, 3 atom.
constexpr int kTermPrec = 0;
constexpr int kAppPrec = 2;
constexpr int kAtomPrec = 3;

// Free occurrence of de Bruijn index i, used to pick the arrow rendering for
// function types whose codomain ignores its binder. Non-spine substitution
// nodes appear only in diagnostic output; depending on everything is the safe
// answer for them.
bool mentions_var(const TermPtr& t, unsigned i) {
  if (auto idx = var_index(t)) return *idx == i;
  switch (t->tag) {
    case Tm::Sub:
      return true;
    case Tm::Fun:
    case Tm::Sigma:
      return mentions_var(t->kids[0], i) || mentions_var(t->kids[1], i + 1);
    case Tm::Lam:
      return mentions_var(t->kids[0], i + 1);
    case Tm::Natrec:
      return mentions_var(t->kids[0], i + 1) || mentions_var(t->kids[1], i) ||
             mentions_var(t->kids[2], i) || mentions_var(t->kids[3], i);
    case Tm::Case: {
      if (mentions_var(case_motive(*t), i + 1)) return true;
      for (unsigned k = 0; k < t->n; ++k) {
        if (mentions_var(case_branch(*t, k), i)) return true;
      }
      return mentions_var(case_scrut(*t), i);
    }
    case Tm::Where:
      return mentions_var(t->kids[0], i) || mentions_var(t->kids[1], i + 1) ||
             mentions_var(t->kids[2], i);
    default: {
      for (const auto& k : t->kids) {
        if (mentions_var(k, i)) return true;
      }
      return false;
    }
  }
}

struct Printer {
  std::vector<std::string> names;  // outermost first
  unsigned fresh = 0;

  std::string fresh_name() {
    std::string candidate;
    do {
      candidate = "x" + std::to_string(fresh++);
    } while (std::find(names.begin(), names.end(), candidate) != names.end());
    return candidate;
  }

  std::string var_name(unsigned index) const {
    if (index < names.size()) return names[names.size() - 1 - index];
    // Out-of-scope index in a diagnostic dump: show it raw.
    return "#" + std::to_string(index);
  }

  static std::string wrap(bool needed, std::string s) {
    return needed ? "(" + std::move(s) + ")" : std::move(s);
  }

  std::string under(const std::string& name, const TermPtr& body, int prec) {
    names.push_back(name);
    std::string s = go(body, prec);
    names.pop_back();
    return s;
  }

  std::string go(const TermPtr& t, int prec) {
    if (auto idx = var_index(t)) return var_name(*idx);
    switch (t->tag) {
      case Tm::U:
        return "U";
      case Tm::Nat:
        return "Nat";
      case Tm::Zero:
        return "zero";
      case Tm::Star:
        return "*";
      case Tm::Fun: {
        const TermPtr& dom = t->kids[0];
        const TermPtr& cod = t->kids[1];
        // A codomain weakened by an outer-projection substitution stands for
        // one binder the body never sees: render under the current names.
        if (cod->tag == Tm::Sub && cod->sub && cod->sub->tag == Sb::P &&
            !var_index(cod)) {
          std::string s =
              go(dom, kAppPrec) + " -> " + go(cod->kids[0], kTermPrec);
          return wrap(prec > 1, std::move(s));
        }
        if (!mentions_var(cod, 0)) {
          std::string s = go(dom, kAppPrec) + " -> " + under("", cod, kTermPrec);
          return wrap(prec > 1, std::move(s));
        }
        std::string name = fresh_name();
        std::string s = "(" + name + " : " + go(dom, kTermPrec) + ") -> " +
                        under(name, cod, kTermPrec);
        return wrap(prec > 0, std::move(s));
      }
      case Tm::Sing:
        return "{" + go(t->kids[0], kTermPrec) + " : " +
               go(t->kids[1], kTermPrec) + "}";
      case Tm::Lam: {
        std::string name = fresh_name();
        std::string s = "\\" + name + ". " + under(name, t->kids[0], kTermPrec);
        return wrap(prec > 0, std::move(s));
      }
      case Tm::App: {
        std::string s =
            go(t->kids[0], kAppPrec) + " " + go(t->kids[1], kAtomPrec);
        return wrap(prec > kAppPrec, std::move(s));
      }
      case Tm::Sigma: {
        std::string name = fresh_name();
        std::string s = "Sig (" + name + " : " + go(t->kids[0], kTermPrec) +
                        "). " + under(name, t->kids[1], kTermPrec);
        return wrap(prec > 0, std::move(s));
      }
      case Tm::Pair:
        return "(" + go(t->kids[0], kTermPrec) + ", " +
               go(t->kids[1], kTermPrec) + ")";
      case Tm::Fst:
        return wrap(prec > kAppPrec, "fst " + go(t->kids[0], kAtomPrec));
      case Tm::Snd:
        return wrap(prec > kAppPrec, "snd " + go(t->kids[0], kAtomPrec));
      case Tm::Suc:
        return wrap(prec > kAppPrec, "suc " + go(t->kids[0], kAtomPrec));
      case Tm::Natrec: {
        std::string name = fresh_name();
        std::string s = "natrec [" + name + ". " +
                        under(name, t->kids[0], kTermPrec) + "] " +
                        go(t->kids[1], kAtomPrec) + " " +
                        go(t->kids[2], kAtomPrec) + " " +
                        go(t->kids[3], kAtomPrec);
        return wrap(prec > kAppPrec, std::move(s));
      }
      case Tm::Enum:
        return wrap(prec > kAppPrec, "Enum " + std::to_string(t->n));
      case Tm::Const:
        return "c{" + std::to_string(t->n) + "," + std::to_string(t->i) + "}";
      case Tm::Case: {
        std::string name = fresh_name();
        std::string s = "case{" + std::to_string(t->n) + "} [" + name + ". " +
                        under(name, case_motive(*t), kTermPrec) + "] (";
        for (unsigned k = 0; k < t->n; ++k) {
          if (k > 0) s += " | ";
          s += go(case_branch(*t, k), kTermPrec);
        }
        s += ") " + go(case_scrut(*t), kAtomPrec);
        return wrap(prec > kAppPrec, std::move(s));
      }
      case Tm::Prf:
        return wrap(prec > kAppPrec, "Prf " + go(t->kids[0], kAtomPrec));
      case Tm::Box:
        return wrap(prec > kAppPrec, "box " + go(t->kids[0], kAtomPrec));
      case Tm::Where: {
        // The motive does not depend on the scrutinee, so its binder slot is
        // printed as "_" and it is rendered in the ambient scope.
        std::string motive = go(t->kids[0], kTermPrec);
        std::string pname = fresh_name();
        std::string s = "where [_. " + motive + "] ([" + pname +
                        "] = " + under(pname, t->kids[1], kTermPrec) + ") " +
                        go(t->kids[2], kAtomPrec);
        return wrap(prec > kAppPrec, std::move(s));
      }
      case Tm::Q:
      case Tm::Sub:
        // Reachable only for non-normal input in diagnostics.
        return dump(t);
    }
    return dump(t);
  }
};

}  // namespace

std::string print_term(const TermPtr& t, const std::vector<std::string>& names) {
  Printer p;
  p.names = names;
  return p.go(t, kTermPrec);
}

std::string print_term(const TermPtr& t, unsigned depth) {
  Printer p;
  for (unsigned k = 0; k < depth; ++k) {
    p.names.push_back("x" + std::to_string(k));
  }
  p.fresh = depth;
  return p.go(t, kTermPrec);
}

}  // namespace tt
