#include "catsem/tt_syntax.hpp"

#include <algorithm>
#include <cctype>

#include "catsem/errors.hpp"

namespace catsem {

TermPtr Term::make_num(std::size_t n) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::num;
  t->num = n;
  return t;
}
TermPtr Term::make_var(std::string x) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::var;
  t->name = std::move(x);
  return t;
}
TermPtr Term::make_pair(TermPtr a, TermPtr b) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::pair;
  t->a = std::move(a);
  t->b = std::move(b);
  return t;
}
TermPtr Term::make_lam(std::string x, TermPtr body) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::lam;
  t->name = std::move(x);
  t->a = std::move(body);
  return t;
}
TermPtr Term::make_app(TermPtr f, TermPtr arg) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::app;
  t->a = std::move(f);
  t->b = std::move(arg);
  return t;
}

TypePtr Type::make_unit() { return std::make_shared<Type>(); }
TypePtr Type::make_fin(TermPtr n) {
  auto t = std::make_shared<Type>();
  t->kind = Kind::fin;
  t->size = std::move(n);
  return t;
}
TypePtr Type::make_sigma(std::string x, TypePtr a, TypePtr b) {
  auto t = std::make_shared<Type>();
  t->kind = Kind::sigma;
  t->binder = std::move(x);
  t->dom = std::move(a);
  t->body = std::move(b);
  return t;
}
TypePtr Type::make_pi(std::string x, TypePtr a, TypePtr b) {
  auto t = std::make_shared<Type>();
  t->kind = Kind::pi;
  t->binder = std::move(x);
  t->dom = std::move(a);
  t->body = std::move(b);
  return t;
}
TypePtr Type::make_id(TypePtr a, TermPtr l, TermPtr r) {
  auto t = std::make_shared<Type>();
  t->kind = Kind::id;
  t->dom = std::move(a);
  t->lhs = std::move(l);
  t->rhs = std::move(r);
  return t;
}

bool equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case Term::Kind::num:
      return a->num == b->num;
    case Term::Kind::var:
      return a->name == b->name;
    case Term::Kind::lam:
      return a->name == b->name && equal(a->a, b->a);
    case Term::Kind::pair:
    case Term::Kind::app:
      return equal(a->a, b->a) && equal(a->b, b->b);
  }
  return false;
}

bool equal(const TypePtr& a, const TypePtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case Type::Kind::unit:
      return true;
    case Type::Kind::fin:
      return equal(a->size, b->size);
    case Type::Kind::sigma:
    case Type::Kind::pi:
      return a->binder == b->binder && equal(a->dom, b->dom) && equal(a->body, b->body);
    case Type::Kind::id:
      return equal(a->dom, b->dom) && equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
  }
  return false;
}

namespace {

struct Token {
  enum class Kind { ident, num, sym, end };
  Kind kind = Kind::end;
  std::string text;
  std::size_t line = 1, col = 1;
};

bool is_keyword(const std::string& s) {
  return s == "Unit" || s == "Fin" || s == "Sigma" || s == "Pi" || s == "Id";
}

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(src[i]) & 0xC0) != 0x80) {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' || src[j] == '\'')) ++j;
      t.kind = Token::Kind::ident;
      t.text = src.substr(i, j - i);
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Token::Kind::num;
      t.text = src.substr(i, j - i);
      if (t.text.size() > 9) throw ParseError(t.line, t.col, "numeral too large");
      advance(j - i);
    } else if (std::string("():.,\\").find(c) != std::string::npos) {
      t.kind = Token::Kind::sym;
      t.text = std::string(1, c);
      advance(1);
    } else if (src.compare(i, 2, "λ") == 0) {
      t.kind = Token::Kind::sym;
      t.text = "\\";
      advance(2);
    } else {
      throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& src) : toks_(lex(src)) {}

  TypePtr type() {
    const Token& t = peek();
    if (is_ident("Sigma") || is_ident("Pi")) {
      const bool sigma = t.text == "Sigma";
      next();
      expect("(");
      std::string x = binder_name();
      expect(":");
      TypePtr a = type();
      expect(")");
      expect(".");
      TypePtr b = type();
      return sigma ? Type::make_sigma(std::move(x), std::move(a), std::move(b))
                   : Type::make_pi(std::move(x), std::move(a), std::move(b));
    }
    if (is_ident("Id")) {
      next();
      if (is_sym("(")) {
        // Either Id(A, a, b) or Id (A) a b.
        next();
        TypePtr a = type();
        if (is_sym(",")) {
          next();
          TermPtr l = term();
          expect(",");
          TermPtr r = term();
          expect(")");
          return Type::make_id(std::move(a), std::move(l), std::move(r));
        }
        expect(")");
        TermPtr l = atom();
        TermPtr r = atom();
        return Type::make_id(std::move(a), std::move(l), std::move(r));
      }
      TypePtr a = type_atom();
      TermPtr l = atom();
      TermPtr r = atom();
      return Type::make_id(std::move(a), std::move(l), std::move(r));
    }
    return type_atom();
  }

  TermPtr term() {
    if (is_sym("\\")) {
      next();
      std::string x = binder_name();
      expect(".");
      return Term::make_lam(std::move(x), term());
    }
    TermPtr f = atom();
    while (starts_atom()) f = Term::make_app(std::move(f), atom());
    return f;
  }

  Context context() {
    Context c;
    if (at_end()) return c;
    while (true) {
      std::string x = binder_name();
      expect(":");
      c.entries.emplace_back(std::move(x), type());
      if (!is_sym(",")) break;
      next();
    }
    return c;
  }

  void finish() {
    if (!at_end()) fail("unexpected '" + peek().text + "'");
  }

 private:
  TypePtr type_atom() {
    if (is_ident("Unit")) {
      next();
      return Type::make_unit();
    }
    if (is_ident("Fin")) {
      next();
      return Type::make_fin(atom());
    }
    if (is_sym("(")) {
      next();
      TypePtr t = type();
      expect(")");
      return t;
    }
    fail(at_end() ? "unexpected end of input, expected a type" : "expected a type, found '" + peek().text + "'");
  }

  TermPtr atom() {
    const Token& t = peek();
    if (t.kind == Token::Kind::num) {
      next();
      return Term::make_num(std::stoul(t.text));
    }
    if (t.kind == Token::Kind::ident && !is_keyword(t.text)) {
      next();
      return Term::make_var(t.text);
    }
    if (is_sym("(")) {
      next();
      TermPtr a = term();
      if (is_sym(",")) {
        next();
        TermPtr b = term();
        expect(")");
        return Term::make_pair(std::move(a), std::move(b));
      }
      expect(")");
      return a;
    }
    fail(at_end() ? "unexpected end of input, expected a term" : "expected a term, found '" + t.text + "'");
  }

  bool starts_atom() const {
    const Token& t = peek();
    return t.kind == Token::Kind::num || (t.kind == Token::Kind::ident && !is_keyword(t.text)) ||
           (t.kind == Token::Kind::sym && t.text == "(");
  }

  std::string binder_name() {
    const Token& t = peek();
    if (t.kind != Token::Kind::ident || is_keyword(t.text)) {
      fail(at_end() ? "unexpected end of input, expected a variable" : "expected a variable, found '" + t.text + "'");
    }
    next();
    return t.text;
  }

  const Token& peek() const { return toks_[pos_]; }
  void next() {
    if (pos_ + 1 < toks_.size()) ++pos_;
  }
  bool at_end() const { return peek().kind == Token::Kind::end; }
  bool is_sym(const char* s) const { return peek().kind == Token::Kind::sym && peek().text == s; }
  bool is_ident(const char* s) const { return peek().kind == Token::Kind::ident && peek().text == s; }
  void expect(const char* s) {
    if (!is_sym(s)) {
      fail(at_end() ? std::string("unexpected end of input, expected '") + s + "'"
                    : std::string("expected '") + s + "', found '" + peek().text + "'");
    }
    next();
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(peek().line, peek().col, msg); }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

TypePtr parse_type(const std::string& text) {
  Parser p(text);
  TypePtr t = p.type();
  p.finish();
  return t;
}

TermPtr parse_term(const std::string& text) {
  Parser p(text);
  TermPtr t = p.term();
  p.finish();
  return t;
}

Context parse_context(const std::string& text) {
  Parser p(text);
  Context c = p.context();
  p.finish();
  return c;
}

namespace {

std::string print_atom(const TermPtr& t) {
  if (t->kind == Term::Kind::app || t->kind == Term::Kind::lam) return "(" + print(t) + ")";
  return print(t);
}

}  // namespace

std::string print(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::num:
      return std::to_string(t->num);
    case Term::Kind::var:
      return t->name;
    case Term::Kind::pair:
      return "(" + print(t->a) + ", " + print(t->b) + ")";
    case Term::Kind::lam:
      return "\\" + t->name + " . " + print(t->a);
    case Term::Kind::app:
      return (t->a->kind == Term::Kind::lam ? "(" + print(t->a) + ")" : print(t->a)) + " " + print_atom(t->b);
  }
  return {};
}

std::string print(const TypePtr& t) {
  switch (t->kind) {
    case Type::Kind::unit:
      return "Unit";
    case Type::Kind::fin:
      return "Fin " + print_atom(t->size);
    case Type::Kind::sigma:
      return "Sigma (" + t->binder + " : " + print(t->dom) + ") . " + print(t->body);
    case Type::Kind::pi:
      return "Pi (" + t->binder + " : " + print(t->dom) + ") . " + print(t->body);
    case Type::Kind::id: {
      const std::string carrier = t->dom->kind == Type::Kind::unit ? "Unit" : "(" + print(t->dom) + ")";
      return "Id " + carrier + " " + print_atom(t->lhs) + " " + print_atom(t->rhs);
    }
  }
  return {};
}

std::string print(const Context& c) {
  std::string s;
  for (std::size_t i = 0; i < c.entries.size(); ++i) {
    if (i) s += ", ";
    s += c.entries[i].first + " : " + print(c.entries[i].second);
  }
  return s;
}

std::size_t depth(const TypePtr& t) {
  switch (t->kind) {
    case Type::Kind::unit:
    case Type::Kind::fin:
      return 1;
    case Type::Kind::sigma:
    case Type::Kind::pi:
      return 1 + std::max(depth(t->dom), depth(t->body));
    case Type::Kind::id:
      return 1 + depth(t->dom);
  }
  return 0;
}

std::set<std::string> free_vars(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::num:
      return {};
    case Term::Kind::var:
      return {t->name};
    case Term::Kind::lam: {
      auto s = free_vars(t->a);
      s.erase(t->name);
      return s;
    }
    case Term::Kind::pair:
    case Term::Kind::app: {
      auto s = free_vars(t->a);
      s.merge(free_vars(t->b));
      return s;
    }
  }
  return {};
}

std::set<std::string> free_vars(const TypePtr& t) {
  switch (t->kind) {
    case Type::Kind::unit:
      return {};
    case Type::Kind::fin:
      return free_vars(t->size);
    case Type::Kind::sigma:
    case Type::Kind::pi: {
      auto s = free_vars(t->dom);
      auto b = free_vars(t->body);
      b.erase(t->binder);
      s.merge(b);
      return s;
    }
    case Type::Kind::id: {
      auto s = free_vars(t->dom);
      s.merge(free_vars(t->lhs));
      s.merge(free_vars(t->rhs));
      return s;
    }
  }
  return {};
}

namespace {

Substitution without(const Substitution& s, const std::string& x) {
  Substitution out;
  for (const auto& p : s) {
    if (p.first != x) out.push_back(p);
  }
  return out;
}

std::set<std::string> range_vars(const Substitution& s) {
  std::set<std::string> out;
  for (const auto& p : s) out.merge(free_vars(p.second));
  return out;
}

// Picks a name for a binder that captures nothing and renames it in the body.
template <typename Body>
std::pair<std::string, Substitution> freshen(const std::string& x, const Substitution& s, const Body& body) {
  Substitution inner = without(s, x);
  const auto dangerous = range_vars(inner);
  if (!dangerous.count(x)) return {x, inner};
  auto used = dangerous;
  used.merge(free_vars(body));
  std::string y = x;
  while (used.count(y)) y += "'";
  inner.emplace_back(x, Term::make_var(y));
  return {y, inner};
}

}  // namespace

TermPtr substitute(const TermPtr& t, const Substitution& s) {
  if (s.empty()) return t;
  switch (t->kind) {
    case Term::Kind::num:
      return t;
    case Term::Kind::var:
      for (const auto& p : s) {
        if (p.first == t->name) return p.second;
      }
      return t;
    case Term::Kind::pair:
      return Term::make_pair(substitute(t->a, s), substitute(t->b, s));
    case Term::Kind::app:
      return Term::make_app(substitute(t->a, s), substitute(t->b, s));
    case Term::Kind::lam: {
      auto [y, inner] = freshen(t->name, s, t->a);
      return Term::make_lam(y, substitute(t->a, inner));
    }
  }
  return t;
}

TypePtr substitute(const TypePtr& t, const Substitution& s) {
  if (s.empty()) return t;
  switch (t->kind) {
    case Type::Kind::unit:
      return t;
    case Type::Kind::fin:
      return Type::make_fin(substitute(t->size, s));
    case Type::Kind::sigma:
    case Type::Kind::pi: {
      TypePtr a = substitute(t->dom, s);
      auto [y, inner] = freshen(t->binder, s, t->body);
      TypePtr b = substitute(t->body, inner);
      return t->kind == Type::Kind::sigma ? Type::make_sigma(y, a, b) : Type::make_pi(y, a, b);
    }
    case Type::Kind::id:
      return Type::make_id(substitute(t->dom, s), substitute(t->lhs, s), substitute(t->rhs, s));
  }
  return t;
}

}  // namespace catsem
