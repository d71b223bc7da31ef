#pragma once

// Surface syntax for dependent type expressions:
//
//   type ::= Unit | Fin atom | Sigma (x : type) . type | Pi (x : type) . type
//          | Id tatom atom atom | Id(type, term, term) | (type)
//   term ::= \x . term | atom atom*
//   atom ::= numeral | ident | (term) | (term, term)
//
// Binder bodies extend as far right as possible; application is left
// associative.

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace catsem {

struct Term;
struct Type;
using TermPtr = std::shared_ptr<const Term>;
using TypePtr = std::shared_ptr<const Type>;

struct Term {
  enum class Kind { num, var, pair, lam, app };
  Kind kind = Kind::num;
  std::size_t num = 0;
  std::string name;  ///< variable, or the λ binder
  TermPtr a;         ///< pair first, λ body, applied function
  TermPtr b;         ///< pair second, argument

  static TermPtr make_num(std::size_t n);
  static TermPtr make_var(std::string x);
  static TermPtr make_pair(TermPtr a, TermPtr b);
  static TermPtr make_lam(std::string x, TermPtr body);
  static TermPtr make_app(TermPtr f, TermPtr arg);
};

struct Type {
  enum class Kind { unit, fin, sigma, pi, id };
  Kind kind = Kind::unit;
  std::string binder;  ///< Σ/Π binder
  TypePtr dom;         ///< Σ/Π domain, Id carrier
  TypePtr body;        ///< Σ/Π body
  TermPtr size;        ///< Fin argument
  TermPtr lhs;         ///< Id left
  TermPtr rhs;         ///< Id right

  static TypePtr make_unit();
  static TypePtr make_fin(TermPtr n);
  static TypePtr make_sigma(std::string x, TypePtr a, TypePtr b);
  static TypePtr make_pi(std::string x, TypePtr a, TypePtr b);
  static TypePtr make_id(TypePtr a, TermPtr l, TermPtr r);
};

bool equal(const TermPtr& a, const TermPtr& b);
bool equal(const TypePtr& a, const TypePtr& b);

/// A telescope x₁ : A₁, ..., x_k : A_k.
struct Context {
  std::vector<std::pair<std::string, TypePtr>> entries;
};

/// Throw ParseError with 1-based line and column.
TypePtr parse_type(const std::string& text);
TermPtr parse_term(const std::string& text);
/// `x : A, y : B` (possibly empty).
Context parse_context(const std::string& text);

std::string print(const TypePtr& t);
std::string print(const TermPtr& t);
std::string print(const Context& c);

/// Nesting depth of type formers (Unit and Fin have depth 1).
std::size_t depth(const TypePtr& t);
std::set<std::string> free_vars(const TypePtr& t);
std::set<std::string> free_vars(const TermPtr& t);

/// A simultaneous substitution x_i ↦ t_i.
using Substitution = std::vector<std::pair<std::string, TermPtr>>;
/// Capture-avoiding: binders that would capture a free variable of the
/// substituted terms are renamed with primes.
TypePtr substitute(const TypePtr& t, const Substitution& s);
TermPtr substitute(const TermPtr& t, const Substitution& s);

}  // namespace catsem
