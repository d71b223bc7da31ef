#pragma once

// A direct recursive cardinality evaluator for type expressions. It never
// touches the finite-set layer or the algebra: sums, products and equality
// are computed on plain integers. Variables bound to non-numeric values can
// only be counted, never inspected.

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "catsem/tt_syntax.hpp"

namespace tt_oracle {

using catsem::Term;
using catsem::TermPtr;
using catsem::Type;
using catsem::TypePtr;

/// How a bound variable's type looks from the outside.
struct Binding {
  enum class Shape { fin, unit, id, other } shape = Shape::other;
  std::size_t bound = 0;  ///< n for Fin n
  std::size_t value = 0;
};
using Env = std::map<std::string, Binding>;

enum class Failure { none, type_error, overflow };

struct Result {
  std::size_t card = 0;
  Failure failure = Failure::none;
  bool ok() const { return failure == Failure::none; }
};

inline constexpr std::size_t kCapacity = 4096;

namespace detail {

inline std::optional<std::size_t> numeric(const TermPtr& t, const Env& env) {
  if (t->kind == Term::Kind::num) return t->num;
  if (t->kind != Term::Kind::var) return std::nullopt;
  auto it = env.find(t->name);
  if (it == env.end() || it->second.shape == Binding::Shape::other) return std::nullopt;
  return it->second.value;
}

// Is t an element of a carrier with `n` elements that are exactly 0..n-1
// (Fin n; Unit is n = 1 but only accepts 0 from numerals)?
inline std::optional<std::size_t> member(const TermPtr& t, const Env& env, std::size_t n, bool unit) {
  if (t->kind == Term::Kind::num) {
    if (t->num >= n || (unit && t->num != 0)) return std::nullopt;
    return t->num;
  }
  if (t->kind != Term::Kind::var) return std::nullopt;
  auto it = env.find(t->name);
  if (it == env.end()) return std::nullopt;
  const Binding& b = it->second;
  const bool same = (b.shape == Binding::Shape::fin && b.bound == n) ||
                    ((b.shape == Binding::Shape::unit || b.shape == Binding::Shape::id) && n == 1);
  if (!same) return std::nullopt;
  return b.value;
}

}  // namespace detail

Result card(const TypePtr& a, const Env& env);

inline Result binder(const TypePtr& a, const Env& env, bool product) {
  const Result dom = card(a->dom, env);
  if (!dom.ok()) return dom;
  // An empty domain never evaluates the body, but unbound names are still
  // a scoping error.
  if (dom.card == 0) {
    for (const auto& x : catsem::free_vars(a->body)) {
      if (x != a->binder && !env.count(x)) return {0, Failure::type_error};
    }
  }
  std::size_t acc = product ? 1 : 0;
  for (std::size_t v = 0; v < dom.card; ++v) {
    Env inner = env;
    Binding b;
    switch (a->dom->kind) {
      case Type::Kind::fin:
        b = {Binding::Shape::fin, dom.card, v};
        break;
      case Type::Kind::unit:
        b = {Binding::Shape::unit, 1, 0};
        break;
      case Type::Kind::id:
        b = {Binding::Shape::id, 1, 0};
        break;
      default:
        b = {Binding::Shape::other, 0, 0};
    }
    inner[a->binder] = b;
    const Result body = card(a->body, inner);
    if (!body.ok()) return body;
    if (product) {
      acc *= body.card;
      if (acc >= kCapacity) return {0, Failure::overflow};
    } else {
      acc += body.card;
    }
  }
  if (acc >= kCapacity) return {0, Failure::overflow};
  return {acc, Failure::none};
}

inline Result card(const TypePtr& a, const Env& env) {
  switch (a->kind) {
    case Type::Kind::unit:
      return {1, Failure::none};
    case Type::Kind::fin: {
      auto n = detail::numeric(a->size, env);
      if (!n) return {0, Failure::type_error};
      if (*n >= kCapacity) return {0, Failure::overflow};
      return {*n, Failure::none};
    }
    case Type::Kind::sigma:
      return binder(a, env, false);
    case Type::Kind::pi:
      return binder(a, env, true);
    case Type::Kind::id: {
      const Result c = card(a->dom, env);
      if (!c.ok()) return c;
      if (a->dom->kind != Type::Kind::fin && a->dom->kind != Type::Kind::unit) return {0, Failure::type_error};
      const bool unit = a->dom->kind == Type::Kind::unit;
      auto l = detail::member(a->lhs, env, c.card, unit);
      auto r = detail::member(a->rhs, env, c.card, unit);
      if (!l || !r) return {0, Failure::type_error};
      return {*l == *r ? std::size_t{1} : std::size_t{0}, Failure::none};
    }
  }
  return {0, Failure::type_error};
}

}  // namespace tt_oracle
