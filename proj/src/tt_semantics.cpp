#include "catsem/tt_semantics.hpp"

#include <algorithm>
#include <set>

#include "catsem/errors.hpp"
#include "catsem/kernels.hpp"
#include "catsem/mlalg.hpp"

namespace catsem {

namespace {

// Persistent environment: each binding remembers the scope its type lives in.
struct ScopeNode;
using Scope = std::shared_ptr<const ScopeNode>;
struct ScopeNode {
  std::string name;
  TypePtr type;
  Scope type_scope;
  Label value;
  Scope parent;
};

Scope bind(Scope parent, std::string name, TypePtr type, Scope type_scope, Label value) {
  return std::make_shared<const ScopeNode>(
      ScopeNode{std::move(name), std::move(type), std::move(type_scope), std::move(value), std::move(parent)});
}

const ScopeNode* lookup(const Scope& s, const std::string& x) {
  for (const ScopeNode* n = s.get(); n; n = n->parent.get()) {
    if (n->name == x) return n;
  }
  return nullptr;
}

struct Inferred {
  Label value;
  TypePtr type;
  Scope scope;
};

class Sem {
 public:
  explicit Sem(const NatStructure& ns) : ns_(ns) {}

  std::size_t nat_value(const TermPtr& t, const Scope& s) const {
    std::size_t n = 0;
    if (t->kind == Term::Kind::num) {
      n = t->num;
    } else {
      const Label v = infer(t, s).value;
      if (!v.is_int()) throw TypeError("Fin expects a natural number, got " + print(t));
      n = static_cast<std::size_t>(v.as_int());
    }
    if (n >= ns_.capacity()) throw OutOfBoundError("Fin", std::to_string(n), n, ns_.capacity());
    return n;
  }

  std::size_t card(const TypePtr& a, const Scope& s) const {
    switch (a->kind) {
      case Type::Kind::unit:
        return ns_.one();
      case Type::Kind::fin:
        return nat_value(a->size, s);
      case Type::Kind::sigma:
      case Type::Kind::pi: {
        std::vector<std::size_t> parts;
        for (const Label& v : elements(a->dom, s)) parts.push_back(card(a->body, bind(s, a->binder, a->dom, s, v)));
        return a->kind == Type::Kind::sigma ? ns_.sigma(parts) : ns_.pi(parts);
      }
      case Type::Kind::id: {
        const auto elems = elements(a->dom, s);
        const std::size_t i = index_in(elems, check(a->lhs, s, a->dom, s), a->lhs);
        const std::size_t j = index_in(elems, check(a->rhs, s, a->dom, s), a->rhs);
        return ns_.eq(elems.size(), i, j);
      }
    }
    return 0;
  }

  std::vector<Label> elements(const TypePtr& a, const Scope& s) const {
    std::vector<Label> out;
    switch (a->kind) {
      case Type::Kind::unit:
        out.emplace_back(0);
        break;
      case Type::Kind::fin:
        for (std::size_t i = 0, n = nat_value(a->size, s); i < n; ++i) out.emplace_back(i);
        break;
      case Type::Kind::sigma:
        for (const Label& v : elements(a->dom, s)) {
          for (Label& w : elements(a->body, bind(s, a->binder, a->dom, s, v))) out.push_back(Label::tuple({v, w}));
        }
        break;
      case Type::Kind::pi: {
        std::vector<std::vector<Label>> fibers;
        std::vector<std::size_t> radices;
        for (const Label& v : elements(a->dom, s)) {
          fibers.push_back(elements(a->body, bind(s, a->binder, a->dom, s, v)));
          radices.push_back(fibers.back().size());
        }
        for (const auto& choice : kernels::odometer(radices)) {
          Label::Tuple f;
          for (std::size_t k = 0; k < choice.size(); ++k) f.push_back(fibers[k][choice[k]]);
          out.emplace_back(std::move(f));
        }
        break;
      }
      case Type::Kind::id:
        if (card(a, s) == 1) out.emplace_back(0);
        break;
    }
    return out;
  }

  Label check(const TermPtr& t, const Scope& ts, const TypePtr& a, const Scope& as) const {
    switch (t->kind) {
      case Term::Kind::num: {
        const bool fits = (a->kind == Type::Kind::fin && t->num < nat_value(a->size, as)) ||
                          (a->kind == Type::Kind::unit && t->num == 0) ||
                          (a->kind == Type::Kind::id && t->num == 0 && card(a, as) == 1);
        if (!fits) throw TypeError("numeral " + std::to_string(t->num) + " is not an element of " + print(a));
        return Label(t->num);
      }
      case Term::Kind::pair: {
        if (a->kind != Type::Kind::sigma) throw TypeError("pair " + print(t) + " checked against " + print(a));
        Label v = check(t->a, ts, a->dom, as);
        Label w = check(t->b, ts, a->body, bind(as, a->binder, a->dom, as, v));
        return Label::tuple({v, w});
      }
      case Term::Kind::lam: {
        if (a->kind != Type::Kind::pi) throw TypeError("λ-term " + print(t) + " checked against " + print(a));
        Label::Tuple f;
        for (const Label& v : elements(a->dom, as)) {
          f.push_back(check(t->a, bind(ts, t->name, a->dom, as, v), a->body, bind(as, a->binder, a->dom, as, v)));
        }
        return Label(std::move(f));
      }
      case Term::Kind::var:
      case Term::Kind::app: {
        Inferred got = infer(t, ts);
        if (elements(got.type, got.scope) != elements(a, as)) {
          throw TypeError("term " + print(t) + " has type " + print(got.type) + ", expected " + print(a));
        }
        return got.value;
      }
    }
    return Label();
  }

  Inferred infer(const TermPtr& t, const Scope& s) const {
    switch (t->kind) {
      case Term::Kind::var: {
        const ScopeNode* n = lookup(s, t->name);
        if (!n) throw TypeError("unbound variable " + t->name);
        return {n->value, n->type, n->type_scope};
      }
      case Term::Kind::app: {
        Inferred f = infer(t->a, s);
        if (f.type->kind != Type::Kind::pi) throw TypeError("applying " + print(t->a) + ", which is not a function");
        const auto dom = elements(f.type->dom, f.scope);
        Label v = check(t->b, s, f.type->dom, f.scope);
        const std::size_t i = index_in(dom, v, t->b);
        return {f.value.as_tuple()[i], f.type->body, bind(f.scope, f.type->binder, f.type->dom, f.scope, v)};
      }
      case Term::Kind::num:
        throw TypeError("cannot infer the type of numeral " + print(t));
      case Term::Kind::pair:
      case Term::Kind::lam:
        throw TypeError("cannot infer the type of " + print(t) + " without an expected type");
    }
    throw TypeError("unreachable term form");
  }

 private:
  static std::size_t index_in(const std::vector<Label>& elems, const Label& v, const TermPtr& t) {
    auto it = std::find(elems.begin(), elems.end(), v);
    if (it == elems.end()) throw TypeError("value of " + print(t) + " is not an element of its type");
    return static_cast<std::size_t>(it - elems.begin());
  }

  const NatStructure& ns_;
};

Scope scope_of(const Context& ctx, const Label& env, std::size_t upto) {
  Scope s;
  for (std::size_t k = 0; k < upto; ++k) s = bind(s, ctx.entries[k].first, ctx.entries[k].second, s, env[k]);
  return s;
}

void require_distinct(const Context& ctx) {
  std::set<std::string> seen;
  for (const auto& e : ctx.entries) {
    if (!seen.insert(e.first).second) throw TypeError("context binds " + e.first + " twice");
  }
}

}  // namespace

FinMap TypeTable::as_map() const {
  const std::size_t top = card.empty() ? 0 : *std::max_element(card.begin(), card.end());
  return FinMap(extent, FinSet::range(top + 1), card);
}

FinSet Elaborator::extent(const Context& ctx) const {
  Sem sem(ns_);
  FinSet envs({Label(Label::Tuple{})});
  for (std::size_t k = 0; k < ctx.entries.size(); ++k) {
    const TypePtr& a = ctx.entries[k].second;
    std::vector<std::vector<Label>> elems(envs.size());
    std::vector<std::size_t> cards(envs.size());
    std::size_t top = 0;
    for (std::size_t e = 0; e < envs.size(); ++e) {
      const Scope s = scope_of(ctx, envs[e], k);
      cards[e] = sem.card(a, s);
      elems[e] = sem.elements(a, s);
      if (elems[e].size() != cards[e]) throw StructureError("element enumeration disagrees with the structure maps");
      top = std::max(top, cards[e]);
    }
    // Γ.A is the pullback of the generic family along the classifying map.
    const Family u = nat_family(top + 1);
    const Comprehension c = comprehend(u, FinMap(envs, u.base(), cards));
    std::vector<Label> next;
    next.reserve(c.family.total().size());
    for (const Label& l : c.family.total().elements()) {
      const std::size_t e = envs.index_of(l[0]);
      Label::Tuple env = l[0].as_tuple();
      env.push_back(elems[e][static_cast<std::size_t>(l[1][1].as_int())]);
      next.emplace_back(std::move(env));
    }
    envs = FinSet(std::move(next));
  }
  return envs;
}

TypeTable Elaborator::elaborate(const Context& ctx, const TypePtr& type) const {
  Sem sem(ns_);
  TypeTable t;
  t.extent = extent(ctx);
  t.card.reserve(t.extent.size());
  for (const Label& env : t.extent.elements()) t.card.push_back(sem.card(type, scope_of(ctx, env, ctx.entries.size())));
  return t;
}

std::size_t Elaborator::cardinality(const TypePtr& type) const {
  const auto fv = free_vars(type);
  if (!fv.empty()) throw TypeError("type is not closed: " + *fv.begin() + " is free");
  return Sem(ns_).card(type, nullptr);
}

std::vector<Label> Elaborator::elements(const Context& ctx, const TypePtr& type, const Label& env) const {
  return Sem(ns_).elements(type, scope_of(ctx, env, ctx.entries.size()));
}

Label Elaborator::check(const Context& ctx, const TermPtr& term, const TypePtr& type, const Label& env) const {
  const Scope s = scope_of(ctx, env, ctx.entries.size());
  return Sem(ns_).check(term, s, type, s);
}

FinMap Elaborator::substitution_map(const Context& delta, const Context& gamma,
                                    const std::vector<TermPtr>& sigma) const {
  if (sigma.size() != gamma.entries.size()) throw TypeError("substitution needs one term per context entry");
  Sem sem(ns_);
  const FinSet from = extent(delta);
  const FinSet to = extent(gamma);
  std::vector<std::size_t> table(from.size());
  for (std::size_t d = 0; d < from.size(); ++d) {
    const Scope ds = scope_of(delta, from[d], delta.entries.size());
    Scope gs;
    Label::Tuple values;
    for (std::size_t k = 0; k < sigma.size(); ++k) {
      const auto& [name, type] = gamma.entries[k];
      Label v = sem.check(sigma[k], ds, type, gs);
      gs = bind(gs, name, type, gs, v);
      values.push_back(std::move(v));
    }
    table[d] = to.index_of(Label(std::move(values)));
  }
  return FinMap(from, to, std::move(table));
}

CoherenceResult Elaborator::check_substitution(const Context& delta, const Context& gamma,
                                               const std::vector<TermPtr>& sigma, const TypePtr& e) const {
  require_distinct(gamma);
  Substitution s;
  for (std::size_t k = 0; k < gamma.entries.size() && k < sigma.size(); ++k) s.emplace_back(gamma.entries[k].first, sigma[k]);
  CoherenceResult r;
  const FinMap m = substitution_map(delta, gamma, sigma);
  r.substituted = substitute(e, s);
  r.direct = elaborate(delta, r.substituted);
  const TypeTable over_gamma = elaborate(gamma, e);
  r.composed.extent = m.dom();
  for (std::size_t d = 0; d < m.dom().size(); ++d) r.composed.card.push_back(over_gamma.card[m(d)]);
  r.equal = r.direct == r.composed;
  for (std::size_t d = 0; d < m.dom().size() && !r.equal; ++d) {
    if (r.direct.card[d] != r.composed.card[d]) {
      r.first_difference = m.dom()[d];
      break;
    }
  }
  return r;
}

}  // namespace catsem
