#include "catsem/typeiso.hpp"

#include <map>

#include "catsem/errors.hpp"
#include "catsem/nat_algebra.hpp"

namespace catsem {

std::string to_string(TypeIsoLaw law) {
  switch (law) {
    case TypeIsoLaw::sigma_assoc:
      return "sigma-assoc";
    case TypeIsoLaw::sigma_unit_l:
      return "sigma-unit-l";
    case TypeIsoLaw::sigma_unit_r:
      return "sigma-unit-r";
    case TypeIsoLaw::pi_assoc:
      return "pi-assoc";
    case TypeIsoLaw::pi_unit:
      return "pi-unit";
  }
  return "unknown";
}

TypeIsoLaw type_iso_law_from_string(const std::string& name) {
  for (auto law : {TypeIsoLaw::sigma_assoc, TypeIsoLaw::sigma_unit_l, TypeIsoLaw::sigma_unit_r,
                   TypeIsoLaw::pi_assoc, TypeIsoLaw::pi_unit}) {
    if (to_string(law) == name) return law;
  }
  throw StructureError("unknown type isomorphism law '" + name + "'");
}

void validate_nesting(const NestedFamilies& n) {
  if (!(n.b.base() == n.a.total())) throw StructureError("B is not a family over Γ.A");
  if (!(n.c.base() == n.b.total())) {
    throw StructureError("C is not a family over Γ.A.B");
  }
}

namespace {

struct Builder {
  std::vector<Label> labels;
  std::vector<std::size_t> proj;
  void add(Label l, std::size_t g) {
    labels.push_back(std::move(l));
    proj.push_back(g);
  }
  Family done(const FinSet& base) { return Family(FinMap(FinSet(std::move(labels)), base, std::move(proj))); }
};

std::size_t over_context(const NestedFamilies& n, std::size_t b) { return n.a.proj()(n.b.proj()(b)); }

// Σ_{a:A}Σ_{b:B a}C(a,b) as nested pairs (a, (b, c)), and the rhs with
// pairs ((a, b), c), both enumerated fiber by fiber.
TypeIsoWitness sigma_assoc(const NestedFamilies& n) {
  const FinSet& g = n.context();
  Builder l, r;
  for (std::size_t gi = 0; gi < g.size(); ++gi) {
    for (std::size_t a : n.a.fiber(gi)) {
      for (std::size_t b : n.b.fiber(a)) {
        for (std::size_t c : n.c.fiber(b)) {
          l.add(Label::tuple({n.a.total()[a], Label::tuple({n.b.total()[b], n.c.total()[c]})}), gi);
        }
      }
    }
    // The rhs first forms Σ_A B and then sums C over it, in B's order.
    for (std::size_t b = 0; b < n.b.total().size(); ++b) {
      if (over_context(n, b) != gi) continue;
      const Label ab = Label::tuple({n.a.total()[n.b.proj()(b)], n.b.total()[b]});
      for (std::size_t c : n.c.fiber(b)) r.add(Label::tuple({ab, n.c.total()[c]}), gi);
    }
  }
  TypeIsoWitness w{TypeIsoLaw::sigma_assoc, l.done(g), r.done(g), FinMap()};
  w.bijection = FinMap::from_labels(w.lhs.total(), w.rhs.total(), [](const Label& x) {
    return Label::tuple({Label::tuple({x[0], x[1][0]}), x[1][1]});
  });
  return w;
}

// Σ_{x:1}A ≅ A: the unit type over Γ has the single element (γ, *).
TypeIsoWitness sigma_unit_l(const NestedFamilies& n) {
  const FinSet& g = n.context();
  Builder l;
  for (std::size_t gi = 0; gi < g.size(); ++gi) {
    for (std::size_t a : n.a.fiber(gi)) l.add(Label::tuple({Label::tuple({g[gi], Label("*")}), n.a.total()[a]}), gi);
  }
  TypeIsoWitness w{TypeIsoLaw::sigma_unit_l, l.done(g), n.a, FinMap()};
  w.bijection = FinMap::from_labels(w.lhs.total(), w.rhs.total(), [](const Label& x) { return x[1]; });
  return w;
}

// Σ_{a:A}1 ≅ A.
TypeIsoWitness sigma_unit_r(const NestedFamilies& n) {
  const FinSet& g = n.context();
  Builder l;
  for (std::size_t a = 0; a < n.a.total().size(); ++a) l.add(Label::tuple({n.a.total()[a], Label("*")}), n.a.proj()(a));
  TypeIsoWitness w{TypeIsoLaw::sigma_unit_r, l.done(g), n.a, FinMap()};
  w.bijection = FinMap::from_labels(w.lhs.total(), w.rhs.total(), [](const Label& x) { return x[0]; });
  return w;
}

// Π_{a:A}Π_{b:B a}C ≅ Π_{(a,b):Σ_A B}C by currying; sections are matched
// through the b each component lies over.
TypeIsoWitness pi_assoc(const NestedFamilies& n) {
  const Family inner = pushforward(n.b.proj(), n.c);
  const Family lhs = pushforward(n.a.proj(), inner);
  const Family rhs = pushforward(compose(n.a.proj(), n.b.proj()), n.c);
  TypeIsoWitness w{TypeIsoLaw::pi_assoc, lhs, rhs, FinMap()};
  const FinMap& cp = n.c.proj();
  w.bijection = FinMap::from_labels(lhs.total(), rhs.total(), [&](const Label& x) {
    std::map<std::size_t, Label> by_b;
    for (const auto& section : x[1].as_tuple()) {
      for (const auto& c : section[1].as_tuple()) by_b.emplace(cp(n.c.total().index_of(c)), c);
    }
    Label::Tuple flat;
    const std::size_t gi = n.context().index_of(x[0]);
    for (std::size_t b = 0; b < n.b.total().size(); ++b) {
      if (over_context(n, b) == gi) flat.push_back(by_b.at(b));
    }
    return Label::tuple({x[0], Label(std::move(flat))});
  });
  return w;
}

// Π_{x:1}A ≅ A: sections of A along the identity of Γ, labels (γ, (a)).
TypeIsoWitness pi_unit(const NestedFamilies& n) {
  const Family lhs = pushforward(FinMap::identity(n.context()), n.a);
  TypeIsoWitness w{TypeIsoLaw::pi_unit, lhs, n.a, FinMap()};
  w.bijection = FinMap::from_labels(lhs.total(), n.a.total(), [](const Label& x) { return x[1][0]; });
  return w;
}

std::size_t fiber_size_by_arithmetic(TypeIsoLaw law, const NestedFamilies& n, std::size_t gi) {
  NatStructure ns(static_cast<std::size_t>(-1));
  std::vector<std::size_t> outer;
  switch (law) {
    case TypeIsoLaw::sigma_assoc:
      for (std::size_t a : n.a.fiber(gi)) {
        std::vector<std::size_t> inner;
        for (std::size_t b : n.b.fiber(a)) inner.push_back(n.c.fiber_size(b));
        outer.push_back(ns.sigma(inner));
      }
      return ns.sigma(outer);
    case TypeIsoLaw::sigma_unit_l:
      outer.push_back(n.a.fiber_size(gi));
      return ns.sigma(outer);
    case TypeIsoLaw::sigma_unit_r:
      outer.assign(n.a.fiber_size(gi), ns.one());
      return ns.sigma(outer);
    case TypeIsoLaw::pi_assoc:
      for (std::size_t a : n.a.fiber(gi)) {
        std::vector<std::size_t> inner;
        for (std::size_t b : n.b.fiber(a)) inner.push_back(n.c.fiber_size(b));
        outer.push_back(ns.pi(inner));
      }
      return ns.pi(outer);
    case TypeIsoLaw::pi_unit:
      outer.push_back(n.a.fiber_size(gi));
      return ns.pi(outer);
  }
  return 0;
}

}  // namespace

TypeIsoWitness typeiso_witness(TypeIsoLaw law, const NestedFamilies& n) {
  validate_nesting(n);
  TypeIsoWitness w;
  switch (law) {
    case TypeIsoLaw::sigma_assoc:
      w = sigma_assoc(n);
      break;
    case TypeIsoLaw::sigma_unit_l:
      w = sigma_unit_l(n);
      break;
    case TypeIsoLaw::sigma_unit_r:
      w = sigma_unit_r(n);
      break;
    case TypeIsoLaw::pi_assoc:
      w = pi_assoc(n);
      break;
    case TypeIsoLaw::pi_unit:
      w = pi_unit(n);
      break;
  }
  if (w.bijection.is_bijective()) {
    const FinMap inv = w.bijection.inverse();
    w.invertible = compose(inv, w.bijection) == FinMap::identity(w.lhs.total()) &&
                   compose(w.bijection, inv) == FinMap::identity(w.rhs.total());
  }
  w.base_compatible = w.lhs.base() == w.rhs.base() && compose(w.rhs.proj(), w.bijection) == w.lhs.proj();
  w.cardinality_agrees = true;
  for (std::size_t gi = 0; gi < n.context().size(); ++gi) {
    if (w.lhs.fiber_size(gi) != fiber_size_by_arithmetic(law, n, gi)) w.cardinality_agrees = false;
  }
  return w;
}

std::size_t typeiso_size(TypeIsoLaw law, const NestedFamilies& n) {
  validate_nesting(n);
  std::size_t total = 0;
  for (std::size_t gi = 0; gi < n.context().size(); ++gi) total += fiber_size_by_arithmetic(law, n, gi);
  return total;
}

NestedFamilies random_nested(std::mt19937_64& rng, std::size_t max_fiber) {
  std::uniform_int_distribution<std::size_t> ctx(1, 3), fib(0, max_fiber);
  auto over = [&](const FinSet& base, const std::string& tag) {
    std::vector<Label> total;
    std::vector<std::size_t> proj;
    for (std::size_t x = 0; x < base.size(); ++x) {
      const std::size_t k = fib(rng);
      for (std::size_t i = 0; i < k; ++i) {
        total.push_back(Label::tuple({Label(tag), base[x], Label(i)}));
        proj.push_back(x);
      }
    }
    return Family(FinMap(FinSet(std::move(total)), base, std::move(proj)));
  };
  NestedFamilies n;
  n.a = over(FinSet::range(ctx(rng)), "a");
  n.b = over(n.a.total(), "b");
  n.c = over(n.b.total(), "c");
  return n;
}

}  // namespace catsem
