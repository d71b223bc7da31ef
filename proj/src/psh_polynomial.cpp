#include "catsem/psh_polynomial.hpp"

#include <map>

#include "catsem/errors.hpp"
#include "catsem/polynomial.hpp"
#include "catsem/sieves.hpp"

namespace catsem {

namespace {

bool is_set_level(const IndexCategory& cat) { return cat.object_count() == 1 && cat.is_discrete(); }

// Position of the first entry of object d in a flattened component list.
std::vector<std::size_t> offsets(const Presheaf& f) {
  std::vector<std::size_t> out;
  std::size_t acc = 0;
  for (std::size_t d = 0; d < f.category().object_count(); ++d) {
    out.push_back(acc);
    acc += f.at(d).size();
  }
  return out;
}

Label flat_label(const Presheaf& fiber, const Presheaf& x, const std::vector<std::vector<std::size_t>>& tables) {
  Label::Tuple flat;
  for (std::size_t d = 0; d < fiber.category().object_count(); ++d) {
    for (std::size_t k = 0; k < fiber.at(d).size(); ++k) flat.push_back(x.at(d)[tables[d][k]]);
  }
  return Label(std::move(flat));
}

// Decode a flat label back into component tables.
std::vector<std::vector<std::size_t>> unflatten(const Presheaf& fiber, const Presheaf& x, const Label& flat) {
  const auto& items = flat.as_tuple();
  std::vector<std::vector<std::size_t>> tables(fiber.category().object_count());
  std::size_t pos = 0;
  for (std::size_t d = 0; d < tables.size(); ++d) {
    for (std::size_t k = 0; k < fiber.at(d).size(); ++k) tables[d].push_back(x.at(d).index_of(items.at(pos++)));
  }
  return tables;
}

struct FiberCache {
  const PNat& t;
  std::map<std::pair<std::size_t, std::size_t>, Presheaf> cache;

  const Presheaf& get(std::size_t c, std::size_t a) {
    auto key = std::make_pair(c, a);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, display_fiber(t, c, a)).first;
    return it->second;
  }
};

}  // namespace

Presheaf display_fiber(const PNat& t, std::size_t c, std::size_t a) {
  return pullback(yoneda_element(t.tgt(), c, a), t).object;
}

Presheaf psh_extension(const PNat& t, const Presheaf& x) {
  const IndexCategory& cat = t.tgt().category();
  if (!(x.category() == cat)) throw BoundaryError("extension at a presheaf over another category");
  if (is_set_level(cat)) {
    FinSet ext = extension(PolySignature{Family(t.at(0))}, x.at(0));
    return Presheaf(cat, {ext}, {FinMap::identity(ext)});
  }
  FiberCache fibers{t, {}};
  std::vector<FinSet> at;
  for (std::size_t c = 0; c < cat.object_count(); ++c) {
    std::vector<Label> elems;
    for (std::size_t a = 0; a < t.tgt().at(c).size(); ++a) {
      const Presheaf& f = fibers.get(c, a);
      for (const auto& tables : enumerate_nat_tables(f, x)) {
        elems.push_back(Label::tuple({t.tgt().at(c)[a], flat_label(f, x, tables)}));
      }
    }
    at.emplace_back(std::move(elems));
  }
  std::vector<FinMap> r;
  for (std::size_t f = 0; f < cat.arrow_count(); ++f) {
    const Arrow& ar = cat.arrow(f);
    const std::size_t c = ar.dst;
    const std::size_t d = ar.src;
    std::vector<std::size_t> table;
    for (const auto& l : at[c].elements()) {
      const std::size_t a = t.tgt().at(c).index_of(l[0]);
      const Presheaf& fib = fibers.get(c, a);
      auto phi = unflatten(fib, x, l[1]);
      const std::size_t a2 = t.tgt().restrict(f, a);
      const Presheaf& fib2 = fibers.get(d, a2);
      std::vector<std::vector<std::size_t>> phi2(cat.object_count());
      for (std::size_t e = 0; e < cat.object_count(); ++e) {
        for (const auto& gl : fib2.at(e).elements()) {
          // (g, u) ↦ φ(f ∘ g, u)
          const std::size_t g = cat.find_arrow(gl[0]);
          Label moved = Label::tuple({cat.arrow(cat.compose(f, g)).name, gl[1]});
          phi2[e].push_back(phi[e][fib.at(e).index_of(moved)]);
        }
      }
      table.push_back(at[d].index_of(Label::tuple({t.tgt().at(d)[a2], flat_label(fib2, x, phi2)})));
    }
    r.emplace_back(at[c], at[d], std::move(table));
  }
  return Presheaf(cat, std::move(at), std::move(r));
}

PNat psh_extension_on_map(const PNat& t, const PNat& h) {
  const IndexCategory& cat = t.tgt().category();
  Presheaf from = psh_extension(t, h.src());
  Presheaf to = psh_extension(t, h.tgt());
  if (is_set_level(cat)) {
    FinMap m = extension_on_map(PolySignature{Family(t.at(0))}, h.at(0));
    return PNat(from, to, {m});
  }
  FiberCache fibers{t, {}};
  std::vector<std::vector<std::size_t>> tables(cat.object_count());
  for (std::size_t c = 0; c < cat.object_count(); ++c) {
    for (const auto& l : from.at(c).elements()) {
      const Presheaf& fib = fibers.get(c, t.tgt().at(c).index_of(l[0]));
      auto phi = unflatten(fib, h.src(), l[1]);
      for (std::size_t e = 0; e < cat.object_count(); ++e) {
        for (auto& v : phi[e]) v = h(e, v);
      }
      tables[c].push_back(to.at(c).index_of(Label::tuple({l[0], flat_label(fib, h.tgt(), phi)})));
    }
  }
  return PNat::from_tables(from, to, tables);
}

PNat psh_extension_base(const PNat& t, const Presheaf& x) {
  Presheaf ext = psh_extension(t, x);
  const IndexCategory& cat = t.tgt().category();
  std::vector<std::vector<std::size_t>> tables(cat.object_count());
  for (std::size_t c = 0; c < cat.object_count(); ++c) {
    for (const auto& l : ext.at(c).elements()) tables[c].push_back(t.tgt().at(c).index_of(l[0]));
  }
  return PNat::from_tables(ext, t.tgt(), tables);
}

PshComposed psh_compose_signatures(const PNat& p, const PNat& q) {
  const IndexCategory& cat = p.tgt().category();
  const Presheaf& cset = q.tgt();
  PNat a = psh_extension_base(p, cset);
  PshPullback pulled_p = pullback(a, p);
  FiberCache fibers{p, {}};
  std::vector<std::vector<std::size_t>> ctab(cat.object_count());
  for (std::size_t c = 0; c < cat.object_count(); ++c) {
    for (const auto& l : pulled_p.object.at(c).elements()) {
      const Label& base = l[0];  // (A, φ)
      const Presheaf& fib = fibers.get(c, p.tgt().at(c).index_of(base[0]));
      auto offs = offsets(fib);
      // φ evaluated at the generic element (id_c, e)
      const std::size_t k = fib.at(c).index_of(Label::tuple({cat.arrow(cat.identity(c)).name, l[1]}));
      ctab[c].push_back(cset.at(c).index_of(base[1].as_tuple().at(offs[c] + k)));
    }
  }
  PNat cmap = PNat::from_tables(pulled_p.object, cset, ctab);
  PshPullback pulled_q = pullback(cmap, q);
  PNat composite = compose(pulled_p.p1, pulled_q.p1);
  return {composite, a, pulled_p, cmap, pulled_q};
}

PartialMapClassifier partial_map_classifier(const Presheaf& x) {
  const IndexCategory& cat = x.category();
  PNat top = omega_top(cat);
  Presheaf tilde = psh_extension(top, x);
  std::vector<std::vector<std::size_t>> tables(cat.object_count());
  for (std::size_t c = 0; c < cat.object_count(); ++c) {
    const std::size_t maximal = top(c, 0);
    Presheaf fib = display_fiber(top, c, maximal);
    for (std::size_t e = 0; e < x.at(c).size(); ++e) {
      std::vector<std::vector<std::size_t>> phi(cat.object_count());
      for (std::size_t d = 0; d < cat.object_count(); ++d) {
        for (const auto& gl : fib.at(d).elements()) phi[d].push_back(x.restrict(cat.find_arrow(gl[0]), e));
      }
      tables[c].push_back(tilde.at(c).index_of(Label::tuple({top.tgt().at(c)[maximal], flat_label(fib, x, phi)})));
    }
  }
  return {tilde, PNat::from_tables(x, tilde, tables)};
}

}  // namespace catsem
