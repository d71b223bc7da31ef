#include "catsem/polynomial.hpp"

#include "catsem/errors.hpp"
#include "catsem/kernels.hpp"

namespace catsem {

PolySignature canonical_signature(const std::vector<std::size_t>& fibers) {
  return PolySignature{Family::from_fiber_sizes(std::span<const std::size_t>(fibers))};
}

FinSet extension(const PolySignature& sig, const FinSet& x) {
  std::vector<Label> elems;
  elems.reserve(extension_size(sig, x.size()));
  for (std::size_t b = 0; b < sig.base().size(); ++b) {
    std::vector<std::size_t> radices(sig.map.fiber_size(b), x.size());
    for (const auto& choice : kernels::odometer(radices)) {
      Label::Tuple section;
      section.reserve(choice.size());
      for (std::size_t c : choice) section.push_back(x[c]);
      elems.push_back(Label::tuple({sig.base()[b], Label(std::move(section))}));
    }
  }
  return FinSet::distinct(std::move(elems));
}

std::size_t extension_size(const PolySignature& sig, std::size_t x_size) {
  std::size_t total = 0;
  for (std::size_t b = 0; b < sig.base().size(); ++b) {
    std::size_t term = 1;
    for (std::size_t i = 0; i < sig.map.fiber_size(b); ++i) term *= x_size;
    total += term;
  }
  return total;
}

Label encode(const PolySignature& sig, const FinSet& x, const PolyElement& e) {
  if (e.base_point >= sig.base().size() || e.section.size() != sig.map.fiber_size(e.base_point)) {
    throw StructureError("section length does not match the fiber size");
  }
  Label::Tuple section;
  for (std::size_t i : e.section) {
    if (i >= x.size()) throw StructureError("section entry outside X");
    section.push_back(x[i]);
  }
  return Label::tuple({sig.base()[e.base_point], Label(std::move(section))});
}

PolyElement decode(const PolySignature& sig, const FinSet& x, const Label& l) {
  PolyElement e;
  e.base_point = sig.base().index_of(l[0]);
  for (const auto& c : l[1].as_tuple()) e.section.push_back(x.index_of(c));
  if (e.section.size() != sig.map.fiber_size(e.base_point)) {
    throw StructureError("section length does not match the fiber size in " + l.str());
  }
  return e;
}

PipelineExtension extension_via_pipeline(const PolySignature& sig, const FinSet& x) {
  Family x_over_point(FinMap::to_terminal(x));
  // E^*(X): X × E over E, labels (e, x).
  Family pulled = base_change(FinMap::to_terminal(sig.total()), x_over_point);
  // p_*: sections over each fiber of p.
  Family pushed = pushforward(sig.map.proj(), pulled);
  // B_!: forget the base.
  Family summed = dependent_sum(FinMap::to_terminal(sig.base()), pushed);

  FinSet canonical = extension(sig, x);
  std::vector<std::size_t> t(summed.total().size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Label& l = summed.total()[i];
    Label::Tuple section;
    for (const auto& pair : l[1].as_tuple()) section.push_back(pair[1]);
    t[i] = canonical.index_of(Label::tuple({l[0], Label(std::move(section))}));
  }
  FinMap to_canonical(summed.total(), canonical, std::move(t));
  if (!to_canonical.is_bijective()) throw StructureError("pipeline extension is not canonically bijective");
  return {summed, to_canonical};
}

FinMap extension_on_map(const PolySignature& sig, const FinMap& h) {
  FinSet from = extension(sig, h.dom());
  FinSet to = extension(sig, h.cod());
  // Both extensions list base points in order and sections as base-|X|
  // numerals, so the image index is computed without label lookups.
  const std::size_t ny = h.cod().size();
  std::vector<std::size_t> t;
  t.reserve(from.size());
  std::size_t offset = 0;
  for (std::size_t b = 0; b < sig.base().size(); ++b) {
    const std::size_t k = sig.map.fiber_size(b);
    std::vector<std::size_t> radices(k, h.dom().size());
    for (const auto& choice : kernels::odometer(radices)) {
      std::size_t code = 0;
      for (std::size_t c : choice) code = code * ny + h(c);
      t.push_back(offset + code);
    }
    std::size_t block = 1;
    for (std::size_t i = 0; i < k; ++i) block *= ny;
    offset += block;
  }
  return FinMap(from, to, std::move(t));
}

PolyTranspose ump_transpose(const PolySignature& sig, const FinSet& x, const FinMap& f) {
  if (!(f.cod() == extension(sig, x))) {
    throw BoundaryError("transpose requires a map into the canonical extension");
  }
  std::vector<std::size_t> t1(f.dom().size());
  for (std::size_t z = 0; z < t1.size(); ++z) t1[z] = decode(sig, x, f.cod()[f(z)]).base_point;
  FinMap f1(f.dom(), sig.base(), std::move(t1));
  Pullback dom = pullback(f1, sig.map.proj());
  std::vector<std::size_t> t2(dom.object.size());
  for (std::size_t k = 0; k < t2.size(); ++k) {
    const std::size_t z = dom.p1(k);
    const std::size_t e = dom.p2(k);
    PolyElement el = decode(sig, x, f.cod()[f(z)]);
    t2[k] = el.section[sig.map.position_in_fiber(e)];
  }
  return PolyTranspose{f1, dom, FinMap(dom.object, x, std::move(t2))};
}

FinMap ump_untranspose(const PolySignature& sig, const FinSet& x, const FinMap& f1, const FinMap& f2) {
  if (!(f1.cod() == sig.base())) throw BoundaryError("f1 must land in the signature base");
  Pullback dom = pullback(f1, sig.map.proj());
  if (!(f2.dom() == dom.object) || !(f2.cod() == x)) {
    throw BoundaryError("f2 must be a map from the canonical pullback Z ×_B E into X");
  }
  FinSet ext = extension(sig, x);
  std::vector<std::size_t> t(f1.dom().size());
  for (std::size_t z = 0; z < t.size(); ++z) {
    PolyElement el;
    el.base_point = f1(z);
    for (std::size_t e : sig.map.fiber(el.base_point)) {
      el.section.push_back(f2(dom.object.index_of(Label::tuple({f1.dom()[z], sig.total()[e]}))));
    }
    t[z] = ext.index_of(encode(sig, x, el));
  }
  return FinMap(f1.dom(), ext, std::move(t));
}

ComposedSignature compose_signatures(const PolySignature& p, const PolySignature& q) {
  const FinSet& c_set = q.base();
  FinSet pc = extension(p, c_set);
  // ⟨a, c⟩ = 1_{P_p(C)}
  PolyTranspose tr = ump_transpose(p, c_set, FinMap::identity(pc));
  Pullback pulled_q = pullback(tr.f2, q.map.proj());
  FinMap composite = compose(tr.domain.p1, pulled_q.p1);
  return ComposedSignature{PolySignature{Family(composite)}, tr.f1, tr.domain, tr.f2, pulled_q};
}

FinMap composition_iso(const ComposedSignature& pq, const PolySignature& p, const PolySignature& q,
                       const FinSet& x) {
  FinSet from = extension(pq.composite, x);
  FinSet pqx = extension(q, x);
  FinSet to = extension(p, pqx);
  std::vector<std::size_t> t(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    const Label& l = from[i];
    const Label& base = l[0];  // (b, s) in P_p(C)
    const auto& xs = l[1].as_tuple();
    const std::size_t b = p.base().index_of(base[0]);
    const auto& s = base[1].as_tuple();
    std::size_t cursor = 0;
    Label::Tuple outer;
    for (std::size_t k = 0; k < p.map.fiber_size(b); ++k) {
      const std::size_t c = q.base().index_of(s[k]);
      const std::size_t len = q.map.fiber_size(c);
      if (cursor + len > xs.size()) throw StructureError("composite fiber shorter than expected");
      Label::Tuple inner(xs.begin() + static_cast<std::ptrdiff_t>(cursor),
                         xs.begin() + static_cast<std::ptrdiff_t>(cursor + len));
      cursor += len;
      outer.push_back(Label::tuple({s[k], Label(std::move(inner))}));
    }
    if (cursor != xs.size()) throw StructureError("composite fiber longer than expected");
    t[i] = to.index_of(Label::tuple({base[0], Label(std::move(outer))}));
  }
  return FinMap(from, to, std::move(t));
}

CartMorphism make_cart_morphism(Square sq) {
  auto rep = check_pullback(sq);
  if (rep.verdict != PullbackVerdict::pullback) {
    throw StructureError("square is not cartesian: " + to_string(rep.verdict) + " " + rep.detail);
  }
  return CartMorphism{std::move(sq)};
}

FinMap square_to_nat(const CartMorphism& m, const FinSet& x) {
  const Square& sq = m.square;
  if (check_pullback(sq).verdict != PullbackVerdict::pullback) {
    throw StructureError("square_to_nat requires a cartesian square");
  }
  PolySignature pf{Family(sq.left)};
  PolySignature pg{Family(sq.right)};
  FinSet from = extension(pf, x);
  FinSet to = extension(pg, x);
  std::vector<std::size_t> t(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    PolyElement e = decode(pf, x, from[i]);
    const std::size_t a = e.base_point;
    const std::size_t c = sq.bottom(a);
    PolyElement out;
    out.base_point = c;
    out.section.assign(pg.map.fiber_size(c), 0);
    const auto& fib = pf.map.fiber(a);
    for (std::size_t k = 0; k < fib.size(); ++k) {
      out.section[pg.map.position_in_fiber(sq.top(fib[k]))] = e.section[k];
    }
    t[i] = to.index_of(encode(pg, x, out));
  }
  return FinMap(from, to, std::move(t));
}

PolySignature signature_from_json(const nlohmann::json& j) {
  if (j.contains("fibers")) {
    auto fibers = j["fibers"].get<std::vector<std::size_t>>();
    if (j.contains("base") && j["base"].get<std::size_t>() != fibers.size()) {
      throw StructureError("signature base size does not match the fiber list");
    }
    return canonical_signature(fibers);
  }
  return PolySignature{family_from_json(j)};
}

nlohmann::json to_json(const PolySignature& sig) {
  auto fibers = sig.map.fiber_sizes();
  nlohmann::json j = {{"base", sig.base().size()}, {"fibers", fibers}};
  j["family"] = to_json(sig.map);
  return j;
}

}  // namespace catsem
