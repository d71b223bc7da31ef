#include "catsem/identity.hpp"

#include "catsem/errors.hpp"
#include "catsem/kernels.hpp"

namespace catsem {

namespace {

// ρ*_X(n, s) = (n, s ∘ ρ_n) where ρ_n : t⁻¹(n) -> q⁻¹(n).
FinMap restriction_map(const Family& t, const PolySignature& q, const FinMap& rho, const FinSet& x) {
  PolySignature tsig{t};
  FinSet from = extension(q, x);
  FinSet to = extension(tsig, x);
  std::vector<std::size_t> table(from.size());
  for (std::size_t k = 0; k < from.size(); ++k) {
    PolyElement e = decode(q, x, from[k]);
    PolyElement r;
    r.base_point = t.base().index_of(q.base()[e.base_point]);
    for (std::size_t u : t.fiber(r.base_point)) r.section.push_back(e.section[q.map.position_in_fiber(rho(u))]);
    table[k] = to.index_of(encode(tsig, x, r));
  }
  return FinMap(std::move(from), std::move(to), std::move(table));
}

}  // namespace

IdComparison id_comparison(const EqModel& model) {
  IdComparison c;
  c.model = model;
  const Family& t = model.region;
  c.I = pullback(model.eq, model.full.proj());
  std::vector<std::size_t> qt(c.I.object.size());
  for (std::size_t k = 0; k < qt.size(); ++k) qt[k] = t.proj()(model.pairs.p1(c.I.p1(k)));
  c.q = PolySignature{Family(FinMap(c.I.object, t.base(), std::move(qt)))};

  std::vector<std::size_t> rt(t.total().size());
  for (std::size_t u = 0; u < rt.size(); ++u) {
    const Label pair = Label::tuple({t.total()[u], t.total()[u]});
    const Label w = model.full.total()[model.refl(u)];
    auto found = c.I.object.find(Label::tuple({pair, w}));
    if (!found) {
      throw StructureError("refl(" + t.total()[u].str() + ") does not lie over Eq on the diagonal");
    }
    rt[u] = *found;
  }
  c.rho = FinMap(t.total(), c.I.object, std::move(rt));

  c.rho_star_dot = restriction_map(t, c.q, c.rho, t.total());
  c.rho_star = restriction_map(t, c.q, c.rho, t.base());
  c.pq_t = extension_on_map(c.q, t.proj());
  c.pt_t = extension_on_map(PolySignature{t}, t.proj());
  c.square = check_pullback(make_square(c.rho_star_dot, c.pq_t, c.pt_t, c.rho_star));

  c.gap = pullback(c.rho_star, c.pt_t);
  c.comparison = pullback_mediator(c.gap, c.pq_t, c.rho_star_dot);
  c.bijective = c.comparison.is_bijective();

  // J picks the first preimage; in the bijective case this is the inverse.
  std::vector<std::size_t> jt(c.gap.object.size(), kernels::npos);
  for (std::size_t k = 0; k < c.comparison.dom().size(); ++k) {
    std::size_t& slot = jt[c.comparison(k)];
    if (slot == kernels::npos) slot = k;
  }
  bool total = true;
  for (std::size_t k = 0; k < jt.size(); ++k) {
    if (jt[k] == kernels::npos) {
      total = false;
      c.detail = "comparison map misses " + c.gap.object[k].str();
      break;
    }
  }
  if (total) {
    c.J = FinMap(c.gap.object, c.comparison.dom(), std::move(jt));
    c.section_law = compose(c.comparison, *c.J) == FinMap::identity(c.gap.object);
    c.retraction_law = compose(*c.J, c.comparison) == FinMap::identity(c.comparison.dom());
  }
  return c;
}

FinMap rho_star(const IdComparison& cmp, const FinSet& x) {
  return restriction_map(cmp.model.region, cmp.q, cmp.rho, x);
}

Label id_eliminate(const IdComparison& cmp, const Label& C, const Label& c) {
  if (!cmp.J) throw StructureError("no weak pullback structure: " + cmp.detail);
  const std::size_t ci = cmp.rho_star.dom().index_of(C);
  const std::size_t ti = cmp.pt_t.dom().index_of(c);
  if (cmp.rho_star(ci) != cmp.pt_t(ti)) {
    throw TypeError("term " + c.str() + " does not lie over the restriction of " + C.str());
  }
  const std::size_t g = cmp.gap.object.index_of(Label::tuple({C, c}));
  return cmp.comparison.dom()[(*cmp.J)(g)];
}

}  // namespace catsem
