#include "catsem/equiv.hpp"

#include <algorithm>
#include <numeric>

#include "catsem/errors.hpp"
#include "catsem/kernels.hpp"

namespace catsem {

namespace {

const Family& generic(const EquivClassifier& ec) { return ec.model.region; }

std::size_t position(const EquivClassifier& ec, std::size_t udot) {
  return generic(ec).position_in_fiber(udot);
}

bool is_bijection(const PositionMap& p, std::size_t n) {
  if (p.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (std::size_t j : p) {
    if (j >= n || hit[j]) return false;
    hit[j] = 1;
  }
  return true;
}

Label positions_label(const PositionMap& p) {
  Label::Tuple t;
  for (std::size_t j : p) t.emplace_back(j);
  return Label(std::move(t));
}

bool same_family(const Family& a, const Family& b) { return a.proj() == b.proj(); }

}  // namespace

EquivClassifier build_equiv(const EqModel& model, bool serial) {
  EquivClassifier ec;
  ec.model = model;
  const Family& t = model.region;
  const FinSet& u = t.base();
  ec.pairs = product(u, u);
  ec.dot1 = base_change(ec.pairs.p1, t);
  ec.dot2 = base_change(ec.pairs.p2, t);
  ec.exponential = slice_exponential(ec.dot1, ec.dot2);
  ec.epsilon = exponential_evaluation(ec.exponential, ec.dot1, ec.dot2);

  // |Id(u, v)| is the size of the fiber of t over Eq(u, v).
  auto id_table = [&](std::size_t a) {
    const auto& fib = t.fiber(a);
    std::vector<std::uint64_t> tab(fib.size() * fib.size());
    for (std::size_t i = 0; i < fib.size(); ++i) {
      for (std::size_t j = 0; j < fib.size(); ++j) {
        const std::size_t p = model.pairs.object.index_of(Label::tuple({t.total()[fib[i]], t.total()[fib[j]]}));
        tab[i * fib.size() + j] = model.full.fiber_size(model.eq(p));
      }
    }
    return tab;
  };
  std::vector<std::vector<std::uint64_t>> ids(u.size());
  for (std::size_t a = 0; a < u.size(); ++a) ids[a] = id_table(a);

  ec.is_equiv_count.assign(ec.exponential.total().size(), 0);
  ec.counts_consistent = true;
  std::vector<Label> elems;
  std::vector<std::size_t> proj, incl;
  for (std::size_t x = 0; x < ec.pairs.object.size(); ++x) {
    const std::size_t a = ec.pairs.p1(x), b = ec.pairs.p2(x);
    kernels::EquivCountProblem prob{t.fiber_size(a), t.fiber_size(b), ids[a], ids[b]};
    const auto counts = serial ? kernels::is_equiv_counts_serial(prob) : kernels::is_equiv_counts(prob);
    const auto& fib = ec.exponential.fiber(x);
    if (counts.size() != fib.size()) throw StructureError("isEquiv count does not match the exponential fiber");
    for (std::size_t k = 0; k < fib.size(); ++k) {
      const std::size_t e = fib[k];
      ec.is_equiv_count[e] = counts[k];
      PositionMap p;
      for (const auto& img : ec.exponential.total()[e][1].as_tuple()) {
        p.push_back(ec.dot2.position_in_fiber(ec.dot2.total().index_of(img)));
      }
      const bool bij = is_bijection(p, t.fiber_size(b));
      if (counts[k] != (bij ? 1u : 0u)) ec.counts_consistent = false;
      if (bij) {
        elems.push_back(Label::tuple({ec.pairs.object[x], positions_label(p)}));
        proj.push_back(x);
        incl.push_back(e);
      }
    }
  }
  FinSet eqset(std::move(elems));
  ec.equiv = Family(FinMap(eqset, ec.pairs.object, std::move(proj)));
  ec.equiv_in_exponential = FinMap(eqset, ec.exponential.total(), std::move(incl));
  ec.e1 = base_change(ec.equiv.proj(), ec.dot1);
  ec.e2 = base_change(ec.equiv.proj(), ec.dot2);

  std::vector<std::size_t> ut(ec.e1.total().size());
  for (std::size_t k = 0; k < ut.size(); ++k) {
    const Label& l = ec.e1.total()[k];
    const std::size_t w = ec.equiv.total().index_of(l[0]);
    const std::size_t x = ec.equiv.proj()(w);
    const std::size_t i = ec.dot1.position_in_fiber(ec.dot1.total().index_of(l[1]));
    const std::size_t j = equiv_positions(ec, w)[i];
    const Label& img = ec.dot2.total()[ec.dot2.fiber(x)[j]];
    ut[k] = ec.e2.total().index_of(Label::tuple({l[0], img}));
  }
  ec.universal = FinMap(ec.e1.total(), ec.e2.total(), std::move(ut));
  return ec;
}

std::size_t pair_index(const EquivClassifier& ec, std::size_t a, std::size_t b) {
  const FinSet& u = generic(ec).base();
  return ec.pairs.object.index_of(Label::tuple({u[a], u[b]}));
}

std::size_t equiv_element(const EquivClassifier& ec, std::size_t a, std::size_t b, const PositionMap& perm) {
  const Label l = Label::tuple({ec.pairs.object[pair_index(ec, a, b)], positions_label(perm)});
  auto found = ec.equiv.total().find(l);
  if (!found) throw StructureError("no equivalence " + l.str());
  return *found;
}

PositionMap equiv_positions(const EquivClassifier& ec, std::size_t w) {
  PositionMap p;
  for (const auto& j : ec.equiv.total()[w][1].as_tuple()) p.push_back(static_cast<std::size_t>(j.as_int()));
  return p;
}

std::pair<std::size_t, std::size_t> equiv_ends(const EquivClassifier& ec, std::size_t w) {
  const std::size_t x = ec.equiv.proj()(w);
  return {ec.pairs.p1(x), ec.pairs.p2(x)};
}

FinMap equiv_refl(const EquivClassifier& ec) {
  const FinSet& u = generic(ec).base();
  std::vector<std::size_t> t(u.size());
  for (std::size_t a = 0; a < u.size(); ++a) {
    PositionMap id(generic(ec).fiber_size(a));
    std::iota(id.begin(), id.end(), std::size_t{0});
    t[a] = equiv_element(ec, a, a, id);
  }
  return FinMap(u, ec.equiv.total(), std::move(t));
}

FinMap equiv_sym(const EquivClassifier& ec) {
  const FinSet& e = ec.equiv.total();
  std::vector<std::size_t> t(e.size());
  for (std::size_t w = 0; w < e.size(); ++w) {
    const auto [a, b] = equiv_ends(ec, w);
    const PositionMap p = equiv_positions(ec, w);
    PositionMap inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = i;
    t[w] = equiv_element(ec, b, a, inv);
  }
  return FinMap(e, e, std::move(t));
}

EquivTrans equiv_trans(const EquivClassifier& ec) {
  const FinSet& e = ec.equiv.total();
  std::vector<std::size_t> src(e.size()), tgt(e.size());
  for (std::size_t w = 0; w < e.size(); ++w) std::tie(src[w], tgt[w]) = equiv_ends(ec, w);
  const FinSet& u = generic(ec).base();
  EquivTrans out;
  out.composable = pullback(FinMap(e, u, tgt), FinMap(e, u, src));
  std::vector<std::size_t> t(out.composable.object.size());
  for (std::size_t k = 0; k < t.size(); ++k) {
    const std::size_t w1 = out.composable.p1(k), w2 = out.composable.p2(k);
    const PositionMap p1 = equiv_positions(ec, w1), p2 = equiv_positions(ec, w2);
    PositionMap c(p1.size());
    for (std::size_t i = 0; i < p1.size(); ++i) c[i] = p2[p1[i]];
    t[k] = equiv_element(ec, src[w1], tgt[w2], c);
  }
  out.trans = FinMap(out.composable.object, e, std::move(t));
  return out;
}

Classified classified_by(const EquivClassifier& ec, const FinMap& alpha) {
  Comprehension c = comprehend(generic(ec), alpha);
  return Classified{c.family, alpha, c.square.top};
}

void validate_classified(const EquivClassifier& ec, const Classified& c) {
  const Family& t = generic(ec);
  if (!(c.alpha.dom() == c.family.base()) || !(c.alpha.cod() == t.base()) ||
      !(c.alpha_dot.dom() == c.family.total()) || !(c.alpha_dot.cod() == t.total())) {
    throw BoundaryError("classifying square has the wrong boundary");
  }
  for (std::size_t x = 0; x < c.family.base().size(); ++x) {
    const std::size_t a = c.alpha(x);
    if (c.family.fiber_size(x) != t.fiber_size(a)) {
      throw StructureError("fiber over " + c.family.base()[x].str() + " is not classified by " + t.base()[a].str());
    }
    std::vector<char> hit(t.fiber_size(a), 0);
    for (std::size_t e : c.family.fiber(x)) {
      const std::size_t img = c.alpha_dot(e);
      if (t.proj()(img) != a) throw StructureError("α̇ does not lie over α at " + c.family.total()[e].str());
      char& h = hit[t.position_in_fiber(img)];
      if (h) throw StructureError("α̇ is not injective on the fiber over " + c.family.base()[x].str());
      h = 1;
    }
  }
}

Classified relabel(const EquivClassifier& ec, const Classified& c, const std::vector<PositionMap>& perms) {
  const Family& t = generic(ec);
  if (perms.size() != c.family.base().size()) throw StructureError("one relabelling per base element expected");
  std::vector<std::size_t> table(c.family.total().size());
  for (std::size_t e = 0; e < table.size(); ++e) {
    const std::size_t x = c.family.proj()(e);
    const std::size_t a = c.alpha(x);
    if (!is_bijection(perms[x], t.fiber_size(a))) throw StructureError("relabelling is not a permutation");
    table[e] = t.fiber(a)[perms[x][position(ec, c.alpha_dot(e))]];
  }
  return Classified{c.family, c.alpha, FinMap(c.family.total(), t.total(), std::move(table))};
}

FinMap lift_equivalence(const EquivClassifier& ec, const Classified& a, const Classified& b, const FinMap& e) {
  validate_classified(ec, a);
  validate_classified(ec, b);
  if (!(a.family.base() == b.family.base())) throw BoundaryError("families over different bases");
  if (!(e.dom() == a.family.total()) || !(e.cod() == b.family.total())) throw BoundaryError("map is not A -> B");
  const FinSet& x = a.family.base();
  std::vector<std::size_t> table(x.size());
  for (std::size_t xi = 0; xi < x.size(); ++xi) {
    PositionMap p(a.family.fiber_size(xi));
    for (std::size_t el : a.family.fiber(xi)) {
      const std::size_t img = e(el);
      if (b.family.proj()(img) != xi) {
        throw StructureError("e is not over X at " + a.family.total()[el].str());
      }
      p[position(ec, a.alpha_dot(el))] = position(ec, b.alpha_dot(img));
    }
    if (!is_bijection(p, b.family.fiber_size(xi))) {
      throw StructureError("e is not invertible on the fiber over " + x[xi].str());
    }
    table[xi] = equiv_element(ec, a.alpha(xi), b.alpha(xi), p);
  }
  return FinMap(x, ec.equiv.total(), std::move(table));
}

FinMap equivalence_from_lift(const EquivClassifier& ec, const Classified& a, const Classified& b,
                             const FinMap& lift) {
  const FinSet& x = a.family.base();
  if (!(lift.dom() == x) || !(lift.cod() == ec.equiv.total())) throw BoundaryError("lift is not X -> Equiv");
  for (std::size_t xi = 0; xi < x.size(); ++xi) {
    if (equiv_ends(ec, lift(xi)) != std::make_pair(a.alpha(xi), b.alpha(xi))) {
      throw StructureError("lift does not lie over (α, β) at " + x[xi].str());
    }
  }
  const Pullback pb1 = pullback(lift, ec.e1.proj());
  const Pullback pb2 = pullback(lift, ec.e2.proj());
  const Family& t = generic(ec);

  // A ≅ lift*E₁ through α̇, then the pulled-back universal map, then
  // lift*E₂ ≅ B through β̇.
  std::vector<std::size_t> table(a.family.total().size());
  for (std::size_t el = 0; el < table.size(); ++el) {
    const std::size_t xi = a.family.proj()(el);
    const Label& w = ec.equiv.total()[lift(xi)];
    const Label d1 = Label::tuple({w[0], t.total()[a.alpha_dot(el)]});
    const std::size_t k1 = pb1.object.index_of(Label::tuple({x[xi], Label::tuple({w, d1})}));
    const std::size_t k2 = pb2.object.index_of(Label::tuple({x[xi], ec.e2.total()[ec.universal(pb1.p2(k1))]}));
    const Label& u = ec.e2.total()[pb2.p2(k2)][1][1];
    const std::size_t ui = t.total().index_of(u);
    std::optional<std::size_t> found;
    for (std::size_t be : b.family.fiber(xi)) {
      if (b.alpha_dot(be) == ui) found = be;
    }
    if (!found) throw StructureError("β̇ misses " + u.str() + " over " + x[xi].str());
    table[el] = *found;
  }
  return FinMap(a.family.total(), b.family.total(), std::move(table));
}

FinMap classifier_change(const EquivClassifier& ec, const Classified& from, const Classified& to) {
  if (!same_family(from.family, to.family)) throw StructureError("classifications of different families");
  return lift_equivalence(ec, from, to, FinMap::identity(from.family.total()));
}

FinMap reclassify_equivalence(const EquivClassifier& ec, const Classified& a, const Classified& b,
                              const FinMap& lift, const Classified& a2, const Classified& b2) {
  if (!same_family(a.family, a2.family) || !same_family(b.family, b2.family)) {
    throw StructureError("reclassification must classify the same families");
  }
  const FinMap l_a = classifier_change(ec, a2, a);
  const FinMap l_b = classifier_change(ec, b, b2);
  const EquivTrans tr = equiv_trans(ec);
  const FinSet& e = ec.equiv.total();
  auto trans = [&](std::size_t w1, std::size_t w2) {
    return tr.trans(tr.composable.object.index_of(Label::tuple({e[w1], e[w2]})));
  };
  std::vector<std::size_t> table(lift.dom().size());
  for (std::size_t x = 0; x < table.size(); ++x) table[x] = trans(trans(l_a(x), lift(x)), l_b(x));
  return FinMap(lift.dom(), e, std::move(table));
}

namespace {

Pullback equiv_over(const EquivClassifier& ec, const FinMap& beta) {
  const FinSet& y = beta.dom();
  Pullback yy = product(y, y);
  std::vector<std::size_t> bb(yy.object.size());
  for (std::size_t k = 0; k < bb.size(); ++k) bb[k] = pair_index(ec, beta(yy.p1(k)), beta(yy.p2(k)));
  return pullback(FinMap(yy.object, ec.pairs.object, std::move(bb)), ec.equiv.proj());
}

// ḣ : α*t -> β*t, (x, u) ↦ (h x, u).
FinMap h_dot(const Classified& a, const Classified& b, const FinMap& h) {
  return FinMap::from_labels(a.family.total(), b.family.total(), [&](const Label& l) {
    return Label::tuple({h.cod()[h(h.dom().index_of(l[0]))], l[1]});
  });
}

}  // namespace

TwoCell make_two_cell(const EquivClassifier& ec, const FinMap& alpha, const FinMap& beta, const FinMap& h1,
                      const FinMap& h2, const FinMap& phi) {
  if (!(compose(beta, h1) == alpha) || !(compose(beta, h2) == alpha)) {
    throw StructureError("1-cells are not maps over U");
  }
  const Classified a = classified_by(ec, alpha);
  TwoCell tc{alpha, beta, h1, h2, phi, equiv_over(ec, beta), FinMap()};
  const FinMap w = lift_equivalence(ec, a, a, phi);
  const FinSet& y = beta.dom();
  std::vector<std::size_t> table(alpha.dom().size());
  for (std::size_t x = 0; x < table.size(); ++x) {
    table[x] = tc.equiv_b.object.index_of(
        Label::tuple({Label::tuple({y[h1(x)], y[h2(x)]}), ec.equiv.total()[w(x)]}));
  }
  tc.lift = FinMap(alpha.dom(), tc.equiv_b.object, std::move(table));
  return tc;
}

TwoCellReport verify_two_cell(const EquivClassifier& ec, const TwoCell& tc) {
  TwoCellReport rep;
  auto record = [&](std::string name, bool ok, std::string witness = {}) {
    rep.checks.push_back({std::move(name), ok, ok ? std::string() : std::move(witness)});
    if (!ok) rep.valid = false;
  };
  const FinSet& x = tc.alpha.dom();
  auto first_difference = [&](const FinMap& f, const FinMap& g) -> std::string {
    for (std::size_t i = 0; i < f.dom().size(); ++i) {
      if (f(i) != g(i)) return f.dom()[i].str();
    }
    return {};
  };

  const FinMap bh1 = compose(tc.beta, tc.h1), bh2 = compose(tc.beta, tc.h2);
  record("h1-over-U", bh1 == tc.alpha, first_difference(bh1, tc.alpha));
  record("h2-over-U", bh2 == tc.alpha, first_difference(bh2, tc.alpha));
  if (!rep.valid) return rep;

  const Classified a = classified_by(ec, tc.alpha);
  const Classified b = classified_by(ec, tc.beta);
  for (const auto* h : {&tc.h1, &tc.h2}) {
    const FinMap hd = h_dot(a, b, *h);
    const auto sq = check_pullback(make_square(hd, a.family.proj(), b.family.proj(), *h));
    record(h == &tc.h1 ? "h1-dot-cartesian" : "h2-dot-cartesian", sq.verdict == PullbackVerdict::pullback,
           sq.failing_label ? sq.failing_label->str() : sq.detail);
  }

  if (!(tc.phi.dom() == a.family.total()) || !(tc.phi.cod() == a.family.total())) {
    record("phi-boundary", false, "φ is not an endomap of α*t");
    return rep;
  }
  const FinMap aphi = compose(a.family.proj(), tc.phi);
  record("phi-over-X", aphi == a.family.proj(), first_difference(aphi, a.family.proj()));
  if (!rep.valid) return rep;
  std::string bad;
  for (std::size_t xi = 0; xi < x.size() && bad.empty(); ++xi) {
    std::vector<char> hit(a.family.total().size(), 0);
    for (std::size_t e : a.family.fiber(xi)) {
      if (hit[tc.phi(e)]++) bad = a.family.total()[e].str();
    }
  }
  record("phi-invertible", bad.empty(), bad);
  if (!rep.valid) return rep;

  bool projects = true;
  std::string where;
  for (std::size_t xi = 0; xi < x.size(); ++xi) {
    const Label& l = tc.equiv_b.object[tc.lift(xi)][0];
    const FinSet& y = tc.beta.dom();
    if (!(l[0] == y[tc.h1(xi)]) || !(l[1] == y[tc.h2(xi)])) {
      projects = false;
      where = x[xi].str();
      break;
    }
  }
  record("lift-projects", projects, where);
  if (!projects) return rep;

  try {
    const FinMap pulled = equivalence_from_lift(ec, a, a, compose(tc.equiv_b.p2, tc.lift));
    record("phi-is-pullback-of-universal", pulled == tc.phi, first_difference(pulled, tc.phi));
  } catch (const Error& e) {
    record("phi-is-pullback-of-universal", false, e.what());
  }
  return rep;
}

std::vector<TwoCell> hom_category(const EquivClassifier& ec, const FinMap& alpha, const FinMap& beta,
                                  const FinMap& h1, const FinMap& h2) {
  const Classified a = classified_by(ec, alpha);
  const std::size_t nx = alpha.dom().size();
  std::vector<PositionMap> perms(nx);
  for (std::size_t x = 0; x < nx; ++x) {
    perms[x].resize(a.family.fiber_size(x));
    std::iota(perms[x].begin(), perms[x].end(), std::size_t{0});
  }
  std::vector<TwoCell> out;
  while (true) {
    std::vector<std::size_t> table(a.family.total().size());
    for (std::size_t x = 0; x < nx; ++x) {
      const auto& fib = a.family.fiber(x);
      for (std::size_t i = 0; i < fib.size(); ++i) table[fib[i]] = fib[perms[x][i]];
    }
    out.push_back(make_two_cell(ec, alpha, beta, h1, h2, FinMap(a.family.total(), a.family.total(), table)));
    // Odometer over the per-fiber permutations, last fiber fastest.
    std::size_t x = nx;
    while (x > 0) {
      --x;
      if (std::next_permutation(perms[x].begin(), perms[x].end())) break;
      if (x == 0) return out;
    }
    if (nx == 0) return out;
  }
}

TwoCell identity_two_cell(const EquivClassifier& ec, const FinMap& alpha, const FinMap& beta, const FinMap& h) {
  const Classified a = classified_by(ec, alpha);
  return make_two_cell(ec, alpha, beta, h, h, FinMap::identity(a.family.total()));
}

TwoCell vertical_compose(const EquivClassifier& ec, const TwoCell& t1, const TwoCell& t2) {
  if (!(t1.h2 == t2.h1) || !(t1.alpha == t2.alpha) || !(t1.beta == t2.beta)) {
    throw BoundaryError("2-cells are not vertically composable");
  }
  return make_two_cell(ec, t1.alpha, t1.beta, t1.h1, t2.h2, compose(t2.phi, t1.phi));
}

TwoCell whisker_right(const EquivClassifier& ec, const TwoCell& t, const FinMap& k, const FinMap& gamma) {
  if (!(compose(gamma, k) == t.beta)) throw StructureError("whiskering 1-cell is not over U");
  return make_two_cell(ec, t.alpha, gamma, compose(k, t.h1), compose(k, t.h2), t.phi);
}

TwoCell whisker_left(const EquivClassifier& ec, const TwoCell& t, const FinMap& g) {
  const FinMap alpha2 = compose(t.alpha, g);
  const Classified a = classified_by(ec, t.alpha);
  const Classified a2 = classified_by(ec, alpha2);
  const FinMap phi2 = FinMap::from_labels(a2.family.total(), a2.family.total(), [&](const Label& l) {
    const Label moved = Label::tuple({g.cod()[g(g.dom().index_of(l[0]))], l[1]});
    return Label::tuple({l[0], a.family.total()[t.phi(a.family.total().index_of(moved))][1]});
  });
  return make_two_cell(ec, alpha2, t.beta, compose(t.h1, g), compose(t.h2, g), phi2);
}

}  // namespace catsem
