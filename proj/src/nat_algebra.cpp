#include "catsem/nat_algebra.hpp"

#include <algorithm>

#include "catsem/errors.hpp"
#include "catsem/polynomial.hpp"

namespace catsem {

namespace {

std::string list_text(std::span<const std::size_t> xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(xs[i]);
  }
  return s;
}

std::vector<std::size_t> ints_of(const Label& tuple) {
  std::vector<std::size_t> out;
  for (const auto& l : tuple.as_tuple()) out.push_back(static_cast<std::size_t>(l.as_int()));
  return out;
}

}  // namespace

std::size_t NatStructure::check(const char* op, std::span<const std::size_t> input, std::size_t value) const {
  if (value >= capacity_) throw OutOfBoundError(op, list_text(input), value, capacity_);
  return value;
}

std::size_t NatStructure::sigma(std::span<const std::size_t> ns) const {
  std::size_t s = sigma_shift_;
  for (std::size_t n : ns) s += n;
  return check("Sigma", ns, s);
}

std::size_t NatStructure::pi(std::span<const std::size_t> ns) const {
  std::size_t p = 1;
  for (std::size_t n : ns) {
    p *= n;
    if (p >= capacity_) return check("Pi", ns, p);
  }
  return check("Pi", ns, p);
}

std::size_t NatStructure::pair(std::span<const std::size_t> ns, std::size_t i, std::size_t j) const {
  if (i >= ns.size() || j >= ns[i]) throw StructureError("σ applied outside its fiber");
  std::size_t off = 0;
  for (std::size_t k = 0; k < i; ++k) off += ns[k];
  return off + j;
}

std::pair<std::size_t, std::size_t> NatStructure::unpair(std::span<const std::size_t> ns, std::size_t k) const {
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (k < ns[i]) return {i, k};
    k -= ns[i];
  }
  throw StructureError("σ-preimage requested outside Σ");
}

std::size_t NatStructure::lambda(std::span<const std::size_t> ns, std::span<const std::size_t> js) const {
  if (js.size() != ns.size()) throw StructureError("λ needs one entry per factor");
  std::size_t code = 0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (js[i] >= ns[i]) throw StructureError("λ entry outside its factor");
    code = code * ns[i] + js[i];
  }
  return code;
}

std::vector<std::size_t> NatStructure::unlambda(std::span<const std::size_t> ns, std::size_t k) const {
  std::vector<std::size_t> js(ns.size());
  for (std::size_t i = ns.size(); i-- > 0;) {
    js[i] = k % ns[i];
    k /= ns[i];
  }
  return js;
}

std::size_t NatStructure::eq(std::size_t n, std::size_t i, std::size_t j) const {
  if (i >= n || j >= n) throw StructureError("Eq applied to elements outside Fin n");
  return i == j ? 1 : 0;
}

Family nat_family(std::size_t n) {
  std::vector<Label> base, total;
  std::vector<std::size_t> proj;
  for (std::size_t k = 0; k < n; ++k) {
    base.emplace_back(k);
    for (std::size_t i = 0; i < k; ++i) {
      total.push_back(Label::tuple({Label(k), Label(i)}));
      proj.push_back(k);
    }
  }
  return Family(FinMap(FinSet(std::move(total)), FinSet(std::move(base)), std::move(proj)));
}

MLAlgebra nat_algebra(std::size_t bound, const NatOptions& opts) {
  if (bound < 1) throw StructureError("nat_algebra needs bound ≥ 1");
  NatStructure ns(opts.capacity, opts.sigma_shift);
  Family region = nat_family(bound);
  FinSet lists = extension(PolySignature{region}, region.base());
  std::size_t top = std::max<std::size_t>(bound - 1, 1);
  for (const auto& l : lists.elements()) {
    auto ms = ints_of(l[1]);
    top = std::max({top, ns.sigma(ms), ns.pi(ms)});
  }
  ns.eq(1, 0, 0);
  Family full = nat_family(top + 1);

  MLAlgebra alg;
  alg.name = "nat";
  alg.bound = bound;
  alg.t = PNat::over_terminal(full.proj());
  alg.region = PNat::over_terminal(region.proj());
  const FinSet& udot = full.total();
  const FinSet& u = full.base();
  alg.star = PNat::over_terminal(FinMap::point(udot, udot.index_of(Label::tuple({Label(1), Label(0)}))));
  alg.one = PNat::over_terminal(FinMap::point(u, u.index_of(Label(ns.one()))));

  alg.tt = psh_compose_signatures(alg.region, alg.region);
  {
    const FinSet& q = alg.tt.composite.src().at(0);
    std::vector<std::size_t> t(q.size());
    for (std::size_t k = 0; k < q.size(); ++k) {
      const Label& l = q[k];  // ((((n, ms), (n, i))), (m_i, j))
      auto ms = ints_of(l[0][0][1]);
      const auto i = static_cast<std::size_t>(l[0][1][1].as_int());
      const auto j = static_cast<std::size_t>(l[1][1].as_int());
      t[k] = udot.index_of(Label::tuple({Label(ns.sigma(ms)), Label(ns.pair(ms, i, j))}));
    }
    alg.sigma = PNat::over_terminal(FinMap(q, udot, std::move(t)));
    const FinSet& u2 = alg.tt.composite.tgt().at(0);
    std::vector<std::size_t> s(u2.size());
    for (std::size_t k = 0; k < u2.size(); ++k) s[k] = u.index_of(Label(ns.sigma(ints_of(u2[k][1]))));
    alg.Sigma = PNat::over_terminal(FinMap(u2, u, std::move(s)));
  }

  alg.pt_t = psh_extension_on_map(alg.region, alg.region);
  {
    const FinSet& pu = alg.pt_t.tgt().at(0);
    std::vector<std::size_t> p(pu.size());
    for (std::size_t k = 0; k < pu.size(); ++k) p[k] = u.index_of(Label(ns.pi(ints_of(pu[k][1]))));
    alg.Pi = PNat::over_terminal(FinMap(pu, u, std::move(p)));
    const FinSet& pudot = alg.pt_t.src().at(0);
    std::vector<std::size_t> lam(pudot.size());
    for (std::size_t k = 0; k < pudot.size(); ++k) {
      std::vector<std::size_t> ms, js;
      for (const auto& e : pudot[k][1].as_tuple()) {
        ms.push_back(static_cast<std::size_t>(e[0].as_int()));
        js.push_back(static_cast<std::size_t>(e[1].as_int()));
      }
      lam[k] = udot.index_of(Label::tuple({Label(ns.pi(ms)), Label(ns.lambda(ms, js))}));
    }
    alg.lambda = PNat::over_terminal(FinMap(pudot, udot, std::move(lam)));
  }

  EqStructure eq;
  eq.pairs = pullback(alg.region, alg.region);
  {
    const FinSet& rdot = region.total();
    const FinSet& pairs = eq.pairs.object.at(0);
    std::vector<std::size_t> d(rdot.size()), r(rdot.size()), e(pairs.size());
    const std::size_t refl_target = udot.index_of(Label::tuple({Label(1), Label(0)}));
    for (std::size_t k = 0; k < rdot.size(); ++k) {
      d[k] = pairs.index_of(Label::tuple({rdot[k], rdot[k]}));
      r[k] = refl_target;
    }
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const Label& l = pairs[k];
      e[k] = u.index_of(Label(ns.eq(static_cast<std::size_t>(l[0][0].as_int()), static_cast<std::size_t>(l[0][1].as_int()),
                                    static_cast<std::size_t>(l[1][1].as_int()))));
    }
    eq.diagonal = PNat::over_terminal(FinMap(rdot, pairs, std::move(d)));
    eq.refl = PNat::over_terminal(FinMap(rdot, udot, std::move(r)));
    eq.eq = PNat::over_terminal(FinMap(pairs, u, std::move(e)));
  }
  alg.eq = std::move(eq);
  return alg;
}

EqModel nat_eq_model(std::size_t bound) {
  NatStructure ns;
  Family region = nat_family(bound);
  Family full = nat_family(std::max<std::size_t>(bound, 2));
  Pullback pairs = pullback(region.proj(), region.proj());
  std::vector<std::size_t> e(pairs.object.size());
  for (std::size_t k = 0; k < e.size(); ++k) {
    const Label& l = pairs.object[k];
    e[k] = full.base().index_of(Label(ns.eq(static_cast<std::size_t>(l[0][0].as_int()),
                                            static_cast<std::size_t>(l[0][1].as_int()),
                                            static_cast<std::size_t>(l[1][1].as_int()))));
  }
  const std::size_t refl_target = full.total().index_of(Label::tuple({Label(1), Label(0)}));
  std::vector<std::size_t> r(region.total().size(), refl_target);
  return EqModel{region, full, pairs, FinMap(pairs.object, full.base(), std::move(e)),
                 FinMap(region.total(), full.total(), std::move(r))};
}

}  // namespace catsem
