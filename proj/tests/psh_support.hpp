#pragma once

#include <random>
#include <vector>

#include "catsem/presheaf.hpp"
#include "support.hpp"

namespace testing_support {

/// A presheaf on the chain 0 -> 1 -> ... -> n-1 given by its sets and the
/// restrictions steps[i] : X(i+1) -> X(i); longer arrows get composites.
inline catsem::Presheaf chain_presheaf(const catsem::IndexCategory& cat, const std::vector<std::size_t>& sizes,
                                       const std::vector<std::vector<std::size_t>>& steps) {
  using namespace catsem;
  std::vector<FinSet> at;
  for (std::size_t s : sizes) at.push_back(FinSet::range(s));
  std::vector<FinMap> r;
  for (std::size_t a = 0; a < cat.arrow_count(); ++a) {
    const Arrow& ar = cat.arrow(a);
    std::vector<std::size_t> t(sizes[ar.dst]);
    for (std::size_t x = 0; x < t.size(); ++x) {
      std::size_t v = x;
      for (std::size_t k = ar.dst; k > ar.src; --k) v = steps[k - 1][v];
      t[x] = v;
    }
    r.emplace_back(at[ar.dst], at[ar.src], std::move(t));
  }
  return Presheaf(cat, std::move(at), std::move(r));
}

inline catsem::Presheaf random_chain_presheaf(std::mt19937_64& rng, const catsem::IndexCategory& cat,
                                              std::size_t max_size) {
  const std::size_t n = cat.object_count();
  std::vector<std::size_t> sizes(n);
  for (std::size_t i = 0; i < n; ++i) sizes[i] = (i > 0 && sizes[i - 1] == 0) ? 0 : uniform(rng, 0, max_size);
  std::vector<std::vector<std::size_t>> steps(n > 0 ? n - 1 : 0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    steps[i].resize(sizes[i + 1]);
    for (auto& v : steps[i]) v = uniform(rng, 0, sizes[i] - 1);
  }
  return chain_presheaf(cat, sizes, steps);
}

/// Every natural transformation counted by brute force over all component
/// tables.
inline std::size_t count_nats_brute(const catsem::Presheaf& x, const catsem::Presheaf& y) {
  const auto& cat = x.category();
  const std::size_t n = cat.object_count();
  std::vector<std::vector<std::vector<std::size_t>>> options(n);
  for (std::size_t c = 0; c < n; ++c) options[c] = all_tables(x.at(c).size(), y.at(c).size());
  std::size_t count = 0;
  std::vector<std::size_t> pick(n, 0);
  for (std::size_t c = 0; c < n; ++c) {
    if (options[c].empty()) return 0;
  }
  while (true) {
    bool natural = true;
    for (std::size_t a = 0; a < cat.arrow_count() && natural; ++a) {
      const auto& ar = cat.arrow(a);
      for (std::size_t e = 0; e < x.at(ar.dst).size() && natural; ++e) {
        natural = options[ar.src][pick[ar.src]][x.restrict(a, e)] == y.restrict(a, options[ar.dst][pick[ar.dst]][e]);
      }
    }
    if (natural) ++count;
    std::size_t k = n;
    while (k > 0 && ++pick[k - 1] == options[k - 1].size()) pick[--k] = 0;
    if (k == 0) break;
  }
  return count;
}

/// Subpresheaves counted by brute force over all membership masks.
inline std::size_t count_subobjects_brute(const catsem::Presheaf& x) {
  std::size_t total = x.total_size();
  std::vector<std::size_t> offset;
  std::size_t acc = 0;
  for (std::size_t c = 0; c < x.category().object_count(); ++c) {
    offset.push_back(acc);
    acc += x.at(c).size();
  }
  std::size_t count = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << total); ++mask) {
    bool closed = true;
    for (std::size_t a = 0; a < x.category().arrow_count() && closed; ++a) {
      const auto& ar = x.category().arrow(a);
      for (std::size_t e = 0; e < x.at(ar.dst).size() && closed; ++e) {
        if ((mask >> (offset[ar.dst] + e)) & 1) closed = (mask >> (offset[ar.src] + x.restrict(a, e))) & 1;
      }
    }
    if (closed) ++count;
  }
  return count;
}

}  // namespace testing_support
