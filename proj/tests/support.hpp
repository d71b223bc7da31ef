#pragma once

// Shared generators for the test suites. Everything here is deliberately
// naive so that it can serve as an oracle for the library.

#include <cstddef>
#include <random>
#include <vector>

#include "catsem/finset.hpp"

namespace testing_support {

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline catsem::FinSet named_set(std::size_t n, const char* prefix) {
  std::vector<catsem::Label> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(std::string(prefix) + std::to_string(i));
  return catsem::FinSet(std::move(e));
}

inline catsem::FinMap random_map(std::mt19937_64& rng, const catsem::FinSet& x, const catsem::FinSet& y) {
  std::vector<std::size_t> t(x.size());
  for (auto& v : t) v = uniform(rng, 0, y.size() - 1);
  return catsem::FinMap(x, y, std::move(t));
}

/// A family whose total elements are interleaved across fibers.
inline catsem::Family random_family(std::mt19937_64& rng, const catsem::FinSet& base, std::size_t max_total,
                                    const char* prefix = "e") {
  if (base.empty()) return catsem::Family(catsem::FinMap(catsem::FinSet(), base, {}));
  const std::size_t n = uniform(rng, 0, max_total);
  return catsem::Family(random_map(rng, named_set(n, prefix), base));
}

/// All maps x -> y as positional tables, first coordinate slowest.
inline std::vector<std::vector<std::size_t>> all_tables(std::size_t x, std::size_t y) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(x, 0);
  if (x > 0 && y == 0) return out;
  while (true) {
    out.push_back(cur);
    std::size_t k = x;
    while (k > 0 && ++cur[k - 1] == y) cur[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

inline std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

inline std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace testing_support
