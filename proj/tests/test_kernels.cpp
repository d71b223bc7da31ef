#include <doctest.h>

#include <random>

#include "catsem/kernels.hpp"
#include "support.hpp"

using namespace catsem;
using namespace testing_support;

TEST_SUITE("kernels") {
  TEST_CASE("odometer enumerates products in lexicographic order") {
    const std::vector<std::size_t> radices{2, 3};
    const auto all = kernels::odometer(radices);
    REQUIRE(all.size() == 6);
    CHECK(all[1] == std::vector<std::size_t>{0, 1});
    CHECK(all[3] == std::vector<std::size_t>{1, 0});
    CHECK(kernels::odometer(std::vector<std::size_t>{}).size() == 1);
    CHECK(kernels::odometer(std::vector<std::size_t>{3, 0}).empty());
  }

  TEST_CASE("isEquiv counting: parallel equals serial equals brute force") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t m = uniform(rng, 0, 4), n = uniform(rng, 0, 4);
      std::vector<std::uint64_t> ida(m * m), idb(n * n);
      for (auto& v : ida) v = uniform(rng, 0, 2);
      for (auto& v : idb) v = uniform(rng, 0, 2);
      const kernels::EquivCountProblem p{m, n, ida, idb};
      const auto par = kernels::is_equiv_counts(p);
      REQUIRE(par == kernels::is_equiv_counts_serial(p));
      // Brute force over all e, f, g.
      const auto es = all_tables(m, n);
      REQUIRE(par.size() == es.size());
      const auto fs = all_tables(n, m);
      for (std::size_t k = 0; k < es.size(); ++k) {
        const auto& e = es[k];
        std::uint64_t left = 0, right = 0;
        for (const auto& f : fs) {
          std::uint64_t prod = 1;
          for (std::size_t x = 0; x < m; ++x) prod *= ida[f[e[x]] * m + x];
          left += prod;
        }
        for (const auto& g : fs) {
          std::uint64_t prod = 1;
          for (std::size_t y = 0; y < n; ++y) prod *= idb[e[g[y]] * n + y];
          right += prod;
        }
        CHECK(par[k] == left * right);
      }
    }
  }

  TEST_CASE("fiberwise bijection kernel: parallel equals serial") {
    std::mt19937_64 rng(72);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t na = uniform(rng, 0, 30), nb = uniform(rng, 1, 30), nc = uniform(rng, 1, 10),
                        nd = uniform(rng, 1, 5);
      std::vector<std::size_t> top(na), left(na), right(nb), bottom(nc);
      for (auto& v : top) v = uniform(rng, 0, nb - 1);
      for (auto& v : left) v = uniform(rng, 0, nc - 1);
      for (auto& v : right) v = uniform(rng, 0, nd - 1);
      for (auto& v : bottom) v = uniform(rng, 0, nd - 1);
      std::vector<std::vector<std::size_t>> lf(nc), rf(nd);
      std::vector<std::size_t> rpos(nb);
      for (std::size_t a = 0; a < na; ++a) lf[left[a]].push_back(a);
      for (std::size_t b = 0; b < nb; ++b) {
        rpos[b] = rf[right[b]].size();
        rf[right[b]].push_back(b);
      }
      const kernels::FiberProblem p{nc, lf, rf, top, bottom, rpos};
      const auto x = kernels::fiberwise_bijection(p);
      const auto y = kernels::fiberwise_bijection_serial(p);
      CHECK(x.first_failure == y.first_failure);
    }
    CHECK(kernels::max_threads() >= 1);
  }
}
