#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "catsem/finset.hpp"
#include "catsem/kernels.hpp"
#include "catsem/nat_algebra.hpp"

using namespace catsem;

namespace {

// The generic family t : U̇ -> U pulled back along a map X -> U that cycles
// through the cardinals, giving a square with many non-trivial fibers.
Square comprehension_square(std::size_t base_size, std::size_t max_card) {
  const Family u = nat_family(max_card + 1);
  const FinSet x = FinSet::range(base_size);
  std::vector<std::size_t> alpha(base_size);
  for (std::size_t i = 0; i < base_size; ++i) alpha[i] = i % (max_card + 1);
  const Pullback pb = pullback(FinMap(x, u.base(), std::move(alpha)), u.proj());
  return Square{pb.p2, pb.p1, u.proj(), pb.f};
}

void BM_Pullback(benchmark::State& state, bool serial) {
  const Square sq = comprehension_square(static_cast<std::size_t>(state.range(0)), 12);
  for (auto _ : state) {
    SquareReport r = serial ? check_pullback_serial(sq) : check_pullback(sq);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(sq.top.dom().size()));
}

std::vector<std::uint64_t> identity_table(std::size_t n) {
  std::vector<std::uint64_t> t(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) t[i * n + i] = 1;
  return t;
}

void BM_IsEquiv(benchmark::State& state, bool serial) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto id = identity_table(n);
  const kernels::EquivCountProblem p{n, n, id, id};
  for (auto _ : state) {
    auto counts = serial ? kernels::is_equiv_counts_serial(p) : kernels::is_equiv_counts(p);
    benchmark::DoNotOptimize(counts);
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_Pullback, openmp, false)->Arg(1 << 10)->Arg(1 << 14);
BENCHMARK_CAPTURE(BM_Pullback, serial, true)->Arg(1 << 10)->Arg(1 << 14);
BENCHMARK_CAPTURE(BM_IsEquiv, openmp, false)->DenseRange(3, 5);
BENCHMARK_CAPTURE(BM_IsEquiv, serial, true)->DenseRange(3, 5);

BENCHMARK_MAIN();
