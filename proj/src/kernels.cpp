#include "catsem/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace catsem::kernels {

namespace {

bool fiber_ok(const FiberProblem& p, std::size_t x, std::vector<char>& seen) {
  const auto& lf = p.left[x];
  const auto& rf = p.right[p.bottom[x]];
  if (lf.size() != rf.size()) return false;
  seen.assign(rf.size(), 0);
  for (std::size_t a : lf) {
    std::size_t pos = p.right_position[p.top[a]];
    if (seen[pos]) return false;
    seen[pos] = 1;
  }
  return true;
}

std::uint64_t power(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

void decode(std::uint64_t code, std::size_t radix, std::size_t len, std::vector<std::size_t>& out) {
  out.resize(len);
  for (std::size_t i = len; i-- > 0;) {
    out[i] = static_cast<std::size_t>(code % radix);
    code /= radix;
  }
}

// Σ_{f : B -> A} Π_{x in A} id_a(f(e(x)), x)
std::uint64_t left_inverse_count(const EquivCountProblem& p, const std::vector<std::size_t>& e,
                                 std::vector<std::size_t>& f) {
  const std::uint64_t total = power(p.m, p.n);
  std::uint64_t sum = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    decode(code, p.m, p.n, f);
    std::uint64_t prod = 1;
    for (std::size_t x = 0; x < p.m && prod; ++x) prod *= p.id_a[f[e[x]] * p.m + x];
    sum += prod;
  }
  return sum;
}

// Σ_{g : B -> A} Π_{y in B} id_b(e(g(y)), y)
std::uint64_t right_inverse_count(const EquivCountProblem& p, const std::vector<std::size_t>& e,
                                  std::vector<std::size_t>& g) {
  const std::uint64_t total = power(p.m, p.n);
  std::uint64_t sum = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    decode(code, p.m, p.n, g);
    std::uint64_t prod = 1;
    for (std::size_t y = 0; y < p.n && prod; ++y) prod *= p.id_b[e[g[y]] * p.n + y];
    sum += prod;
  }
  return sum;
}

std::uint64_t count_one(const EquivCountProblem& p, std::uint64_t code, std::vector<std::size_t>& e,
                        std::vector<std::size_t>& scratch) {
  decode(code, p.n, p.m, e);
  std::uint64_t left = left_inverse_count(p, e, scratch);
  if (left == 0) return 0;
  return left * right_inverse_count(p, e, scratch);
}

}  // namespace

FiberOutcome fiberwise_bijection_serial(const FiberProblem& p) {
  FiberOutcome out;
  std::vector<char> seen;
  for (std::size_t x = 0; x < p.base_size; ++x) {
    out.elements_checked += p.left[x].size();
    if (!fiber_ok(p, x, seen)) {
      out.first_failure = x;
      return out;
    }
  }
  return out;
}

FiberOutcome fiberwise_bijection(const FiberProblem& p) {
  const auto n = static_cast<std::int64_t>(p.base_size);
  std::size_t first = npos;
  std::vector<char> failed(p.base_size, 0);
#pragma omp parallel
  {
    std::vector<char> seen;
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t x = 0; x < n; ++x) {
      if (!fiber_ok(p, static_cast<std::size_t>(x), seen)) failed[static_cast<std::size_t>(x)] = 1;
    }
  }
  for (std::size_t x = 0; x < p.base_size; ++x) {
    if (failed[x]) {
      first = x;
      break;
    }
  }
  // Counters follow the serial convention: elements up to and including the
  // first failing fiber.
  FiberOutcome out;
  out.first_failure = first;
  const std::size_t stop = first == npos ? p.base_size : first + 1;
  for (std::size_t x = 0; x < stop; ++x) out.elements_checked += p.left[x].size();
  return out;
}

std::vector<std::uint64_t> is_equiv_counts_serial(const EquivCountProblem& p) {
  const std::uint64_t total = power(p.n, p.m);
  std::vector<std::uint64_t> out(total);
  std::vector<std::size_t> e, scratch;
  for (std::uint64_t code = 0; code < total; ++code) out[code] = count_one(p, code, e, scratch);
  return out;
}

std::vector<std::uint64_t> is_equiv_counts(const EquivCountProblem& p) {
  const auto total = static_cast<std::int64_t>(power(p.n, p.m));
  std::vector<std::uint64_t> out(static_cast<std::size_t>(total));
#pragma omp parallel
  {
    std::vector<std::size_t> e, scratch;
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t code = 0; code < total; ++code) {
      out[static_cast<std::size_t>(code)] = count_one(p, static_cast<std::uint64_t>(code), e, scratch);
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> odometer(std::span<const std::size_t> radices) {
  std::vector<std::vector<std::size_t>> out;
  if (std::any_of(radices.begin(), radices.end(), [](std::size_t r) { return r == 0; })) return out;
  std::vector<std::size_t> cur(radices.size(), 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = radices.size();
    while (i > 0) {
      --i;
      if (++cur[i] < radices[i]) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (radices.empty()) return out;
  }
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace catsem::kernels
