#pragma once

// Data-parallel inner loops. Each kernel has an OpenMP version and a serial
// reference with identical output; tests compare the two and the benchmark
// target times them.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace catsem::kernels {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

/// Inputs of the fiberwise bijection test, all positional.
struct FiberProblem {
  std::size_t base_size = 0;                          ///< |C|
  std::span<const std::vector<std::size_t>> left;     ///< left⁻¹(x), per x in C
  std::span<const std::vector<std::size_t>> right;    ///< right⁻¹(d), per d in D
  std::span<const std::size_t> top;                   ///< A -> B
  std::span<const std::size_t> bottom;                ///< C -> D
  std::span<const std::size_t> right_position;        ///< position of b in its right fiber
};

struct FiberOutcome {
  std::size_t first_failure = npos;
  std::size_t elements_checked = 0;
};

/// First x whose induced map left⁻¹(x) -> right⁻¹(bottom x) is not bijective.
/// Assumes the square commutes.
FiberOutcome fiberwise_bijection(const FiberProblem& p);
FiberOutcome fiberwise_bijection_serial(const FiberProblem& p);

/// isEquiv counting over one exponential fiber. Functions A -> B are encoded
/// as base-|B| tuples (first coordinate most significant). For every e : A -> B
/// the result is
///   Σ_{f : B -> A} Π_x id_a(f e x, x)  ·  Σ_{g : A <- B} Π_y id_b(e g y, y)
/// where id_a / id_b are |A|×|A| and |B|×|B| tables of identity-type
/// cardinalities.
struct EquivCountProblem {
  std::size_t m = 0;  ///< |A|
  std::size_t n = 0;  ///< |B|
  std::span<const std::uint64_t> id_a;
  std::span<const std::uint64_t> id_b;
};

std::vector<std::uint64_t> is_equiv_counts(const EquivCountProblem& p);
std::vector<std::uint64_t> is_equiv_counts_serial(const EquivCountProblem& p);

/// All tuples in [0,r_0) × ... × [0,r_{k-1}] in lexicographic order (last
/// coordinate fastest).
std::vector<std::vector<std::size_t>> odometer(std::span<const std::size_t> radices);

/// Number of worker threads the OpenMP kernels will use (1 without OpenMP).
int max_threads();

}  // namespace catsem::kernels
