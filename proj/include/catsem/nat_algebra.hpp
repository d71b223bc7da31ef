#pragma once

// The finite-cardinal model: U = ℕ, U̇ = {(n, i) | i < n}, P_t(X) = X*.
// Σ and Π are sum and product, σ and λ are the offset and mixed-radix
// encodings, and Eq((n,i),(n,j)) is 1 exactly when i = j.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "catsem/mlalg.hpp"

namespace catsem {

/// Arithmetic structure functions shared by the materialized algebra and the
/// type-expression elaborator. Every result is checked against `capacity`
/// (values must stay below it); overflow raises OutOfBoundError naming the
/// operation and its input.
class NatStructure {
 public:
  static constexpr std::size_t default_capacity = 4096;

  explicit NatStructure(std::size_t capacity = default_capacity, std::size_t sigma_shift = 0)
      : capacity_(capacity), sigma_shift_(sigma_shift) {}

  std::size_t capacity() const { return capacity_; }
  std::size_t sigma_shift() const { return sigma_shift_; }

  std::size_t one() const { return 1; }
  /// Σ⟨n_1..n_k⟩ = Σ n_i (plus the sabotage shift, normally 0).
  std::size_t sigma(std::span<const std::size_t> ns) const;
  /// Π⟨n_1..n_k⟩ = Π n_i.
  std::size_t pi(std::span<const std::size_t> ns) const;
  /// σ(i, j) = n_1 + ... + n_{i-1} + j (i is 0-based here).
  std::size_t pair(std::span<const std::size_t> ns, std::size_t i, std::size_t j) const;
  std::pair<std::size_t, std::size_t> unpair(std::span<const std::size_t> ns, std::size_t k) const;
  /// λ(j_1..j_k), first digit most significant.
  std::size_t lambda(std::span<const std::size_t> ns, std::span<const std::size_t> js) const;
  std::vector<std::size_t> unlambda(std::span<const std::size_t> ns, std::size_t k) const;
  std::size_t eq(std::size_t n, std::size_t i, std::size_t j) const;

 private:
  std::size_t check(const char* op, std::span<const std::size_t> input, std::size_t value) const;

  std::size_t capacity_;
  std::size_t sigma_shift_;
};

struct NatOptions {
  std::size_t capacity = NatStructure::default_capacity;
  /// Adds a constant to Σ (and σ's first component); used to build failing
  /// scenarios.
  std::size_t sigma_shift = 0;
};

/// The algebra verified over lists of length < bound with entries < bound.
/// U is materialized up to the largest structure-map output on that region.
MLAlgebra nat_algebra(std::size_t bound, const NatOptions& opts = {});

/// Only the Eq part (U, U̇ below `bound`), cheap enough for larger bounds.
EqModel nat_eq_model(std::size_t bound);

/// U̇ -> U restricted to cardinals < n, labels n and (n, i).
Family nat_family(std::size_t n);

}  // namespace catsem
