#pragma once

// ML-algebras whose generic family is a subterminal classifier: ⊤ : 1 -> Ω
// and the Hofmann-Streicher universe V̇_2 -> V_2, which is isomorphic to it.
// Σ and Π are the classifying maps of the monos ⊤·⊤ and P_⊤(⊤).

#include <cstddef>
#include <optional>
#include <vector>

#include "catsem/mlalg.hpp"

namespace catsem {

/// Throws StructureError if ⊤·⊤ or P_⊤(⊤) fails to be monic.
MLAlgebra omega_algebra(const IndexCategory& cat);

/// Does the classifier of the diagonal Ω -> Ω × Ω equal the directly
/// computed biconditional?
bool omega_diagonal_is_biconditional(const IndexCategory& cat);

struct HsReport {
  std::size_t kappa = 0;
  std::vector<std::size_t> universe_sizes;   ///< |V(c)| per object
  std::vector<std::size_t> generic_sizes;    ///< |V̇(c)| per object
  /// κ = 2 only: V ≅ Ω carrying the generic family to ⊤.
  std::optional<bool> iso_to_omega;
  MLReport ml;
};

/// Builds V̇_κ -> V_κ and checks the structure that applies at this κ. For
/// κ = 2 all squares and Eq are checked through the iso with Ω. For κ = 3
/// only the unit square is asserted; Σ and Π are reported not applicable
/// because finite κ is not closed under sums or products.
HsReport verify_hs_universe(const IndexCategory& cat, std::size_t kappa);

/// The pair (star, one) making the unit square a pullback, found by search
/// over global elements of U. Empty if t has no unit type.
std::optional<std::pair<PNat, PNat>> find_unit(const PNat& t);

}  // namespace catsem
