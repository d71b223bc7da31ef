#pragma once

// Explicit bijections for the standard Σ/Π type isomorphisms, over a
// context Γ, built from nested display maps C -> B -> A -> Γ.

#include <cstddef>
#include <random>
#include <string>

#include "catsem/finset.hpp"

namespace catsem {

enum class TypeIsoLaw { sigma_assoc, sigma_unit_l, sigma_unit_r, pi_assoc, pi_unit };
std::string to_string(TypeIsoLaw law);
/// Throws StructureError on an unknown name.
TypeIsoLaw type_iso_law_from_string(const std::string& name);

/// Γ ⊢ A, Γ.A ⊢ B, Γ.A.B ⊢ C as display maps.
struct NestedFamilies {
  Family a;  ///< over Γ
  Family b;  ///< over total(A)
  Family c;  ///< over total(B)
  const FinSet& context() const { return a.base(); }
};
/// Throws StructureError unless the bases chain up.
void validate_nesting(const NestedFamilies& n);

struct TypeIsoWitness {
  TypeIsoLaw law;
  Family lhs;       ///< over Γ
  Family rhs;       ///< over Γ
  FinMap bijection; ///< total(lhs) -> total(rhs)
  bool invertible = false;
  bool base_compatible = false;
  /// Fiber sizes agree with the sum/product arithmetic of finite cardinals.
  bool cardinality_agrees = false;
  bool ok() const { return invertible && base_compatible && cardinality_agrees; }
};

TypeIsoWitness typeiso_witness(TypeIsoLaw law, const NestedFamilies& n);

/// Σ_γ |lhs fiber| without building it, used to keep random instances small.
std::size_t typeiso_size(TypeIsoLaw law, const NestedFamilies& n);

/// Random nesting with |Γ| in [1, 3] and every fiber of size ≤ max_fiber.
NestedFamilies random_nested(std::mt19937_64& rng, std::size_t max_fiber);

}  // namespace catsem
