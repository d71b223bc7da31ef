#pragma once

// Functors between finite categories, the nerve ν_C(D)(c) = Cat(C/c, D), and
// Hofmann-Streicher universes built from skeletal κ-small set categories.

#include <cstddef>
#include <vector>

#include "catsem/presheaf.hpp"

namespace catsem {

struct IndexFunctor {
  std::vector<std::size_t> objects;
  std::vector<std::size_t> arrows;

  friend bool operator==(const IndexFunctor&, const IndexFunctor&) = default;
};

bool is_functor(const IndexCategory& a, const IndexCategory& b, const IndexFunctor& f);
/// All functors A -> B, by backtracking with composition pruning.
std::vector<IndexFunctor> enumerate_functors(const IndexCategory& a, const IndexCategory& b);
/// G ∘ F.
IndexFunctor compose(const IndexFunctor& g, const IndexFunctor& f);
Label functor_label(const IndexCategory& a, const IndexCategory& b, const IndexFunctor& f);

/// C/c: objects are arrows g into c, arrows h : g' -> g with g ∘ h = g'.
IndexCategory slice(const IndexCategory& cat, std::size_t c);
/// Postcomposition with f : c' -> c as a functor C/c' -> C/c.
IndexFunctor slice_postcompose(const IndexCategory& cat, std::size_t f);

Presheaf nerve(const IndexCategory& cat, const IndexCategory& target);
/// ν_C(G) : ν_C(A) -> ν_C(B), postcomposition with G : A -> B.
PNat nerve_on_functor(const IndexCategory& cat, const IndexCategory& a, const IndexCategory& b,
                      const IndexFunctor& g);

/// Set_κ^op, skeletal: objects 0..κ-1, an arrow n -> m for each function m -> n.
IndexCategory set_op(std::size_t kappa);
/// Pointed sets (n, i) with point-preserving functions, opposite.
IndexCategory pointed_set_op(std::size_t kappa);
/// The forgetful functor pointed_set_op(κ) -> set_op(κ).
IndexFunctor forget_point(std::size_t kappa);

/// V̇_κ -> V_κ. Throws StructureError unless κ ∈ {2, 3}.
PNat hs_universe(const IndexCategory& cat, std::size_t kappa);

/// The comparison V_2 -> Ω, F ↦ F⁻¹(1). It is a natural isomorphism that
/// carries the universe's generic family to ⊤.
PNat nerve_to_omega(const IndexCategory& cat);

}  // namespace catsem
