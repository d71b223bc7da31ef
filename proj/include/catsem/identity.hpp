#pragma once

// Identity types from an equality structure: I = Id*t, the restriction
// ρ* : P_q => P_t, its naturality square at t, and a weak pullback
// structure J on the comparison map into the pullback.

#include <optional>
#include <string>

#include "catsem/finset.hpp"
#include "catsem/mlalg.hpp"
#include "catsem/polynomial.hpp"

namespace catsem {

struct IdComparison {
  EqModel model;
  Pullback I;           ///< t pulled back along Id; labels ((u, v), w)
  PolySignature q;      ///< q : I -> U_R, the composite I -> U̇ ×_U U̇ -> U
  FinMap rho;           ///< ρ : U̇_R -> I, u ↦ ((u, u), i u)
  FinMap rho_star_dot;  ///< ρ*_{U̇} : P_q(U̇) -> P_t(U̇)
  FinMap rho_star;      ///< ρ*_U : P_q(U) -> P_t(U)
  FinMap pq_t;          ///< P_q(t)
  FinMap pt_t;          ///< P_t(t)
  SquareReport square;  ///< the naturality square, tested as a pullback
  Pullback gap;         ///< P_q(U) ×_{P_t(U)} P_t(U̇)
  FinMap comparison;    ///< P_q(U̇) -> gap
  bool bijective = false;
  /// Section of the comparison map; absent when it is not surjective.
  std::optional<FinMap> J;
  bool section_law = false;     ///< comparison ∘ J = id
  bool retraction_law = false;  ///< J ∘ comparison = id
  std::string detail;
};

/// Builds the comparison for the given equality data. Throws StructureError
/// if refl does not lie over Eq on the diagonal (the Id square would not
/// commute).
IdComparison id_comparison(const EqModel& model);

/// ρ*_X for an arbitrary X, exposed for naturality tests.
FinMap rho_star(const IdComparison& cmp, const FinSet& x);

/// The eliminator: from a family C over (x, y, z : Id(x, y)), given as an
/// element of P_q(U), and a term c over the diagonal, given as an element of
/// P_t(U̇) lying over ρ*C, produce J_c in P_q(U̇). Throws TypeError when c does
/// not lie over C(ρ x) and StructureError when J is absent.
Label id_eliminate(const IdComparison& cmp, const Label& C, const Label& c);

}  // namespace catsem
