#pragma once

// The Equiv classifier over U × U, its groupoid structure, lifting and
// reclassifying equivalences between classified families, and 2-cells
// between parallel 1-cells over U. Everything is Set-level and driven by an
// extensional equality model.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "catsem/finset.hpp"
#include "catsem/mlalg.hpp"

namespace catsem {

/// A permutation-like table i ↦ j between Fin m and Fin n.
using PositionMap = std::vector<std::size_t>;

struct EquivClassifier {
  EqModel model;
  Pullback pairs;       ///< U × U, labels (A, B)
  Family dot1;          ///< U̇₁: the generic family pulled back along pr₁
  Family dot2;          ///< U̇₂: the generic family pulled back along pr₂
  Family exponential;   ///< [U̇₁, U̇₂] over U × U
  FinMap epsilon;       ///< ε : [U̇₁, U̇₂] ×_{U×U} U̇₁ -> U̇₂
  /// |isEquiv(e)| for every e in the exponential, computed from the Eq
  /// cardinalities as Σ_f Π Id(f e x, x) · Σ_g Π Id(e g y, y).
  std::vector<std::uint64_t> is_equiv_count;
  Family equiv;         ///< Equiv -> U × U, labels ((A, B), (j_0, ..., j_{m-1}))
  FinMap equiv_in_exponential;
  Family e1;            ///< universal source family over Equiv
  Family e2;            ///< universal target family over Equiv
  FinMap universal;     ///< the universal equivalence E₁ -> E₂ over Equiv
  /// Every isEquiv count is 1 on bijections and 0 elsewhere.
  bool counts_consistent = false;
};

/// Uses the OpenMP counting kernel unless `serial` is set.
EquivClassifier build_equiv(const EqModel& model, bool serial = false);

std::size_t pair_index(const EquivClassifier& ec, std::size_t a, std::size_t b);
/// The Equiv element over (a, b) with the given position table.
std::size_t equiv_element(const EquivClassifier& ec, std::size_t a, std::size_t b, const PositionMap& perm);
PositionMap equiv_positions(const EquivClassifier& ec, std::size_t w);
/// (source, target) indices in U for w.
std::pair<std::size_t, std::size_t> equiv_ends(const EquivClassifier& ec, std::size_t w);

FinMap equiv_refl(const EquivClassifier& ec);
FinMap equiv_sym(const EquivClassifier& ec);

struct EquivTrans {
  Pullback composable;  ///< pairs (e₁, e₂) with target(e₁) = source(e₂)
  FinMap trans;         ///< (e₁, e₂) ↦ e₂ ∘ e₁
};
EquivTrans equiv_trans(const EquivClassifier& ec);

/// A family A -> X with a classifying square: α : X -> U and α̇ : A -> U̇
/// restricting to a bijection A_x ≅ t⁻¹(α x) on every fiber.
struct Classified {
  Family family;
  FinMap alpha;
  FinMap alpha_dot;
};
/// The canonical comprehension α*t.
Classified classified_by(const EquivClassifier& ec, const FinMap& alpha);
/// Throws StructureError unless the data form a classifying square.
void validate_classified(const EquivClassifier& ec, const Classified& c);
/// The same family with α̇ post-composed fiberwise by the given position
/// tables (one per x).
Classified relabel(const EquivClassifier& ec, const Classified& c, const std::vector<PositionMap>& perms);

/// Lift of (α, β) through Equiv -> U × U classifying e : A -> B over X.
/// Throws StructureError naming an element when e is not over X or not
/// fiberwise bijective.
FinMap lift_equivalence(const EquivClassifier& ec, const Classified& a, const Classified& b, const FinMap& e);
/// Pull the universal equivalence back along a lift and read it as A -> B.
FinMap equivalence_from_lift(const EquivClassifier& ec, const Classified& a, const Classified& b,
                             const FinMap& lift);
/// ℓ(α', α) : the equivalence over X identifying two classifications of A.
FinMap classifier_change(const EquivClassifier& ec, const Classified& from, const Classified& to);
/// ẽ' = ℓ(β, β') · (ẽ · ℓ(α', α)). Throws StructureError if the primed data
/// classify different families.
FinMap reclassify_equivalence(const EquivClassifier& ec, const Classified& a, const Classified& b,
                              const FinMap& lift, const Classified& a2, const Classified& b2);

/// A 2-cell h₁ ⇒ h₂ between 1-cells X -> Y over U (β h_i = α): an
/// auto-equivalence φ of A = α*t over X, with its lift into Equiv_B.
struct TwoCell {
  FinMap alpha;  ///< X -> U
  FinMap beta;   ///< Y -> U
  FinMap h1;
  FinMap h2;
  FinMap phi;    ///< A -> A, A the comprehension of α
  Pullback equiv_b;  ///< Equiv pulled back along β × β, labels ((y₁, y₂), w)
  FinMap lift;   ///< X -> Equiv_B
};

struct TwoCellCheck {
  std::string name;
  bool ok = true;
  std::string witness;
};
struct TwoCellReport {
  bool valid = true;
  std::vector<TwoCellCheck> checks;
};

/// Builds the lift from φ. Throws StructureError if φ is not an
/// auto-equivalence over X or the 1-cells are not over U.
TwoCell make_two_cell(const EquivClassifier& ec, const FinMap& alpha, const FinMap& beta, const FinMap& h1,
                      const FinMap& h2, const FinMap& phi);
TwoCellReport verify_two_cell(const EquivClassifier& ec, const TwoCell& tc);
/// All 2-cells h₁ ⇒ h₂, one per auto-equivalence of A over X.
std::vector<TwoCell> hom_category(const EquivClassifier& ec, const FinMap& alpha, const FinMap& beta,
                                  const FinMap& h1, const FinMap& h2);
TwoCell identity_two_cell(const EquivClassifier& ec, const FinMap& alpha, const FinMap& beta, const FinMap& h);
/// t₂ · t₁ : h₁ ⇒ h₃. Throws BoundaryError unless t₁.h2 = t₂.h1.
TwoCell vertical_compose(const EquivClassifier& ec, const TwoCell& t1, const TwoCell& t2);
/// k · t for k : Y -> Z over U (γ k = β). φ is unchanged.
TwoCell whisker_right(const EquivClassifier& ec, const TwoCell& t, const FinMap& k, const FinMap& gamma);
/// t · g for g : W -> X; φ is base-changed along g.
TwoCell whisker_left(const EquivClassifier& ec, const TwoCell& t, const FinMap& g);

}  // namespace catsem
