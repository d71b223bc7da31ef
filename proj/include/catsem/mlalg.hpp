#pragma once

// ML-algebras t : U̇ -> U with unit, Σ and Π structure maps forming pullback
// squares, checked fiberwise. Algebras live in presheaves; Set is the
// terminal index category.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "catsem/finset.hpp"
#include "catsem/presheaf.hpp"
#include "catsem/psh_polynomial.hpp"

namespace catsem {

enum class CheckStatus { pass, fail, not_applicable };
std::string to_string(CheckStatus s);

/// Outcome of one named square (or other structural) check.
struct SquareCheck {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::size_t fibers_checked = 0;
  std::size_t elements_checked = 0;
  std::optional<std::size_t> failing_object;
  std::optional<Label> failing_label;
  std::size_t left_fiber_size = 0;
  std::size_t right_fiber_size = 0;
  std::string detail;
};

/// Runs the fiberwise pullback test on every component and summarizes.
SquareCheck check_square(const std::string& name, const PshSquare& sq);

struct MLReport {
  std::vector<SquareCheck> squares;
  bool passed() const;
};

/// Extensional equality: refl and Eq making δ / refl / t / Eq a pullback.
struct EqStructure {
  PshPullback pairs;  ///< U̇ ×_U U̇ over the verified region, labels (u, v)
  PNat diagonal;      ///< δ : U̇ -> U̇ ×_U U̇
  PNat refl;          ///< U̇ -> U̇
  PNat eq;            ///< U̇ ×_U U̇ -> U
};

/// The structure maps of an ML-algebra. `t` is the full family; `region` is the
/// sub-signature over which U₂ and P_t(-) are formed and the squares are
/// verified. For finite algebras the two coincide.
struct MLAlgebra {
  std::string name;
  std::size_t bound = 0;
  PNat t;
  PNat region;
  PNat star;          ///< 1 -> U̇
  PNat one;           ///< 1 -> U
  PshComposed tt;     ///< region · region : U̇₂ -> U₂
  PNat sigma;         ///< U̇₂ -> U̇
  PNat Sigma;         ///< U₂ -> U
  PNat pt_t;          ///< P_t(t) : P_t(U̇) -> P_t(U)
  PNat lambda;        ///< P_t(U̇) -> U̇
  PNat Pi;            ///< P_t(U) -> U
  std::optional<EqStructure> eq;

  bool is_set_level() const { return t.src().category().object_count() == 1; }
};

/// The unit, Σ and Π squares in that order.
MLReport verify_ml_algebra(const MLAlgebra& alg);
SquareCheck eq_structure_check(const MLAlgebra& alg, const EqStructure& eq);

/// Set-level extensional equality data extracted from an algebra.
struct EqModel {
  Family region;   ///< U̇_R -> U_R
  Family full;     ///< U̇ -> U
  Pullback pairs;  ///< U̇_R ×_{U_R} U̇_R
  FinMap eq;       ///< pairs -> U
  FinMap refl;     ///< U̇_R -> U̇
};
/// Throws StructureError unless the algebra is Set-level with Eq structure.
EqModel eq_model(const MLAlgebra& alg);

struct Comprehension {
  Family family;  ///< a : A -> X, the canonical pullback, labels (x, u)
  Square square;  ///< A -> U̇ over α : X -> U
};
/// α*t with its cartesian square.
Comprehension comprehend(const Family& t, const FinMap& alpha);

/// λ applied to a term b : A -> U̇_R of the family β = t ∘ b over a finite
/// context A. Returns the index in U̇. Throws TypeError if t ∘ b ≠ β.
std::size_t pi_intro(const MLAlgebra& alg, const FinMap& beta, const FinMap& b);
/// Application: the unique b with λ(b) = term. Throws TypeError if term does
/// not lie over Π(β).
FinMap pi_apply(const MLAlgebra& alg, const FinMap& beta, std::size_t term);

}  // namespace catsem
