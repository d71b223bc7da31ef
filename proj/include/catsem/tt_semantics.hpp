#pragma once

// Interpretation of type expressions in the finite-cardinal model. A context
// denotes the finite set of its environments (built by iterated
// comprehension), a type in context denotes its classifying map into U, and
// a substitution denotes a map of environment sets.

#include <cstddef>
#include <optional>
#include <vector>

#include "catsem/finset.hpp"
#include "catsem/nat_algebra.hpp"
#include "catsem/tt_syntax.hpp"

namespace catsem {

/// The classifying map of a type, as cardinals per environment.
struct TypeTable {
  FinSet extent;                  ///< environments, labels (v₁, ..., v_k)
  std::vector<std::size_t> card;  ///< |A(ρ)| per environment
  /// As a map into the finite initial segment of U that contains its values.
  FinMap as_map() const;
  friend bool operator==(const TypeTable&, const TypeTable&) = default;
};

struct CoherenceResult {
  bool equal = false;
  TypePtr substituted;             ///< e[σ]
  TypeTable direct;                ///< ⟦Δ ⊢ e[σ]⟧
  TypeTable composed;              ///< ⟦Γ ⊢ e⟧ ∘ ⟦σ⟧, over the same extent
  std::optional<Label> first_difference;
};

class Elaborator {
 public:
  explicit Elaborator(NatStructure ns = NatStructure()) : ns_(ns) {}

  const NatStructure& structure() const { return ns_; }

  /// Environments of Γ. Throws TypeError when an entry is ill-formed.
  FinSet extent(const Context& ctx) const;
  TypeTable elaborate(const Context& ctx, const TypePtr& type) const;
  /// The unique value of a closed type. Throws TypeError if not closed.
  std::size_t cardinality(const TypePtr& type) const;
  /// Canonical enumeration of A(ρ); element labels are numerals, pairs and
  /// function tuples.
  std::vector<Label> elements(const Context& ctx, const TypePtr& type, const Label& env) const;
  /// Value of a term checked against a type in an environment.
  Label check(const Context& ctx, const TermPtr& term, const TypePtr& type, const Label& env) const;
  /// ⟦σ⟧ : ⟦Δ⟧ -> ⟦Γ⟧ for σ given as one Δ-term per Γ entry. Throws
  /// TypeError when σ is ill-typed.
  FinMap substitution_map(const Context& delta, const Context& gamma, const std::vector<TermPtr>& sigma) const;
  /// Compares ⟦Δ ⊢ e[σ]⟧ with ⟦Γ ⊢ e⟧ ∘ ⟦σ⟧ as exact tables.
  CoherenceResult check_substitution(const Context& delta, const Context& gamma, const std::vector<TermPtr>& sigma,
                                     const TypePtr& e) const;

 private:
  NatStructure ns_;
};

}  // namespace catsem
