#pragma once

// The subobject classifier of a presheaf category: sieves, classification of
// subobjects, and the Heyting biconditional on Ω.

#include <cstddef>
#include <vector>

#include "catsem/presheaf.hpp"

namespace catsem {

/// A sieve on c as the sorted list of arrow indices it contains.
using Sieve = std::vector<std::size_t>;

/// All sieves on c, ordered by size then lexicographically.
std::vector<Sieve> sieves_on(const IndexCategory& cat, std::size_t c);
/// f*S = {g | f ∘ g ∈ S} for f : d -> c.
Sieve pull_sieve(const IndexCategory& cat, std::size_t f, const Sieve& s);
bool is_sieve(const IndexCategory& cat, std::size_t c, const Sieve& s);
/// Label of a sieve: tuple of arrow names in arrow order.
Label sieve_label(const IndexCategory& cat, const Sieve& s);

/// Ω(c) = sieves on c.
Presheaf omega(const IndexCategory& cat);
/// ⊤ : 1 -> Ω, the maximal sieves.
PNat omega_top(const IndexCategory& cat);

/// A subobject as a pointwise membership mask closed under restriction.
struct Subobject {
  std::vector<std::vector<char>> member;

  friend bool operator==(const Subobject&, const Subobject&) = default;
};

bool is_subobject(const Presheaf& x, const Subobject& s);
std::vector<Subobject> enumerate_subobjects(const Presheaf& x);
/// The subpresheaf itself with its inclusion into X.
PNat subobject_inclusion(const Presheaf& x, const Subobject& s);
/// χ_c(x) = {g : d -> c | X(g)x ∈ S(d)}. Throws StructureError if s is not a
/// subobject.
PNat classify(const Presheaf& x, const Subobject& s);
/// Classifier of the image of a mono. Throws StructureError if m is not monic.
PNat classify_mono(const PNat& m);
/// Pullback of ⊤ along χ, as a subobject of dom χ.
Subobject subobject_of(const PNat& chi);

/// Ω × Ω with labels (S, T).
Presheaf omega_squared(const IndexCategory& cat);
/// The diagonal Ω -> Ω × Ω.
PNat omega_diagonal(const IndexCategory& cat);
/// (S ⇔ T)_c = {g | g*S = g*T}, computed directly from sieves.
PNat omega_biconditional(const IndexCategory& cat);

}  // namespace catsem
