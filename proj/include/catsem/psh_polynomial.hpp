#pragma once

// Polynomial functors on presheaves:
//   P_t(X)(c) = { (A, φ) | A ∈ T(c), φ : y(c) ×_T Ṫ -> X }.
// Over a one-object discrete category the labels coincide with the finset
// extension, (A, (x_1, ..., x_k)).

#include <cstddef>
#include <vector>

#include "catsem/presheaf.hpp"

namespace catsem {

/// The presheaf y(c) ×_T Ṫ classified by A ∈ T(c); labels (g, e).
Presheaf display_fiber(const PNat& t, std::size_t c, std::size_t a);

Presheaf psh_extension(const PNat& t, const Presheaf& x);
/// P_t(h) : (A, φ) ↦ (A, h ∘ φ).
PNat psh_extension_on_map(const PNat& t, const PNat& h);
/// The projection P_t(X) -> T.
PNat psh_extension_base(const PNat& t, const Presheaf& x);

struct PshComposed {
  PNat composite;     ///< Q -> P_p(C)
  PNat a;             ///< P_p(C) -> B
  PshPullback pulled_p;
  PNat c;             ///< pulled_p.object -> C
  PshPullback pulled_q;
};

/// p·q = a*p ∘ c*q built from the transposed identity of P_p(C).
PshComposed psh_compose_signatures(const PNat& p, const PNat& q);

struct PartialMapClassifier {
  Presheaf tilde;  ///< X̃ = P_⊤(X)
  PNat eta;        ///< η_X : X -> X̃
};
PartialMapClassifier partial_map_classifier(const Presheaf& x);

}  // namespace catsem
