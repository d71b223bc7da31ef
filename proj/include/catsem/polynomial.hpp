#pragma once

// Polynomial endofunctors of finite sets, P_p(X) = Σ_{b:B} X^{E_b}, for a
// signature p : E -> B.

#include <cstddef>
#include <vector>

#include <json.hpp>

#include "catsem/finset.hpp"

namespace catsem {

/// A signature p : E -> B, read as the polynomial Σ_{b:B} X^{E_b}.
struct PolySignature {
  Family map;

  const FinSet& total() const { return map.total(); }
  const FinSet& base() const { return map.base(); }
};

/// Base {0..n-1}, fiber sizes as given.
PolySignature canonical_signature(const std::vector<std::size_t>& fibers);

/// Canonical element of P_p(X): base point plus one X-index per fiber element.
struct PolyElement {
  std::size_t base_point = 0;
  std::vector<std::size_t> section;

  friend bool operator==(const PolyElement&, const PolyElement&) = default;
};

/// Canonical enumeration of P_p(X): base points in order, sections in
/// lexicographic order. Labels are (b, (x_1, ..., x_k)).
FinSet extension(const PolySignature& sig, const FinSet& x);
/// Σ_b |X|^{|E_b|} without enumerating.
std::size_t extension_size(const PolySignature& sig, std::size_t x_size);

Label encode(const PolySignature& sig, const FinSet& x, const PolyElement& e);
PolyElement decode(const PolySignature& sig, const FinSet& x, const Label& l);

/// P_p(X) computed as U_! ∘ p_* ∘ E^* applied to X -> 1, together with the
/// bijection from its total onto the canonical enumeration.
struct PipelineExtension {
  Family family;   ///< over the terminal set
  FinMap to_canonical;
};
PipelineExtension extension_via_pipeline(const PolySignature& sig, const FinSet& x);

/// P_p(h) : P_p(X) -> P_p(Y), (b, s) ↦ (b, h ∘ s).
FinMap extension_on_map(const PolySignature& sig, const FinMap& h);

/// A map Z -> P_p(X) split into f1 : Z -> B and f2 : Z ×_B E -> X.
struct PolyTranspose {
  FinMap f1;
  Pullback domain;  ///< Z ×_B E, the canonical pullback of p along f1
  FinMap f2;
};

/// Throws BoundaryError if cod(f) is not the canonical extension of sig at x.
PolyTranspose ump_transpose(const PolySignature& sig, const FinSet& x, const FinMap& f);
/// Inverse of ump_transpose. f2's domain must be the canonical pullback of p
/// along f1.
FinMap ump_untranspose(const PolySignature& sig, const FinSet& x, const FinMap& f1, const FinMap& f2);

/// The composite signature p·q = a*p ∘ c*q and the intermediate data.
struct ComposedSignature {
  PolySignature composite;  ///< Q -> P_p(C)
  FinMap a;                 ///< P_p(C) -> B_p (first half of the transposed identity)
  Pullback pulled_p;        ///< π*E_p, the pullback of p along a
  FinMap c;                 ///< π*E_p -> C (second half)
  Pullback pulled_q;        ///< Q, the pullback of q along c
};

ComposedSignature compose_signatures(const PolySignature& p, const PolySignature& q);

/// The natural bijection P_{p·q}(X) -> P_p(P_q(X)) fixed by the canonical
/// enumeration orders.
FinMap composition_iso(const ComposedSignature& pq, const PolySignature& p, const PolySignature& q,
                       const FinSet& x);

/// A cartesian square: top h' : E_f -> E_g, left f, right g, bottom h.
struct CartMorphism {
  Square square;
};

/// Throws StructureError unless the square commutes and is a pullback.
CartMorphism make_cart_morphism(Square sq);

/// Component at X of the induced cartesian transformation P_f => P_g.
FinMap square_to_nat(const CartMorphism& m, const FinSet& x);

/// {"base":n, "fibers":[...]} or {"proj": <map>}.
PolySignature signature_from_json(const nlohmann::json& j);
nlohmann::json to_json(const PolySignature& sig);

}  // namespace catsem
