#pragma once

// Presheaves on a finite index category and their natural transformations.
// Limits are computed pointwise from the finset layer.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "catsem/finset.hpp"
#include "catsem/index_category.hpp"

namespace catsem {

class Presheaf {
 public:
  Presheaf() = default;
  /// `restriction[a]` is X(dst a) -> X(src a). Functoriality is checked
  /// exhaustively; violations throw StructureError.
  Presheaf(IndexCategory cat, std::vector<FinSet> at, std::vector<FinMap> restriction);

  /// The presheaf on the terminal category with value s.
  static Presheaf over_terminal(const FinSet& s);
  static Presheaf terminal(const IndexCategory& cat);
  static Presheaf empty(const IndexCategory& cat);

  const IndexCategory& category() const { return cat_; }
  const FinSet& at(std::size_t c) const { return at_[c]; }
  const FinMap& restriction(std::size_t a) const { return restriction_[a]; }
  /// X(a)(x) for x in X(dst a).
  std::size_t restrict(std::size_t a, std::size_t x) const { return restriction_[a](x); }
  std::size_t total_size() const;
  std::vector<std::size_t> sizes() const;

  std::string str() const;

  friend bool operator==(const Presheaf& a, const Presheaf& b);

 private:
  IndexCategory cat_;
  std::vector<FinSet> at_;
  std::vector<FinMap> restriction_;
};

/// A natural transformation, one component per object.
class PNat {
 public:
  PNat() = default;
  /// Naturality is checked on every arrow; violations throw StructureError.
  PNat(Presheaf src, Presheaf tgt, std::vector<FinMap> components);
  /// Components given as positional tables.
  static PNat from_tables(const Presheaf& src, const Presheaf& tgt,
                          const std::vector<std::vector<std::size_t>>& tables);
  static PNat over_terminal(const FinMap& m);
  static PNat identity(const Presheaf& x);
  static PNat to_terminal(const Presheaf& x);

  const Presheaf& src() const { return src_; }
  const Presheaf& tgt() const { return tgt_; }
  const FinMap& at(std::size_t c) const { return components_[c]; }
  std::size_t operator()(std::size_t c, std::size_t x) const { return components_[c](x); }

  bool is_mono() const;
  bool is_iso() const;
  PNat inverse() const;

  friend bool operator==(const PNat& a, const PNat& b);

 private:
  Presheaf src_;
  Presheaf tgt_;
  std::vector<FinMap> components_;
};

/// g ∘ f.
PNat compose(const PNat& g, const PNat& f);

struct PshPullback {
  Presheaf object;  ///< pointwise canonical pullback, labels (a, b)
  PNat p1;
  PNat p2;
};
PshPullback pullback(const PNat& f, const PNat& g);

/// A square of presheaf maps, same shape as Square.
struct PshSquare {
  PNat top;
  PNat left;
  PNat right;
  PNat bottom;
};

/// Per-object fiberwise reports; a presheaf square is a pullback iff every
/// component square is.
struct PshSquareReport {
  PullbackVerdict verdict = PullbackVerdict::pullback;
  std::vector<SquareReport> components;
  std::optional<std::size_t> failing_object;
};
PshSquareReport check_pullback(const PshSquare& sq);

/// y(c)(d) = hom(d, c), labelled by arrow names.
Presheaf yoneda(const IndexCategory& cat, std::size_t c);
/// y(c) -> X determined by x in X(c): g ↦ X(g)(x).
PNat yoneda_element(const Presheaf& x, std::size_t c, std::size_t elem);
/// y(f) : y(c) -> y(d) for f : c -> d.
PNat yoneda_arrow(const IndexCategory& cat, std::size_t f);

/// ∫X: objects (c, x), arrows (f, x) : (src f, X(f)x) -> (dst f, x).
IndexCategory elements(const Presheaf& x);

/// Every natural transformation X -> Y as positional component tables,
/// components enumerated object by object in lexicographic order.
std::vector<std::vector<std::vector<std::size_t>>> enumerate_nat_tables(const Presheaf& x, const Presheaf& y);
std::vector<PNat> enumerate_nats(const Presheaf& x, const Presheaf& y);
/// Some isomorphism X -> Y, if one exists.
std::optional<PNat> find_iso(const Presheaf& x, const Presheaf& y);

/// Coproduct of presheaves with labels (i, x).
struct PshCoproduct {
  Presheaf object;
  std::vector<PNat> injections;
};
PshCoproduct coproduct(const IndexCategory& cat, const std::vector<Presheaf>& parts);

struct RepresentingChoice {
  std::size_t object = 0;     ///< c
  std::size_t element = 0;    ///< x in X(c)
  std::size_t rep_object = 0; ///< d with y(d) ≅ y(c) ×_X Y
  std::size_t projection = 0; ///< the arrow d -> c (first leg of the generic element)
  std::size_t term = 0;       ///< the element of Y(d) (second leg)
};

struct RepresentabilityReport {
  bool representable = true;
  std::vector<RepresentingChoice> choices;
  std::optional<std::size_t> failing_object;
  std::optional<std::size_t> failing_element;
  std::size_t failing_pullback_size = 0;
  std::string detail;
};

/// For every c and x in X(c), looks for d and u in (y(c) ×_X Y)(d) with
/// y(d) ≅ y(c) ×_X Y induced by u.
RepresentabilityReport is_representable(const PNat& p);

struct ContextExtension {
  std::size_t extended = 0;   ///< Γ.A
  std::size_t projection = 0; ///< π_A : Γ.A -> Γ
  std::size_t term = 0;       ///< q_A in Tm(Γ.A)
};
/// Throws StructureError when the pullback of p along A is not representable.
ContextExtension context_extension(const PNat& p, std::size_t gamma, std::size_t type);

/// ⊔_d y(src d) -> ⊔_d y(dst d) over the listed display arrows. Labels are
/// (d, g). Throws StructureError on unknown arrow names.
PNat clan_model(const IndexCategory& cat, const std::vector<Label>& display);

/// Presheaf JSON: {"category":..., "at":[[...],...], "restriction":{"f":{x:y}}}.
Presheaf presheaf_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Presheaf& x);

}  // namespace catsem
