#pragma once

// Finite sets and maps: the locally cartesian closed kernel every other
// module checks against. Elements are addressed by position; labels are only
// consulted for canonical identification and serialization.

#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "catsem/label.hpp"

namespace catsem {

class FinSet {
 public:
  FinSet();
  /// Throws StructureError on duplicate labels.
  explicit FinSet(std::vector<Label> elements);

  /// For generated element lists already known to be distinct. The lookup
  /// index is built on first use instead of up front.
  static FinSet distinct(std::vector<Label> elements);

  /// Canonical set {0, ..., n-1}.
  static FinSet range(std::size_t n);
  /// The one-element set {0}.
  static FinSet terminal() { return range(1); }

  std::size_t size() const { return rep_->elements.size(); }
  bool empty() const { return size() == 0; }
  const Label& operator[](std::size_t i) const { return rep_->elements[i]; }
  const std::vector<Label>& elements() const { return rep_->elements; }

  std::optional<std::size_t> find(const Label& l) const;
  /// Throws StructureError if absent.
  std::size_t index_of(const Label& l) const;
  bool contains(const Label& l) const { return find(l).has_value(); }

  std::string str() const;

  friend bool operator==(const FinSet& a, const FinSet& b) {
    return a.rep_ == b.rep_ || a.rep_->elements == b.rep_->elements;
  }

 private:
  struct Rep {
    std::vector<Label> elements;
    mutable std::once_flag indexed;
    mutable std::unordered_map<Label, std::size_t, LabelHash> index;
  };
  const std::unordered_map<Label, std::size_t, LabelHash>& index() const;
  std::shared_ptr<const Rep> rep_;
};

/// Total map between finite sets, stored as a positional table.
class FinMap {
 public:
  FinMap() = default;
  /// Throws StructureError unless table has one in-range entry per dom element.
  FinMap(FinSet dom, FinSet cod, std::vector<std::size_t> table);

  static FinMap identity(const FinSet& s);
  static FinMap to_terminal(const FinSet& s);
  /// The map 1 -> s selecting element i.
  static FinMap point(const FinSet& s, std::size_t i);
  /// Build from a label-level function; throws if an image is not in cod.
  static FinMap from_labels(const FinSet& dom, const FinSet& cod,
                            const std::function<Label(const Label&)>& f);

  const FinSet& dom() const { return dom_; }
  const FinSet& cod() const { return cod_; }
  const std::vector<std::size_t>& table() const { return table_; }
  std::size_t operator()(std::size_t i) const { return table_[i]; }
  const Label& at(const Label& x) const { return cod_[table_[dom_.index_of(x)]]; }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }
  /// Throws StructureError if not bijective.
  FinMap inverse() const;
  /// Preimage indices of cod element y, in dom order.
  std::vector<std::size_t> preimage(std::size_t y) const;

  friend bool operator==(const FinMap& a, const FinMap& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.table_ == b.table_;
  }

 private:
  FinSet dom_;
  FinSet cod_;
  std::vector<std::size_t> table_;
};

/// g ∘ f. Throws BoundaryError unless cod(f) = dom(g).
FinMap compose(const FinMap& g, const FinMap& f);

/// A display map proj : total -> base with fiber access. Fibers are
/// subsequences of total in its element order.
class Family {
 public:
  Family() = default;
  explicit Family(FinMap proj);

  /// Base {0..n-1}, fiber over b has labels (b, 0) ... (b, k_b - 1).
  static Family from_fiber_sizes(std::span<const std::size_t> sizes);
  static Family from_fiber_sizes(std::initializer_list<std::size_t> sizes) {
    std::vector<std::size_t> v(sizes);
    return from_fiber_sizes(std::span<const std::size_t>(v));
  }

  const FinSet& total() const { return proj_.dom(); }
  const FinSet& base() const { return proj_.cod(); }
  const FinMap& proj() const { return proj_; }
  const std::vector<std::size_t>& fiber(std::size_t b) const { return (*fibers_)[b]; }
  std::size_t fiber_size(std::size_t b) const { return (*fibers_)[b].size(); }
  std::vector<std::size_t> fiber_sizes() const;
  /// Position of total element e inside its own fiber.
  std::size_t position_in_fiber(std::size_t e) const { return (*positions_)[e]; }

 private:
  FinMap proj_;
  std::shared_ptr<const std::vector<std::vector<std::size_t>>> fibers_;
  std::shared_ptr<const std::vector<std::size_t>> positions_;
};

/// top : A -> B, left : A -> C, right : B -> D, bottom : C -> D.
struct Square {
  FinMap top;
  FinMap left;
  FinMap right;
  FinMap bottom;
};

/// Throws BoundaryError unless the four maps form a square boundary.
Square make_square(FinMap top, FinMap left, FinMap right, FinMap bottom);

enum class PullbackVerdict { pullback, not_pullback, not_commuting };

struct SquareReport {
  PullbackVerdict verdict = PullbackVerdict::pullback;
  std::size_t fibers_checked = 0;
  std::size_t elements_checked = 0;
  /// Index (into the bottom-left object) of the first failing element.
  std::optional<std::size_t> failing_element;
  std::optional<Label> failing_label;
  std::size_t left_fiber_size = 0;
  std::size_t right_fiber_size = 0;
  std::string detail;
};

/// Fiberwise pullback test: for each x in the bottom-left object, the induced
/// map from left⁻¹(x) to right⁻¹(bottom(x)) must be a bijection.
SquareReport check_pullback(const Square& sq);
SquareReport check_pullback_serial(const Square& sq);
PullbackVerdict is_pullback(const Square& sq);

std::string to_string(PullbackVerdict v);

struct Pullback {
  FinSet object;  ///< labels (a, b), lexicographic by (a, b)
  FinMap p1;
  FinMap p2;
  FinMap f;
  FinMap g;

  Square square() const { return Square{p2, p1, g, f}; }
};

/// Canonical pullback of f : A -> C and g : B -> C.
Pullback pullback(const FinMap& f, const FinMap& g);
/// The unique u : Z -> P with p1 u = a, p2 u = b. Throws BoundaryError if
/// f a != g b.
FinMap pullback_mediator(const Pullback& pb, const FinMap& a, const FinMap& b);

/// X × Y with labels (x, y).
Pullback product(const FinSet& x, const FinSet& y);

/// Base change along f : X -> Y; total labels (x, e).
Family base_change(const FinMap& f, const Family& fam);
/// Postcomposition with f : X -> Y. The total is unchanged.
Family dependent_sum(const FinMap& f, const Family& fam);
/// Sections of fam over each fiber of f : X -> Y; total labels
/// (y, (e_1, ..., e_k)) with e_i over the i-th element of f⁻¹(y).
Family pushforward(const FinMap& f, const Family& fam);
/// Fiberwise function sets; total labels (x, (images in f1's fiber order)).
Family slice_exponential(const Family& f1, const Family& f2);

/// fam1 ×_X fam2 as a family over X; total labels (e1, e2).
Family slice_product(const Family& f1, const Family& f2);
/// ev : [f1, f2] ×_X f1 -> total(f2).
FinMap exponential_evaluation(const Family& exponential, const Family& f1, const Family& f2);
/// Transpose of m : total(g ×_X f1) -> total(f2) (over X) to g -> [f1, f2].
FinMap exponential_transpose(const Family& g, const Family& f1, const Family& f2,
                             const Family& exponential, const FinMap& m);

/// Is `m : f1.total -> f2.total` a map over the common base?
bool is_map_over(const FinMap& m, const Family& f1, const Family& f2);

// JSON: {"elements":[...]}, {"dom":..., "cod":..., "table":{label: label}},
// families as {"proj": <map>}.
nlohmann::json to_json(const FinSet& s);
nlohmann::json to_json(const FinMap& m);
nlohmann::json to_json(const Family& f);
FinSet finset_from_json(const nlohmann::json& j);
FinMap finmap_from_json(const nlohmann::json& j);
Family family_from_json(const nlohmann::json& j);

/// Canonical text key for a label in JSON object tables.
std::string label_key(const Label& l);

}  // namespace catsem
