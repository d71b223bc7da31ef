#pragma once

// Small categories given by explicit arrow and composition tables.

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "catsem/finset.hpp"

namespace catsem {

struct Arrow {
  Label name;
  std::size_t src = 0;
  std::size_t dst = 0;
};

class IndexCategory {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  IndexCategory();
  /// `arrows` must contain the identities listed in `identities`.
  /// `compose[g * arrows.size() + f]` is g ∘ f when dst(f) = src(g) and npos
  /// otherwise. Unit and associativity laws are checked exhaustively;
  /// violations throw StructureError.
  IndexCategory(FinSet objects, std::vector<Arrow> arrows, std::vector<std::size_t> identities,
                std::vector<std::size_t> compose);

  /// One object, one arrow.
  static IndexCategory terminal();
  /// 0 -> 1.
  static IndexCategory arrow();
  /// 0 -> 1 -> 2 with the composite 0 -> 2.
  static IndexCategory composable_pair();
  /// The poset {0 < 1 < ... < n-1}; identities are named id_i, other arrows i<j.
  static IndexCategory chain(std::size_t n);
  /// "terminal", "arrow" or "composable-pair". Throws StructureError otherwise.
  static IndexCategory named(const std::string& name);

  const FinSet& objects() const { return rep_->objects; }
  std::size_t object_count() const { return rep_->objects.size(); }
  const std::vector<Arrow>& arrows() const { return rep_->arrows; }
  std::size_t arrow_count() const { return rep_->arrows.size(); }
  const Arrow& arrow(std::size_t i) const { return rep_->arrows[i]; }
  std::size_t identity(std::size_t c) const { return rep_->identities[c]; }
  bool is_identity(std::size_t a) const { return identity(arrow(a).src) == a; }

  /// g ∘ f. Throws BoundaryError unless dst(f) = src(g).
  std::size_t compose(std::size_t g, std::size_t f) const;
  /// Arrows c -> d in arrow order.
  const std::vector<std::size_t>& hom(std::size_t c, std::size_t d) const {
    return rep_->homs[c * object_count() + d];
  }
  /// All arrows with codomain c, in arrow order.
  const std::vector<std::size_t>& into(std::size_t c) const { return rep_->into[c]; }
  std::size_t find_arrow(const Label& name) const;
  /// True when every arrow is an identity.
  bool is_discrete() const;

  std::string str() const;

  friend bool operator==(const IndexCategory& a, const IndexCategory& b);

 private:
  struct Rep {
    FinSet objects;
    std::vector<Arrow> arrows;
    std::vector<std::size_t> identities;
    std::vector<std::size_t> compose;
    std::vector<std::vector<std::size_t>> homs;
    std::vector<std::vector<std::size_t>> into;
    FinSet arrow_names;
  };
  std::shared_ptr<const Rep> rep_;
};

/// {"objects":[...], "arrows":[{"name","src","dst"}...], "compose":{"g.f":"h"}}
/// Identities are added as id_<object> and need not be listed, nor their
/// composites. A string is read as a named category.
IndexCategory index_category_from_json(const nlohmann::json& j);
nlohmann::json to_json(const IndexCategory& c);

}  // namespace catsem
