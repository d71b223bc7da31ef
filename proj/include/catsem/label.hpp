#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include <json.hpp>

namespace catsem {

/// Opaque element token: an integer, a name, or a tuple of labels.
/// Constructions (pullbacks, sections, sieves...) build tuple labels so that
/// every canonical object carries readable, structurally comparable elements.
class Label {
 public:
  using Tuple = std::vector<Label>;

  Label() : value_(std::int64_t{0}) {}
  template <typename I, std::enable_if_t<std::is_integral_v<I> && !std::is_same_v<I, bool>, int> = 0>
  Label(I n) : value_(static_cast<std::int64_t>(n)) {}
  Label(std::string name) : value_(std::move(name)) {}
  Label(const char* name) : value_(std::string(name)) {}
  Label(Tuple items) : value_(std::move(items)) {}

  static Label tuple(std::initializer_list<Label> items) { return Label(Tuple(items)); }

  bool is_int() const { return std::holds_alternative<std::int64_t>(value_); }
  bool is_name() const { return std::holds_alternative<std::string>(value_); }
  bool is_tuple() const { return std::holds_alternative<Tuple>(value_); }

  std::int64_t as_int() const;
  const std::string& as_name() const;
  const Tuple& as_tuple() const;
  /// Tuple component; throws if not a tuple or out of range.
  const Label& operator[](std::size_t i) const;

  std::size_t hash() const;
  /// Compact text: `3`, `a`, `(1,(2,a))`.
  std::string str() const;

  friend bool operator==(const Label& a, const Label& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Label& a, const Label& b);

 private:
  std::variant<std::int64_t, std::string, Tuple> value_;
};

struct LabelHash {
  std::size_t operator()(const Label& l) const { return l.hash(); }
};

/// Integers and names map to JSON scalars, tuples to arrays.
nlohmann::json to_json_value(const Label& l);
Label label_from_json(const nlohmann::json& j);

}  // namespace catsem
