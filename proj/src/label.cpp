#include "catsem/label.hpp"

#include "catsem/errors.hpp"

namespace catsem {

std::int64_t Label::as_int() const {
  if (!is_int()) throw StructureError("label " + str() + " is not an integer");
  return std::get<std::int64_t>(value_);
}

const std::string& Label::as_name() const {
  if (!is_name()) throw StructureError("label " + str() + " is not a name");
  return std::get<std::string>(value_);
}

const Label::Tuple& Label::as_tuple() const {
  if (!is_tuple()) throw StructureError("label " + str() + " is not a tuple");
  return std::get<Tuple>(value_);
}

const Label& Label::operator[](std::size_t i) const {
  const auto& t = as_tuple();
  if (i >= t.size()) throw StructureError("tuple index out of range in " + str());
  return t[i];
}

std::size_t Label::hash() const {
  // FNV-style mixing, tuples fold their components in order.
  constexpr std::size_t prime = 1099511628211ull;
  std::size_t h = 14695981039346656037ull ^ value_.index();
  if (is_int()) {
    h = (h ^ static_cast<std::size_t>(std::get<std::int64_t>(value_))) * prime;
  } else if (is_name()) {
    h = (h ^ std::hash<std::string>{}(std::get<std::string>(value_))) * prime;
  } else {
    for (const auto& c : std::get<Tuple>(value_)) h = (h ^ c.hash()) * prime;
    h = (h ^ std::get<Tuple>(value_).size()) * prime;
  }
  return h;
}

std::string Label::str() const {
  if (is_int()) return std::to_string(std::get<std::int64_t>(value_));
  if (is_name()) return std::get<std::string>(value_);
  std::string out = "(";
  const auto& t = std::get<Tuple>(value_);
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    out += t[i].str();
  }
  return out + ")";
}

std::strong_ordering operator<=>(const Label& a, const Label& b) {
  if (a.value_.index() != b.value_.index()) return a.value_.index() <=> b.value_.index();
  if (a.is_int()) return std::get<std::int64_t>(a.value_) <=> std::get<std::int64_t>(b.value_);
  if (a.is_name()) return std::get<std::string>(a.value_).compare(std::get<std::string>(b.value_)) <=> 0;
  const auto& x = std::get<Label::Tuple>(a.value_);
  const auto& y = std::get<Label::Tuple>(b.value_);
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (auto c = x[i] <=> y[i]; c != 0) return c;
  }
  return x.size() <=> y.size();
}

nlohmann::json to_json_value(const Label& l) {
  if (l.is_int()) return l.as_int();
  if (l.is_name()) return l.as_name();
  auto arr = nlohmann::json::array();
  for (const auto& c : l.as_tuple()) arr.push_back(to_json_value(c));
  return arr;
}

Label label_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Label(j.get<std::int64_t>());
  if (j.is_string()) return Label(j.get<std::string>());
  if (j.is_array()) {
    Label::Tuple t;
    for (const auto& c : j) t.push_back(label_from_json(c));
    return Label(std::move(t));
  }
  throw StructureError("label must be an integer, string or array: " + j.dump());
}

}  // namespace catsem
