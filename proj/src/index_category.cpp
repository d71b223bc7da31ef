#include "catsem/index_category.hpp"

#include <map>
#include <sstream>

#include "catsem/errors.hpp"

namespace catsem {

IndexCategory::IndexCategory() : IndexCategory(terminal()) {}

IndexCategory::IndexCategory(FinSet objects, std::vector<Arrow> arrows, std::vector<std::size_t> identities,
                             std::vector<std::size_t> compose) {
  const std::size_t n = objects.size();
  const std::size_t m = arrows.size();
  if (identities.size() != n) throw StructureError("one identity per object is required");
  if (compose.size() != m * m) throw StructureError("composition table has the wrong size");
  std::vector<Label> names;
  for (const auto& a : arrows) {
    if (a.src >= n || a.dst >= n) throw StructureError("arrow " + a.name.str() + " has an unknown endpoint");
    names.push_back(a.name);
  }
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t i = identities[c];
    if (i >= m || arrows[i].src != c || arrows[i].dst != c) {
      throw StructureError("identity of object " + objects[c].str() + " is not an endo-arrow on it");
    }
  }
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t f = 0; f < m; ++f) {
      const std::size_t h = compose[g * m + f];
      const bool composable = arrows[f].dst == arrows[g].src;
      if (!composable) {
        if (h != npos) throw StructureError("composite defined for a non-composable pair");
        continue;
      }
      if (h >= m || arrows[h].src != arrows[f].src || arrows[h].dst != arrows[g].dst) {
        throw StructureError("composite " + arrows[g].name.str() + "." + arrows[f].name.str() +
                             " is missing or has the wrong boundary");
      }
    }
  }
  for (std::size_t f = 0; f < m; ++f) {
    if (compose[identities[arrows[f].dst] * m + f] != f || compose[f * m + identities[arrows[f].src]] != f) {
      throw StructureError("unit law fails at " + arrows[f].name.str());
    }
  }
  for (std::size_t h = 0; h < m; ++h) {
    for (std::size_t g = 0; g < m; ++g) {
      if (arrows[g].dst != arrows[h].src) continue;
      for (std::size_t f = 0; f < m; ++f) {
        if (arrows[f].dst != arrows[g].src) continue;
        if (compose[h * m + compose[g * m + f]] != compose[compose[h * m + g] * m + f]) {
          throw StructureError("associativity fails at " + arrows[h].name.str() + "." + arrows[g].name.str() +
                               "." + arrows[f].name.str());
        }
      }
    }
  }
  auto rep = std::make_shared<Rep>();
  rep->homs.assign(n * n, {});
  rep->into.assign(n, {});
  for (std::size_t a = 0; a < m; ++a) {
    rep->homs[arrows[a].src * n + arrows[a].dst].push_back(a);
    rep->into[arrows[a].dst].push_back(a);
  }
  rep->arrow_names = FinSet(std::move(names));
  rep->objects = std::move(objects);
  rep->arrows = std::move(arrows);
  rep->identities = std::move(identities);
  rep->compose = std::move(compose);
  rep_ = std::move(rep);
}

IndexCategory IndexCategory::chain(std::size_t n) {
  std::vector<Arrow> arrows;
  std::vector<std::size_t> ids(n);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Label name = i == j ? Label("id_" + std::to_string(i)) : Label(std::to_string(i) + "<" + std::to_string(j));
      if (i == j) ids[i] = arrows.size();
      index[{i, j}] = arrows.size();
      arrows.push_back({name, i, j});
    }
  }
  const std::size_t m = arrows.size();
  std::vector<std::size_t> comp(m * m, npos);
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t f = 0; f < m; ++f) {
      if (arrows[f].dst == arrows[g].src) comp[g * m + f] = index.at({arrows[f].src, arrows[g].dst});
    }
  }
  return IndexCategory(FinSet::range(n), std::move(arrows), std::move(ids), std::move(comp));
}

IndexCategory IndexCategory::terminal() {
  static const IndexCategory t = [] {
    std::vector<Arrow> arrows{{Label("id_0"), 0, 0}};
    return IndexCategory(FinSet::range(1), std::move(arrows), {0}, {0});
  }();
  return t;
}

IndexCategory IndexCategory::arrow() { return chain(2); }
IndexCategory IndexCategory::composable_pair() { return chain(3); }

IndexCategory IndexCategory::named(const std::string& name) {
  if (name == "terminal") return terminal();
  if (name == "arrow") return arrow();
  if (name == "composable-pair") return composable_pair();
  throw StructureError("unknown index category '" + name + "' (expected terminal, arrow or composable-pair)");
}

std::size_t IndexCategory::compose(std::size_t g, std::size_t f) const {
  const std::size_t h = rep_->compose[g * arrow_count() + f];
  if (h == npos) {
    throw BoundaryError("arrows " + arrow(g).name.str() + " and " + arrow(f).name.str() + " are not composable");
  }
  return h;
}

std::size_t IndexCategory::find_arrow(const Label& name) const { return rep_->arrow_names.index_of(name); }

bool IndexCategory::is_discrete() const { return arrow_count() == object_count(); }

std::string IndexCategory::str() const {
  std::ostringstream os;
  os << "objects " << objects().str() << ", arrows {";
  for (std::size_t a = 0; a < arrow_count(); ++a) {
    if (a) os << ", ";
    os << arrow(a).name.str() << ":" << objects()[arrow(a).src].str() << "->" << objects()[arrow(a).dst].str();
  }
  os << "}";
  return os.str();
}

bool operator==(const IndexCategory& a, const IndexCategory& b) {
  if (a.rep_ == b.rep_) return true;
  if (!(a.objects() == b.objects()) || a.arrow_count() != b.arrow_count()) return false;
  for (std::size_t i = 0; i < a.arrow_count(); ++i) {
    const Arrow& x = a.arrow(i);
    const Arrow& y = b.arrow(i);
    if (!(x.name == y.name) || x.src != y.src || x.dst != y.dst) return false;
  }
  return a.rep_->identities == b.rep_->identities && a.rep_->compose == b.rep_->compose;
}

IndexCategory index_category_from_json(const nlohmann::json& j) {
  if (j.is_string()) return IndexCategory::named(j.get<std::string>());
  if (!j.is_object() || !j.contains("objects")) throw StructureError("index category needs an 'objects' list");
  std::vector<Label> objs;
  for (const auto& o : j["objects"]) objs.push_back(label_from_json(o));
  FinSet objects(std::move(objs));
  std::vector<Arrow> arrows;
  std::vector<std::size_t> ids(objects.size());
  for (std::size_t c = 0; c < objects.size(); ++c) {
    ids[c] = arrows.size();
    arrows.push_back({Label("id_" + objects[c].str()), c, c});
  }
  if (j.contains("arrows")) {
    for (const auto& a : j["arrows"]) {
      arrows.push_back({label_from_json(a.at("name")), objects.index_of(label_from_json(a.at("src"))),
                        objects.index_of(label_from_json(a.at("dst")))});
    }
  }
  std::vector<Label> names;
  for (const auto& a : arrows) names.push_back(a.name);
  FinSet name_set(std::move(names));
  const std::size_t m = arrows.size();
  std::vector<std::size_t> comp(m * m, IndexCategory::npos);
  for (std::size_t f = 0; f < m; ++f) {
    comp[ids[arrows[f].dst] * m + f] = f;
    comp[f * m + ids[arrows[f].src]] = f;
  }
  if (j.contains("compose")) {
    for (const auto& [key, value] : j["compose"].items()) {
      const auto dot = key.find('.');
      if (dot == std::string::npos) throw StructureError("composition key '" + key + "' must have the form g.f");
      const std::size_t g = name_set.index_of(Label(key.substr(0, dot)));
      const std::size_t f = name_set.index_of(Label(key.substr(dot + 1)));
      comp[g * m + f] = name_set.index_of(label_from_json(value));
    }
  }
  return IndexCategory(std::move(objects), std::move(arrows), std::move(ids), std::move(comp));
}

nlohmann::json to_json(const IndexCategory& c) {
  nlohmann::json objs = nlohmann::json::array();
  for (const auto& o : c.objects().elements()) objs.push_back(to_json_value(o));
  nlohmann::json arrows = nlohmann::json::array();
  nlohmann::json comp = nlohmann::json::object();
  for (std::size_t a = 0; a < c.arrow_count(); ++a) {
    if (c.is_identity(a)) continue;
    arrows.push_back({{"name", to_json_value(c.arrow(a).name)},
                      {"src", to_json_value(c.objects()[c.arrow(a).src])},
                      {"dst", to_json_value(c.objects()[c.arrow(a).dst])}});
  }
  for (std::size_t g = 0; g < c.arrow_count(); ++g) {
    for (std::size_t f = 0; f < c.arrow_count(); ++f) {
      if (c.is_identity(g) || c.is_identity(f) || c.arrow(f).dst != c.arrow(g).src) continue;
      comp[c.arrow(g).name.str() + "." + c.arrow(f).name.str()] = to_json_value(c.arrow(c.compose(g, f)).name);
    }
  }
  return {{"objects", objs}, {"arrows", arrows}, {"compose", comp}};
}

}  // namespace catsem
