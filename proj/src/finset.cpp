#include "catsem/finset.hpp"

#include <algorithm>

#include "catsem/errors.hpp"
#include "catsem/kernels.hpp"

namespace catsem {

// ---------------------------------------------------------------- FinSet

FinSet::FinSet() : rep_(std::make_shared<const Rep>()) {}

FinSet::FinSet(std::vector<Label> elements) {
  auto rep = std::make_shared<Rep>();
  rep->index.reserve(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!rep->index.emplace(elements[i], i).second) {
      throw StructureError("duplicate label " + elements[i].str() + " in finite set");
    }
  }
  rep->elements = std::move(elements);
  std::call_once(rep->indexed, [] {});
  rep_ = std::move(rep);
}

FinSet FinSet::distinct(std::vector<Label> elements) {
  auto rep = std::make_shared<Rep>();
  rep->elements = std::move(elements);
  FinSet s;
  s.rep_ = std::move(rep);
  return s;
}

const std::unordered_map<Label, std::size_t, LabelHash>& FinSet::index() const {
  std::call_once(rep_->indexed, [this] {
    rep_->index.reserve(rep_->elements.size());
    for (std::size_t i = 0; i < rep_->elements.size(); ++i) rep_->index.emplace(rep_->elements[i], i);
  });
  return rep_->index;
}

FinSet FinSet::range(std::size_t n) {
  std::vector<Label> e;
  e.reserve(n);
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i);
  return FinSet(std::move(e));
}

std::optional<std::size_t> FinSet::find(const Label& l) const {
  const auto& idx = index();
  auto it = idx.find(l);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

std::size_t FinSet::index_of(const Label& l) const {
  auto i = find(l);
  if (!i) throw StructureError("label " + l.str() + " is not an element of " + str());
  return *i;
}

std::string FinSet::str() const {
  std::string out = "{";
  const std::size_t shown = std::min<std::size_t>(size(), 12);
  for (std::size_t i = 0; i < shown; ++i) {
    if (i) out += ",";
    out += (*this)[i].str();
  }
  if (shown < size()) out += ",... (" + std::to_string(size()) + ")";
  return out + "}";
}

// ---------------------------------------------------------------- FinMap

FinMap::FinMap(FinSet dom, FinSet cod, std::vector<std::size_t> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
  if (table_.size() != dom_.size()) {
    throw StructureError("map table has " + std::to_string(table_.size()) + " entries for a domain of size " +
                         std::to_string(dom_.size()));
  }
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] >= cod_.size()) {
      throw StructureError("image of " + dom_[i].str() + " lies outside the codomain");
    }
  }
}

FinMap FinMap::identity(const FinSet& s) {
  std::vector<std::size_t> t(s.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = i;
  return FinMap(s, s, std::move(t));
}

FinMap FinMap::to_terminal(const FinSet& s) {
  return FinMap(s, FinSet::terminal(), std::vector<std::size_t>(s.size(), 0));
}

FinMap FinMap::point(const FinSet& s, std::size_t i) {
  if (i >= s.size()) throw StructureError("point index out of range");
  return FinMap(FinSet::terminal(), s, {i});
}

FinMap FinMap::from_labels(const FinSet& dom, const FinSet& cod, const std::function<Label(const Label&)>& f) {
  std::vector<std::size_t> t(dom.size());
  for (std::size_t i = 0; i < dom.size(); ++i) t[i] = cod.index_of(f(dom[i]));
  return FinMap(dom, cod, std::move(t));
}

bool FinMap::is_injective() const {
  std::vector<char> seen(cod_.size(), 0);
  for (std::size_t y : table_) {
    if (seen[y]) return false;
    seen[y] = 1;
  }
  return true;
}

bool FinMap::is_surjective() const {
  std::vector<char> seen(cod_.size(), 0);
  for (std::size_t y : table_) seen[y] = 1;
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

FinMap FinMap::inverse() const {
  if (!is_bijective()) throw StructureError("map is not a bijection");
  std::vector<std::size_t> inv(cod_.size());
  for (std::size_t i = 0; i < table_.size(); ++i) inv[table_[i]] = i;
  return FinMap(cod_, dom_, std::move(inv));
}

std::vector<std::size_t> FinMap::preimage(std::size_t y) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] == y) out.push_back(i);
  }
  return out;
}

FinMap compose(const FinMap& g, const FinMap& f) {
  if (!(f.cod() == g.dom())) {
    throw BoundaryError("cannot compose: codomain " + f.cod().str() + " differs from domain " + g.dom().str());
  }
  std::vector<std::size_t> t(f.dom().size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = g(f(i));
  return FinMap(f.dom(), g.cod(), std::move(t));
}

// ---------------------------------------------------------------- Family

Family::Family(FinMap proj) : proj_(std::move(proj)) {
  std::vector<std::vector<std::size_t>> fibers(proj_.cod().size());
  std::vector<std::size_t> positions(proj_.dom().size());
  for (std::size_t e = 0; e < proj_.dom().size(); ++e) {
    auto& fib = fibers[proj_(e)];
    positions[e] = fib.size();
    fib.push_back(e);
  }
  fibers_ = std::make_shared<const std::vector<std::vector<std::size_t>>>(std::move(fibers));
  positions_ = std::make_shared<const std::vector<std::size_t>>(std::move(positions));
}

Family Family::from_fiber_sizes(std::span<const std::size_t> sizes) {
  std::vector<Label> total;
  std::vector<std::size_t> proj;
  for (std::size_t b = 0; b < sizes.size(); ++b) {
    for (std::size_t i = 0; i < sizes[b]; ++i) {
      total.push_back(Label::tuple({b, i}));
      proj.push_back(b);
    }
  }
  return Family(FinMap(FinSet(std::move(total)), FinSet::range(sizes.size()), std::move(proj)));
}

std::vector<std::size_t> Family::fiber_sizes() const {
  std::vector<std::size_t> out(base().size());
  for (std::size_t b = 0; b < out.size(); ++b) out[b] = fiber_size(b);
  return out;
}

// ---------------------------------------------------------------- squares

Square make_square(FinMap top, FinMap left, FinMap right, FinMap bottom) {
  if (!(top.dom() == left.dom()) || !(top.cod() == right.dom()) || !(left.cod() == bottom.dom()) ||
      !(right.cod() == bottom.cod())) {
    throw BoundaryError("maps do not form a square boundary");
  }
  return Square{std::move(top), std::move(left), std::move(right), std::move(bottom)};
}

std::string to_string(PullbackVerdict v) {
  switch (v) {
    case PullbackVerdict::pullback:
      return "pullback";
    case PullbackVerdict::not_pullback:
      return "not-pullback";
    case PullbackVerdict::not_commuting:
      return "not-commuting";
  }
  return "?";
}

namespace {

SquareReport check_pullback_impl(const Square& sq, bool parallel) {
  make_square(sq.top, sq.left, sq.right, sq.bottom);
  SquareReport rep;
  const FinSet& a = sq.top.dom();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sq.right(sq.top(i)) != sq.bottom(sq.left(i))) {
      rep.verdict = PullbackVerdict::not_commuting;
      rep.failing_element = sq.left(i);
      rep.failing_label = sq.left.cod()[sq.left(i)];
      rep.detail = "square does not commute at " + a[i].str();
      return rep;
    }
  }
  Family left(sq.left);
  Family right(sq.right);
  std::vector<std::size_t> right_position(sq.right.dom().size());
  for (std::size_t b = 0; b < right_position.size(); ++b) right_position[b] = right.position_in_fiber(b);
  std::vector<std::vector<std::size_t>> lf(left.base().size()), rf(right.base().size());
  for (std::size_t x = 0; x < lf.size(); ++x) lf[x] = left.fiber(x);
  for (std::size_t d = 0; d < rf.size(); ++d) rf[d] = right.fiber(d);
  kernels::FiberProblem p{left.base().size(), lf, rf, sq.top.table(), sq.bottom.table(), right_position};
  auto out = parallel ? kernels::fiberwise_bijection(p) : kernels::fiberwise_bijection_serial(p);
  rep.elements_checked = out.elements_checked;
  if (out.first_failure == kernels::npos) {
    rep.fibers_checked = left.base().size();
    return rep;
  }
  const std::size_t x = out.first_failure;
  rep.fibers_checked = x + 1;
  rep.verdict = PullbackVerdict::not_pullback;
  rep.failing_element = x;
  rep.failing_label = sq.left.cod()[x];
  rep.left_fiber_size = lf[x].size();
  rep.right_fiber_size = rf[sq.bottom(x)].size();
  rep.detail = "fiber over " + sq.left.cod()[x].str() + " has " + std::to_string(rep.left_fiber_size) +
               " elements, target fiber has " + std::to_string(rep.right_fiber_size) +
               (rep.left_fiber_size == rep.right_fiber_size ? " (induced map not bijective)" : "");
  return rep;
}

}  // namespace

SquareReport check_pullback(const Square& sq) { return check_pullback_impl(sq, true); }
SquareReport check_pullback_serial(const Square& sq) { return check_pullback_impl(sq, false); }
PullbackVerdict is_pullback(const Square& sq) { return check_pullback(sq).verdict; }

// ---------------------------------------------------------------- limits

Pullback pullback(const FinMap& f, const FinMap& g) {
  if (!(f.cod() == g.cod())) throw BoundaryError("pullback of maps with different codomains");
  Family gf(g);
  std::vector<Label> elems;
  std::vector<std::size_t> t1, t2;
  for (std::size_t a = 0; a < f.dom().size(); ++a) {
    for (std::size_t b : gf.fiber(f(a))) {
      elems.push_back(Label::tuple({f.dom()[a], g.dom()[b]}));
      t1.push_back(a);
      t2.push_back(b);
    }
  }
  FinSet obj(std::move(elems));
  return Pullback{obj, FinMap(obj, f.dom(), std::move(t1)), FinMap(obj, g.dom(), std::move(t2)), f, g};
}

FinMap pullback_mediator(const Pullback& pb, const FinMap& a, const FinMap& b) {
  if (!(a.dom() == b.dom()) || !(a.cod() == pb.f.dom()) || !(b.cod() == pb.g.dom())) {
    throw BoundaryError("mediator legs do not match the cospan");
  }
  std::vector<std::size_t> t(a.dom().size());
  for (std::size_t z = 0; z < t.size(); ++z) {
    if (pb.f(a(z)) != pb.g(b(z))) {
      throw BoundaryError("mediator legs do not commute at " + a.dom()[z].str());
    }
    t[z] = pb.object.index_of(Label::tuple({pb.f.dom()[a(z)], pb.g.dom()[b(z)]}));
  }
  return FinMap(a.dom(), pb.object, std::move(t));
}

Pullback product(const FinSet& x, const FinSet& y) {
  return pullback(FinMap::to_terminal(x), FinMap::to_terminal(y));
}

Family base_change(const FinMap& f, const Family& fam) {
  if (!(f.cod() == fam.base())) throw BoundaryError("base change along a map into a different base");
  return Family(pullback(f, fam.proj()).p1);
}

Family dependent_sum(const FinMap& f, const Family& fam) {
  if (!(f.dom() == fam.base())) throw BoundaryError("dependent sum along a map from a different base");
  return Family(compose(f, fam.proj()));
}

Family pushforward(const FinMap& f, const Family& fam) {
  if (!(f.dom() == fam.base())) throw BoundaryError("pushforward along a map from a different base");
  Family ff(f);
  std::vector<Label> elems;
  std::vector<std::size_t> proj;
  for (std::size_t y = 0; y < f.cod().size(); ++y) {
    const auto& xs = ff.fiber(y);
    std::vector<std::size_t> radices;
    for (std::size_t x : xs) radices.push_back(fam.fiber_size(x));
    for (const auto& choice : kernels::odometer(radices)) {
      Label::Tuple section;
      section.reserve(xs.size());
      for (std::size_t i = 0; i < xs.size(); ++i) section.push_back(fam.total()[fam.fiber(xs[i])[choice[i]]]);
      elems.push_back(Label::tuple({f.cod()[y], Label(std::move(section))}));
      proj.push_back(y);
    }
  }
  return Family(FinMap(FinSet(std::move(elems)), f.cod(), std::move(proj)));
}

Family slice_exponential(const Family& f1, const Family& f2) {
  if (!(f1.base() == f2.base())) throw BoundaryError("exponential of families over different bases");
  std::vector<Label> elems;
  std::vector<std::size_t> proj;
  for (std::size_t x = 0; x < f1.base().size(); ++x) {
    const auto& dom = f1.fiber(x);
    const auto& cod = f2.fiber(x);
    std::vector<std::size_t> radices(dom.size(), cod.size());
    for (const auto& choice : kernels::odometer(radices)) {
      Label::Tuple images;
      images.reserve(dom.size());
      for (std::size_t c : choice) images.push_back(f2.total()[cod[c]]);
      elems.push_back(Label::tuple({f1.base()[x], Label(std::move(images))}));
      proj.push_back(x);
    }
  }
  return Family(FinMap(FinSet(std::move(elems)), f1.base(), std::move(proj)));
}

Family slice_product(const Family& f1, const Family& f2) {
  if (!(f1.base() == f2.base())) throw BoundaryError("product of families over different bases");
  auto pb = pullback(f1.proj(), f2.proj());
  return Family(compose(f1.proj(), pb.p1));
}

FinMap exponential_evaluation(const Family& exponential, const Family& f1, const Family& f2) {
  auto pb = pullback(exponential.proj(), f1.proj());
  std::vector<std::size_t> t(pb.object.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Label& fn = exponential.total()[pb.p1(i)];
    const std::size_t a = pb.p2(i);
    const Label& image = fn[1][f1.position_in_fiber(a)];
    t[i] = f2.total().index_of(image);
  }
  return FinMap(pb.object, f2.total(), std::move(t));
}

FinMap exponential_transpose(const Family& g, const Family& f1, const Family& f2, const Family& exponential,
                             const FinMap& m) {
  auto pb = pullback(g.proj(), f1.proj());
  if (!(m.dom() == pb.object) || !(m.cod() == f2.total())) {
    throw BoundaryError("transpose expects a map g ×_X f1 -> f2");
  }
  std::vector<std::size_t> t(g.total().size());
  for (std::size_t z = 0; z < t.size(); ++z) {
    const std::size_t x = g.proj()(z);
    Label::Tuple images;
    for (std::size_t a : f1.fiber(x)) {
      const std::size_t k = pb.object.index_of(Label::tuple({g.total()[z], f1.total()[a]}));
      const std::size_t img = m(k);
      if (f2.proj()(img) != x) throw BoundaryError("map is not over the base");
      images.push_back(f2.total()[img]);
    }
    t[z] = exponential.total().index_of(Label::tuple({g.base()[x], Label(std::move(images))}));
  }
  return FinMap(g.total(), exponential.total(), std::move(t));
}

bool is_map_over(const FinMap& m, const Family& f1, const Family& f2) {
  if (!(m.dom() == f1.total()) || !(m.cod() == f2.total()) || !(f1.base() == f2.base())) return false;
  for (std::size_t e = 0; e < m.dom().size(); ++e) {
    if (f2.proj()(m(e)) != f1.proj()(e)) return false;
  }
  return true;
}

// ---------------------------------------------------------------- JSON

std::string label_key(const Label& l) { return l.str(); }

nlohmann::json to_json(const FinSet& s) {
  auto arr = nlohmann::json::array();
  for (const auto& e : s.elements()) arr.push_back(to_json_value(e));
  return {{"elements", arr}};
}

nlohmann::json to_json(const FinMap& m) {
  auto table = nlohmann::json::object();
  for (std::size_t i = 0; i < m.dom().size(); ++i) table[label_key(m.dom()[i])] = to_json_value(m.cod()[m(i)]);
  return {{"dom", to_json(m.dom())}, {"cod", to_json(m.cod())}, {"table", table}};
}

nlohmann::json to_json(const Family& f) { return {{"proj", to_json(f.proj())}}; }

FinSet finset_from_json(const nlohmann::json& j) {
  if (j.is_number_unsigned() || j.is_number_integer()) return FinSet::range(j.get<std::size_t>());
  if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array()) {
    throw StructureError("finite set must be {\"elements\":[...]}");
  }
  std::vector<Label> e;
  for (const auto& x : j["elements"]) e.push_back(label_from_json(x));
  return FinSet(std::move(e));
}

FinMap finmap_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dom") || !j.contains("cod") || !j.contains("table")) {
    throw StructureError("finite map must be {\"dom\":...,\"cod\":...,\"table\":{...}}");
  }
  FinSet dom = finset_from_json(j["dom"]);
  FinSet cod = finset_from_json(j["cod"]);
  std::unordered_map<std::string, std::size_t> keys;
  for (std::size_t i = 0; i < dom.size(); ++i) {
    if (!keys.emplace(label_key(dom[i]), i).second) {
      throw StructureError("domain labels are not distinguishable by their text form");
    }
  }
  std::vector<std::size_t> t(dom.size(), kernels::npos);
  const auto& table = j["table"];
  if (!table.is_object()) throw StructureError("map table must be an object");
  for (auto it = table.begin(); it != table.end(); ++it) {
    auto k = keys.find(it.key());
    if (k == keys.end()) throw StructureError("table key " + it.key() + " is not a domain element");
    t[k->second] = cod.index_of(label_from_json(it.value()));
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] == kernels::npos) throw StructureError("table is missing " + dom[i].str());
  }
  return FinMap(dom, cod, std::move(t));
}

Family family_from_json(const nlohmann::json& j) {
  if (j.contains("fibers")) {
    return Family::from_fiber_sizes(j["fibers"].get<std::vector<std::size_t>>());
  }
  if (j.contains("proj")) return Family(finmap_from_json(j["proj"]));
  return Family(finmap_from_json(j));
}

}  // namespace catsem
