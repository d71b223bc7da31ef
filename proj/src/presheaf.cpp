#include "catsem/presheaf.hpp"

#include <sstream>

#include "catsem/errors.hpp"

namespace catsem {

Presheaf::Presheaf(IndexCategory cat, std::vector<FinSet> at, std::vector<FinMap> restriction)
    : cat_(std::move(cat)), at_(std::move(at)), restriction_(std::move(restriction)) {
  if (at_.size() != cat_.object_count()) throw StructureError("presheaf needs one set per object");
  if (restriction_.size() != cat_.arrow_count()) throw StructureError("presheaf needs one restriction per arrow");
  for (std::size_t a = 0; a < cat_.arrow_count(); ++a) {
    const Arrow& ar = cat_.arrow(a);
    if (!(restriction_[a].dom() == at_[ar.dst]) || !(restriction_[a].cod() == at_[ar.src])) {
      throw StructureError("restriction along " + ar.name.str() + " has the wrong boundary");
    }
    if (cat_.is_identity(a) && !(restriction_[a] == FinMap::identity(at_[ar.src]))) {
      throw StructureError("restriction along identity " + ar.name.str() + " is not the identity");
    }
  }
  // X(g ∘ f) = X(f) ∘ X(g)
  for (std::size_t g = 0; g < cat_.arrow_count(); ++g) {
    for (std::size_t f = 0; f < cat_.arrow_count(); ++f) {
      if (cat_.arrow(f).dst != cat_.arrow(g).src) continue;
      const FinMap& gf = restriction_[cat_.compose(g, f)];
      for (std::size_t x = 0; x < gf.dom().size(); ++x) {
        if (gf(x) != restriction_[f](restriction_[g](x))) {
          throw StructureError("functoriality fails for " + cat_.arrow(g).name.str() + "." +
                               cat_.arrow(f).name.str() + " at " + gf.dom()[x].str());
        }
      }
    }
  }
}

Presheaf Presheaf::over_terminal(const FinSet& s) {
  return Presheaf(IndexCategory::terminal(), {s}, {FinMap::identity(s)});
}

Presheaf Presheaf::terminal(const IndexCategory& cat) {
  std::vector<FinSet> at(cat.object_count(), FinSet::terminal());
  std::vector<FinMap> r(cat.arrow_count(), FinMap::identity(FinSet::terminal()));
  return Presheaf(cat, std::move(at), std::move(r));
}

Presheaf Presheaf::empty(const IndexCategory& cat) {
  std::vector<FinSet> at(cat.object_count(), FinSet());
  std::vector<FinMap> r(cat.arrow_count(), FinMap::identity(FinSet()));
  return Presheaf(cat, std::move(at), std::move(r));
}

std::size_t Presheaf::total_size() const {
  std::size_t n = 0;
  for (const auto& s : at_) n += s.size();
  return n;
}

std::vector<std::size_t> Presheaf::sizes() const {
  std::vector<std::size_t> out;
  for (const auto& s : at_) out.push_back(s.size());
  return out;
}

std::string Presheaf::str() const {
  std::ostringstream os;
  for (std::size_t c = 0; c < at_.size(); ++c) {
    if (c) os << "; ";
    os << cat_.objects()[c].str() << " ↦ " << at_[c].str();
  }
  return os.str();
}

bool operator==(const Presheaf& a, const Presheaf& b) {
  return a.cat_ == b.cat_ && a.at_ == b.at_ && a.restriction_ == b.restriction_;
}

PNat::PNat(Presheaf src, Presheaf tgt, std::vector<FinMap> components)
    : src_(std::move(src)), tgt_(std::move(tgt)), components_(std::move(components)) {
  const IndexCategory& cat = src_.category();
  if (!(cat == tgt_.category())) throw BoundaryError("natural transformation between different index categories");
  if (components_.size() != cat.object_count()) throw StructureError("one component per object is required");
  for (std::size_t c = 0; c < cat.object_count(); ++c) {
    if (!(components_[c].dom() == src_.at(c)) || !(components_[c].cod() == tgt_.at(c))) {
      throw BoundaryError("component at " + cat.objects()[c].str() + " has the wrong boundary");
    }
  }
  for (std::size_t a = 0; a < cat.arrow_count(); ++a) {
    const Arrow& ar = cat.arrow(a);
    for (std::size_t x = 0; x < src_.at(ar.dst).size(); ++x) {
      if (components_[ar.src](src_.restrict(a, x)) != tgt_.restrict(a, components_[ar.dst](x))) {
        throw StructureError("naturality fails along " + ar.name.str() + " at " + src_.at(ar.dst)[x].str());
      }
    }
  }
}

PNat PNat::from_tables(const Presheaf& src, const Presheaf& tgt, const std::vector<std::vector<std::size_t>>& tables) {
  std::vector<FinMap> comps;
  for (std::size_t c = 0; c < src.category().object_count(); ++c) comps.emplace_back(src.at(c), tgt.at(c), tables.at(c));
  return PNat(src, tgt, std::move(comps));
}

PNat PNat::over_terminal(const FinMap& m) {
  return PNat(Presheaf::over_terminal(m.dom()), Presheaf::over_terminal(m.cod()), {m});
}

PNat PNat::identity(const Presheaf& x) {
  std::vector<FinMap> comps;
  for (std::size_t c = 0; c < x.category().object_count(); ++c) comps.push_back(FinMap::identity(x.at(c)));
  return PNat(x, x, std::move(comps));
}

PNat PNat::to_terminal(const Presheaf& x) {
  std::vector<FinMap> comps;
  for (std::size_t c = 0; c < x.category().object_count(); ++c) comps.push_back(FinMap::to_terminal(x.at(c)));
  return PNat(x, Presheaf::terminal(x.category()), std::move(comps));
}

bool PNat::is_mono() const {
  for (const auto& m : components_) {
    if (!m.is_injective()) return false;
  }
  return true;
}

bool PNat::is_iso() const {
  for (const auto& m : components_) {
    if (!m.is_bijective()) return false;
  }
  return true;
}

PNat PNat::inverse() const {
  std::vector<FinMap> comps;
  for (const auto& m : components_) comps.push_back(m.inverse());
  return PNat(tgt_, src_, std::move(comps));
}

bool operator==(const PNat& a, const PNat& b) {
  return a.src_ == b.src_ && a.tgt_ == b.tgt_ && a.components_ == b.components_;
}

PNat compose(const PNat& g, const PNat& f) {
  if (!(f.tgt() == g.src())) throw BoundaryError("natural transformations are not composable");
  std::vector<FinMap> comps;
  for (std::size_t c = 0; c < f.src().category().object_count(); ++c) comps.push_back(compose(g.at(c), f.at(c)));
  return PNat(f.src(), g.tgt(), std::move(comps));
}

PshPullback pullback(const PNat& f, const PNat& g) {
  if (!(f.tgt() == g.tgt())) throw BoundaryError("pullback of natural transformations with different codomains");
  const IndexCategory& cat = f.src().category();
  std::vector<Pullback> pbs;
  std::vector<FinSet> at;
  for (std::size_t c = 0; c < cat.object_count(); ++c) {
    pbs.push_back(pullback(f.at(c), g.at(c)));
    at.push_back(pbs.back().object);
  }
  std::vector<FinMap> r;
  for (std::size_t a = 0; a < cat.arrow_count(); ++a) {
    const Arrow& ar = cat.arrow(a);
    const Pullback& from = pbs[ar.dst];
    const Pullback& to = pbs[ar.src];
    std::vector<std::size_t> t(from.object.size());
    for (std::size_t k = 0; k < t.size(); ++k) {
      const std::size_t x = f.src().restrict(a, from.p1(k));
      const std::size_t y = g.src().restrict(a, from.p2(k));
      t[k] = to.object.index_of(Label::tuple({f.src().at(ar.src)[x], g.src().at(ar.src)[y]}));
    }
    r.emplace_back(from.object, to.object, std::move(t));
  }
  Presheaf obj(cat, std::move(at), std::move(r));
  std::vector<FinMap> c1, c2;
  for (std::size_t c = 0; c < cat.object_count(); ++c) {
    c1.push_back(pbs[c].p1);
    c2.push_back(pbs[c].p2);
  }
  return {obj, PNat(obj, f.src(), std::move(c1)), PNat(obj, g.src(), std::move(c2))};
}

PshSquareReport check_pullback(const PshSquare& sq) {
  PshSquareReport rep;
  const IndexCategory& cat = sq.top.src().category();
  for (std::size_t c = 0; c < cat.object_count(); ++c) {
    Square s = make_square(sq.top.at(c), sq.left.at(c), sq.right.at(c), sq.bottom.at(c));
    rep.components.push_back(check_pullback(s));
    if (rep.components.back().verdict != PullbackVerdict::pullback && !rep.failing_object) {
      rep.failing_object = c;
      rep.verdict = rep.components.back().verdict;
    }
  }
  return rep;
}

Presheaf yoneda(const IndexCategory& cat, std::size_t c) {
  if (c >= cat.object_count()) throw StructureError("unknown object for Yoneda embedding");
  std::vector<FinSet> at;
  for (std::size_t d = 0; d < cat.object_count(); ++d) {
    std::vector<Label> names;
    for (std::size_t g : cat.hom(d, c)) names.push_back(cat.arrow(g).name);
    at.emplace_back(std::move(names));
  }
  std::vector<FinMap> r;
  for (std::size_t f = 0; f < cat.arrow_count(); ++f) {
    const Arrow& ar = cat.arrow(f);
    const auto& from = cat.hom(ar.dst, c);
    std::vector<std::size_t> t(from.size());
    for (std::size_t k = 0; k < from.size(); ++k) {
      t[k] = at[ar.src].index_of(cat.arrow(cat.compose(from[k], f)).name);
    }
    r.emplace_back(at[ar.dst], at[ar.src], std::move(t));
  }
  return Presheaf(cat, std::move(at), std::move(r));
}

PNat yoneda_element(const Presheaf& x, std::size_t c, std::size_t elem) {
  const IndexCategory& cat = x.category();
  Presheaf y = yoneda(cat, c);
  std::vector<std::vector<std::size_t>> tables(cat.object_count());
  for (std::size_t d = 0; d < cat.object_count(); ++d) {
    for (std::size_t g : cat.hom(d, c)) tables[d].push_back(x.restrict(g, elem));
  }
  return PNat::from_tables(y, x, tables);
}

PNat yoneda_arrow(const IndexCategory& cat, std::size_t f) {
  const Arrow& ar = cat.arrow(f);
  Presheaf yd = yoneda(cat, ar.dst);
  return yoneda_element(yd, ar.src, yd.at(ar.src).index_of(ar.name));
}

IndexCategory elements(const Presheaf& x) {
  const IndexCategory& cat = x.category();
  std::vector<Label> objs;
  std::vector<std::size_t> obj_base(cat.object_count());
  for (std::size_t c = 0; c < cat.object_count(); ++c) {
    obj_base[c] = objs.size();
    for (const auto& e : x.at(c).elements()) objs.push_back(Label::tuple({cat.objects()[c], e}));
  }
  std::vector<Arrow> arrows;
  std::vector<std::size_t> arrow_base(cat.arrow_count());
  for (std::size_t f = 0; f < cat.arrow_count(); ++f) {
    const Arrow& ar = cat.arrow(f);
    arrow_base[f] = arrows.size();
    for (std::size_t e = 0; e < x.at(ar.dst).size(); ++e) {
      arrows.push_back({Label::tuple({ar.name, x.at(ar.dst)[e]}), obj_base[ar.src] + x.restrict(f, e),
                        obj_base[ar.dst] + e});
    }
  }
  std::vector<std::size_t> ids(objs.size());
  for (std::size_t c = 0; c < cat.object_count(); ++c) {
    for (std::size_t e = 0; e < x.at(c).size(); ++e) ids[obj_base[c] + e] = arrow_base[cat.identity(c)] + e;
  }
  const std::size_t m = arrows.size();
  std::vector<std::size_t> comp(m * m, IndexCategory::npos);
  for (std::size_t g = 0; g < cat.arrow_count(); ++g) {
    for (std::size_t f = 0; f < cat.arrow_count(); ++f) {
      if (cat.arrow(f).dst != cat.arrow(g).src) continue;
      const std::size_t gf = cat.compose(g, f);
      for (std::size_t y = 0; y < x.at(cat.arrow(g).dst).size(); ++y) {
        const std::size_t xe = x.restrict(g, y);  // (g, y) starts at (src g, xe)
        comp[(arrow_base[g] + y) * m + arrow_base[f] + xe] = arrow_base[gf] + y;
      }
    }
  }
  return IndexCategory(FinSet(std::move(objs)), std::move(arrows), std::move(ids), std::move(comp));
}

namespace {

bool natural_on(const Presheaf& x, const Presheaf& y, const std::vector<std::vector<std::size_t>>& tables,
                std::size_t upto) {
  const IndexCategory& cat = x.category();
  for (std::size_t a = 0; a < cat.arrow_count(); ++a) {
    const Arrow& ar = cat.arrow(a);
    if (std::max(ar.src, ar.dst) != upto || cat.is_identity(a)) continue;
    for (std::size_t e = 0; e < x.at(ar.dst).size(); ++e) {
      if (tables[ar.src][x.restrict(a, e)] != y.restrict(a, tables[ar.dst][e])) return false;
    }
  }
  return true;
}

void enumerate_from(const Presheaf& x, const Presheaf& y, std::size_t c,
                    std::vector<std::vector<std::size_t>>& tables,
                    std::vector<std::vector<std::vector<std::size_t>>>& out) {
  const IndexCategory& cat = x.category();
  if (c == cat.object_count()) {
    out.push_back(tables);
    return;
  }
  const std::size_t len = x.at(c).size();
  const std::size_t radix = y.at(c).size();
  if (len > 0 && radix == 0) return;
  auto& cur = tables[c];
  cur.assign(len, 0);
  while (true) {
    if (natural_on(x, y, tables, c)) enumerate_from(x, y, c + 1, tables, out);
    std::size_t i = len;
    bool done = true;
    while (i > 0) {
      --i;
      if (++cur[i] < radix) {
        done = false;
        break;
      }
      cur[i] = 0;
    }
    if (done) break;
  }
}

}  // namespace

std::vector<std::vector<std::vector<std::size_t>>> enumerate_nat_tables(const Presheaf& x, const Presheaf& y) {
  if (!(x.category() == y.category())) throw BoundaryError("presheaves over different index categories");
  std::vector<std::vector<std::vector<std::size_t>>> out;
  std::vector<std::vector<std::size_t>> tables(x.category().object_count());
  enumerate_from(x, y, 0, tables, out);
  return out;
}

std::vector<PNat> enumerate_nats(const Presheaf& x, const Presheaf& y) {
  std::vector<PNat> out;
  for (const auto& t : enumerate_nat_tables(x, y)) out.push_back(PNat::from_tables(x, y, t));
  return out;
}

std::optional<PNat> find_iso(const Presheaf& x, const Presheaf& y) {
  if (x.sizes() != y.sizes()) return std::nullopt;
  for (const auto& t : enumerate_nat_tables(x, y)) {
    PNat n = PNat::from_tables(x, y, t);
    if (n.is_iso()) return n;
  }
  return std::nullopt;
}

PshCoproduct coproduct(const IndexCategory& cat, const std::vector<Presheaf>& parts) {
  std::vector<FinSet> at;
  std::vector<std::vector<std::size_t>> offset(parts.size(), std::vector<std::size_t>(cat.object_count()));
  for (std::size_t c = 0; c < cat.object_count(); ++c) {
    std::vector<Label> elems;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (!(parts[i].category() == cat)) throw BoundaryError("coproduct summand over a different category");
      offset[i][c] = elems.size();
      for (const auto& e : parts[i].at(c).elements()) elems.push_back(Label::tuple({Label(i), e}));
    }
    at.emplace_back(std::move(elems));
  }
  std::vector<FinMap> r;
  for (std::size_t a = 0; a < cat.arrow_count(); ++a) {
    const Arrow& ar = cat.arrow(a);
    std::vector<std::size_t> t;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (std::size_t e = 0; e < parts[i].at(ar.dst).size(); ++e) t.push_back(offset[i][ar.src] + parts[i].restrict(a, e));
    }
    r.emplace_back(at[ar.dst], at[ar.src], std::move(t));
  }
  Presheaf obj(cat, std::move(at), std::move(r));
  std::vector<PNat> inj;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<std::vector<std::size_t>> tables(cat.object_count());
    for (std::size_t c = 0; c < cat.object_count(); ++c) {
      for (std::size_t e = 0; e < parts[i].at(c).size(); ++e) tables[c].push_back(offset[i][c] + e);
    }
    inj.push_back(PNat::from_tables(parts[i], obj, tables));
  }
  return {obj, std::move(inj)};
}

namespace {

// Does u in P(d) induce y(d) ≅ P?
bool represents(const Presheaf& p, std::size_t d, std::size_t u) {
  const IndexCategory& cat = p.category();
  for (std::size_t e = 0; e < cat.object_count(); ++e) {
    const auto& hom = cat.hom(e, d);
    if (hom.size() != p.at(e).size()) return false;
    std::vector<char> hit(hom.size(), 0);
    for (std::size_t g : hom) {
      const std::size_t v = p.restrict(g, u);
      if (hit[v]) return false;
      hit[v] = 1;
    }
  }
  return true;
}

}  // namespace

RepresentabilityReport is_representable(const PNat& p) {
  RepresentabilityReport rep;
  const Presheaf& x = p.tgt();
  const IndexCategory& cat = x.category();
  for (std::size_t c = 0; c < cat.object_count(); ++c) {
    for (std::size_t e = 0; e < x.at(c).size(); ++e) {
      PshPullback pb = pullback(yoneda_element(x, c, e), p);
      bool found = false;
      for (std::size_t d = 0; d < cat.object_count() && !found; ++d) {
        for (std::size_t u = 0; u < pb.object.at(d).size() && !found; ++u) {
          if (!represents(pb.object, d, u)) continue;
          found = true;
          const std::size_t arrow_pos = pb.p1(d, u);
          rep.choices.push_back({c, e, d, cat.hom(d, c)[arrow_pos], pb.p2(d, u)});
        }
      }
      if (!found) {
        rep.representable = false;
        rep.failing_object = c;
        rep.failing_element = e;
        rep.failing_pullback_size = pb.object.total_size();
        rep.detail = "pullback along " + x.at(c)[e].str() + " at object " + cat.objects()[c].str() +
                     " (sizes";
        for (auto s : pb.object.sizes()) rep.detail += " " + std::to_string(s);
        rep.detail += ") is not representable";
        return rep;
      }
    }
  }
  return rep;
}

ContextExtension context_extension(const PNat& p, std::size_t gamma, std::size_t type) {
  const Presheaf& ty = p.tgt();
  PshPullback pb = pullback(yoneda_element(ty, gamma, type), p);
  const IndexCategory& cat = ty.category();
  for (std::size_t d = 0; d < cat.object_count(); ++d) {
    for (std::size_t u = 0; u < pb.object.at(d).size(); ++u) {
      if (!represents(pb.object, d, u)) continue;
      ContextExtension ext{d, cat.hom(d, gamma)[pb.p1(d, u)], pb.p2(d, u)};
      if (p(d, ext.term) != ty.restrict(ext.projection, type)) {
        throw StructureError("context extension square does not commute");
      }
      return ext;
    }
  }
  throw StructureError("the model is not representable at type " + ty.at(gamma)[type].str());
}

PNat clan_model(const IndexCategory& cat, const std::vector<Label>& display) {
  std::vector<std::size_t> arrows;
  for (const auto& name : display) arrows.push_back(cat.find_arrow(name));
  std::vector<Presheaf> tops, bottoms;
  for (std::size_t d : arrows) {
    tops.push_back(yoneda(cat, cat.arrow(d).src));
    bottoms.push_back(yoneda(cat, cat.arrow(d).dst));
  }
  PshCoproduct total = coproduct(cat, tops);
  PshCoproduct base = coproduct(cat, bottoms);
  // relabel (i, g) as (d, g)
  auto relabel = [&](const PshCoproduct& cp) {
    std::vector<FinSet> at;
    for (std::size_t c = 0; c < cat.object_count(); ++c) {
      std::vector<Label> elems;
      for (const auto& l : cp.object.at(c).elements()) {
        elems.push_back(Label::tuple({cat.arrow(arrows[static_cast<std::size_t>(l[0].as_int())]).name, l[1]}));
      }
      at.emplace_back(std::move(elems));
    }
    std::vector<FinMap> r;
    for (std::size_t a = 0; a < cat.arrow_count(); ++a) {
      const Arrow& ar = cat.arrow(a);
      r.emplace_back(at[ar.dst], at[ar.src], cp.object.restriction(a).table());
    }
    return Presheaf(cat, std::move(at), std::move(r));
  };
  Presheaf tm = relabel(total);
  Presheaf ty = relabel(base);
  std::vector<std::vector<std::size_t>> tables(cat.object_count());
  for (std::size_t c = 0; c < cat.object_count(); ++c) {
    for (const auto& l : tm.at(c).elements()) {
      const std::size_t d = cat.find_arrow(l[0]);
      const std::size_t g = cat.find_arrow(l[1]);
      tables[c].push_back(ty.at(c).index_of(Label::tuple({l[0], cat.arrow(cat.compose(d, g)).name})));
    }
  }
  return PNat::from_tables(tm, ty, tables);
}

Presheaf presheaf_from_json(const nlohmann::json& j) {
  IndexCategory cat = index_category_from_json(j.at("category"));
  std::vector<FinSet> at;
  const auto& js = j.at("at");
  for (std::size_t c = 0; c < cat.object_count(); ++c) {
    const auto& v = js.is_array() ? js.at(c) : js.at(cat.objects()[c].str());
    if (v.is_array()) {
      at.push_back(finset_from_json(nlohmann::json{{"elements", v}}));
    } else {
      at.push_back(finset_from_json(v));
    }
  }
  std::vector<FinMap> r;
  for (std::size_t a = 0; a < cat.arrow_count(); ++a) {
    const Arrow& ar = cat.arrow(a);
    if (cat.is_identity(a)) {
      r.push_back(FinMap::identity(at[ar.src]));
      continue;
    }
    const std::string key = ar.name.str();
    if (!j.contains("restriction") || !j["restriction"].contains(key)) {
      throw StructureError("missing restriction along " + key);
    }
    r.push_back(finmap_from_json({{"dom", to_json(at[ar.dst])}, {"cod", to_json(at[ar.src])},
                                  {"table", j["restriction"][key]}}));
  }
  return Presheaf(cat, std::move(at), std::move(r));
}

nlohmann::json to_json(const Presheaf& x) {
  const IndexCategory& cat = x.category();
  nlohmann::json at = nlohmann::json::array();
  for (std::size_t c = 0; c < cat.object_count(); ++c) at.push_back(to_json(x.at(c))["elements"]);
  nlohmann::json r = nlohmann::json::object();
  for (std::size_t a = 0; a < cat.arrow_count(); ++a) {
    if (cat.is_identity(a)) continue;
    r[cat.arrow(a).name.str()] = to_json(x.restriction(a))["table"];
  }
  return {{"category", to_json(cat)}, {"at", at}, {"restriction", r}};
}

}  // namespace catsem
