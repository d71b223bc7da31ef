#include "catsem/nerve.hpp"

#include <algorithm>

#include "catsem/errors.hpp"
#include "catsem/kernels.hpp"
#include "catsem/sieves.hpp"

namespace catsem {

bool is_functor(const IndexCategory& a, const IndexCategory& b, const IndexFunctor& f) {
  if (f.objects.size() != a.object_count() || f.arrows.size() != a.arrow_count()) return false;
  for (std::size_t x = 0; x < a.arrow_count(); ++x) {
    const Arrow& ar = a.arrow(x);
    if (f.arrows[x] >= b.arrow_count()) return false;
    if (b.arrow(f.arrows[x]).src != f.objects[ar.src] || b.arrow(f.arrows[x]).dst != f.objects[ar.dst]) return false;
    if (a.is_identity(x) && f.arrows[x] != b.identity(f.objects[ar.src])) return false;
  }
  for (std::size_t g = 0; g < a.arrow_count(); ++g) {
    for (std::size_t h = 0; h < a.arrow_count(); ++h) {
      if (a.arrow(h).dst != a.arrow(g).src) continue;
      if (f.arrows[a.compose(g, h)] != b.compose(f.arrows[g], f.arrows[h])) return false;
    }
  }
  return true;
}

namespace {

struct FunctorSearch {
  const IndexCategory& a;
  const IndexCategory& b;
  std::vector<std::size_t> order;  // non-identity arrows of a
  IndexFunctor cur;
  std::vector<char> assigned;
  std::vector<IndexFunctor> out;

  bool consistent(std::size_t x) const {
    for (std::size_t g = 0; g < a.arrow_count(); ++g) {
      if (!assigned[g]) continue;
      for (std::size_t h = 0; h < a.arrow_count(); ++h) {
        if (!assigned[h] || a.arrow(h).dst != a.arrow(g).src) continue;
        const std::size_t gh = a.compose(g, h);
        if (g != x && h != x && gh != x) continue;
        if (!assigned[gh]) continue;
        if (cur.arrows[gh] != b.compose(cur.arrows[g], cur.arrows[h])) return false;
      }
    }
    return true;
  }

  void arrows_from(std::size_t k) {
    if (k == order.size()) {
      out.push_back(cur);
      return;
    }
    const std::size_t x = order[k];
    const Arrow& ar = a.arrow(x);
    for (std::size_t y : b.hom(cur.objects[ar.src], cur.objects[ar.dst])) {
      cur.arrows[x] = y;
      assigned[x] = 1;
      if (consistent(x)) arrows_from(k + 1);
      assigned[x] = 0;
    }
  }

  void run() {
    for (std::size_t x = 0; x < a.arrow_count(); ++x) {
      if (!a.is_identity(x)) order.push_back(x);
    }
    cur.arrows.assign(a.arrow_count(), 0);
    std::vector<std::size_t> radices(a.object_count(), b.object_count());
    for (const auto& objs : kernels::odometer(radices)) {
      cur.objects = objs;
      assigned.assign(a.arrow_count(), 0);
      for (std::size_t c = 0; c < a.object_count(); ++c) {
        cur.arrows[a.identity(c)] = b.identity(objs[c]);
        assigned[a.identity(c)] = 1;
      }
      arrows_from(0);
    }
    if (a.object_count() == 0) out.push_back(IndexFunctor{});
  }
};

}  // namespace

std::vector<IndexFunctor> enumerate_functors(const IndexCategory& a, const IndexCategory& b) {
  FunctorSearch s{a, b, {}, {}, {}, {}};
  s.run();
  return std::move(s.out);
}

IndexFunctor compose(const IndexFunctor& g, const IndexFunctor& f) {
  IndexFunctor out;
  for (std::size_t o : f.objects) out.objects.push_back(g.objects.at(o));
  for (std::size_t x : f.arrows) out.arrows.push_back(g.arrows.at(x));
  return out;
}

Label functor_label(const IndexCategory& a, const IndexCategory& b, const IndexFunctor& f) {
  Label::Tuple objs, arrows;
  for (std::size_t o : f.objects) objs.push_back(b.objects()[o]);
  for (std::size_t x = 0; x < a.arrow_count(); ++x) {
    if (!a.is_identity(x)) arrows.push_back(b.arrow(f.arrows[x]).name);
  }
  return Label::tuple({Label(std::move(objs)), Label(std::move(arrows))});
}

IndexCategory slice(const IndexCategory& cat, std::size_t c) {
  const auto& objs = cat.into(c);
  std::vector<Label> names;
  for (std::size_t g : objs) names.push_back(cat.arrow(g).name);
  FinSet objects(std::move(names));
  std::vector<Arrow> arrows;
  std::vector<std::size_t> underlying;
  std::vector<std::size_t> ids(objs.size());
  for (std::size_t i = 0; i < objs.size(); ++i) {      // source g'
    for (std::size_t j = 0; j < objs.size(); ++j) {    // target g
      for (std::size_t h : cat.hom(cat.arrow(objs[i]).src, cat.arrow(objs[j]).src)) {
        if (cat.compose(objs[j], h) != objs[i]) continue;
        if (i == j && cat.is_identity(h)) ids[i] = arrows.size();
        arrows.push_back({Label::tuple({cat.arrow(h).name, objects[i], objects[j]}), i, j});
        underlying.push_back(h);
      }
    }
  }
  const std::size_t m = arrows.size();
  std::vector<std::size_t> comp(m * m, IndexCategory::npos);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      if (arrows[y].dst != arrows[x].src) continue;
      const std::size_t h = cat.compose(underlying[x], underlying[y]);
      for (std::size_t z = 0; z < m; ++z) {
        if (underlying[z] == h && arrows[z].src == arrows[y].src && arrows[z].dst == arrows[x].dst) comp[x * m + y] = z;
      }
    }
  }
  return IndexCategory(std::move(objects), std::move(arrows), std::move(ids), std::move(comp));
}

IndexFunctor slice_postcompose(const IndexCategory& cat, std::size_t f) {
  const Arrow& ar = cat.arrow(f);
  IndexCategory from = slice(cat, ar.src);
  IndexCategory to = slice(cat, ar.dst);
  IndexFunctor out;
  for (const auto& g : from.objects().elements()) {
    out.objects.push_back(to.objects().index_of(cat.arrow(cat.compose(f, cat.find_arrow(g))).name));
  }
  for (std::size_t x = 0; x < from.arrow_count(); ++x) {
    const Label& l = from.arrow(x).name;  // (h, g', g)
    const Label& s = to.objects()[out.objects[from.arrow(x).src]];
    const Label& d = to.objects()[out.objects[from.arrow(x).dst]];
    out.arrows.push_back(to.find_arrow(Label::tuple({l[0], s, d})));
  }
  return out;
}

Presheaf nerve(const IndexCategory& cat, const IndexCategory& target) {
  std::vector<IndexCategory> slices;
  std::vector<std::vector<IndexFunctor>> functors;
  std::vector<FinSet> at;
  for (std::size_t c = 0; c < cat.object_count(); ++c) {
    slices.push_back(slice(cat, c));
    functors.push_back(enumerate_functors(slices.back(), target));
    std::vector<Label> labels;
    for (const auto& f : functors.back()) labels.push_back(functor_label(slices.back(), target, f));
    at.emplace_back(std::move(labels));
  }
  std::vector<FinMap> r;
  for (std::size_t f = 0; f < cat.arrow_count(); ++f) {
    const Arrow& ar = cat.arrow(f);
    IndexFunctor post = slice_postcompose(cat, f);
    std::vector<std::size_t> t;
    for (const auto& fun : functors[ar.dst]) {
      t.push_back(at[ar.src].index_of(functor_label(slices[ar.src], target, compose(fun, post))));
    }
    r.emplace_back(at[ar.dst], at[ar.src], std::move(t));
  }
  return Presheaf(cat, std::move(at), std::move(r));
}

PNat nerve_on_functor(const IndexCategory& cat, const IndexCategory& a, const IndexCategory& b,
                      const IndexFunctor& g) {
  if (!is_functor(a, b, g)) throw StructureError("nerve_on_functor needs a functor");
  Presheaf na = nerve(cat, a);
  Presheaf nb = nerve(cat, b);
  std::vector<std::vector<std::size_t>> tables(cat.object_count());
  for (std::size_t c = 0; c < cat.object_count(); ++c) {
    IndexCategory sl = slice(cat, c);
    for (const auto& fun : enumerate_functors(sl, a)) {
      tables[c].push_back(nb.at(c).index_of(functor_label(sl, b, compose(g, fun))));
    }
  }
  return PNat::from_tables(na, nb, tables);
}

namespace {

void check_kappa(std::size_t kappa) {
  if (kappa != 2 && kappa != 3) throw StructureError("universe size κ must be 2 or 3, got " + std::to_string(kappa));
}

// Functions m -> n as tuples, lexicographic.
std::vector<std::vector<std::size_t>> functions(std::size_t m, std::size_t n) {
  std::vector<std::size_t> radices(m, n);
  return kernels::odometer(radices);
}

Label function_label(const std::vector<std::size_t>& f) {
  Label::Tuple t;
  for (std::size_t v : f) t.push_back(Label(v));
  return Label(std::move(t));
}

// Builds an opposite category of finite sets from a list of objects
// (cardinality, optional point) and admissible functions.
IndexCategory skeletal_op(const std::vector<std::pair<std::size_t, std::optional<std::size_t>>>& objs) {
  std::vector<Label> labels;
  for (const auto& [n, pt] : objs) {
    labels.push_back(pt ? Label::tuple({Label(n), Label(*pt)}) : Label(n));
  }
  FinSet objects(labels);
  std::vector<Arrow> arrows;
  std::vector<std::vector<std::size_t>> fn;  // underlying function dst-card -> src-card
  std::vector<std::size_t> ids(objs.size());
  for (std::size_t s = 0; s < objs.size(); ++s) {
    for (std::size_t d = 0; d < objs.size(); ++d) {
      // an arrow s -> d in the opposite category is a function d -> s
      for (const auto& f : functions(objs[d].first, objs[s].first)) {
        if (objs[s].second && f[*objs[d].second] != *objs[s].second) continue;
        bool identity = s == d;
        for (std::size_t i = 0; identity && i < f.size(); ++i) identity = f[i] == i;
        if (identity) ids[s] = arrows.size();
        arrows.push_back({Label::tuple({labels[s], labels[d], function_label(f)}), s, d});
        fn.push_back(f);
      }
    }
  }
  const std::size_t m = arrows.size();
  std::vector<std::size_t> comp(m * m, IndexCategory::npos);
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t f = 0; f < m; ++f) {
      if (arrows[f].dst != arrows[g].src) continue;
      // (g ∘ f)^op has underlying function f_set ∘ g_set
      std::vector<std::size_t> h;
      for (std::size_t v : fn[g]) h.push_back(fn[f][v]);
      for (std::size_t k = 0; k < m; ++k) {
        if (arrows[k].src == arrows[f].src && arrows[k].dst == arrows[g].dst && fn[k] == h) comp[g * m + f] = k;
      }
    }
  }
  return IndexCategory(std::move(objects), std::move(arrows), std::move(ids), std::move(comp));
}

}  // namespace

IndexCategory set_op(std::size_t kappa) {
  std::vector<std::pair<std::size_t, std::optional<std::size_t>>> objs;
  for (std::size_t n = 0; n < kappa; ++n) objs.emplace_back(n, std::nullopt);
  return skeletal_op(objs);
}

IndexCategory pointed_set_op(std::size_t kappa) {
  std::vector<std::pair<std::size_t, std::optional<std::size_t>>> objs;
  for (std::size_t n = 0; n < kappa; ++n) {
    for (std::size_t i = 0; i < n; ++i) objs.emplace_back(n, i);
  }
  return skeletal_op(objs);
}

IndexFunctor forget_point(std::size_t kappa) {
  IndexCategory a = pointed_set_op(kappa);
  IndexCategory b = set_op(kappa);
  IndexFunctor out;
  for (const auto& l : a.objects().elements()) out.objects.push_back(b.objects().index_of(l[0]));
  for (std::size_t x = 0; x < a.arrow_count(); ++x) {
    const Label& l = a.arrow(x).name;
    out.arrows.push_back(b.find_arrow(Label::tuple({l[0][0], l[1][0], l[2]})));
  }
  return out;
}

PNat hs_universe(const IndexCategory& cat, std::size_t kappa) {
  check_kappa(kappa);
  return nerve_on_functor(cat, pointed_set_op(kappa), set_op(kappa), forget_point(kappa));
}

PNat nerve_to_omega(const IndexCategory& cat) {
  IndexCategory two = set_op(2);
  const std::size_t one = two.objects().index_of(Label(1));
  Presheaf v = nerve(cat, two);
  Presheaf om = omega(cat);
  std::vector<std::vector<std::size_t>> tables(cat.object_count());
  for (std::size_t c = 0; c < cat.object_count(); ++c) {
    IndexCategory sl = slice(cat, c);
    for (const auto& f : enumerate_functors(sl, two)) {
      Sieve s;
      for (std::size_t i = 0; i < sl.object_count(); ++i) {
        if (f.objects[i] == one) s.push_back(cat.into(c)[i]);
      }
      tables[c].push_back(om.at(c).index_of(sieve_label(cat, s)));
    }
  }
  return PNat::from_tables(v, om, tables);
}

}  // namespace catsem
