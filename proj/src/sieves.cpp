#include "catsem/sieves.hpp"

#include <algorithm>

#include "catsem/errors.hpp"

namespace catsem {

bool is_sieve(const IndexCategory& cat, std::size_t c, const Sieve& s) {
  for (std::size_t g : s) {
    if (cat.arrow(g).dst != c) return false;
    for (std::size_t h : cat.into(cat.arrow(g).src)) {
      if (!std::binary_search(s.begin(), s.end(), cat.compose(g, h))) return false;
    }
  }
  return std::is_sorted(s.begin(), s.end());
}

std::vector<Sieve> sieves_on(const IndexCategory& cat, std::size_t c) {
  const auto& arrows = cat.into(c);
  const std::size_t k = arrows.size();
  if (k >= 20) throw StructureError("too many arrows into one object to enumerate sieves");
  std::vector<Sieve> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    Sieve s;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::size_t{1} << i)) s.push_back(arrows[i]);
    }
    if (is_sieve(cat, c, s)) out.push_back(std::move(s));
  }
  std::stable_sort(out.begin(), out.end(), [](const Sieve& a, const Sieve& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

Sieve pull_sieve(const IndexCategory& cat, std::size_t f, const Sieve& s) {
  Sieve out;
  for (std::size_t g : cat.into(cat.arrow(f).src)) {
    if (std::binary_search(s.begin(), s.end(), cat.compose(f, g))) out.push_back(g);
  }
  return out;
}

Label sieve_label(const IndexCategory& cat, const Sieve& s) {
  Label::Tuple names;
  for (std::size_t g : s) names.push_back(cat.arrow(g).name);
  return Label(std::move(names));
}

namespace {

std::vector<std::vector<Sieve>> all_sieves(const IndexCategory& cat) {
  std::vector<std::vector<Sieve>> out;
  for (std::size_t c = 0; c < cat.object_count(); ++c) out.push_back(sieves_on(cat, c));
  return out;
}

std::size_t sieve_index(const std::vector<Sieve>& list, const Sieve& s) {
  auto it = std::find(list.begin(), list.end(), s);
  if (it == list.end()) throw StructureError("not a sieve");
  return static_cast<std::size_t>(it - list.begin());
}

}  // namespace

Presheaf omega(const IndexCategory& cat) {
  auto sv = all_sieves(cat);
  std::vector<FinSet> at;
  for (std::size_t c = 0; c < cat.object_count(); ++c) {
    std::vector<Label> labels;
    for (const auto& s : sv[c]) labels.push_back(sieve_label(cat, s));
    at.emplace_back(std::move(labels));
  }
  std::vector<FinMap> r;
  for (std::size_t f = 0; f < cat.arrow_count(); ++f) {
    const Arrow& ar = cat.arrow(f);
    std::vector<std::size_t> t;
    for (const auto& s : sv[ar.dst]) t.push_back(sieve_index(sv[ar.src], pull_sieve(cat, f, s)));
    r.emplace_back(at[ar.dst], at[ar.src], std::move(t));
  }
  return Presheaf(cat, std::move(at), std::move(r));
}

PNat omega_top(const IndexCategory& cat) {
  Presheaf om = omega(cat);
  std::vector<std::vector<std::size_t>> tables(cat.object_count());
  for (std::size_t c = 0; c < cat.object_count(); ++c) tables[c] = {om.at(c).size() - 1};  // maximal sieve sorts last
  return PNat::from_tables(Presheaf::terminal(cat), om, tables);
}

bool is_subobject(const Presheaf& x, const Subobject& s) {
  const IndexCategory& cat = x.category();
  if (s.member.size() != cat.object_count()) return false;
  for (std::size_t c = 0; c < cat.object_count(); ++c) {
    if (s.member[c].size() != x.at(c).size()) return false;
  }
  for (std::size_t f = 0; f < cat.arrow_count(); ++f) {
    const Arrow& ar = cat.arrow(f);
    for (std::size_t e = 0; e < x.at(ar.dst).size(); ++e) {
      if (s.member[ar.dst][e] && !s.member[ar.src][x.restrict(f, e)]) return false;
    }
  }
  return true;
}

std::vector<Subobject> enumerate_subobjects(const Presheaf& x) {
  const IndexCategory& cat = x.category();
  std::vector<std::size_t> offs;
  std::size_t total = 0;
  for (std::size_t c = 0; c < cat.object_count(); ++c) {
    offs.push_back(total);
    total += x.at(c).size();
  }
  if (total >= 24) throw StructureError("presheaf too large to enumerate subobjects");
  std::vector<Subobject> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << total); ++mask) {
    Subobject s;
    for (std::size_t c = 0; c < cat.object_count(); ++c) {
      s.member.emplace_back(x.at(c).size(), 0);
      for (std::size_t e = 0; e < x.at(c).size(); ++e) s.member[c][e] = (mask >> (offs[c] + e)) & 1U;
    }
    if (is_subobject(x, s)) out.push_back(std::move(s));
  }
  return out;
}

PNat subobject_inclusion(const Presheaf& x, const Subobject& s) {
  if (!is_subobject(x, s)) throw StructureError("membership mask is not closed under restriction");
  const IndexCategory& cat = x.category();
  std::vector<FinSet> at;
  std::vector<std::vector<std::size_t>> tables(cat.object_count());
  for (std::size_t c = 0; c < cat.object_count(); ++c) {
    std::vector<Label> elems;
    for (std::size_t e = 0; e < x.at(c).size(); ++e) {
      if (s.member[c][e]) {
        elems.push_back(x.at(c)[e]);
        tables[c].push_back(e);
      }
    }
    at.emplace_back(std::move(elems));
  }
  std::vector<FinMap> r;
  for (std::size_t f = 0; f < cat.arrow_count(); ++f) {
    const Arrow& ar = cat.arrow(f);
    std::vector<std::size_t> t;
    for (const auto& l : at[ar.dst].elements()) {
      t.push_back(at[ar.src].index_of(x.at(ar.src)[x.restrict(f, x.at(ar.dst).index_of(l))]));
    }
    r.emplace_back(at[ar.dst], at[ar.src], std::move(t));
  }
  Presheaf sub(cat, std::move(at), std::move(r));
  return PNat::from_tables(sub, x, tables);
}

PNat classify(const Presheaf& x, const Subobject& s) {
  if (!is_subobject(x, s)) throw StructureError("membership mask is not closed under restriction");
  const IndexCategory& cat = x.category();
  Presheaf om = omega(cat);
  auto sv = all_sieves(cat);
  std::vector<std::vector<std::size_t>> tables(cat.object_count());
  for (std::size_t c = 0; c < cat.object_count(); ++c) {
    for (std::size_t e = 0; e < x.at(c).size(); ++e) {
      Sieve chi;
      for (std::size_t g : cat.into(c)) {
        if (s.member[cat.arrow(g).src][x.restrict(g, e)]) chi.push_back(g);
      }
      tables[c].push_back(sieve_index(sv[c], chi));
    }
  }
  return PNat::from_tables(x, om, tables);
}

PNat classify_mono(const PNat& m) {
  if (!m.is_mono()) throw StructureError("classify_mono requires a monomorphism");
  const Presheaf& x = m.tgt();
  Subobject s;
  for (std::size_t c = 0; c < x.category().object_count(); ++c) {
    s.member.emplace_back(x.at(c).size(), 0);
    for (std::size_t e = 0; e < m.src().at(c).size(); ++e) s.member[c][m(c, e)] = 1;
  }
  return classify(x, s);
}

Subobject subobject_of(const PNat& chi) {
  const IndexCategory& cat = chi.src().category();
  PNat top = omega_top(cat);
  PshPullback pb = pullback(chi, top);
  Subobject s;
  for (std::size_t c = 0; c < cat.object_count(); ++c) {
    s.member.emplace_back(chi.src().at(c).size(), 0);
    for (std::size_t k = 0; k < pb.object.at(c).size(); ++k) s.member[c][pb.p1(c, k)] = 1;
  }
  return s;
}

Presheaf omega_squared(const IndexCategory& cat) {
  PNat bang = PNat::to_terminal(omega(cat));
  return pullback(bang, bang).object;
}

PNat omega_diagonal(const IndexCategory& cat) {
  Presheaf om = omega(cat);
  Presheaf sq = omega_squared(cat);
  std::vector<std::vector<std::size_t>> tables(cat.object_count());
  for (std::size_t c = 0; c < cat.object_count(); ++c) {
    for (const auto& l : om.at(c).elements()) tables[c].push_back(sq.at(c).index_of(Label::tuple({l, l})));
  }
  return PNat::from_tables(om, sq, tables);
}

PNat omega_biconditional(const IndexCategory& cat) {
  Presheaf om = omega(cat);
  Presheaf sq = omega_squared(cat);
  auto sv = all_sieves(cat);
  std::vector<std::vector<std::size_t>> tables(cat.object_count());
  for (std::size_t c = 0; c < cat.object_count(); ++c) {
    for (std::size_t i = 0; i < sv[c].size(); ++i) {
      for (std::size_t j = 0; j < sv[c].size(); ++j) {
        Sieve out;
        for (std::size_t g : cat.into(c)) {
          if (pull_sieve(cat, g, sv[c][i]) == pull_sieve(cat, g, sv[c][j])) out.push_back(g);
        }
        tables[c].push_back(sieve_index(sv[c], out));
      }
    }
  }
  return PNat::from_tables(sq, om, tables);
}

}  // namespace catsem
