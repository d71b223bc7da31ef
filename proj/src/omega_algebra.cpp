#include "catsem/omega_algebra.hpp"

#include "catsem/errors.hpp"
#include "catsem/nerve.hpp"
#include "catsem/sieves.hpp"

namespace catsem {

namespace {

// The unique map into a presheaf with singleton components.
PNat into_singleton(const Presheaf& x, const Presheaf& one) {
  std::vector<std::vector<std::size_t>> tables(x.category().object_count());
  for (std::size_t c = 0; c < tables.size(); ++c) {
    if (one.at(c).size() != 1) throw StructureError("target is not terminal");
    tables[c].assign(x.at(c).size(), 0);
  }
  return PNat::from_tables(x, one, tables);
}

// Algebra structure on t : U̇ -> U with U̇ terminal, given an iso
// to_omega : U -> Ω with to_omega ∘ t = ⊤.
MLAlgebra subterminal_algebra(std::string name, const PNat& t, const PNat& to_omega) {
  const PNat from_omega = to_omega.inverse();

  MLAlgebra alg;
  alg.name = std::move(name);
  alg.t = t;
  alg.region = t;
  alg.star = PNat::identity(t.src());
  alg.one = t;

  alg.tt = psh_compose_signatures(t, t);
  if (!alg.tt.composite.is_mono()) throw StructureError("t·t is not monic");
  alg.Sigma = compose(from_omega, classify_mono(alg.tt.composite));
  alg.sigma = into_singleton(alg.tt.composite.src(), t.src());

  alg.pt_t = psh_extension_on_map(t, t);
  if (!alg.pt_t.is_mono()) throw StructureError("P_t(t) is not monic");
  alg.Pi = compose(from_omega, classify_mono(alg.pt_t));
  alg.lambda = into_singleton(alg.pt_t.src(), t.src());

  EqStructure eq;
  eq.pairs = pullback(t, t);
  eq.diagonal = into_singleton(t.src(), eq.pairs.object);
  eq.refl = PNat::identity(t.src());
  eq.eq = compose(t, into_singleton(eq.pairs.object, t.src()));
  alg.eq = std::move(eq);
  return alg;
}

}  // namespace

MLAlgebra omega_algebra(const IndexCategory& cat) {
  const PNat top = omega_top(cat);
  return subterminal_algebra("omega", top, PNat::identity(top.tgt()));
}

bool omega_diagonal_is_biconditional(const IndexCategory& cat) {
  return classify_mono(omega_diagonal(cat)) == omega_biconditional(cat);
}

std::optional<std::pair<PNat, PNat>> find_unit(const PNat& t) {
  const IndexCategory& cat = t.src().category();
  const Presheaf one = Presheaf::terminal(cat);
  for (const PNat& u : enumerate_nats(one, t.tgt())) {
    std::vector<std::vector<std::size_t>> star(cat.object_count());
    bool ok = true;
    for (std::size_t c = 0; c < cat.object_count() && ok; ++c) {
      const auto fiber = t.at(c).preimage(u(c, 0));
      if (fiber.size() != 1) ok = false;
      else star[c].push_back(fiber[0]);
    }
    if (ok) return std::make_pair(PNat::from_tables(one, t.src(), star), u);
  }
  return std::nullopt;
}

HsReport verify_hs_universe(const IndexCategory& cat, std::size_t kappa) {
  HsReport rep;
  rep.kappa = kappa;
  const PNat v = hs_universe(cat, kappa);
  rep.universe_sizes = v.tgt().sizes();
  rep.generic_sizes = v.src().sizes();

  if (kappa == 2) {
    const PNat iso = nerve_to_omega(cat);
    const PNat top = omega_top(cat);
    bool ok = iso.is_iso() && v.src().total_size() == cat.object_count();
    if (ok) ok = compose(iso, v) == compose(top, PNat::to_terminal(v.src()));
    rep.iso_to_omega = ok;
    if (!ok) {
      SquareCheck s;
      s.name = "iso-to-omega";
      s.status = CheckStatus::fail;
      s.detail = "V_2 is not isomorphic to Ω over ⊤";
      rep.ml.squares.push_back(s);
      return rep;
    }
    MLAlgebra alg = subterminal_algebra("hs-universe-2", v, iso);
    rep.ml = verify_ml_algebra(alg);
    rep.ml.squares.push_back(eq_structure_check(alg, *alg.eq));
    return rep;
  }

  auto unit = find_unit(v);
  if (unit) {
    rep.ml.squares.push_back(check_square("unit", PshSquare{unit->first, PNat::identity(unit->first.src()), v, unit->second}));
  } else {
    SquareCheck s;
    s.name = "unit";
    s.status = CheckStatus::fail;
    s.detail = "no global element of V classifies a singleton family";
    rep.ml.squares.push_back(s);
  }
  for (const char* name : {"sigma", "pi"}) {
    SquareCheck s;
    s.name = name;
    s.status = CheckStatus::not_applicable;
    s.detail = "sets of cardinality < " + std::to_string(kappa) + " are not closed under this former";
    rep.ml.squares.push_back(s);
  }
  return rep;
}

}  // namespace catsem
