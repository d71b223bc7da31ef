#include "catsem/mlalg.hpp"

#include "catsem/errors.hpp"
#include "catsem/polynomial.hpp"

namespace catsem {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::not_applicable:
      return "not-applicable";
  }
  return "unknown";
}

bool MLReport::passed() const {
  for (const auto& s : squares) {
    if (s.status == CheckStatus::fail) return false;
  }
  return true;
}

SquareCheck check_square(const std::string& name, const PshSquare& sq) {
  SquareCheck out;
  out.name = name;
  PshSquareReport rep;
  try {
    rep = check_pullback(sq);
  } catch (const BoundaryError& e) {
    out.status = CheckStatus::fail;
    out.detail = e.what();
    return out;
  }
  for (const auto& c : rep.components) {
    out.fibers_checked += c.fibers_checked;
    out.elements_checked += c.elements_checked;
  }
  if (rep.verdict != PullbackVerdict::pullback) {
    const SquareReport& bad = rep.components[*rep.failing_object];
    out.status = CheckStatus::fail;
    out.failing_object = rep.failing_object;
    out.failing_label = bad.failing_label;
    out.left_fiber_size = bad.left_fiber_size;
    out.right_fiber_size = bad.right_fiber_size;
    out.detail = to_string(bad.verdict) + (bad.detail.empty() ? "" : ": " + bad.detail);
  }
  return out;
}

MLReport verify_ml_algebra(const MLAlgebra& alg) {
  MLReport rep;
  const Presheaf one = alg.star.src();
  rep.squares.push_back(check_square("unit", PshSquare{alg.star, PNat::identity(one), alg.t, alg.one}));
  rep.squares.push_back(check_square("sigma", PshSquare{alg.sigma, alg.tt.composite, alg.t, alg.Sigma}));
  rep.squares.push_back(check_square("pi", PshSquare{alg.lambda, alg.pt_t, alg.t, alg.Pi}));
  return rep;
}

SquareCheck eq_structure_check(const MLAlgebra& alg, const EqStructure& eq) {
  return check_square("eq", PshSquare{eq.refl, eq.diagonal, alg.t, eq.eq});
}

EqModel eq_model(const MLAlgebra& alg) {
  if (!alg.is_set_level()) throw StructureError("Set-level equality data requested from a presheaf algebra");
  if (!alg.eq) throw StructureError("algebra '" + alg.name + "' has no Eq structure");
  const EqStructure& e = *alg.eq;
  Family region(alg.region.at(0));
  Pullback pairs = pullback(region.proj(), region.proj());
  if (!(pairs.object == e.pairs.object.at(0))) throw StructureError("Eq domain is not the canonical U̇ ×_U U̇");
  return EqModel{region, Family(alg.t.at(0)), pairs, e.eq.at(0), e.refl.at(0)};
}

Comprehension comprehend(const Family& t, const FinMap& alpha) {
  Pullback pb = pullback(alpha, t.proj());
  Family a(pb.p1);
  return Comprehension{a, make_square(pb.p2, pb.p1, t.proj(), alpha)};
}

namespace {

void require_set_level(const MLAlgebra& alg) {
  if (!alg.is_set_level()) throw StructureError("term operations are implemented for Set-level algebras");
}

// The base point (|A|, (β(a) ...)) of P_t(U_R).
Label pi_base_label(const MLAlgebra& alg, const FinMap& beta) {
  const FinSet& u = alg.region.at(0).cod();
  if (!(beta.cod() == u)) throw TypeError("family β must land in the algebra's verified region of U");
  Label::Tuple sec;
  for (std::size_t a = 0; a < beta.dom().size(); ++a) sec.push_back(u[beta(a)]);
  return Label::tuple({Label(beta.dom().size()), Label(std::move(sec))});
}

}  // namespace

std::size_t pi_intro(const MLAlgebra& alg, const FinMap& beta, const FinMap& b) {
  require_set_level(alg);
  const FinMap& tr = alg.region.at(0);
  if (!(b.dom() == beta.dom()) || !(b.cod() == tr.dom())) throw TypeError("term has the wrong boundary");
  for (std::size_t a = 0; a < b.dom().size(); ++a) {
    if (tr(b(a)) != beta(a)) {
      throw TypeError("term value at " + b.dom()[a].str() + " does not lie over the family");
    }
  }
  pi_base_label(alg, beta);
  Label::Tuple sec;
  for (std::size_t a = 0; a < b.dom().size(); ++a) sec.push_back(tr.dom()[b(a)]);
  const FinSet& dom = alg.lambda.at(0).dom();
  return alg.lambda.at(0)(dom.index_of(Label::tuple({Label(b.dom().size()), Label(std::move(sec))})));
}

FinMap pi_apply(const MLAlgebra& alg, const FinMap& beta, std::size_t term) {
  require_set_level(alg);
  const FinMap& lam = alg.lambda.at(0);
  const FinMap& pt = alg.pt_t.at(0);
  const FinMap& pi = alg.Pi.at(0);
  const std::size_t base = pt.cod().index_of(pi_base_label(alg, beta));
  if (alg.t.at(0)(term) != pi(base)) throw TypeError("term does not inhabit the Π-type of the family");
  std::optional<std::size_t> found;
  for (std::size_t k : pt.preimage(base)) {
    if (lam(k) != term) continue;
    if (found) throw StructureError("λ is not injective on the fiber; the Π-square is not a pullback");
    found = k;
  }
  if (!found) throw StructureError("no λ-preimage; the Π-square is not a pullback");
  const auto& sec = lam.dom()[*found][1].as_tuple();
  const FinSet& udot = alg.region.at(0).dom();
  std::vector<std::size_t> t;
  for (const auto& l : sec) t.push_back(udot.index_of(l));
  return FinMap(beta.dom(), udot, std::move(t));
}

}  // namespace catsem
