#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "catsem/equiv.hpp"
#include "catsem/errors.hpp"
#include "catsem/nat_algebra.hpp"
#include "support.hpp"

using namespace catsem;
using namespace testing_support;

namespace {

PositionMap random_perm(std::mt19937_64& rng, std::size_t n) {
  PositionMap p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// A fiberwise bijection A -> B over X, for families with equal fiber sizes.
FinMap random_equivalence(std::mt19937_64& rng, const Family& a, const Family& b) {
  std::vector<std::size_t> t(a.total().size());
  for (std::size_t x = 0; x < a.base().size(); ++x) {
    const PositionMap p = random_perm(rng, a.fiber_size(x));
    for (std::size_t i = 0; i < p.size(); ++i) t[a.fiber(x)[i]] = b.fiber(x)[p[i]];
  }
  return FinMap(a.total(), b.total(), std::move(t));
}

std::vector<PositionMap> random_perms(std::mt19937_64& rng, const Family& f) {
  std::vector<PositionMap> out;
  for (std::size_t x = 0; x < f.base().size(); ++x) out.push_back(random_perm(rng, f.fiber_size(x)));
  return out;
}

}  // namespace

TEST_SUITE("equiv") {
  TEST_CASE("Equiv is the coproduct of the symmetric groups") {
    const EquivClassifier ec = build_equiv(nat_eq_model(6));
    CHECK(ec.counts_consistent);
    const Family& u = ec.model.region;
    for (std::size_t a = 0; a < u.base().size(); ++a) {
      for (std::size_t b = 0; b < u.base().size(); ++b) {
        const std::size_t want = a == b ? factorial(u.fiber_size(a)) : 0;
        CHECK(ec.equiv.fiber_size(pair_index(ec, a, b)) == want);
      }
    }
    // Independent of the Equiv construction: the counts agree with the
    // number of bijections exactly on the exponential.
    for (std::size_t e = 0; e < ec.exponential.total().size(); ++e) {
      const auto& images = ec.exponential.total()[e][1].as_tuple();
      std::vector<Label> sorted(images.begin(), images.end());
      std::sort(sorted.begin(), sorted.end());
      const bool injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
      const auto [a, b] = std::make_pair(ec.exponential.proj()(e) / u.base().size(),
                                         ec.exponential.proj()(e) % u.base().size());
      const bool bij = injective && u.fiber_size(a) == u.fiber_size(b);
      CHECK(ec.is_equiv_count[e] == (bij ? 1u : 0u));
    }
  }

  TEST_CASE("serial and OpenMP builds agree") {
    const EquivClassifier p = build_equiv(nat_eq_model(5), false);
    const EquivClassifier s = build_equiv(nat_eq_model(5), true);
    CHECK(p.is_equiv_count == s.is_equiv_count);
    CHECK(p.equiv.proj() == s.equiv.proj());
  }

  TEST_CASE("trans over (3,3) is the multiplication of S3") {
    const EquivClassifier ec = build_equiv(nat_eq_model(4));
    const EquivTrans tr = equiv_trans(ec);
    const std::size_t three = ec.model.region.base().index_of(Label(3));
    const auto& fiber = ec.equiv.fiber(pair_index(ec, three, three));
    REQUIRE(fiber.size() == 6);
    std::size_t checked = 0;
    for (std::size_t w1 : fiber) {
      for (std::size_t w2 : fiber) {
        const PositionMap p1 = equiv_positions(ec, w1), p2 = equiv_positions(ec, w2);
        PositionMap prod(3);
        for (std::size_t i = 0; i < 3; ++i) prod[i] = p2[p1[i]];
        const std::size_t k = tr.composable.object.index_of(
            Label::tuple({ec.equiv.total()[w1], ec.equiv.total()[w2]}));
        CHECK(equiv_positions(ec, tr.trans(k)) == prod);
        ++checked;
      }
    }
    CHECK(checked == 36);
  }

  TEST_CASE("groupoid laws") {
    const EquivClassifier ec = build_equiv(nat_eq_model(4));
    const EquivTrans tr = equiv_trans(ec);
    const FinMap refl = equiv_refl(ec), sym = equiv_sym(ec);
    for (std::size_t w = 0; w < ec.equiv.total().size(); ++w) {
      const auto [a, b] = equiv_ends(ec, w);
      const Label& wl = ec.equiv.total()[w];
      const auto idx = [&](std::size_t x, std::size_t y) {
        return tr.composable.object.index_of(Label::tuple({ec.equiv.total()[x], ec.equiv.total()[y]}));
      };
      CHECK(tr.trans(idx(refl(a), w)) == w);
      CHECK(tr.trans(idx(w, refl(b))) == w);
      CHECK(tr.trans(idx(w, sym(w))) == refl(a));
      CHECK(sym(sym(w)) == w);
      (void)wl;
    }
  }

  TEST_CASE("lifting and reclassifying equivalences") {
    const EquivClassifier ec = build_equiv(nat_eq_model(5));
    const Family& u = ec.model.region;
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
      const FinSet x = named_set(uniform(rng, 1, 3), "x");
      const FinMap alpha = random_map(rng, x, u.base());
      const Classified a = classified_by(ec, alpha);
      const Classified b = relabel(ec, classified_by(ec, alpha), random_perms(rng, a.family));
      const FinMap e = random_equivalence(rng, a.family, b.family);
      const FinMap lift = lift_equivalence(ec, a, b, e);
      CHECK(equivalence_from_lift(ec, a, b, lift) == e);
      const Classified a2 = relabel(ec, a, random_perms(rng, a.family));
      const Classified b2 = relabel(ec, b, random_perms(rng, b.family));
      const FinMap lift2 = reclassify_equivalence(ec, a, b, lift, a2, b2);
      CHECK(equivalence_from_lift(ec, a2, b2, lift2) == e);
      CHECK(equivalence_from_lift(ec, a, a2, classifier_change(ec, a, a2)) == FinMap::identity(a.family.total()));
    }
  }

  TEST_CASE("non-equivalences do not lift") {
    const EquivClassifier ec = build_equiv(nat_eq_model(4));
    const Family& u = ec.model.region;
    const FinMap alpha(FinSet::range(1), u.base(), {u.base().index_of(Label(2))});
    const Classified a = classified_by(ec, alpha);
    const FinMap collapse(a.family.total(), a.family.total(), {0, 0});
    CHECK_THROWS_AS(lift_equivalence(ec, a, a, collapse), StructureError);
    const FinMap bad_alpha_dot(a.family.total(), u.total(), {0, 0});
    CHECK_THROWS(validate_classified(ec, Classified{a.family, alpha, bad_alpha_dot}));
  }

  TEST_CASE("2-cells") {
    const EquivClassifier ec = build_equiv(nat_eq_model(4));
    const Family& u = ec.model.region;
    const std::size_t two = u.base().index_of(Label(2)), three = u.base().index_of(Label(3));
    const FinMap alpha(FinSet::range(2), u.base(), {two, three});
    const FinMap beta(named_set(3, "y"), u.base(), {three, two, two});
    const FinMap h1(FinSet::range(2), beta.dom(), {1, 0});
    const FinMap h2(FinSet::range(2), beta.dom(), {2, 0});
    const auto cells = hom_category(ec, alpha, beta, h1, h2);
    CHECK(cells.size() == 2 * 6);
    for (const auto& c : cells) {
      const TwoCellReport rep = verify_two_cell(ec, c);
      CHECK(rep.valid);
      CHECK(rep.checks.size() >= 8);
    }
    const TwoCell id1 = identity_two_cell(ec, alpha, beta, h1);
    const TwoCell id2 = identity_two_cell(ec, alpha, beta, h2);
    for (const auto& c : cells) {
      CHECK(vertical_compose(ec, id1, c).phi == c.phi);
      CHECK(vertical_compose(ec, c, id2).phi == c.phi);
    }
    CHECK_THROWS_AS(vertical_compose(ec, cells[0], cells[1]), BoundaryError);
    CHECK_THROWS_AS(make_two_cell(ec, alpha, beta, FinMap(FinSet::range(2), beta.dom(), {0, 0}), h2,
                                  cells[0].phi),
                    StructureError);

    // Whiskering keeps the cells valid.
    const FinMap gamma(named_set(2, "z"), u.base(), {two, three});
    const FinMap k(beta.dom(), gamma.dom(), {1, 0, 0});
    const FinMap g(FinSet::range(1), FinSet::range(2), {1});
    for (const auto& c : cells) {
      CHECK(verify_two_cell(ec, whisker_right(ec, c, k, gamma)).valid);
      const TwoCell wl = whisker_left(ec, c, g);
      CHECK(verify_two_cell(ec, wl).valid);
      CHECK(wl.phi.dom().size() == 3);
    }
  }
}
