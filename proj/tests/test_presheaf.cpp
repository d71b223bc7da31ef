#include <doctest.h>

#include <random>

#include "catsem/errors.hpp"
#include "catsem/presheaf.hpp"
#include "catsem/psh_polynomial.hpp"
#include "catsem/sieves.hpp"
#include "psh_support.hpp"

using namespace catsem;
using namespace testing_support;

TEST_SUITE("presheaf") {
  TEST_CASE("index categories check their laws") {
    const IndexCategory p = IndexCategory::composable_pair();
    CHECK(p.object_count() == 3);
    CHECK(p.arrow_count() == 6);
    const std::size_t f = p.find_arrow(Label("0<1")), g = p.find_arrow(Label("1<2"));
    CHECK(p.arrow(p.compose(g, f)).name == Label("0<2"));
    CHECK_THROWS_AS(p.compose(f, g), BoundaryError);
    // A broken composition table is rejected.
    std::vector<Arrow> arrows{{Label("id"), 0, 0}, {Label("e"), 0, 0}};
    CHECK_THROWS_AS(IndexCategory(FinSet::range(1), arrows, {0}, {0, 1, 0, 0}), StructureError);
    CHECK_NOTHROW(IndexCategory(FinSet::range(1), arrows, {0}, {0, 1, 1, 0}));
    const auto j = to_json(p);
    const IndexCategory back = index_category_from_json(j);
    CHECK(back.arrow_count() == p.arrow_count());
    CHECK(to_json(back) == j);
    CHECK(index_category_from_json("arrow") == IndexCategory::arrow());
  }

  TEST_CASE("functoriality and naturality are enforced") {
    const IndexCategory cp = IndexCategory::composable_pair();
    std::vector<FinSet> at{FinSet::range(2), FinSet::range(2), FinSet::range(2)};
    std::vector<FinMap> r;
    for (std::size_t a = 0; a < cp.arrow_count(); ++a) r.push_back(FinMap::identity(FinSet::range(2)));
    r[cp.find_arrow(Label("0<2"))] = FinMap(FinSet::range(2), FinSet::range(2), {1, 0});
    CHECK_THROWS_AS(Presheaf(cp, at, r), StructureError);

    const IndexCategory ar = IndexCategory::arrow();
    const Presheaf x = chain_presheaf(ar, {2, 1}, {{0}});
    const Presheaf y = chain_presheaf(ar, {2, 1}, {{1}});
    CHECK_THROWS_AS(PNat::from_tables(x, y, {{0, 1}, {0}}), StructureError);
    CHECK_NOTHROW(PNat::from_tables(x, y, {{1, 0}, {0}}));
  }

  TEST_CASE("natural transformations enumerate like the brute force count") {
    std::mt19937_64 rng(31);
    for (const auto& cat : {IndexCategory::terminal(), IndexCategory::arrow(), IndexCategory::composable_pair()}) {
      for (int trial = 0; trial < 25; ++trial) {
        const Presheaf x = random_chain_presheaf(rng, cat, 3);
        const Presheaf y = random_chain_presheaf(rng, cat, 3);
        const auto nats = enumerate_nats(x, y);
        REQUIRE(nats.size() == count_nats_brute(x, y));
        for (const auto& n : nats) CHECK(n.src() == x);
      }
    }
  }

  TEST_CASE("Yoneda lemma") {
    std::mt19937_64 rng(32);
    const IndexCategory cat = IndexCategory::composable_pair();
    for (int trial = 0; trial < 20; ++trial) {
      const Presheaf x = random_chain_presheaf(rng, cat, 3);
      for (std::size_t c = 0; c < cat.object_count(); ++c) {
        const Presheaf yc = yoneda(cat, c);
        CHECK(enumerate_nats(yc, x).size() == x.at(c).size());
        for (std::size_t e = 0; e < x.at(c).size(); ++e) {
          const PNat el = yoneda_element(x, c, e);
          CHECK(el(c, yc.at(c).index_of(cat.arrow(cat.identity(c)).name)) == e);
        }
      }
    }
  }

  TEST_CASE("pointwise pullbacks are pullbacks") {
    std::mt19937_64 rng(33);
    const IndexCategory cat = IndexCategory::arrow();
    for (int trial = 0; trial < 20; ++trial) {
      const Presheaf z = random_chain_presheaf(rng, cat, 2);
      const Presheaf a = random_chain_presheaf(rng, cat, 2);
      const Presheaf b = random_chain_presheaf(rng, cat, 2);
      const auto fs = enumerate_nats(a, z), gs = enumerate_nats(b, z);
      if (fs.empty() || gs.empty()) continue;
      const PshPullback pb = pullback(fs.front(), gs.back());
      CHECK(check_pullback(PshSquare{pb.p2, pb.p1, gs.back(), fs.front()}).verdict == PullbackVerdict::pullback);
    }
  }

  TEST_CASE("sieves and the subobject classifier") {
    CHECK(omega(IndexCategory::terminal()).sizes() == std::vector<std::size_t>{2});
    CHECK(omega(IndexCategory::arrow()).sizes() == std::vector<std::size_t>{2, 3});
    CHECK(omega(IndexCategory::composable_pair()).sizes() == std::vector<std::size_t>{2, 3, 4});
    const IndexCategory cat = IndexCategory::composable_pair();
    for (std::size_t c = 0; c < cat.object_count(); ++c) {
      for (const Sieve& s : sieves_on(cat, c)) CHECK(is_sieve(cat, c, s));
    }
    std::mt19937_64 rng(34);
    for (const auto& k : {IndexCategory::terminal(), IndexCategory::arrow(), IndexCategory::composable_pair()}) {
      for (int trial = 0; trial < 15; ++trial) {
        const Presheaf x = random_chain_presheaf(rng, k, 2);
        const auto subs = enumerate_subobjects(x);
        REQUIRE(subs.size() == count_subobjects_brute(x));
        CHECK(enumerate_nats(x, omega(k)).size() == subs.size());
        for (const auto& s : subs) {
          const PNat chi = classify(x, s);
          CHECK(subobject_of(chi) == s);
          CHECK(classify_mono(subobject_inclusion(x, s)) == chi);
        }
      }
    }
  }

  TEST_CASE("representability") {
    const IndexCategory cat = IndexCategory::arrow();
    const PNat d = clan_model(cat, {Label("0<1")});
    CHECK(is_representable(d).representable);
    CHECK_FALSE(is_representable(omega_top(cat)).representable);
    CHECK_THROWS_AS(clan_model(cat, {Label("nope")}), StructureError);
    CHECK(elements(omega(cat)).object_count() == 5);
  }

  TEST_CASE("partial map classifier over Set is X + 1") {
    const Presheaf x = Presheaf::over_terminal(FinSet::range(3));
    const PartialMapClassifier pm = partial_map_classifier(x);
    CHECK(pm.tilde.at(0).size() == 4);
    CHECK(pm.eta.is_mono());
  }
}
