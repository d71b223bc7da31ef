#include <doctest.h>

#include "catsem/errors.hpp"
#include "catsem/nerve.hpp"
#include "catsem/omega_algebra.hpp"
#include "catsem/sieves.hpp"

using namespace catsem;

namespace {

std::size_t composable_pairs(const IndexCategory& d) {
  std::size_t n = 0;
  for (std::size_t f = 0; f < d.arrow_count(); ++f) {
    for (std::size_t g = 0; g < d.arrow_count(); ++g) n += d.arrow(f).dst == d.arrow(g).src;
  }
  return n;
}

}  // namespace

TEST_SUITE("nerve") {
  TEST_CASE("functor enumeration counts") {
    for (const auto& d : {IndexCategory::terminal(), IndexCategory::arrow(), IndexCategory::composable_pair(),
                          set_op(2), set_op(3)}) {
      CHECK(enumerate_functors(IndexCategory::terminal(), d).size() == d.object_count());
      CHECK(enumerate_functors(IndexCategory::arrow(), d).size() == d.arrow_count());
      CHECK(enumerate_functors(IndexCategory::composable_pair(), d).size() == composable_pairs(d));
      for (const auto& f : enumerate_functors(IndexCategory::arrow(), d)) {
        CHECK(is_functor(IndexCategory::arrow(), d, f));
      }
    }
  }

  TEST_CASE("skeletal finite sets") {
    // Arrows n -> m of Set_κ^op are functions m -> n: Σ n^m over n, m < κ.
    CHECK(set_op(2).arrow_count() == 3);
    CHECK(set_op(3).arrow_count() == 1 + 1 + 1 + 0 + 1 + 2 + 0 + 1 + 4);
    CHECK(forget_point(3).objects.size() == pointed_set_op(3).object_count());
  }

  TEST_CASE("nerves evaluate on slices") {
    const IndexCategory d = set_op(3);
    const Presheaf n = nerve(IndexCategory::arrow(), d);
    CHECK(n.at(0).size() == d.object_count());
    CHECK(n.at(1).size() == d.arrow_count());
    CHECK(nerve(IndexCategory::terminal(), d).at(0).size() == d.object_count());
  }

  TEST_CASE("the universe at κ = 2 is Ω") {
    for (const auto& cat : {IndexCategory::terminal(), IndexCategory::arrow(), IndexCategory::composable_pair()}) {
      const PNat v = hs_universe(cat, 2);
      const PNat iso = nerve_to_omega(cat);
      REQUIRE(iso.is_iso());
      CHECK(iso.tgt() == omega(cat));
      // The generic family is the pullback of ⊤ along the iso.
      const PNat top = omega_top(cat);
      const PNat bang = PNat::to_terminal(v.src());
      CHECK(check_pullback(PshSquare{bang, v, top, iso}).verdict == PullbackVerdict::pullback);
    }
    const PNat arrow_v = hs_universe(IndexCategory::arrow(), 2);
    CHECK(arrow_v.tgt().at(1).size() == 3);
    CHECK(arrow_v.tgt().at(0).size() == 2);
    CHECK_THROWS_AS(hs_universe(IndexCategory::arrow(), 5), StructureError);
  }

  TEST_CASE("verify_hs_universe") {
    const HsReport two = verify_hs_universe(IndexCategory::arrow(), 2);
    CHECK(two.iso_to_omega.value_or(false));
    CHECK(two.ml.passed());
    const HsReport three = verify_hs_universe(IndexCategory::arrow(), 3);
    CHECK_FALSE(three.iso_to_omega.has_value());
    REQUIRE(three.ml.squares.size() == 3);
    CHECK(three.ml.squares[0].status == CheckStatus::pass);
    CHECK(three.ml.squares[1].status == CheckStatus::not_applicable);
    CHECK(three.ml.squares[2].status == CheckStatus::not_applicable);
  }
}
