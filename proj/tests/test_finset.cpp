#include <doctest.h>

#include <map>
#include <random>

#include "catsem/errors.hpp"
#include "catsem/finset.hpp"
#include "support.hpp"

using namespace catsem;
using namespace testing_support;

namespace {

// Brute force: a square is a pullback iff A -> C ×_D B is a bijection.
PullbackVerdict verdict_oracle(const Square& sq) {
  const FinSet& a = sq.top.dom();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sq.bottom(sq.left(i)) != sq.right(sq.top(i))) return PullbackVerdict::not_commuting;
  }
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> hits;
  for (std::size_t i = 0; i < a.size(); ++i) ++hits[{sq.left(i), sq.top(i)}];
  std::size_t cone = 0;
  for (std::size_t c = 0; c < sq.left.cod().size(); ++c) {
    for (std::size_t b = 0; b < sq.top.cod().size(); ++b) {
      if (sq.bottom(c) != sq.right(b)) continue;
      ++cone;
      if (hits[{c, b}] != 1) return PullbackVerdict::not_pullback;
    }
  }
  return cone == a.size() ? PullbackVerdict::pullback : PullbackVerdict::not_pullback;
}

}  // namespace

TEST_SUITE("finset") {
  TEST_CASE("sets and maps") {
    const FinSet s({Label("a"), Label("b"), Label(3)});
    CHECK(s.index_of(Label("b")) == 1);
    CHECK_FALSE(s.find(Label("z")).has_value());
    CHECK_THROWS_AS(FinSet({Label(1), Label(1)}), StructureError);
    CHECK_THROWS_AS(FinMap(s, FinSet::range(2), {0, 1}), StructureError);
    CHECK_THROWS_AS(FinMap(s, FinSet::range(2), {0, 1, 2}), StructureError);
    const FinMap f(s, FinSet::range(2), {1, 0, 1});
    CHECK(f.preimage(1) == std::vector<std::size_t>{0, 2});
    CHECK_FALSE(f.is_injective());
    CHECK(f.is_surjective());
    CHECK_THROWS_AS(compose(f, f), BoundaryError);
    const FinMap g(FinSet::range(3), FinSet::range(3), {2, 0, 1});
    CHECK(compose(g.inverse(), g) == FinMap::identity(FinSet::range(3)));
    CHECK(FinMap::point(s, 2)(0) == 2);
  }

  TEST_CASE("empty sets are first class") {
    const FinSet e;
    const Family empty_fam(FinMap(e, FinSet::range(2), {}));
    CHECK(empty_fam.fiber_size(0) == 0);
    const Pullback pb = pullback(FinMap(e, FinSet::range(1), {}), FinMap::to_terminal(FinSet::range(3)));
    CHECK(pb.object.empty());
    // Sections of an empty family over an empty fiber: exactly one.
    const Family pf = pushforward(FinMap(e, FinSet::range(1), {}), Family(FinMap(e, e, {})));
    CHECK(pf.fiber_size(0) == 1);
  }

  TEST_CASE("pullbacks of random cospans match the brute force enumeration") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      const FinSet a = named_set(uniform(rng, 0, 6), "a");
      const FinSet b = named_set(uniform(rng, 0, 6), "b");
      const FinSet c = named_set(uniform(rng, 1, 6), "c");
      const FinMap f = random_map(rng, a, c), g = random_map(rng, b, c);
      const Pullback pb = pullback(f, g);
      std::vector<Label> expected;
      for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
          if (f(i) == g(j)) expected.push_back(Label::tuple({a[i], b[j]}));
        }
      }
      REQUIRE(pb.object.elements() == expected);
      CHECK(is_pullback(pb.square()) == PullbackVerdict::pullback);
      CHECK(compose(f, pb.p1) == compose(g, pb.p2));
    }
  }

  TEST_CASE("check_pullback agrees with the oracle and distinguishes its failures") {
    std::mt19937_64 rng(12);
    std::size_t seen[3] = {0, 0, 0};
    for (int trial = 0; trial < 400; ++trial) {
      const FinSet a = named_set(uniform(rng, 0, 5), "a");
      const FinSet b = named_set(uniform(rng, 0, 4), "b");
      const FinSet c = named_set(uniform(rng, 1, 4), "c");
      const FinSet d = named_set(uniform(rng, 1, 2), "d");
      const FinMap right = random_map(rng, b, d), bottom = random_map(rng, c, d);
      FinMap top, left;
      if (b.empty() || trial % 2 == 0) {
        // Derive a commuting square from the true pullback, then perturb it.
        const Pullback pb = pullback(bottom, right);
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < pb.object.size(); ++i) {
          if (uniform(rng, 0, 3) != 0) keep.push_back(i);
        }
        if (uniform(rng, 0, 2) == 0 && !keep.empty()) keep.push_back(keep.front());
        const FinSet src = named_set(keep.size(), "s");
        std::vector<std::size_t> lt, tt;
        for (std::size_t k : keep) {
          lt.push_back(pb.p1(k));
          tt.push_back(pb.p2(k));
        }
        top = FinMap(src, b, tt);
        left = FinMap(src, c, lt);
      } else {
        top = random_map(rng, a, b);
        left = random_map(rng, a, c);
      }
      const Square sq{top, left, right, bottom};
      const PullbackVerdict want = verdict_oracle(sq);
      const SquareReport rep = check_pullback(sq);
      REQUIRE(rep.verdict == want);
      CHECK(check_pullback_serial(sq).verdict == want);
      CHECK(check_pullback_serial(sq).failing_element == rep.failing_element);
      if (want != PullbackVerdict::pullback) CHECK(rep.failing_label.has_value());
      ++seen[static_cast<int>(want)];
    }
    CHECK(seen[0] > 0);
    CHECK(seen[1] > 0);
    CHECK(seen[2] > 0);
  }

  TEST_CASE("pullback mediator") {
    const FinMap f(FinSet::range(3), FinSet::range(2), {0, 1, 1});
    const FinMap g(FinSet::range(2), FinSet::range(2), {1, 0});
    const Pullback pb = pullback(f, g);
    const FinMap a(FinSet::range(1), FinSet::range(3), {2});
    const FinMap b(FinSet::range(1), FinSet::range(2), {0});
    const FinMap u = pullback_mediator(pb, a, b);
    CHECK(compose(pb.p1, u) == a);
    CHECK(compose(pb.p2, u) == b);
    CHECK_THROWS_AS(pullback_mediator(pb, a, FinMap(FinSet::range(1), FinSet::range(2), {1})), BoundaryError);
  }

  TEST_CASE("pushforward fibers are section sets") {
    // f : 3 -> 1, family fibers (2, 3, 4): 24 sections.
    const Family fam = Family::from_fiber_sizes({2, 3, 4});
    const Family pf = pushforward(FinMap::to_terminal(FinSet::range(3)), fam);
    CHECK(pf.fiber_size(0) == 24);
    CHECK(pushforward(FinMap::to_terminal(FinSet::range(3)), Family::from_fiber_sizes({2, 0, 4})).fiber_size(0) == 0);

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
      const FinSet x = named_set(uniform(rng, 0, 4), "x");
      const FinSet y = named_set(uniform(rng, 1, 3), "y");
      const FinMap f = random_map(rng, x, y);
      const Family e = random_family(rng, x, 7);
      const Family p = pushforward(f, e);
      for (std::size_t yi = 0; yi < y.size(); ++yi) {
        std::size_t expected = 1;
        std::vector<std::vector<std::size_t>> choices;
        for (std::size_t xi : f.preimage(yi)) {
          expected *= e.fiber_size(xi);
          choices.push_back(e.fiber(xi));
        }
        REQUIRE(p.fiber_size(yi) == expected);
        // Every listed section picks one element over each preimage point.
        for (std::size_t k : p.fiber(yi)) {
          const auto& s = p.total()[k][1].as_tuple();
          REQUIRE(s.size() == choices.size());
          for (std::size_t j = 0; j < s.size(); ++j) {
            CHECK(e.proj()(e.total().index_of(s[j])) == f.preimage(yi)[j]);
          }
        }
      }
    }
  }

  TEST_CASE("Beck-Chevalley for dependent sums") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 100; ++trial) {
      const FinSet x = named_set(uniform(rng, 0, 4), "x");
      const FinSet y = named_set(uniform(rng, 1, 4), "y");
      const FinSet z = named_set(uniform(rng, 0, 4), "z");
      const FinMap f = random_map(rng, x, y), g = random_map(rng, z, y);
      const Family e = random_family(rng, x, 4);
      const Pullback pb = pullback(f, g);  // labels (x, z)
      const Family lhs = base_change(g, dependent_sum(f, e));
      const Family rhs = dependent_sum(pb.p2, base_change(pb.p1, e));
      // Canonical comparison ((x, z), e) -> (z, e).
      const FinMap cmp = FinMap::from_labels(rhs.total(), lhs.total(), [](const Label& l) {
        return Label::tuple({l[0][1], l[1]});
      });
      CHECK(cmp.is_bijective());
      CHECK(is_map_over(cmp, rhs, lhs));
    }
  }

  TEST_CASE("slice exponential and its universal property") {
    const Family one = Family::from_fiber_sizes({1, 1});
    const Family f2 = Family::from_fiber_sizes({3, 2});
    CHECK(slice_exponential(one, f2).fiber_sizes() == std::vector<std::size_t>{3, 2});
    CHECK(slice_exponential(Family::from_fiber_sizes({2}), Family::from_fiber_sizes({3})).fiber_size(0) == 9);
    CHECK(slice_exponential(Family::from_fiber_sizes({0}), Family::from_fiber_sizes({5})).fiber_size(0) == 1);

    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 40; ++trial) {
      const FinSet x = named_set(uniform(rng, 1, 3), "x");
      const Family a = random_family(rng, x, 4, "a");
      const Family b = random_family(rng, x, 4, "b");
      const Family g = random_family(rng, x, 3, "g");
      const Family exp = slice_exponential(a, b);
      for (std::size_t xi = 0; xi < x.size(); ++xi) {
        CHECK(exp.fiber_size(xi) == ipow(b.fiber_size(xi), a.fiber_size(xi)));
      }
      const FinMap ev = exponential_evaluation(exp, a, b);
      const Family ga = slice_product(g, a);
      // Any map g ×_X a -> b over X: choose images fiberwise at random.
      std::vector<std::size_t> mt(ga.total().size());
      bool possible = true;
      for (std::size_t k = 0; k < mt.size(); ++k) {
        const auto& fib = b.fiber(ga.proj()(k));
        if (fib.empty()) {
          possible = false;
          break;
        }
        mt[k] = fib[uniform(rng, 0, fib.size() - 1)];
      }
      if (!possible) continue;
      const FinMap m(ga.total(), b.total(), mt);
      const FinMap tr = exponential_transpose(g, a, b, exp, m);
      for (std::size_t k = 0; k < ga.total().size(); ++k) {
        const Label& l = ga.total()[k];
        const Label t = exp.total()[tr(g.total().index_of(l[0]))];
        CHECK(ev.at(Label::tuple({t, l[1]})) == m.at(l));
      }
    }
  }

  TEST_CASE("product and base change labels") {
    const Pullback p = product(FinSet::range(2), named_set(2, "y"));
    CHECK(p.object.size() == 4);
    CHECK(p.object[1] == Label::tuple({0, "y1"}));
    const Family bc = base_change(FinMap(FinSet::range(2), FinSet::range(1), {0, 0}), Family::from_fiber_sizes({2}));
    CHECK(bc.total()[0] == Label::tuple({0, Label::tuple({0, 0})}));
    CHECK(bc.fiber_sizes() == std::vector<std::size_t>{2, 2});
  }

  TEST_CASE("JSON round trip") {
    const FinMap f(FinSet({Label("a"), Label::tuple({1, "b"})}), FinSet::range(3), {2, 0});
    CHECK(finmap_from_json(to_json(f)) == f);
    CHECK(finset_from_json(to_json(f.dom())) == f.dom());
    const Family fam = Family::from_fiber_sizes({1, 0, 2});
    CHECK(family_from_json(to_json(fam)).proj() == fam.proj());
    CHECK_THROWS_AS(finmap_from_json(nlohmann::json{{"dom", 1}}), StructureError);
  }
}
