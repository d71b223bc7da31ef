#include <doctest.h>

#include <random>

#include "catsem/errors.hpp"
#include "catsem/nat_algebra.hpp"
#include "catsem/polynomial.hpp"
#include "support.hpp"

using namespace catsem;
using namespace testing_support;

namespace {

PolySignature random_signature(std::mt19937_64& rng, std::size_t max_base, std::size_t max_total) {
  const FinSet base = named_set(uniform(rng, 1, max_base), "b");
  return PolySignature{random_family(rng, base, max_total, "e")};
}

}  // namespace

TEST_SUITE("polynomial") {
  TEST_CASE("extension sizes and canonical encoding") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
      const PolySignature p = random_signature(rng, 3, 4);
      for (std::size_t n = 0; n <= 3; ++n) {
        const FinSet x = named_set(n, "x");
        std::size_t expected = 0;
        for (std::size_t b = 0; b < p.base().size(); ++b) expected += ipow(n, p.map.fiber_size(b));
        const FinSet ext = extension(p, x);
        REQUIRE(ext.size() == expected);
        CHECK(extension_size(p, n) == expected);
        for (std::size_t i = 0; i < ext.size(); ++i) {
          const PolyElement e = decode(p, x, ext[i]);
          CHECK(e.section.size() == p.map.fiber_size(e.base_point));
          CHECK(encode(p, x, e) == ext[i]);
        }
        const PipelineExtension pipe = extension_via_pipeline(p, x);
        CHECK(pipe.family.total().size() == expected);
        CHECK(pipe.to_canonical.is_bijective());
      }
    }
  }

  TEST_CASE("the nat signature truncated at length 3 gives lists") {
    const PolySignature lists{nat_family(4)};
    CHECK(extension(lists, FinSet::range(2)).size() == 15);
    CHECK(extension(lists, FinSet::range(0)).size() == 1);
  }

  TEST_CASE("functorial action") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 40; ++trial) {
      const PolySignature p = random_signature(rng, 3, 4);
      const FinSet x = named_set(uniform(rng, 1, 3), "x");
      const FinSet y = named_set(uniform(rng, 1, 3), "y");
      const FinSet z = named_set(uniform(rng, 1, 3), "z");
      const FinMap h = random_map(rng, x, y), k = random_map(rng, y, z);
      CHECK(extension_on_map(p, compose(k, h)) == compose(extension_on_map(p, k), extension_on_map(p, h)));
      CHECK(extension_on_map(p, FinMap::identity(x)) == FinMap::identity(extension(p, x)));
    }
  }

  TEST_CASE("universal property transpose round trips") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
      const PolySignature p = random_signature(rng, 3, 3);
      const FinSet x = named_set(uniform(rng, 1, 2), "x");
      const FinSet ext = extension(p, x);
      const FinSet z = named_set(uniform(rng, 0, 4), "z");
      const FinMap f = random_map(rng, z, ext);
      const PolyTranspose t = ump_transpose(p, x, f);
      CHECK(compose(p.map.proj(), t.domain.p2) == compose(t.f1, t.domain.p1));
      CHECK(ump_untranspose(p, x, t.f1, t.f2) == f);
    }
  }

  TEST_CASE("composition of signatures is naturally the composite functor") {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 15; ++trial) {
      const PolySignature p = random_signature(rng, 3, 3);
      const PolySignature q = random_signature(rng, 3, 3);
      const ComposedSignature pq = compose_signatures(p, q);
      std::vector<FinSet> xs;
      std::vector<FinMap> isos;
      for (std::size_t n = 0; n <= 2; ++n) {
        xs.push_back(named_set(n, "x"));
        isos.push_back(composition_iso(pq, p, q, xs.back()));
        REQUIRE(isos.back().is_bijective());
      }
      for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = 0; j < xs.size(); ++j) {
          for (const auto& t : all_tables(xs[i].size(), xs[j].size())) {
            const FinMap h(xs[i], xs[j], t);
            CHECK(compose(isos[j], extension_on_map(pq.composite, h)) ==
                  compose(extension_on_map(p, extension_on_map(q, h)), isos[i]));
          }
        }
      }
    }
  }

  TEST_CASE("cartesian squares induce transformations") {
    // g : {u0,u1,u2} -> {0,1}, fibers 2 and 1; f is g pulled back along h.
    const Family g(FinMap(named_set(3, "u"), FinSet::range(2), {0, 1, 0}));
    const FinMap h(FinSet::range(3), FinSet::range(2), {1, 0, 0});
    const Pullback pb = pullback(h, g.proj());
    const CartMorphism m = make_cart_morphism(Square{pb.p2, pb.p1, g.proj(), h});
    const FinSet x = FinSet::range(2);
    const FinMap nat = square_to_nat(m, x);
    CHECK(nat.dom() == extension(PolySignature{Family(pb.p1)}, x));
    // Naturality in X.
    const FinMap k(x, FinSet::range(3), {2, 0});
    const FinMap nat3 = square_to_nat(m, FinSet::range(3));
    CHECK(compose(nat3, extension_on_map(PolySignature{Family(pb.p1)}, k)) ==
          compose(extension_on_map(PolySignature{g}, k), nat));
    const FinMap bad_top(pb.object, g.total(), std::vector<std::size_t>(pb.object.size(), 1));
    CHECK_THROWS_AS(make_cart_morphism(Square{bad_top, pb.p1, g.proj(), h}), StructureError);
  }

  TEST_CASE("signature JSON") {
    const PolySignature p = signature_from_json(nlohmann::json{{"fibers", {2, 0, 1}}});
    CHECK(p.map.fiber_sizes() == std::vector<std::size_t>{2, 0, 1});
    CHECK(signature_from_json(to_json(p)["family"]).map.fiber_sizes() == p.map.fiber_sizes());
    CHECK_THROWS_AS(signature_from_json(nlohmann::json{{"base", 2}, {"fibers", {1}}}), StructureError);
  }
}
