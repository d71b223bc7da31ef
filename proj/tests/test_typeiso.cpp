#include <doctest.h>

#include <random>

#include "catsem/errors.hpp"
#include "catsem/typeiso.hpp"
#include "support.hpp"

using namespace catsem;
using namespace testing_support;

namespace {

// Fiber sizes of the left-hand side computed straight from the nesting.
std::vector<std::size_t> expected_sizes(TypeIsoLaw law, const NestedFamilies& n) {
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < n.context().size(); ++g) {
    std::size_t sum = 0, prod = 1;
    for (std::size_t a : n.a.fiber(g)) {
      std::size_t inner_sum = 0, inner_prod = 1;
      for (std::size_t b : n.b.fiber(a)) {
        inner_sum += n.c.fiber_size(b);
        inner_prod *= n.c.fiber_size(b);
      }
      sum += inner_sum;
      prod *= inner_prod;
    }
    switch (law) {
      case TypeIsoLaw::sigma_assoc:
        out.push_back(sum);
        break;
      case TypeIsoLaw::pi_assoc:
        out.push_back(prod);
        break;
      default:
        out.push_back(n.a.fiber_size(g));
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("typeiso") {
  TEST_CASE("law names round trip") {
    for (auto law : {TypeIsoLaw::sigma_assoc, TypeIsoLaw::sigma_unit_l, TypeIsoLaw::sigma_unit_r,
                     TypeIsoLaw::pi_assoc, TypeIsoLaw::pi_unit}) {
      CHECK(type_iso_law_from_string(to_string(law)) == law);
    }
    CHECK_THROWS_AS(type_iso_law_from_string("pi-comm"), StructureError);
  }

  TEST_CASE("witnesses on random nestings") {
    std::mt19937_64 rng(51);
    for (auto law : {TypeIsoLaw::sigma_assoc, TypeIsoLaw::sigma_unit_l, TypeIsoLaw::sigma_unit_r,
                     TypeIsoLaw::pi_assoc, TypeIsoLaw::pi_unit}) {
      for (int trial = 0; trial < 30; ++trial) {
        NestedFamilies n = random_nested(rng, 3);
        while (typeiso_size(law, n) > 20000) n = random_nested(rng, 3);
        const TypeIsoWitness w = typeiso_witness(law, n);
        CHECK(w.ok());
        CHECK(w.bijection.is_bijective());
        CHECK(is_map_over(w.bijection, w.lhs, w.rhs));
        CHECK(w.lhs.fiber_sizes() == expected_sizes(law, n));
        CHECK(w.rhs.fiber_sizes() == expected_sizes(law, n));
        CHECK(typeiso_size(law, n) == w.lhs.total().size());
      }
    }
  }

  TEST_CASE("mismatched nesting is rejected") {
    std::mt19937_64 rng(52);
    NestedFamilies n = random_nested(rng, 2);
    n.c = Family::from_fiber_sizes({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1});
    CHECK_THROWS_AS(validate_nesting(n), StructureError);
  }
}
