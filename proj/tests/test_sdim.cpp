#include <doctest.h>

#include <random>

#include "superdim/sdim.hpp"
#include "test_support.hpp"

using namespace superdim;
using namespace superdim::testing;

TEST_CASE("Grassmann algebras have super-dimension 0|s") {
  for (int s = 0; s <= 4; ++s) {
    const AlgebraPtr a = compiled(grassmann(s));
    const SuperModule r = SuperModule::regular(a);
    CHECK(sdim(r) == SuperDimension{false, 0, s});
    const auto chain = odd_power_chain(r);
    REQUIRE(static_cast<int>(chain.size()) == s + 2);
    for (int l = 0; l <= s; ++l) {
      Index expected = 0;
      for (int j = l; j <= s; ++j) expected += binomial(s, j);
      CHECK(chain[static_cast<std::size_t>(l)] == expected);
    }
    CHECK(odd_dimension_by_subsets(r) == s);
  }
}

TEST_CASE("zero module has the distinguished super-dimension") {
  const AlgebraPtr a = compiled(grassmann(2));
  const SuperModule z = SuperModule::zero(a);
  CHECK(sdim(z) == SuperDimension::empty());
  CHECK(sdim(z).to_string() == "zero module");
  CHECK(odd_dimension(z) == -1);
  CHECK(odd_dimension_by_subsets(z) == -1);
  CHECK(is_extendable_to_longest({}, z));
  CHECK(sdim(SuperModule::regular(a)).to_string() == "0|2");
}

TEST_CASE("odd parameter systems of Lambda(z1,z2,z3)") {
  const AlgebraPtr a = compiled(grassmann(3));
  const SuperModule r = SuperModule::regular(a);
  const auto full = odd_parameter_systems(r, 3);
  REQUIRE(full.size() == 1);
  CHECK(full[0].names == std::vector<std::string>{"z1", "z2", "z3"});
  CHECK(full[0].witness_index == 0);
  CHECK(odd_parameter_systems(r, 2).size() == 3);
  CHECK(odd_parameter_systems(r, 4).empty());
  CHECK(odd_parameter_systems(r, 0).size() == 1);
}

TEST_CASE("factoring by odd regular sequences in Grassmann algebras") {
  for (int s = 1; s <= 4; ++s) {
    const AlgebraPtr a = compiled(grassmann(s));
    const SuperModule r = SuperModule::regular(a);
    std::vector<Vector> ys;
    for (int t = 1; t <= s; ++t) {
      ys.push_back(a->generator("z" + std::to_string(t)).value);
      const Report rep = verify_factoring(r, ys);
      CHECK(rep.passed());
      CHECK(rep.values["extendable"] == true);
      CHECK(rep.values["sdim1_M_mod_IM"] == s - t);
      CHECK(is_extendable_to_longest(ys, r));
    }
  }
}

TEST_CASE("factoring with perturbed regular elements") {
  // y = z1 + z2 z3 z4 and similar odd elements are still regular.
  std::mt19937 rng(5);
  const AlgebraPtr a = compiled(grassmann(4));
  const SuperModule r = SuperModule::regular(a);
  const auto odd = odd_power_span(*a, 1);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Vector> ys;
    const int t = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < t; ++i) {
      std::vector<Parity> parities;
      for (Index b = 0; b < a->dim(); ++b) parities.push_back(a->parity(b));
      ys.push_back(random_homogeneous_vector(rng, parities, Parity::odd, a->field()));
    }
    if (!is_regular_sequence(ys, r)) continue;
    ++checked;
    const Report rep = verify_factoring(r, ys);
    CHECK(rep.passed());
  }
  CHECK(checked > 5);
  (void)odd;
}

TEST_CASE("non-regular sequences are rejected") {
  const AlgebraPtr a = compiled(grassmann(2));
  const SuperModule r = SuperModule::regular(a);
  const Vector z1 = a->generator("z1").value;
  CHECK_THROWS_AS(is_extendable_to_longest({z1, z1}, r), std::invalid_argument);
  CHECK_FALSE(verify_factoring(r, {z1, z1}).passed());
}

TEST_CASE("subset search agrees with the odd power chain") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const AlgebraPtr a = compiled(random_presentation(rng, Field::rationals(), 10));
    const SuperModule m = random_module(rng, a);
    const auto chain = odd_power_chain(m);
    const int ncand = static_cast<int>(odd_candidates(*a, OddCandidates::basis).size());
    for (int l = 0; l <= ncand + 1; ++l) {
      const bool nonzero = l < static_cast<int>(chain.size()) && chain[static_cast<std::size_t>(l)] > 0;
      CHECK(!odd_parameter_systems(m, l, OddCandidates::basis).empty() == nonzero);
      CHECK(!odd_parameter_systems(m, l, OddCandidates::generators).empty() == nonzero);
    }
    CHECK(odd_dimension_by_subsets(m) == odd_dimension(m));
  }
}
