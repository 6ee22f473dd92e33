#include <doctest.h>

#include <random>

#include "superdim/smodule.hpp"
#include "test_support.hpp"

using namespace superdim;
using namespace superdim::testing;

TEST_CASE("regular, shifted and summed modules satisfy the axioms") {
  const AlgebraPtr a = compiled(grassmann(2));
  const SuperModule r = SuperModule::regular(a);
  CHECK(check_module(r));
  CHECK(r.dim() == 4);
  const SuperModule s = parity_shift(r);
  CHECK(check_module(s));
  CHECK(s.parity(0) == Parity::odd);
  CHECK(s.names()[0] == "Pi(1)");
  const SuperModule d = direct_sum(r, s);
  CHECK(check_module(d));
  CHECK(d.dim() == 8);
  CHECK(check_module(SuperModule::zero(a)));
}

TEST_CASE("module_defect reports broken actions") {
  const AlgebraPtr a = compiled(grassmann(2));
  const SuperModule r = SuperModule::regular(a);
  std::vector<Matrix> action;
  for (Index b = 0; b < a->dim(); ++b) action.push_back(r.action(b));
  action[1](0, 0) = Scalar(1);  // z1 acting with an even-to-even entry
  const SuperModule bad(a, r.names(), r.parities(), action);
  CHECK(module_defect(bad).has_value());
}

TEST_CASE("from_generator_actions reproduces the regular module") {
  const AlgebraPtr a = compiled(grassmann(3));
  const SuperModule r = SuperModule::regular(a);
  std::vector<Matrix> gens;
  for (const auto& g : a->generators()) gens.push_back(r.action_of(g.value));
  const SuperModule m = SuperModule::from_generator_actions(a, r.names(), r.parities(), gens);
  CHECK(m == r);
}

TEST_CASE("submodules, restriction and quotients") {
  const AlgebraPtr a = compiled(grassmann(2));
  const SuperModule r = SuperModule::regular(a);
  const Vector z1 = a->generator("z1").value;
  const auto n = submodule_generated(r, {z1});
  CHECK(n.dim() == 2);
  CHECK(is_submodule(r, n));
  const SuperModule sub = restrict_to(r, n);
  CHECK(check_module(sub));
  CHECK(sub.dim() == 2);
  const SuperModule q = quotient(r, n);
  CHECK(check_module(q));
  CHECK(q.dim() == 2);
  Subspace<Scalar> not_closed(4);
  not_closed.insert(z1 + a->unit());
  CHECK_THROWS_AS(restrict_to(r, not_closed), std::invalid_argument);
  CHECK_THROWS_AS(quotient(r, not_closed), std::invalid_argument);
}

TEST_CASE("odd regular elements of a Grassmann algebra") {
  const AlgebraPtr a = compiled(grassmann(3));
  const SuperModule r = SuperModule::regular(a);
  const Vector z1 = a->generator("z1").value;
  const Vector z2 = a->generator("z2").value;
  CHECK(is_odd_regular(z1, r));
  CHECK(is_regular_sequence({z1, z2}, r));
  CHECK_FALSE(is_odd_regular(a->zero(), r));
  CHECK_THROWS_AS(is_odd_regular(a->unit(), r), std::invalid_argument);
  CHECK(ideal_times_module(r, {z1}).dim() == 4);
  CHECK(annihilator_even(r).dim() == 0);
}

TEST_CASE("annihilator of a quotient module") {
  const AlgebraPtr a = compiled(grassmann(2));
  const SuperModule r = SuperModule::regular(a);
  // K = A / (z1, z2): every even element without constant term kills it.
  const SuperModule k = quotient(r, submodule_generated(r, {a->generator("z1").value, a->generator("z2").value}));
  CHECK(k.dim() == 1);
  CHECK(annihilator_even(k).dim() == 1);
}

TEST_CASE("random modules satisfy the axioms") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const AlgebraPtr a = compiled(random_presentation(rng, Field::rationals(), 8));
    const SuperModule m = random_module(rng, a);
    CHECK(check_module(m));
    CHECK(check_module(parity_shift(m)));
  }
}
