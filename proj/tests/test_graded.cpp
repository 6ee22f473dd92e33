#include <doctest.h>

#include <random>

#include "superdim/graded.hpp"
#include "superdim/sdim.hpp"
#include "test_support.hpp"

using namespace superdim;
using namespace superdim::testing;

namespace {

std::vector<Index> component_dims(const GradedAlgebra& g) {
  std::vector<Index> out;
  for (const auto& c : g.components) out.push_back(c.dim());
  return out;
}

}  // namespace

TEST_CASE("gr of the zero ideal sits in degree 0") {
  const AlgebraPtr a = compiled(grassmann(2));
  const GradedAlgebra g = gr(a, Subspace<Scalar>(a->dim()));
  CHECK(component_dims(g) == std::vector<Index>{4});
  CHECK(is_associative(*g.algebra));
  CHECK(is_supercommutative(*g.algebra));
  const BigradedAlgebra b = bgr(a, Subspace<Scalar>(a->dim()));
  CHECK(b.components.size() == 1);
  CHECK(b.component_dim(0, 0) == 4);
}

TEST_CASE("odd radical filtration of Lambda(z1,z2)") {
  const AlgebraPtr a = compiled(grassmann(2));
  const auto ir = odd_radical(*a);
  CHECK(ir.dim() == 3);
  const GradedAlgebra g = gr(a, ir);
  CHECK(component_dims(g) == std::vector<Index>{1, 2, 1});
  CHECK(unit_is_identity(*g.algebra));
  const BigradedAlgebra b = bgr(a, ir);
  CHECK(b.component_dim(0, 0) == 1);
  CHECK(b.component_dim(0, 1) == 2);
  CHECK(b.component_dim(0, 2) == 1);
  // z1 z2 lies in I_0, so it also survives in bidegree (1,0).
  CHECK(b.component_dim(1, 0) == 1);
  CHECK(b.surjects_onto(g));
}

TEST_CASE("bgr of an ideal with no even part lives at k = 0") {
  GeneratorList gens{GeneratorSpec::make("x", Parity::even), GeneratorSpec::make("z", Parity::odd)};
  Presentation p("A", Field::rationals(), Flavor::supercommutative, gens, 2);
  p.relations.push_back(multiply(p.gen("x"), p.gen("x")));
  const AlgebraPtr a = compiled(p);
  const auto ideal = ideal_generated(*a, {a->generator("z").value});
  REQUIRE(parity_part(*a, ideal, Parity::even).dim() == 0);
  const BigradedAlgebra b = bgr(a, ideal);
  for (const auto& [d, q] : b.components) CHECK(d.first == 0);
  CHECK(b.component_dim(0, 0) == 2);
  CHECK(b.component_dim(0, 1) == 2);
}

TEST_CASE("odd radical of a purely even algebra is zero") {
  Presentation p("K[x]/(x^3)", Field::rationals(), Flavor::supercommutative, {GeneratorSpec::make("x", Parity::even)}, 2);
  const AlgebraPtr a = compiled(p);
  CHECK(odd_radical(*a).dim() == 0);
}

TEST_CASE("ideal_powers rejects non-ideals and non-nilpotent ideals") {
  const AlgebraPtr a = compiled(grassmann(2));
  Subspace<Scalar> s(a->dim());
  s.insert(a->generator("z1").value);
  CHECK_THROWS_AS(ideal_powers(*a, s), std::invalid_argument);
  CHECK_THROWS_AS(ideal_powers(*a, Subspace<Scalar>::whole(a->dim())), std::domain_error);
}

TEST_CASE("gr multiplication does not depend on representatives") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 15; ++trial) {
    const AlgebraPtr a = compiled(random_presentation(rng, Field::rationals(), 10));
    const auto ideal = random_nilpotent_ideal(rng, *a);
    const GradedAlgebra g = gr(a, ideal);
    for (int n = 0; n <= g.top_degree(); ++n) {
      for (int m = 0; n + m <= g.top_degree(); ++m) {
        for (Index i = 0; i < g.component_dim(n); ++i) {
          for (Index j = 0; j < g.component_dim(m); ++j) {
            const Vector x = g.components[static_cast<std::size_t>(n)].representative(i);
            const Vector y = g.components[static_cast<std::size_t>(m)].representative(j);
            // Shift both representatives by elements of the next power.
            Vector dx = Vector::Zero(a->dim()), dy = Vector::Zero(a->dim());
            const auto& px = g.powers[static_cast<std::size_t>(n) + 1];
            const auto& py = g.powers[static_cast<std::size_t>(m) + 1];
            for (Index k = 0; k < px.dim(); ++k) dx += Scalar(static_cast<int>(rng() % 3) - 1) * px.basis(k);
            for (Index k = 0; k < py.dim(); ++k) dy += Scalar(static_cast<int>(rng() % 3) - 1) * py.basis(k);
            const Vector lhs = g.class_of(a->mult(x, y), n + m);
            const Vector rhs = g.class_of(a->mult(x + dx, y + dy), n + m);
            CHECK(is_zero((lhs - rhs).eval()));
          }
        }
      }
    }
  }
}

TEST_CASE("gr(n) is spanned by products of gr(1)") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 15; ++trial) {
    const AlgebraPtr a = compiled(random_presentation(rng, Field::rationals(), 10));
    const GradedAlgebra g = gr(a, random_nilpotent_ideal(rng, *a));
    if (g.top_degree() < 1) continue;
    const Algebra& ga = *g.algebra;
    Subspace<Scalar> one(ga.dim());
    for (Index j = 0; j < g.component_dim(1); ++j) one.insert(ga.basis_vector(g.offsets[1] + j));
    Subspace<Scalar> power = one;
    for (int n = 2; n <= g.top_degree(); ++n) {
      power = product_span(ga, one, power);
      CHECK(power.dim() == g.component_dim(n));
    }
  }
}

TEST_CASE("graded comparison on random (A, M, I)") {
  std::mt19937 rng(17);
  int radical_cases = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const AlgebraPtr a = compiled(random_presentation(rng, Field::rationals(), 10));
    const SuperModule m = random_module(rng, a);
    const auto ideal = trial % 4 == 0 ? odd_radical(*a) : random_nilpotent_ideal(rng, *a);
    const GradedAlgebra g = gr(a, ideal);
    CHECK(is_associative(*g.algebra));
    CHECK(is_supercommutative(*g.algebra));
    CHECK(unit_is_identity(*g.algebra));
    const GradedModule gm = gr_module(m, g);
    CHECK(check_module(gm.module));
    const Report r = verify_graded_comparison(m, ideal);
    CHECK_MESSAGE(r.passed(), to_json(r).dump());
    radical_cases += r.values["ideal_is_odd_radical"].get<bool>();

    const BigradedAlgebra b = bgr(a, ideal);
    CHECK(b.surjects_onto(g));
    for (int n = 0; n <= g.top_degree(); ++n) {
      Index sum = 0;
      for (const auto& [d, q] : b.components) {
        if (d.first + d.second == n) sum += q.dim();
      }
      CHECK(sum >= g.component_dim(n));
    }
    CHECK(is_associative(*b.algebra));
    CHECK(unit_is_identity(*b.algebra));
    CHECK(check_module(bgr_module(m, b).module));
  }
  CHECK(radical_cases >= 10);
}
