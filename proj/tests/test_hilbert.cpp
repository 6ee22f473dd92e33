#include <doctest.h>

#include <random>

#include "superdim/hilbert.hpp"
#include "test_support.hpp"

using namespace superdim;
using namespace superdim::testing;

namespace {

Presentation free_super(int d, int s) {
  GeneratorList g;
  for (int i = 1; i <= d; ++i) g.push_back(GeneratorSpec::make("X" + std::to_string(i), Parity::even));
  for (int i = 1; i <= s; ++i) g.push_back(GeneratorSpec::make("Y" + std::to_string(i), Parity::odd));
  return Presentation("free", Field::rationals(), Flavor::supercommutative, g);
}

std::vector<mpq_class> q(std::initializer_list<long> v) {
  std::vector<mpq_class> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("fit_polynomial examples") {
  auto c = fit_polynomial(q({1, 1, 1, 1}), 1);
  REQUIRE(c);
  CHECK(c->degree == 0);
  CHECK(c->coefficients == q({1}));
  CHECK(c->threshold == 0);

  auto t = fit_polynomial(q({1, 3, 6, 10, 15, 21}), 2);
  REQUIRE(t);
  CHECK(t->degree == 2);
  CHECK(t->coefficients == std::vector<mpq_class>{1, mpq_class(3, 2), mpq_class(1, 2)});
  CHECK(t->to_string() == "1/2*x^2 + 3/2*x + 1");

  CHECK_FALSE(fit_polynomial(q({1, 2, 4, 8}), 1));
  CHECK_FALSE(fit_polynomial(q({1, 2, 4, 8}), 2));

  auto late = fit_polynomial(q({5, 0, 2, 2, 2, 2}), 1);
  REQUIRE(late);
  CHECK(late->threshold == 2);
  CHECK(late->degree == 0);

  auto zero = fit_polynomial(q({0, 0, 0}), 1);
  REQUIRE(zero);
  CHECK(zero->degree == -1);
  CHECK(zero->to_string() == "0");
}

TEST_CASE("fitted polynomials reproduce random polynomial tails") {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const int deg = static_cast<int>(rng() % 4);
    std::vector<mpq_class> coeff;
    for (int i = 0; i <= deg; ++i) coeff.emplace_back(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
    for (auto& c : coeff) c.canonicalize();
    if (sgn(coeff.back()) == 0) coeff.back() = 1;
    std::vector<mpq_class> values;
    for (int x = 0; x <= 10; ++x) {
      mpq_class v = 0;
      for (int i = deg; i >= 0; --i) v = v * x + coeff[static_cast<std::size_t>(i)];
      v.canonicalize();
      values.push_back(v);
    }
    auto f = fit_polynomial(values, 3);
    REQUIRE(f);
    CHECK(f->degree == deg);
    CHECK(f->coefficients == coeff);
    for (int x = 0; x <= 10; ++x) CHECK((*f)(x) == values[static_cast<std::size_t>(x)]);
  }
}

TEST_CASE("free bigraded algebras match the binomial oracle") {
  const std::pair<int, int> cases[] = {{1, 1}, {2, 3}, {3, 2}, {2, 0}, {0, 2}};
  for (auto [d, s] : cases) {
    const Presentation p = free_super(d, s);
    const BigradedTable t = bigraded_dims(p);
    CHECK(t.kmax == 12);
    CHECK(t.lmax == s);
    for (int l = 0; l <= s; ++l) {
      for (int k = 0; k <= 12; ++k) {
        const Index even = d == 0 ? (k == 0 ? 1 : 0) : binomial(k + d - 1, d - 1);
        CHECK(t.at(k, l) == even * binomial(s, l));
      }
    }
    const HilbertPolynomial hp = hilbert_polynomial(t, d);
    REQUIRE(hp.stabilized());
    for (const auto& row : hp.rows) CHECK(row->degree == d);
    CHECK(sdim_from_hilbert(hp) == SuperDimension{false, d, s});
    CHECK(hilbert_report(hp).passed());
  }
}

TEST_CASE("K[X | Y]/(XY)") {
  Presentation p = free_super(1, 1);
  p.relations.push_back(multiply(p.gen("X1"), p.gen("Y1")));
  const BigradedTable t = bigraded_dims(p);
  for (int k = 0; k <= 12; ++k) {
    CHECK(t.at(k, 0) == 1);
    CHECK(t.at(k, 1) == (k == 0 ? 1 : 0));
  }
  const HilbertPolynomial hp = hilbert_polynomial(t, 1);
  CHECK(hp.rows[0]->degree == 1);
  CHECK(hp.rows[1]->degree == 0);
  CHECK(sdim_from_hilbert(hp) == SuperDimension{false, 1, 0});
}

TEST_CASE("degenerate presentations") {
  const Presentation none("K", Field::rationals(), Flavor::supercommutative, {});
  const BigradedTable t = bigraded_dims(none, 3, 0);
  CHECK(t.dims == std::vector<std::vector<Index>>{{1, 0, 0, 0}});

  Presentation bad = free_super(1, 1);
  bad.relations.push_back(bad.gen("X1") + multiply(bad.gen("X1"), bad.gen("X1")));
  CHECK_THROWS_AS(bigraded_dims(bad), std::invalid_argument);

  const HilbertPolynomial short_table = hilbert_polynomial(bigraded_dims(free_super(2, 1), 2, 1), 2);
  CHECK_FALSE(short_table.stabilized());
  CHECK_THROWS_AS(sdim_from_hilbert(short_table), std::domain_error);
  CHECK_FALSE(hilbert_report(short_table).passed());

  CHECK(sdim_from_hilbert(hilbert_polynomial(bigraded_dims(free_super(1, 0)), 1)) == SuperDimension{false, 1, 0});
}

TEST_CASE("row sums agree with the total-degree compile") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    Presentation p = random_presentation(rng, Field::rationals(), 40);
    std::erase_if(p.relations, [](const SuperPolynomial& r) { return !r.homogeneous_bidegree(); });
    const Algebra a = compile(p);
    int odd = 0;
    for (const auto& g : *p.generators) odd += g.parity == Parity::odd;
    const BigradedTable t = bigraded_dims(p, *p.cap, odd);
    for (int n = 0; n <= *p.cap; ++n) {
      Index bigraded = 0;
      for (int l = 0; l <= std::min(n, odd); ++l) bigraded += t.at(n - l, l);
      Index compiled_count = 0;
      for (const auto& b : a.basis()) compiled_count += b.bidegree.total() == n;
      CHECK(bigraded == compiled_count);
    }
    for (int l = 0; l <= odd; ++l) {
      for (int k = 0; k + l <= *p.cap; ++k) {
        Index count = 0;
        for (const auto& b : a.basis()) count += b.bidegree.k == k && b.bidegree.l == l;
        CHECK(t.at(k, l) == count);
      }
    }
  }
}

TEST_CASE("degrees never exceed the number of even generators") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    Presentation p = free_super(1 + static_cast<int>(rng() % 2), 1 + static_cast<int>(rng() % 2));
    const Presentation shape = p;
    p.relations.push_back(random_homogeneous(rng, shape, 2, Parity::odd));
    if (p.relations.back().is_zero()) p.relations.pop_back();
    int d = 0;
    for (const auto& g : *p.generators) d += g.parity == Parity::even;
    const HilbertPolynomial hp = hilbert_polynomial(bigraded_dims(p), d);
    REQUIRE(hp.stabilized());
    for (const auto& row : hp.rows) CHECK(row->degree <= d);
  }
}
