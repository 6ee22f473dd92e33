#include <doctest.h>

#include <random>

#include "superdim/superpoly.hpp"

using namespace superdim;

namespace {

Context odd_context(int n) {
  GeneratorList g;
  for (int i = 1; i <= n; ++i) g.push_back(GeneratorSpec::make("Y" + std::to_string(i), Parity::odd));
  return std::make_shared<const GeneratorList>(g);
}

Context mixed_context() {
  return std::make_shared<const GeneratorList>(GeneratorList{
      GeneratorSpec::make("X1", Parity::even), GeneratorSpec::make("X2", Parity::even),
      GeneratorSpec::make("Y1", Parity::odd), GeneratorSpec::make("Y2", Parity::odd),
      GeneratorSpec::make("Y3", Parity::odd)});
}

SuperPolynomial gen(const Context& c, int i, Flavor f = Flavor::supercommutative) {
  return SuperPolynomial::generator(f, c, i);
}

}  // namespace

TEST_CASE("generator specs") {
  CHECK(GeneratorSpec::make("x", Parity::even).bidegree == Bidegree{1, 0});
  CHECK(GeneratorSpec::make("y", Parity::odd).bidegree == Bidegree{0, 1});
  CHECK_THROWS_AS(GeneratorSpec::make("y", Parity::even, Bidegree{0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(GeneratorSpec::make("y", Parity::odd, Bidegree{0, 0}), std::invalid_argument);
  CHECK_NOTHROW(GeneratorSpec::make("y", Parity::odd, Bidegree{1, 0}));
}

TEST_CASE("normalize examples") {
  auto ctx = odd_context(3);
  auto a = normalize(Flavor::supercommutative, {1, 0}, *ctx);
  REQUIRE(a);
  CHECK(a->sign == Scalar(-1));
  CHECK(a->monomial.letters() == std::vector<int>{0, 1});
  CHECK_FALSE(normalize(Flavor::supercommutative, {0, 0}, *ctx).has_value());
  auto c = normalize(Flavor::supercommutative, {2, 0, 1}, *ctx);
  REQUIRE(c);
  CHECK(c->sign == Scalar(1));
  CHECK(c->monomial.letters() == std::vector<int>{0, 1, 2});
  CHECK_THROWS_AS(normalize(Flavor::supercommutative, {7}, *ctx), std::out_of_range);
  // evens collect before odds, no sign
  auto mixed = mixed_context();
  auto m = normalize(Flavor::supercommutative, {3, 0, 2, 0}, *mixed);
  REQUIRE(m);
  CHECK(m->sign == Scalar(-1));
  CHECK(to_string(m->monomial, *mixed) == "X1^2*Y1*Y2");
  CHECK(m->monomial.even_exponents(*mixed) == std::vector<int>{2, 0, 0, 0, 0});
  CHECK(m->monomial.odd_indices(*mixed) == std::vector<int>{2, 3});
}

TEST_CASE("multiply examples") {
  auto ctx = odd_context(4);
  auto one = SuperPolynomial::constant(Flavor::supercommutative, ctx, Scalar(1));
  auto p = gen(ctx, 0) + gen(ctx, 2);
  CHECK(multiply(one, p) == p);
  auto s = gen(ctx, 0) + gen(ctx, 1);
  CHECK(multiply(s, s).is_zero());
  auto y12 = multiply(gen(ctx, 0), gen(ctx, 1));
  auto y34 = multiply(gen(ctx, 2), gen(ctx, 3));
  auto prod = multiply(y12, y34);
  REQUIRE(prod.terms().size() == 1);
  CHECK(prod.terms().begin()->second == Scalar(1));
  CHECK(prod.to_string() == "Y1*Y2*Y3*Y4");
  auto assoc = SuperPolynomial::generator(Flavor::associative, ctx, 0);
  CHECK_THROWS_AS(multiply(assoc, p), std::invalid_argument);
}

TEST_CASE("bidegree examples") {
  auto ctx = mixed_context();
  CHECK(bidegree(Monomial(Flavor::supercommutative, {}), *ctx) == Bidegree{0, 0});
  CHECK(bidegree(Monomial(Flavor::supercommutative, {0, 0, 2}), *ctx) == Bidegree{2, 1});
  GeneratorList b;
  for (int i = 1; i <= 3; ++i) b.push_back(GeneratorSpec::make("phi" + std::to_string(i), Parity::odd, Bidegree{1, 0}));
  for (int i = 1; i <= 3; ++i) b.push_back(GeneratorSpec::make("psi" + std::to_string(i), Parity::even));
  // psi1 * phi2
  CHECK(bidegree(Monomial(Flavor::associative, {3, 1}), b) == Bidegree{2, 0});
}

TEST_CASE("superpolynomial properties on random inputs") {
  auto ctx = mixed_context();
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> letter(0, 4), len(0, 3), coeff(-2, 2);
  auto random_monomial_poly = [&](std::optional<Parity> want) {
    for (;;) {
      SuperPolynomial p(Flavor::supercommutative, ctx);
      std::vector<int> word;
      for (int i = len(rng); i > 0; --i) word.push_back(letter(rng));
      auto n = normalize(Flavor::supercommutative, word, *ctx);
      if (!n) continue;
      if (want && parity(n->monomial, *ctx) != *want) continue;
      const int c = coeff(rng);
      p.add_term(n->monomial, Scalar(c == 0 ? 1 : c));
      return p;
    }
  };
  auto random_poly = [&]() {
    SuperPolynomial p(Flavor::supercommutative, ctx);
    for (int t = 0; t < 3; ++t) p += random_monomial_poly(std::nullopt);
    return p;
  };
  for (int trial = 0; trial < 60; ++trial) {
    auto a = random_poly(), b = random_poly(), c = random_poly();
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    const Parity pa = trial % 2 ? Parity::odd : Parity::even;
    const Parity pb = trial % 3 ? Parity::odd : Parity::even;
    auto x = random_monomial_poly(pa) + random_monomial_poly(pa);
    auto y = random_monomial_poly(pb);
    CHECK(multiply(x, y) == koszul(pa, pb) * multiply(y, x));
    auto u = random_monomial_poly(std::nullopt);
    auto v = random_monomial_poly(std::nullopt);
    auto uv = multiply(u, v);
    if (!uv.is_zero()) {
      CHECK(*uv.homogeneous_bidegree() == *u.homogeneous_bidegree() + *v.homogeneous_bidegree());
    }
    const Monomial& m = u.terms().begin()->first;
    auto again = normalize(Flavor::supercommutative, m.letters(), *ctx);
    REQUIRE(again);
    CHECK(again->sign == Scalar(1));
    CHECK(again->monomial == m);
  }
}
