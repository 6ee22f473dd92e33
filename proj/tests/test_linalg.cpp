#include <doctest.h>

#include <random>

#include "superdim/linalg.hpp"

using namespace superdim;

namespace {

Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  Matrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (const auto& r : rows) {
    Index j = 0;
    for (long v : r) m(i, j++) = Scalar(v);
    ++i;
  }
  return m;
}

Vector vec(std::initializer_list<long> xs) {
  Vector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (long x : xs) v(i++) = Scalar(x);
  return v;
}

Matrix random_matrix(std::mt19937& rng, Index r, Index c) {
  std::uniform_int_distribution<int> d(-2, 2);
  Matrix m(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = Scalar(d(rng));
  return m;
}

}  // namespace

TEST_CASE("scalar arithmetic over Q and F_p") {
  Scalar a(mpq_class(1, 3));
  CHECK(a * Scalar(3) == Scalar(1));
  CHECK_THROWS_AS(Scalar(0).inverse(), std::domain_error);
  const Field f7 = Field::prime(7);
  CHECK(f7(3) * f7(5) == f7(1));
  CHECK(f7(3) + Scalar(4) == Scalar(0));
  CHECK(f7.element(mpq_class(1, 2)) == f7(4));
  CHECK_THROWS_AS(f7(1) + Field::prime(5)(1), std::domain_error);
  CHECK_THROWS_AS(Field::prime(9), std::invalid_argument);
  CHECK(Field::parse("F2").characteristic() == 2);
  CHECK(-Field::prime(2)(1) == Field::prime(2)(1));
}

TEST_CASE("rref examples") {
  Matrix id = Matrix::Identity(3, 3);
  auto r = rref(id);
  CHECK(r.matrix == id);
  CHECK(r.pivots == std::vector<Index>{0, 1, 2});

  auto z = rref(Matrix::Zero(2, 2).eval());
  CHECK(is_zero(z.matrix));
  CHECK(z.pivots.empty());

  auto h = rref(from_rows({{1, 2}, {2, 4}}));
  CHECK(h.matrix == from_rows({{1, 2}, {0, 0}}));
  CHECK(h.pivots == std::vector<Index>{0});
}

TEST_CASE("rank examples") {
  CHECK(rank(Matrix::Identity(4, 4).eval()) == 4);
  CHECK(rank(Matrix::Zero(3, 2).eval()) == 0);
  CHECK(rank(from_rows({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel_basis examples") {
  CHECK(kernel_basis(Matrix::Identity(3, 3).eval()).empty());
  CHECK(kernel_basis(Matrix::Zero(1, 3).eval()).size() == 3);
  auto k = kernel_basis(from_rows({{1, 1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == vec({-1, 1}));
}

TEST_CASE("in_span examples") {
  CHECK(in_span(std::vector<Vector>{}, vec({0, 0})));
  CHECK_FALSE(in_span({vec({1, 0})}, vec({0, 1})));
  CHECK(in_span({vec({1, 2}), vec({2, 4})}, vec({3, 6})));
  CHECK_THROWS_AS(in_span({vec({1, 2})}, vec({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("linear algebra properties on random matrices") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Index r = 1 + trial % 5;
    const Index c = 1 + (trial / 5) % 6;
    Matrix m = random_matrix(rng, r, c);
    auto once = rref(m);
    auto twice = rref(once.matrix);
    CHECK(twice.matrix == once.matrix);
    CHECK(twice.pivots == once.pivots);
    CHECK(rank(m) == rank(Matrix(m.transpose())));
    auto ker = kernel_basis(m);
    CHECK(static_cast<Index>(ker.size()) == c - rank(m));
    for (const auto& v : ker) CHECK(is_zero(product(m, Matrix(v))));
    Matrix kmat(c, static_cast<Index>(ker.size()));
    for (std::size_t j = 0; j < ker.size(); ++j) kmat.col(static_cast<Index>(j)) = ker[j];
    CHECK(rank(kmat) == static_cast<Index>(ker.size()));
    // solve returns a solution of a consistent system
    Vector x = random_matrix(rng, c, 1).col(0);
    Vector b = apply(m, x);
    auto sol = solve(m, b);
    REQUIRE(sol);
    CHECK(apply(m, *sol) == b);
  }
}

TEST_CASE("solve detects inconsistency") {
  CHECK_FALSE(solve(from_rows({{1, 1}, {2, 2}}), vec({1, 3})).has_value());
}

TEST_CASE("subspace and quotient") {
  auto s = Subspace<Scalar>::spanned_by(3, {vec({1, 1, 0}), vec({0, 1, 1})});
  CHECK(s.dim() == 2);
  CHECK(s.contains(vec({1, 0, -1})));
  CHECK_FALSE(s.contains(vec({1, 0, 0})));
  Quotient<Scalar> q(s);
  CHECK(q.dim() == 1);
  // classes of e0 and e1 agree modulo s only up to sign of e2 contributions
  CHECK(q.coordinates(vec({1, 1, 0})) == vec({0}));
  CHECK(q.coordinates(vec({1, 0, 0})) == q.coordinates(vec({0, 0, 1})));
  auto whole = Subspace<Scalar>::whole(3);
  Quotient<Scalar> q2(s, whole);
  CHECK(q2.dim() == 1);
  CHECK(q2.coordinates(q2.lift(vec({5}))) == vec({5}));
}
