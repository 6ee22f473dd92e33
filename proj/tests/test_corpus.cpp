#include <doctest.h>

#include <algorithm>
#include <array>
#include <numeric>

#include "superdim/corpus.hpp"
#include "superdim/graded.hpp"
#include "superdim/sdim.hpp"
#include "test_support.hpp"

using namespace superdim;
using namespace superdim::testing;

namespace {

const C1& c1() {
  static const C1 c = build_c1();
  return c;
}

const C2& c2() {
  static const C2 c = build_c2();
  return c;
}

void require_passed(const Report& r) {
  for (const auto& f : r.failures()) FAIL_CHECK(r.name << ": " << f.label << " " << f.detail);
  CHECK(r.passed());
}

}  // namespace

TEST_CASE("epsilon tensor is antisymmetric and vanishes on repeats") {
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      for (int k = 1; k <= 4; ++k) {
        const auto e = EpsilonTensor::at(i, j, k);
        if (i == j || j == k || i == k) {
          CHECK(e.sign == 0);
          continue;
        }
        std::array<int, 3> idx{i, j, k};
        std::array<int, 3> sorted = idx;
        std::sort(sorted.begin(), sorted.end());
        // Sign of the permutation by counting inversions.
        int inv = 0;
        for (int a = 0; a < 3; ++a)
          for (int b = a + 1; b < 3; ++b) inv += idx[a] > idx[b];
        CHECK(e.sign == (inv % 2 ? -1 : 1));
        CHECK(e.name == "t" + std::to_string(sorted[0]) + std::to_string(sorted[1]) + std::to_string(sorted[2]));
        CHECK(EpsilonTensor::at(j, i, k).sign == -e.sign);
        CHECK(EpsilonTensor::at(i, k, j).sign == -e.sign);
      }
    }
  }
  CHECK_THROWS_AS(EpsilonTensor::at(0, 1, 2), std::out_of_range);
}

TEST_CASE("c1: B matches the shared presentation and the spanning-set oracle") {
  CHECK(c1_algebra_b(Field::rationals()) == algebra_b(Field::rationals()));
  const auto dims = degree_dimensions_by_brute_force(algebra_b(Field::rationals()));
  const Index total = std::accumulate(dims.begin(), dims.end(), Index{0});
  CHECK(dims == std::vector<Index>{1, 6, 21, 73});
  CHECK(total == 101);
  CHECK(c1().b->dim() == total);
  CHECK(c1().m.dim() == 2 * total);
}

TEST_CASE("c1: counterexample to extending an odd regular element") {
  const Report r = verify_c1(c1());
  require_passed(r);
  CHECK(r.values["sdim"] == Json{{"even", 0}, {"odd", 3}});
  CHECK(r.values["sdim1_M_mod_YM"] == 1);
}

TEST_CASE("c1: phi1 psi2 phi3 and the two degree-3 consequences of the mixed relations") {
  const C1& c = c1();
  const auto& p = c.b->presentation();
  const Vector w = c.b->reduce(multiply(multiply(p.gen("phi1"), p.gen("psi2")), p.gen("phi3")));
  CHECK_FALSE(is_zero(w));
  // phi1 (mixed 2,3) and (mixed 1,2) phi3 reduce to
  // phi1 psi2 phi3 + phi1 psi3 phi2 and -phi2 psi1 phi3 - phi1 psi2 phi3.
  const Vector a = c.b->reduce(multiply(multiply(p.gen("phi1"), p.gen("psi3")), p.gen("phi2")));
  const Vector b = c.b->reduce(multiply(multiply(p.gen("phi2"), p.gen("psi1")), p.gen("phi3")));
  CHECK(w == -a);
  CHECK(w == -b);
}

TEST_CASE("c1 over F_3 behaves like over Q") {
  const C1 c = build_c1(Field::prime(3));
  CHECK(c.b->dim() == 101);
  require_passed(verify_c1(c));
}

TEST_CASE("c2: cover and quotient dimensions") {
  const C2& c = c2();
  CHECK(c.cover->dim() == 55);
  CHECK(compile(c2_cover(Field::rationals())).dim() == (1 + 4) * (1 + 4 + 6));
  CHECK(c.a->dim() == 16);
  CHECK(c.ideal.dim() == 39);
  CHECK(c.r->dim() == 32);
  CHECK(is_two_sided_ideal(*c.cover, c.ideal));
}

TEST_CASE("c2: z elements and the class of t123 Y4") {
  const C2& c = c2();
  const auto z = c2_z_elements(c);
  REQUIRE(z.size() == 6);
  const auto& p = c.cover->presentation();
  auto v = [&](const char* t, const char* y) { return c.cover->reduce(multiply(p.gen(t), p.gen(y))); };
  const Vector v1 = v("t234", "Y1"), v2 = v("t134", "Y2"), v3 = v("t124", "Y3"), v4 = v("t123", "Y4");
  CHECK(z[0] == -v2 - v3);
  CHECK(z[1] == v2 - v4);
  CHECK(z[2] == v3 + v4);
  CHECK(z[3] == v1 + v4);
  CHECK(z[4] == -v1 + v3);
  CHECK(z[5] == v1 + v2);
  for (const auto& zi : z) CHECK(c.ideal.contains(zi));
  CHECK_FALSE(c.ideal.contains(v4));
}

TEST_CASE("c2: non-split extension with sdim 0|4") {
  const Report r = verify_c2(c2());
  require_passed(r);
  CHECK(r.values["sdim"] == Json{{"even", 0}, {"odd", 4}});
  CHECK(r.values["sdim1_R_mod_Ry"] == 2);
}

TEST_CASE("c2: A_pi is an associative supercommutative algebra with quotient A") {
  const C2& c = c2();
  CHECK(is_associative(*c.r));
  CHECK(is_supercommutative(*c.r));
  CHECK(unit_is_identity(*c.r));
  const Vector y = c.r->generator("y").value;
  const SuperModule reg = SuperModule::regular(c.r);
  CHECK(reg.dim() - ideal_times_module(reg, {y}).dim() == c.a->dim());
}

TEST_CASE("c2: a corrupted pi is rejected") {
  const C2& c = c2();
  Cochain bad = c.pi.pi;
  // Move the (Y_iY_j, Y_k) values onto a wrong sign for one triple.
  const Index y12 = c.a->basis_index("Y1*Y2");
  const Index y3 = c.a->basis_index("Y3");
  REQUIRE(y12 >= 0);
  REQUIRE(y3 >= 0);
  const Vector v = bad.value({y12, y3});
  REQUIRE_FALSE(is_zero(v));
  bad.set({y12, y3}, -v);
  bad.set({y3, y12}, -v);
  const auto datum = ExtensionDatum::make(bad, *c.a);
  CHECK_FALSE(is_cocycle_pi(datum, *c.a));
  CHECK_FALSE(is_associative(*build_A_pi_unchecked(c.a, datum)));
  CHECK_THROWS_AS(build_A_pi(c.a, datum), std::invalid_argument);
}

TEST_CASE("gr example: sdim1 drops from 3 to 2 for I = RY") {
  const Report r = verify_gr_example(c1());
  require_passed(r);
  CHECK(r.values["sdim1_gr_M"] == 2);
  CHECK(r.values["sdim1_gr_IR_M"] == 3);
  const Report cmp = verify_graded_comparison(c1().m, ideal_generated(*c1().r, {c1().r->generator("Y").value}));
  CHECK(cmp.passed());
}

TEST_CASE("flat example") {
  const Report r = verify_flat_example(c2());
  require_passed(r);
  CHECK(r.values["rank_y"] == 16);
  CHECK(r.values["grassmann_quotient_sdim1"] == Json{0, 1, 2});
}

TEST_CASE("corpus reports are deterministic") {
  for (const auto& name : corpus_case_names()) {
    CHECK(to_json(run_corpus_case(name)).dump() == to_json(run_corpus_case(name)).dump());
  }
  CHECK_THROWS_AS(run_corpus_case("c3"), std::invalid_argument);
}
