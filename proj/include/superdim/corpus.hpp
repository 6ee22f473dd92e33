#pragma once

#include <string>
#include <vector>

#include "superdim/hochschild.hpp"
#include "superdim/report.hpp"
#include "superdim/smodule.hpp"

namespace superdim {

/// Antisymmetric t_{ijk}, 1 <= i,j,k <= 4, determined by t123, t124, t134,
/// t234.
struct EpsilonTensor {
  struct Entry {
    int sign = 0;  // 0 when two indices coincide
    std::string name;  // generator name of the sorted triple
  };

  static Entry at(int i, int j, int k);
};

/// Odd phi_i and even psi_i of degree 1, relations phi_i psi_i = psi_i phi_i,
/// phi_i phi_j = 0 and psi_i phi_j - phi_i psi_j - phi_j psi_i + psi_j phi_i
/// for i != j; cap 3.
Presentation c1_algebra_b(const Field& field);
/// Free odd Z1, Z2, Z3, Y; cap 4.
Presentation c1_ring(const Field& field);

struct C1 {
  AlgebraPtr b;
  AlgebraPtr r;
  /// B (+) Pi B with Y v = Pi v, Z_i v = phi_i v + Pi psi_i v,
  /// Z_i Pi v = -Pi phi_i v.
  SuperModule m;
};

C1 build_c1(const Field& field = Field::rationals());
Report verify_c1(const C1& c);

/// Even t123, t124, t134, t234 with all products t t = 0; odd Y1..Y4 with
/// all triple products Y Y Y = 0; cap 3.
Presentation c2_cover(const Field& field);
/// The cover modulo t_{skj} Y_i + t_{ski} Y_j and t_{ski} Y_i.
Presentation c2_quotient(const Field& field);

struct C2 {
  AlgebraPtr cover;  // A'
  AlgebraPtr a;      // A = A'/I
  Subspace<Scalar> ideal;
  /// pi' : A' x A' -> A.
  Cochain pi_prime;
  ExtensionDatum pi;
  AlgebraPtr r;  // A_pi
};

/// Throws std::logic_error if pi' does not vanish on I or pi is not a
/// cocycle.
C2 build_c2(const Field& field = Field::rationals());
/// The six elements t_{skj} Y_i + t_{ski} Y_j with distinct indices, in A'.
std::vector<Vector> c2_z_elements(const C2& c);
Report verify_c2(const C2& c);

Report verify_gr_example(const C1& c);
Report verify_flat_example(const C2& c);

/// "c1", "c2", "gr", "flat".
const std::vector<std::string>& corpus_case_names();
/// Builds and verifies one case.  Throws std::invalid_argument for an
/// unknown name.
Report run_corpus_case(const std::string& name, const Field& field = Field::rationals());

}  // namespace superdim
