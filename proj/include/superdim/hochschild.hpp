#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "superdim/smodule.hpp"

namespace superdim {

/// Homogeneous multilinear map A^{n+1} -> M stored by its values on basis
/// tuples.  Column index of (b_0, ..., b_n) has b_0 most significant.
struct Cochain {
  int n = 0;
  Parity parity = Parity::even;
  Index dim_a = 0;
  Index dim_m = 0;
  Matrix table;

  static Cochain zero(int n, Parity parity, Index dim_a, Index dim_m);

  int arity() const { return n + 1; }
  Index tuple_count() const { return table.cols(); }
  Index column(const std::vector<Index>& args) const;
  std::vector<Index> tuple(Index column) const;
  auto value(const std::vector<Index>& args) const { return table.col(column(args)); }
  void set(const std::vector<Index>& args, const Vector& v) { table.col(column(args)) = v; }
  /// Multilinear extension to arbitrary arguments.
  Vector evaluate(const std::vector<Vector>& args) const;

  friend bool operator==(const Cochain& a, const Cochain& b);
};

/// How M is made into a bimodule: m a = (-1)^{|a||m|} a m, or, for M = A,
/// the algebra product itself.
enum class RightAction { symmetric, regular };

/// Values have parity |f| + sum |b_i| on every basis tuple.
bool is_homogeneous(const Cochain& f, const SuperModule& m);

/// delta_n(f).  Throws std::invalid_argument if f is not homogeneous or its
/// shape does not match (A, M).
Cochain coboundary(const Cochain& f, const SuperModule& m, RightAction right = RightAction::symmetric);

/// Unit condition, reversal symmetry and, in characteristic 2, vanishing on
/// odd diagonals.
bool is_in_C(const Cochain& f, const SuperModule& m);

/// Odd super-skew pi : A x A -> A.
struct ExtensionDatum {
  Cochain pi;

  /// Throws std::invalid_argument unless pi is odd, has n = 1, targets A
  /// and is super-skew.
  static ExtensionDatum make(Cochain pi, const Algebra& a);
};

/// Super-skew symmetry on basis pairs, plus pi(a,a) = 0 for odd a.
bool is_super_skew(const Cochain& pi, const Algebra& a);

/// pi(1,a) = 0 and pi(ab,c) - pi(a,bc) + pi(a,b)c - (-1)^{|a|} a pi(b,c) = 0.
bool is_cocycle_pi(const ExtensionDatum& pi, const Algebra& a);

/// A (+) Pi A with the twisted product.  Basis: A's basis, then Pi(b) for
/// each basis element b.  Generators: A's generators and y = Pi(1).
/// Throws std::invalid_argument if pi is not a cocycle.
AlgebraPtr build_A_pi(const AlgebraPtr& a, const ExtensionDatum& pi);
/// Same product without the cocycle check.
AlgebraPtr build_A_pi_unchecked(const AlgebraPtr& a, const ExtensionDatum& pi);

/// Linear map phi with phi(x * y) = phi(x) * phi(y) on all basis pairs,
/// phi(1) = 1, and phi bijective.
bool is_algebra_map_isomorphism(const Matrix& phi, const Algebra& source, const Algebra& target);

/// Odd f in C^0(A,A) with pi' - pi = delta_0(f), or nullopt.  A returned f
/// has been checked to give the adapted isomorphism a -> a + Pi f(a).
std::optional<Cochain> adapted_equivalence(const ExtensionDatum& pi, const ExtensionDatum& pi_prime,
                                           const AlgebraPtr& a);

/// Basis of the parity-p part of C^n(A, M).
std::vector<Cochain> c_basis(const SuperModule& m, int n, Parity p);

/// (even, odd) dimensions of SH^n(A, M).  Throws std::length_error when
/// dim M * dim A^{n+2} exceeds max_entries and std::logic_error if
/// delta delta != 0 on C^{n-1}.
std::pair<Index, Index> sh_dim(const SuperModule& m, int n, Index max_entries = 200000);

}  // namespace superdim
