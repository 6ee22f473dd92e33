#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "superdim/algebra.hpp"

namespace superdim {

/// Finite-dimensional left supermodule.  The action is stored for every
/// algebra basis element; rho(b) is a dim x dim matrix.
class SuperModule {
 public:
  SuperModule(AlgebraPtr algebra, std::vector<std::string> names, std::vector<Parity> parities,
              std::vector<Matrix> basis_action);

  static SuperModule zero(AlgebraPtr algebra);
  /// A acting on itself by left multiplication.
  static SuperModule regular(AlgebraPtr algebra);
  /// Extends generator matrices along the basis words of a presented
  /// algebra.  Throws std::logic_error if the algebra has no word data.
  static SuperModule from_generator_actions(AlgebraPtr algebra, std::vector<std::string> names,
                                            std::vector<Parity> parities, const std::vector<Matrix>& generator_action);

  const Algebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  Index dim() const { return static_cast<Index>(parities_.size()); }
  bool is_zero_module() const { return dim() == 0; }
  const std::vector<Parity>& parities() const { return parities_; }
  Parity parity(Index i) const { return parities_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& names() const { return names_; }
  /// rho(basis element b).
  const Matrix& action(Index b) const { return action_[static_cast<std::size_t>(b)]; }
  /// rho(a) for an arbitrary element.
  Matrix action_of(const Vector& a) const;
  Vector act(const Vector& a, const Vector& m) const;
  Vector basis_vector(Index i) const;

  friend bool operator==(const SuperModule& a, const SuperModule& b);

 private:
  AlgebraPtr algebra_;
  std::vector<std::string> names_;
  std::vector<Parity> parities_;
  std::vector<Matrix> action_;
};

/// Reason the module axioms fail, or nullopt.  Checks unit action, parity
/// blocks and rho(g) rho(b) = rho(g b) for generators g (all basis pairs if
/// the algebra lists no generators).  Throws std::invalid_argument on
/// matrix size mismatch.
std::optional<std::string> module_defect(const SuperModule& m);
inline bool check_module(const SuperModule& m) { return !module_defect(m); }

SuperModule parity_shift(const SuperModule& m);
/// Throws std::invalid_argument unless both modules share the algebra.
SuperModule direct_sum(const SuperModule& m, const SuperModule& n);

/// Smallest submodule containing the given vectors.
Subspace<Scalar> submodule_generated(const SuperModule& m, const std::vector<Vector>& vectors);
/// A-submodule generated by S.M for a subspace S of A.
Subspace<Scalar> product_subspace(const SuperModule& m, const Subspace<Scalar>& s);
bool is_submodule(const SuperModule& m, const Subspace<Scalar>& n);

/// Module structure on a submodule, basis = echelon basis of n.  Throws
/// std::invalid_argument unless n is graded and action-closed.
SuperModule restrict_to(const SuperModule& m, const Subspace<Scalar>& n);
SuperModule product_submodule(const SuperModule& m, const Subspace<Scalar>& s);
/// M/N on the non-pivot complement.  Throws std::invalid_argument unless N is
/// a graded submodule.
SuperModule quotient(const SuperModule& m, const Subspace<Scalar>& n);

/// {a in A_0 : a.M = 0}.
Subspace<Scalar> annihilator_even(const SuperModule& m);

/// ker(y) = yM on M.  Throws std::invalid_argument if y is not odd.
bool is_odd_regular(const Vector& y, const SuperModule& m);
bool is_regular_sequence(const std::vector<Vector>& ys, const SuperModule& m);
/// Submodule generated by y_1 M + ... + y_t M.
Subspace<Scalar> ideal_times_module(const SuperModule& m, const std::vector<Vector>& ys);

}  // namespace superdim
