#pragma once

#include <map>
#include <utility>
#include <vector>

#include "superdim/report.hpp"
#include "superdim/smodule.hpp"

namespace superdim {

/// I^0 = A, I^1 = I, ..., ending with the first zero power.  Throws
/// std::invalid_argument if I is not a two-sided ideal and std::domain_error
/// if it is not nilpotent.
std::vector<Subspace<Scalar>> ideal_powers(const Algebra& a, const Subspace<Scalar>& ideal);

/// I_R = A A_1.
Subspace<Scalar> odd_radical(const Algebra& a);

/// gr_I(A) = sum_n I^n/I^{n+1} as an algebra.  Basis elements are grouped by
/// degree n; BasisElement::bidegree holds (n, 0).
struct GradedAlgebra {
  AlgebraPtr source;
  std::vector<Subspace<Scalar>> powers;
  std::vector<Quotient<Scalar>> components;
  std::vector<Index> offsets;
  AlgebraPtr algebra;

  int top_degree() const { return static_cast<int>(components.size()) - 1; }
  Index component_dim(int n) const;
  /// Class in gr(n) of an element of I^n, as a vector of gr_I(A).
  Vector class_of(const Vector& a, int n) const;
};

GradedAlgebra gr(AlgebraPtr a, const Subspace<Scalar>& ideal);

struct GradedModule {
  std::vector<Subspace<Scalar>> filtration;  // I^n M
  std::vector<Quotient<Scalar>> components;
  std::vector<Index> offsets;
  SuperModule module;

  Index component_dim(int n) const;
};

GradedModule gr_module(const SuperModule& m, const GradedAlgebra& g);

using BidegreeIndex = std::pair<int, int>;

/// bgr_I(A): components I_{k,l}/(I_{k+1,l} + I_{k,l+1}) with
/// I_{k,l} = I_0^k I_1^l A.  BasisElement::bidegree holds (k, l).
struct BigradedAlgebra {
  AlgebraPtr source;
  std::map<BidegreeIndex, Subspace<Scalar>> filtration;
  std::map<BidegreeIndex, Quotient<Scalar>> components;
  std::map<BidegreeIndex, Index> offsets;
  AlgebraPtr algebra;

  Index component_dim(int k, int l) const;
  /// Whether sum_{k+l=n} bgr(k,l) -> gr(n) is onto for every n.
  bool surjects_onto(const GradedAlgebra& g) const;
};

BigradedAlgebra bgr(AlgebraPtr a, const Subspace<Scalar>& ideal);

struct BigradedModule {
  std::map<BidegreeIndex, Subspace<Scalar>> filtration;
  std::map<BidegreeIndex, Quotient<Scalar>> components;
  std::map<BidegreeIndex, Index> offsets;
  SuperModule module;

  Index component_dim(int k, int l) const;
};

BigradedModule bgr_module(const SuperModule& m, const BigradedAlgebra& b);

/// sdim_0 preservation, sdim_1(M) >= sdim_1(gr_I M), equality for I = I_R and
/// dimension conservation.
Report verify_graded_comparison(const SuperModule& m, const Subspace<Scalar>& ideal);

}  // namespace superdim
