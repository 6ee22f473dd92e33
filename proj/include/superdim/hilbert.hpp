#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "superdim/algebra.hpp"
#include "superdim/report.hpp"
#include "superdim/sdim.hpp"

namespace superdim {

/// dim B(k,l) for 0 <= k <= kmax, 0 <= l <= lmax.
struct BigradedTable {
  int kmax = 0;
  int lmax = 0;
  std::vector<std::vector<Index>> dims;  // dims[l][k]

  Index at(int k, int l) const { return dims[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)]; }
  /// sum_{t <= k} dim B(t,l) for k = 0..kmax.
  std::vector<Index> cumulative(int l) const;
};

/// Echelonizes the bihomogeneous ideal in every (k,l) box independently.
/// Throws std::invalid_argument for a relation that is not bihomogeneous.
BigradedTable bigraded_dims(const Presentation& p, int kmax, int lmax);
/// Defaults: kmax 12, lmax = number of odd generators.
BigradedTable bigraded_dims(const Presentation& p);

/// Exact polynomial with rational coefficients, lowest degree first.
struct FittedPolynomial {
  std::vector<mpq_class> coefficients;
  int degree = -1;  // -1 for the zero polynomial
  int threshold = 0;

  mpq_class operator()(const mpq_class& x) const;
  std::string to_string(const std::string& var = "x") const;
};

/// Smallest k0 such that values[k0..] agree with a polynomial of degree
/// <= dmax and the tail holds at least dmax + 2 points; nullopt otherwise.
std::optional<FittedPolynomial> fit_polynomial(const std::vector<mpq_class>& values, int dmax);
std::optional<FittedPolynomial> fit_polynomial(const std::vector<Index>& values, int dmax);

struct HilbertPolynomial {
  BigradedTable table;
  int dmax = 0;
  std::vector<std::optional<FittedPolynomial>> rows;  // g_l, or nullopt if not stabilized
  /// The caller vouches that the filtration behind the table is special, so
  /// the super-dimension read off the polynomial is asserted for the ring.
  bool special = false;

  bool stabilized() const;
};

HilbertPolynomial hilbert_polynomial(const BigradedTable& t, int dmax, bool special = false);

/// d = max deg g_l and the largest l with deg g_l = d.  Throws
/// std::domain_error if some row has not stabilized.
SuperDimension sdim_from_hilbert(const HilbertPolynomial& hp);

/// Table, fitted rows and the super-dimension as report values, with
/// clauses for stabilization and deg g_l <= d.
Report hilbert_report(const HilbertPolynomial& hp);

}  // namespace superdim
