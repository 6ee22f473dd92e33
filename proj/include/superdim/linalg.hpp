#pragma once

// Exact dense linear algebra over a field type T (Scalar in practice).
// Every routine is exact: no pivoting by magnitude, zero tests are exact.

#include <algorithm>
#include <cassert>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "superdim/field.hpp"

namespace superdim {

using Index = Eigen::Index;

template <typename T>
using MatrixX = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <typename T>
using VectorX = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using Matrix = MatrixX<Scalar>;
using Vector = VectorX<Scalar>;

template <typename T>
  requires(!std::is_base_of_v<Eigen::EigenBase<T>, T>)
bool is_zero(const T& x) {
  return x == T(0);
}
inline bool is_zero(const Scalar& x) { return x.is_zero(); }

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (!is_zero(m(i, j))) return false;
    }
  }
  return true;
}

template <typename T>
VectorX<T> unit_vector(Index n, Index i) {
  VectorX<T> v = VectorX<T>::Zero(n);
  v(i) = T(1);
  return v;
}

template <typename T>
struct Rref {
  MatrixX<T> matrix;
  std::vector<Index> pivots;
};

/// Reduced row echelon form with its strictly increasing pivot columns.
template <typename Derived>
Rref<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& input) {
  using T = typename Derived::Scalar;
  MatrixX<T> m = input;
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index found = -1;
    for (Index r = row; r < m.rows(); ++r) {
      if (!is_zero(m(r, col))) {
        found = r;
        break;
      }
    }
    if (found < 0) continue;
    if (found != row) m.row(found).swap(m.row(row));
    const T inv = T(1) / m(row, col);
    for (Index c = col; c < m.cols(); ++c) {
      if (!is_zero(m(row, c))) m(row, c) *= inv;
    }
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const T factor = m(r, col);
      for (Index c = col; c < m.cols(); ++c) {
        if (!is_zero(m(row, c))) m(r, c) -= factor * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return static_cast<Index>(rref(m).pivots.size());
}

/// Row-space echelon basis maintained in reduced form.  Rows are sorted by
/// pivot and each row vanishes at every other row's pivot, so reduce() gives
/// the canonical representative of a coset.
template <typename T>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(Index ambient) : ambient_(ambient) {}

  static Subspace spanned_by(Index ambient, const std::vector<VectorX<T>>& vectors) {
    Subspace s(ambient);
    for (const auto& v : vectors) s.insert(v);
    return s;
  }
  static Subspace whole(Index ambient) {
    Subspace s(ambient);
    for (Index i = 0; i < ambient; ++i) s.insert(unit_vector<T>(ambient, i));
    return s;
  }

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return static_cast<Index>(rows_.size()); }
  bool is_zero_space() const { return rows_.empty(); }
  const std::vector<Index>& pivots() const { return pivots_; }
  const VectorX<T>& basis(Index i) const { return rows_[static_cast<std::size_t>(i)].v; }
  std::vector<VectorX<T>> basis() const {
    std::vector<VectorX<T>> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(r.v);
    return out;
  }

  std::vector<Index> non_pivots() const {
    std::vector<Index> out;
    std::size_t k = 0;
    for (Index c = 0; c < ambient_; ++c) {
      if (k < pivots_.size() && pivots_[k] == c) {
        ++k;
      } else {
        out.push_back(c);
      }
    }
    return out;
  }

  VectorX<T> reduce(VectorX<T> v) const {
    check_length(v);
    for (const auto& row : rows_) {
      const T c = v(row.pivot);
      if (is_zero(c)) continue;
      for (Index idx : row.nz) v(idx) -= c * row.v(idx);
    }
    return v;
  }

  bool contains(const VectorX<T>& v) const { return is_zero(reduce(v)); }
  bool contains(const Subspace& other) const {
    for (const auto& r : other.rows_) {
      if (!contains(r.v)) return false;
    }
    return true;
  }

  /// Returns true when the dimension grew.
  bool insert(const VectorX<T>& v) {
    VectorX<T> r = reduce(v);
    Index pivot = -1;
    for (Index i = 0; i < r.size(); ++i) {
      if (!is_zero(r(i))) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return false;
    const T inv = T(1) / r(pivot);
    Row fresh;
    fresh.pivot = pivot;
    for (Index i = pivot; i < r.size(); ++i) {
      if (!is_zero(r(i))) {
        r(i) *= inv;
        fresh.nz.push_back(i);
      }
    }
    fresh.v = std::move(r);
    for (auto& row : rows_) {
      const T c = row.v(pivot);
      if (is_zero(c)) continue;
      for (Index idx : fresh.nz) row.v(idx) -= c * fresh.v(idx);
      row.refresh();
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    const auto offset = pos - pivots_.begin();
    pivots_.insert(pos, pivot);
    rows_.insert(rows_.begin() + offset, std::move(fresh));
    return true;
  }

  void insert_all(const Subspace& other) {
    for (const auto& r : other.rows_) insert(r.v);
  }

  /// Coefficients of v (assumed inside the subspace) on basis().
  VectorX<T> coordinates(const VectorX<T>& v) const {
    check_length(v);
    VectorX<T> c(dim());
    for (Index j = 0; j < dim(); ++j) c(j) = v(rows_[static_cast<std::size_t>(j)].pivot);
    return c;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_ || a.pivots_ != b.pivots_) return false;
    for (std::size_t i = 0; i < a.rows_.size(); ++i) {
      if (a.rows_[i].v != b.rows_[i].v) return false;
    }
    return true;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  struct Row {
    VectorX<T> v;
    Index pivot = 0;
    std::vector<Index> nz;
    void refresh() {
      nz.clear();
      for (Index i = 0; i < v.size(); ++i) {
        if (!is_zero(v(i))) nz.push_back(i);
      }
    }
  };

  void check_length(const VectorX<T>& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("vector length does not match subspace");
  }

  Index ambient_ = 0;
  std::vector<Row> rows_;
  std::vector<Index> pivots_;
};

/// numerator / denominator with explicit representatives.  Representatives
/// are the echelon basis of the numerator reduced modulo the denominator, so
/// the class of v is read off at their pivots after reducing v.
template <typename T>
class Quotient {
 public:
  Quotient() = default;

  /// ambient / denominator: representatives are the non-pivot unit vectors.
  explicit Quotient(Subspace<T> denominator) : den_(std::move(denominator)) {
    reps_ = Subspace<T>(den_.ambient_dim());
    for (Index c : den_.non_pivots()) reps_.insert(unit_vector<T>(den_.ambient_dim(), c));
  }

  Quotient(Subspace<T> denominator, const Subspace<T>& numerator) : den_(std::move(denominator)) {
    if (!numerator.contains(den_)) throw std::invalid_argument("quotient: denominator not contained in numerator");
    reps_ = Subspace<T>(den_.ambient_dim());
    for (const auto& b : numerator.basis()) reps_.insert(den_.reduce(b));
  }

  Index dim() const { return reps_.dim(); }
  Index ambient_dim() const { return den_.ambient_dim(); }
  const Subspace<T>& denominator() const { return den_; }
  const VectorX<T>& representative(Index i) const { return reps_.basis(i); }

  /// Class coordinates of v, which must lie in the numerator.
  VectorX<T> coordinates(const VectorX<T>& v) const { return reps_.coordinates(den_.reduce(v)); }

  VectorX<T> lift(const VectorX<T>& coords) const {
    VectorX<T> v = VectorX<T>::Zero(ambient_dim());
    for (Index i = 0; i < coords.size(); ++i) {
      if (!is_zero(coords(i))) v += coords(i) * reps_.basis(i);
    }
    return v;
  }

 private:
  Subspace<T> den_;
  Subspace<T> reps_;
};

/// Independent vectors spanning {x : m x = 0}; one per free column.
template <typename Derived>
std::vector<VectorX<typename Derived::Scalar>> kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  using T = typename Derived::Scalar;
  Subspace<T> rows(m.cols());
  for (Index i = 0; i < m.rows(); ++i) rows.insert(m.row(i).transpose());
  std::vector<VectorX<T>> out;
  const auto& pivots = rows.pivots();
  for (Index free : rows.non_pivots()) {
    VectorX<T> v = VectorX<T>::Zero(m.cols());
    v(free) = T(1);
    for (Index j = 0; j < rows.dim(); ++j) {
      const T& entry = rows.basis(j)(free);
      if (!is_zero(entry)) v(pivots[static_cast<std::size_t>(j)]) = -entry;
    }
    out.push_back(std::move(v));
  }
  return out;
}

/// Whether v is a linear combination of vs (rank comparison).
template <typename T>
bool in_span(const std::vector<VectorX<T>>& vs, const VectorX<T>& v) {
  for (const auto& w : vs) {
    if (w.size() != v.size()) throw std::invalid_argument("in_span: dimension mismatch");
  }
  MatrixX<T> a(v.size(), static_cast<Index>(vs.size()));
  for (std::size_t j = 0; j < vs.size(); ++j) a.col(static_cast<Index>(j)) = vs[j];
  MatrixX<T> b(v.size(), static_cast<Index>(vs.size()) + 1);
  b.leftCols(a.cols()) = a;
  b.col(a.cols()) = v;
  return rank(a) == rank(b);
}

/// Some x with m x = b, or nullopt when inconsistent.
template <typename T>
std::optional<VectorX<T>> solve(const MatrixX<T>& m, const VectorX<T>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
  Subspace<T> rows(m.cols() + 1);
  for (Index i = 0; i < m.rows(); ++i) {
    VectorX<T> r(m.cols() + 1);
    r.head(m.cols()) = m.row(i).transpose();
    r(m.cols()) = b(i);
    rows.insert(r);
  }
  VectorX<T> x = VectorX<T>::Zero(m.cols());
  for (Index j = 0; j < rows.dim(); ++j) {
    const Index p = rows.pivots()[static_cast<std::size_t>(j)];
    if (p == m.cols()) return std::nullopt;
    x(p) = rows.basis(j)(m.cols());
  }
  return x;
}

/// a * b skipping zero entries; the operands here are mostly sparse.
template <typename T>
MatrixX<T> product(const MatrixX<T>& a, const MatrixX<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("product: dimension mismatch");
  MatrixX<T> out = MatrixX<T>::Zero(a.rows(), b.cols());
  std::vector<std::vector<Index>> nz(static_cast<std::size_t>(a.cols()));
  for (Index k = 0; k < a.cols(); ++k) {
    for (Index i = 0; i < a.rows(); ++i) {
      if (!is_zero(a(i, k))) nz[static_cast<std::size_t>(k)].push_back(i);
    }
  }
  for (Index j = 0; j < b.cols(); ++j) {
    for (Index k = 0; k < b.rows(); ++k) {
      const T& c = b(k, j);
      if (is_zero(c)) continue;
      for (Index i : nz[static_cast<std::size_t>(k)]) out(i, j) += a(i, k) * c;
    }
  }
  return out;
}

template <typename T>
VectorX<T> apply(const MatrixX<T>& a, const VectorX<T>& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("apply: dimension mismatch");
  VectorX<T> out = VectorX<T>::Zero(a.rows());
  for (Index k = 0; k < v.size(); ++k) {
    const T& c = v(k);
    if (is_zero(c)) continue;
    for (Index i = 0; i < a.rows(); ++i) {
      if (!is_zero(a(i, k))) out(i) += a(i, k) * c;
    }
  }
  return out;
}

/// Column space of m as a subspace.
template <typename T>
Subspace<T> column_space(const MatrixX<T>& m) {
  Subspace<T> s(m.rows());
  for (Index j = 0; j < m.cols(); ++j) s.insert(m.col(j));
  return s;
}

}  // namespace superdim
