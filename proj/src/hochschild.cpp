#include "superdim/hochschild.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace superdim {

namespace {

using SparseRow = std::vector<std::pair<Index, Scalar>>;

// Row echelon form over sparse rows.  Rows are kept with leading
// coefficient 1 but are not back-reduced; solving and kernels use
// back-substitution in decreasing pivot order.
class SparseEliminator {
 public:
  explicit SparseEliminator(Index columns) : pivot_row_(static_cast<std::size_t>(columns), -1) {}

  /// Returns the reduced residue (empty if the row was dependent).
  SparseRow insert(SparseRow row) {
    reduce(row);
    if (row.empty()) return row;
    const Scalar lead = row.front().second.inverse();
    for (auto& [c, v] : row) v *= lead;
    pivot_row_[static_cast<std::size_t>(row.front().first)] = static_cast<long>(rows_.size());
    rows_.push_back(row);
    return row;
  }

  Index rank() const { return static_cast<Index>(rows_.size()); }
  bool is_pivot(Index c) const { return pivot_row_[static_cast<std::size_t>(c)] >= 0; }

  /// Values for columns [0, unknowns) with free columns set from `free`.
  std::vector<Scalar> back_substitute(Index unknowns, const std::map<Index, Scalar>& free, Index rhs_column,
                                      const Field& field) const {
    std::vector<Scalar> x(static_cast<std::size_t>(unknowns), field(0));
    for (const auto& [c, v] : free) x[static_cast<std::size_t>(c)] = v;
    for (Index c = unknowns - 1; c >= 0; --c) {
      const long r = pivot_row_[static_cast<std::size_t>(c)];
      if (r < 0) continue;
      Scalar acc = field(0);
      for (const auto& [k, v] : rows_[static_cast<std::size_t>(r)]) {
        if (k == c) continue;
        if (k == rhs_column) {
          acc += v;
        } else {
          acc -= v * x[static_cast<std::size_t>(k)];
        }
      }
      x[static_cast<std::size_t>(c)] = acc;
    }
    return x;
  }

 private:
  void reduce(SparseRow& row) const {
    std::erase_if(row, [](const auto& e) { return e.second.is_zero(); });
    while (!row.empty()) {
      const long r = pivot_row_[static_cast<std::size_t>(row.front().first)];
      if (r < 0) return;
      row = axpy(row, -row.front().second, rows_[static_cast<std::size_t>(r)]);
    }
  }

  static SparseRow axpy(const SparseRow& x, const Scalar& s, const SparseRow& y) {
    SparseRow out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
      if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
        out.push_back(x[i++]);
      } else if (i == x.size() || y[j].first < x[i].first) {
        out.emplace_back(y[j].first, s * y[j].second);
        ++j;
      } else {
        Scalar v = x[i].second + s * y[j].second;
        if (!v.is_zero()) out.emplace_back(x[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::vector<long> pivot_row_;
  std::vector<SparseRow> rows_;
};

SparseRow sorted_row(std::map<Index, Scalar>& acc) {
  SparseRow row;
  for (auto& [c, v] : acc) {
    if (!v.is_zero()) row.emplace_back(c, v);
  }
  return row;
}

Index power(Index base, int exp) {
  Index r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

Parity tuple_parity(const Algebra& a, const std::vector<Index>& t) {
  Parity p = Parity::even;
  for (Index b : t) p = p + a.parity(b);
  return p;
}

void check_shape(const Cochain& f, const SuperModule& m) {
  if (f.dim_a != m.algebra().dim() || f.dim_m != m.dim() || f.table.rows() != f.dim_m ||
      f.table.cols() != power(f.dim_a, f.arity())) {
    throw std::invalid_argument("cochain shape does not match (A, M)");
  }
}

// m a for a basis element a.
Vector right_act(const SuperModule& m, RightAction right, const Vector& v, Index a) {
  if (right == RightAction::regular) return m.algebra().mult(v, m.algebra().basis_vector(a));
  Vector w = v;
  if (m.algebra().parity(a) == Parity::odd) {
    for (Index j = 0; j < w.size(); ++j) {
      if (m.parity(j) == Parity::odd) w(j) = -w(j);
    }
  }
  return apply(m.action(a), w);
}

SparseVector sparse(const Vector& v) {
  SparseVector out;
  for (Index i = 0; i < v.size(); ++i) {
    if (!is_zero(v(i))) out.emplace_back(i, v(i));
  }
  return out;
}

}  // namespace

Cochain Cochain::zero(int n, Parity parity, Index dim_a, Index dim_m) {
  if (n < 0) throw std::invalid_argument("cochain degree must be nonnegative");
  return {n, parity, dim_a, dim_m, Matrix::Zero(dim_m, power(dim_a, n + 1))};
}

Index Cochain::column(const std::vector<Index>& args) const {
  if (static_cast<int>(args.size()) != arity()) throw std::invalid_argument("cochain: wrong number of arguments");
  Index c = 0;
  for (Index b : args) {
    if (b < 0 || b >= dim_a) throw std::out_of_range("cochain: basis index out of range");
    c = c * dim_a + b;
  }
  return c;
}

std::vector<Index> Cochain::tuple(Index column) const {
  std::vector<Index> t(static_cast<std::size_t>(arity()));
  for (int i = arity() - 1; i >= 0; --i) {
    t[static_cast<std::size_t>(i)] = column % dim_a;
    column /= dim_a;
  }
  return t;
}

Vector Cochain::evaluate(const std::vector<Vector>& args) const {
  if (static_cast<int>(args.size()) != arity()) throw std::invalid_argument("cochain: wrong number of arguments");
  std::vector<SparseVector> parts;
  for (const auto& v : args) parts.push_back(sparse(v));
  Vector out = Vector::Zero(dim_m);
  std::vector<std::size_t> pos(parts.size(), 0);
  for (const auto& p : parts) {
    if (p.empty()) return out;
  }
  while (true) {
    Scalar c(1);
    Index col = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      c *= parts[i][pos[i]].second;
      col = col * dim_a + parts[i][pos[i]].first;
    }
    for (Index j = 0; j < dim_m; ++j) {
      if (!is_zero(table(j, col))) out(j) += c * table(j, col);
    }
    std::size_t i = parts.size();
    while (i > 0) {
      --i;
      if (++pos[i] < parts[i].size()) break;
      pos[i] = 0;
      if (i == 0) return out;
    }
  }
}

bool operator==(const Cochain& a, const Cochain& b) {
  return a.n == b.n && a.parity == b.parity && a.dim_a == b.dim_a && a.dim_m == b.dim_m && a.table == b.table;
}

bool is_homogeneous(const Cochain& f, const SuperModule& m) {
  check_shape(f, m);
  for (Index c = 0; c < f.tuple_count(); ++c) {
    const Parity p = f.parity + tuple_parity(m.algebra(), f.tuple(c));
    for (Index j = 0; j < f.dim_m; ++j) {
      if (m.parity(j) != p && !is_zero(f.table(j, c))) return false;
    }
  }
  return true;
}

Cochain coboundary(const Cochain& f, const SuperModule& m, RightAction right) {
  if (!is_homogeneous(f, m)) throw std::invalid_argument("coboundary: cochain is not parity-homogeneous");
  if (right == RightAction::regular && m.dim() != m.algebra().dim()) {
    throw std::invalid_argument("coboundary: regular right action needs M = A");
  }
  const Algebra& a = m.algebra();
  const int n = f.n;
  Cochain out = Cochain::zero(n + 1, f.parity, f.dim_a, f.dim_m);
  for (Index col = 0; col < out.tuple_count(); ++col) {
    const auto t = out.tuple(col);
    Vector v = Vector::Zero(f.dim_m);
    for (int i = 0; i <= n; ++i) {
      std::vector<Index> merged;
      merged.insert(merged.end(), t.begin(), t.begin() + i);
      merged.push_back(0);
      merged.insert(merged.end(), t.begin() + i + 2, t.end());
      const Scalar s = sign(i);
      for (const auto& [c, g] : a.product(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(i) + 1])) {
        merged[static_cast<std::size_t>(i)] = c;
        v += (s * g) * f.value(merged);
      }
    }
    const std::vector<Index> tail(t.begin() + 1, t.end());
    const Vector ft = f.value(tail);
    if (!is_zero(ft)) v -= koszul(f.parity, a.parity(t[0])) * apply(m.action(t[0]), ft);
    const std::vector<Index> head(t.begin(), t.end() - 1);
    const Vector fh = f.value(head);
    if (!is_zero(fh)) v += sign(n + 1) * right_act(m, right, fh, t.back());
    out.table.col(col) = v;
  }
  return out;
}

bool is_in_C(const Cochain& f, const SuperModule& m) {
  check_shape(f, m);
  const Algebra& a = m.algebra();
  const int n = f.n;
  // (1) f(1, a_1, ..., a_n) = 0
  const Index rest = power(f.dim_a, n);
  for (Index r = 0; r < rest; ++r) {
    std::vector<Vector> args{a.unit()};
    Index code = r;
    std::vector<Vector> tail;
    for (int i = 0; i < n; ++i) {
      tail.insert(tail.begin(), a.basis_vector(code % f.dim_a));
      code /= f.dim_a;
    }
    args.insert(args.end(), tail.begin(), tail.end());
    if (!is_zero(f.evaluate(args))) return false;
  }
  // (2) reversal symmetry
  for (Index c = 0; c < f.tuple_count(); ++c) {
    auto t = f.tuple(c);
    int e = n * (n - 1) / 2;
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t j = i + 1; j < t.size(); ++j) e += bit(a.parity(t[i])) & bit(a.parity(t[j]));
    }
    std::vector<Index> rev(t.rbegin(), t.rend());
    const Vector lhs = f.value(rev);
    const Vector rhs = f.value(t);
    const Scalar s = sign(e);
    for (Index j = 0; j < lhs.size(); ++j) {
      if (!is_zero(lhs(j) - s * rhs(j))) return false;
    }
  }
  // (3) f(a, ..., a) = 0 for odd a when 2 is not invertible.  Over F_2 the
  // map a -> f(a, ..., a) vanishes iff, for every set S of odd basis
  // indices, the values on tuples with index set exactly S sum to zero.
  if (!a.field().two_invertible() && n >= 1) {
    std::vector<Index> odd;
    for (Index b = 0; b < a.dim(); ++b) {
      if (a.parity(b) == Parity::odd) odd.push_back(b);
    }
    std::map<std::vector<Index>, Vector> sums;
    const Index count = power(static_cast<Index>(odd.size()), n + 1);
    for (Index code = 0; code < count; ++code) {
      std::vector<Index> t(static_cast<std::size_t>(n + 1));
      Index k = code;
      for (int i = n; i >= 0; --i) {
        t[static_cast<std::size_t>(i)] = odd[static_cast<std::size_t>(k % static_cast<Index>(odd.size()))];
        k /= static_cast<Index>(odd.size());
      }
      std::vector<Index> s = t;
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      auto it = sums.find(s);
      if (it == sums.end()) it = sums.emplace(s, Vector::Zero(f.dim_m)).first;
      it->second += f.value(t);
    }
    for (const auto& [s, v] : sums) {
      if (!is_zero(v)) return false;
    }
  }
  return true;
}

bool is_super_skew(const Cochain& pi, const Algebra& a) {
  if (pi.n != 1 || pi.dim_a != a.dim() || pi.dim_m != a.dim()) return false;
  for (Index b = 0; b < a.dim(); ++b) {
    for (Index c = b; c < a.dim(); ++c) {
      const Vector lhs = pi.value({b, c});
      const Vector rhs = koszul(a.parity(b), a.parity(c)) * pi.value({c, b});
      if (!is_zero((lhs - rhs).eval())) return false;
    }
    if (a.parity(b) == Parity::odd && !is_zero(pi.value({b, b}).eval())) return false;
  }
  return true;
}

ExtensionDatum ExtensionDatum::make(Cochain pi, const Algebra& a) {
  if (pi.n != 1 || pi.parity != Parity::odd) throw std::invalid_argument("extension datum must be an odd 1-cochain");
  if (pi.dim_a != a.dim() || pi.dim_m != a.dim()) throw std::invalid_argument("extension datum must target A");
  for (Index c = 0; c < pi.tuple_count(); ++c) {
    const Parity want = Parity::odd + tuple_parity(a, pi.tuple(c));
    for (Index j = 0; j < a.dim(); ++j) {
      if (a.parity(j) != want && !is_zero(pi.table(j, c))) {
        throw std::invalid_argument("extension datum is not parity-homogeneous");
      }
    }
  }
  if (!is_super_skew(pi, a)) throw std::invalid_argument("extension datum is not super-skew");
  return {std::move(pi)};
}

bool is_cocycle_pi(const ExtensionDatum& datum, const Algebra& a) {
  const Cochain& pi = datum.pi;
  const Index n = a.dim();
  for (Index b = 0; b < n; ++b) {
    if (!is_zero(pi.evaluate({a.unit(), a.basis_vector(b)}))) return false;
  }
  std::vector<SparseVector> values(static_cast<std::size_t>(n * n));
  for (Index c = 0; c < n * n; ++c) values[static_cast<std::size_t>(c)] = sparse(pi.table.col(c));
  auto at = [&](Index x, Index y) -> const SparseVector& { return values[static_cast<std::size_t>(x * n + y)]; };
  std::map<Index, Scalar> acc;
  auto add = [&](Index k, const Scalar& v) {
    auto [it, fresh] = acc.emplace(k, v);
    if (!fresh) it->second += v;
  };
  for (Index x = 0; x < n; ++x) {
    const Scalar sx = sign(bit(a.parity(x)));
    for (Index y = 0; y < n; ++y) {
      for (Index z = 0; z < n; ++z) {
        acc.clear();
        for (const auto& [d, g] : a.product(x, y)) {
          for (const auto& [k, v] : at(d, z)) add(k, g * v);
        }
        for (const auto& [d, g] : a.product(y, z)) {
          for (const auto& [k, v] : at(x, d)) add(k, -(g * v));
        }
        for (const auto& [k, v] : at(x, y)) {
          for (const auto& [j, w] : a.product(k, z)) add(j, v * w);
        }
        for (const auto& [k, v] : at(y, z)) {
          for (const auto& [j, w] : a.product(x, k)) add(j, -(sx * v * w));
        }
        for (const auto& [k, v] : acc) {
          if (!v.is_zero()) return false;
        }
      }
    }
  }
  return true;
}

AlgebraPtr build_A_pi_unchecked(const AlgebraPtr& a, const ExtensionDatum& datum) {
  const Index n = a->dim();
  const Field& field = a->field();
  std::vector<BasisElement> basis = a->basis();
  for (Index i = 0; i < n; ++i) {
    const auto& b = a->basis(i);
    basis.push_back({"Pi(" + b.name + ")", flip(b.parity), b.bidegree + Bidegree{0, 1}});
  }
  const auto size = static_cast<std::size_t>(2 * n);
  std::vector<SparseVector> table(size * size);
  auto entry = [&](Index i, Index j) -> SparseVector& { return table[static_cast<std::size_t>(i) * size + static_cast<std::size_t>(j)]; };
  for (Index i = 0; i < n; ++i) {
    const Scalar si = sign(bit(a->parity(i)));
    for (Index j = 0; j < n; ++j) {
      const SparseVector& p = a->product(i, j);
      SparseVector& aa = entry(i, j);
      aa = p;
      const auto col = datum.pi.table.col(i * n + j);
      for (Index k = 0; k < n; ++k) {
        if (!is_zero(col(k))) aa.emplace_back(n + k, field.bind(col(k)));
      }
      for (const auto& [c, v] : p) {
        entry(i, n + j).emplace_back(n + c, field.bind(si * v));
        entry(n + i, j).emplace_back(n + c, v);
      }
    }
  }
  Vector unit = Vector::Zero(2 * n);
  unit.head(n) = a->unit();
  std::vector<NamedElement> gens;
  for (const auto& g : a->generators()) {
    Vector v = Vector::Zero(2 * n);
    v.head(n) = g.value;
    gens.push_back({g.name, g.parity, v});
  }
  Vector y = Vector::Zero(2 * n);
  y.tail(n) = a->unit();
  gens.push_back({"y", Parity::odd, y});
  return std::make_shared<const Algebra>(a->name() + "_pi", field, Flavor::supercommutative, std::move(basis),
                                         std::move(table), unit, std::move(gens));
}

AlgebraPtr build_A_pi(const AlgebraPtr& a, const ExtensionDatum& datum) {
  if (!is_cocycle_pi(datum, *a)) throw std::invalid_argument("build_A_pi: pi is not a cocycle");
  return build_A_pi_unchecked(a, datum);
}

bool is_algebra_map_isomorphism(const Matrix& phi, const Algebra& source, const Algebra& target) {
  if (phi.rows() != target.dim() || phi.cols() != source.dim() || source.dim() != target.dim()) return false;
  if (rank(phi) != source.dim()) return false;
  if (!is_zero((apply(phi, source.unit()) - target.unit()).eval())) return false;
  std::vector<Vector> images;
  for (Index i = 0; i < source.dim(); ++i) images.push_back(phi.col(i));
  for (Index i = 0; i < source.dim(); ++i) {
    if (source.parity_of(images[static_cast<std::size_t>(i)]) != source.parity(i)) {
      if (!is_zero(images[static_cast<std::size_t>(i)])) return false;
    }
    for (Index j = 0; j < source.dim(); ++j) {
      Vector lhs = Vector::Zero(target.dim());
      for (const auto& [c, v] : source.product(i, j)) lhs += v * images[static_cast<std::size_t>(c)];
      const Vector rhs = target.mult(images[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(j)]);
      if (!is_zero((lhs - rhs).eval())) return false;
    }
  }
  return true;
}

std::optional<Cochain> adapted_equivalence(const ExtensionDatum& pi, const ExtensionDatum& pi_prime,
                                           const AlgebraPtr& a) {
  const Index n = a->dim();
  const Field& field = a->field();
  // Unknown x(k, i): coefficient of e_k in f(e_i), only where parities differ.
  std::vector<Index> var(static_cast<std::size_t>(n * n), -1);
  Index unknowns = 0;
  for (Index i = 0; i < n; ++i) {
    for (Index k = 0; k < n; ++k) {
      if (a->parity(k) != a->parity(i)) var[static_cast<std::size_t>(k * n + i)] = unknowns++;
    }
  }
  auto x = [&](Index k, Index i) { return var[static_cast<std::size_t>(k * n + i)]; };
  const Index rhs = unknowns;
  SparseEliminator sys(unknowns + 1);
  bool consistent = true;
  auto add_equation = [&](std::map<Index, Scalar>& acc) {
    const SparseRow residue = sys.insert(sorted_row(acc));
    if (!residue.empty() && residue.front().first == rhs) consistent = false;
  };
  // f(1) = 0
  for (Index k = 0; k < n && consistent; ++k) {
    std::map<Index, Scalar> acc;
    for (Index i = 0; i < n; ++i) {
      if (!is_zero(a->unit()(i)) && x(k, i) >= 0) acc[x(k, i)] += a->unit()(i);
    }
    add_equation(acc);
  }
  // delta_0(f)(e_p, e_q) = pi'(e_p, e_q) - pi(e_p, e_q), coordinate j.
  for (Index p = 0; p < n && consistent; ++p) {
    const Scalar sp = sign(bit(a->parity(p)));
    for (Index q = 0; q < n && consistent; ++q) {
      std::vector<std::map<Index, Scalar>> eq(static_cast<std::size_t>(n));
      auto add = [&](Index j, Index v, const Scalar& c) {
        if (v < 0 || c.is_zero()) return;
        eq[static_cast<std::size_t>(j)][v] += c;
      };
      for (const auto& [c, g] : a->product(p, q)) {
        for (Index j = 0; j < n; ++j) add(j, x(j, c), g);
      }
      for (Index k = 0; k < n; ++k) {
        for (const auto& [j, g] : a->product(p, k)) add(j, x(k, q), -(sp * g));
        for (const auto& [j, g] : a->product(k, q)) add(j, x(k, p), -g);
      }
      const Vector target = pi_prime.pi.value({p, q}) - pi.pi.value({p, q});
      for (Index j = 0; j < n && consistent; ++j) {
        if (!is_zero(target(j))) eq[static_cast<std::size_t>(j)][rhs] = field.bind(target(j));
        add_equation(eq[static_cast<std::size_t>(j)]);
      }
    }
  }
  if (!consistent) return std::nullopt;
  const auto sol = sys.back_substitute(unknowns, {}, rhs, field);
  Cochain f = Cochain::zero(0, Parity::odd, n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index k = 0; k < n; ++k) {
      if (x(k, i) >= 0) f.table(k, i) = sol[static_cast<std::size_t>(x(k, i))];
    }
  }
  const AlgebraPtr r = build_A_pi(a, pi);
  const AlgebraPtr r_prime = build_A_pi(a, pi_prime);
  Matrix phi = Matrix::Zero(2 * n, 2 * n);
  for (Index i = 0; i < 2 * n; ++i) phi(i, i) = field(1);
  for (Index i = 0; i < n; ++i) {
    for (Index k = 0; k < n; ++k) phi(n + k, i) = f.table(k, i);
  }
  if (!is_algebra_map_isomorphism(phi, *r, *r_prime)) {
    throw std::logic_error("adapted_equivalence: solution does not give an algebra isomorphism");
  }
  return f;
}

std::vector<Cochain> c_basis(const SuperModule& m, int n, Parity p) {
  const Algebra& a = m.algebra();
  const Field& field = a.field();
  const Cochain shape = Cochain::zero(n, p, a.dim(), m.dim());
  const Index tuples = shape.tuple_count();
  // Unknowns: table entries whose row parity matches the tuple.
  std::vector<Index> var(static_cast<std::size_t>(tuples * m.dim()), -1);
  std::vector<std::pair<Index, Index>> where;
  for (Index c = 0; c < tuples; ++c) {
    const Parity want = p + tuple_parity(a, shape.tuple(c));
    for (Index j = 0; j < m.dim(); ++j) {
      if (m.parity(j) == want) {
        var[static_cast<std::size_t>(c * m.dim() + j)] = static_cast<Index>(where.size());
        where.emplace_back(j, c);
      }
    }
  }
  const auto unknowns = static_cast<Index>(where.size());
  auto v = [&](Index c, Index j) { return var[static_cast<std::size_t>(c * m.dim() + j)]; };
  SparseEliminator sys(unknowns + 1);
  // (1) sum_i u_i f(e_i, t) = 0
  const Index rest = power(a.dim(), n);
  for (Index r = 0; r < rest; ++r) {
    for (Index j = 0; j < m.dim(); ++j) {
      std::map<Index, Scalar> acc;
      for (Index i = 0; i < a.dim(); ++i) {
        if (is_zero(a.unit()(i))) continue;
        const Index k = v(i * rest + r, j);
        if (k >= 0) acc[k] += a.unit()(i);
      }
      sys.insert(sorted_row(acc));
    }
  }
  // (2) f(reversed) - sign f(t) = 0
  for (Index c = 0; c < tuples; ++c) {
    const auto t = shape.tuple(c);
    int e = n * (n - 1) / 2;
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t j = i + 1; j < t.size(); ++j) e += bit(a.parity(t[i])) & bit(a.parity(t[j]));
    }
    const Index rc = shape.column(std::vector<Index>(t.rbegin(), t.rend()));
    if (rc < c) continue;
    for (Index j = 0; j < m.dim(); ++j) {
      if (v(c, j) < 0) continue;
      std::map<Index, Scalar> acc;
      acc[v(rc, j)] += field(1);
      acc[v(c, j)] -= field.bind(sign(e));
      sys.insert(sorted_row(acc));
    }
  }
  // (3) in characteristic 2, subset sums over odd index sets vanish.
  if (!field.two_invertible() && n >= 1) {
    std::map<std::pair<std::vector<Index>, Index>, std::map<Index, Scalar>> groups;
    for (Index c = 0; c < tuples; ++c) {
      const auto t = shape.tuple(c);
      bool all_odd = true;
      for (Index b : t) all_odd = all_odd && a.parity(b) == Parity::odd;
      if (!all_odd) continue;
      std::vector<Index> s = t;
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      for (Index j = 0; j < m.dim(); ++j) {
        if (v(c, j) >= 0) groups[{s, j}][v(c, j)] += field(1);
      }
    }
    for (auto& [key, acc] : groups) sys.insert(sorted_row(acc));
  }
  std::vector<Cochain> out;
  for (Index k = 0; k < unknowns; ++k) {
    if (sys.is_pivot(k)) continue;
    const auto sol = sys.back_substitute(unknowns, {{k, field(1)}}, unknowns, field);
    Cochain f = shape;
    for (Index u = 0; u < unknowns; ++u) {
      const auto [j, c] = where[static_cast<std::size_t>(u)];
      f.table(j, c) = sol[static_cast<std::size_t>(u)];
    }
    out.push_back(std::move(f));
  }
  return out;
}

namespace {

Index image_rank(const std::vector<Cochain>& basis, const SuperModule& m) {
  if (basis.empty()) return 0;
  std::vector<Cochain> images;
  for (const auto& f : basis) images.push_back(coboundary(f, m));
  const Index width = images.front().table.size();
  SparseEliminator sys(width);
  for (const auto& g : images) {
    SparseRow row;
    for (Index c = 0; c < g.table.cols(); ++c) {
      for (Index j = 0; j < g.table.rows(); ++j) {
        if (!is_zero(g.table(j, c))) row.emplace_back(c * g.table.rows() + j, g.table(j, c));
      }
    }
    sys.insert(std::move(row));
  }
  return sys.rank();
}

}  // namespace

std::pair<Index, Index> sh_dim(const SuperModule& m, int n, Index max_entries) {
  if (n < 0) throw std::invalid_argument("sh_dim: negative degree");
  const Index entries = m.dim() * power(m.algebra().dim(), n + 2);
  if (entries > max_entries) {
    throw std::length_error("sh_dim: cochain tables of " + std::to_string(entries) + " entries exceed the bound " +
                            std::to_string(max_entries));
  }
  Index dims[2] = {0, 0};
  for (Parity p : {Parity::even, Parity::odd}) {
    const auto cn = c_basis(m, n, p);
    const Index rank_n = image_rank(cn, m);
    Index rank_prev = 0;
    if (n > 0) {
      const auto prev = c_basis(m, n - 1, p);
      for (const auto& g : prev) {
        const Cochain dd = coboundary(coboundary(g, m), m);
        if (!is_zero(dd.table)) throw std::logic_error("sh_dim: delta delta != 0");
      }
      rank_prev = image_rank(prev, m);
    }
    dims[bit(p)] = static_cast<Index>(cn.size()) - rank_n - rank_prev;
  }
  return {dims[0], dims[1]};
}

}  // namespace superdim
