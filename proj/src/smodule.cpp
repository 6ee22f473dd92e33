#include "superdim/smodule.hpp"

#include <deque>
#include <stdexcept>

namespace superdim {

SuperModule::SuperModule(AlgebraPtr algebra, std::vector<std::string> names, std::vector<Parity> parities,
                         std::vector<Matrix> basis_action)
    : algebra_(std::move(algebra)),
      names_(std::move(names)),
      parities_(std::move(parities)),
      action_(std::move(basis_action)) {
  if (!algebra_) throw std::invalid_argument("module needs an algebra");
  if (names_.size() != parities_.size()) throw std::invalid_argument("module names and parities differ in length");
  if (static_cast<Index>(action_.size()) != algebra_->dim()) {
    throw std::invalid_argument("module needs one action matrix per algebra basis element");
  }
  for (const auto& a : action_) {
    if (a.rows() != dim() || a.cols() != dim()) throw std::invalid_argument("action matrix has wrong size");
  }
}

SuperModule SuperModule::zero(AlgebraPtr algebra) {
  std::vector<Matrix> action(static_cast<std::size_t>(algebra->dim()), Matrix(0, 0));
  return SuperModule(std::move(algebra), {}, {}, std::move(action));
}

SuperModule SuperModule::regular(AlgebraPtr algebra) {
  std::vector<std::string> names;
  std::vector<Parity> parities;
  std::vector<Matrix> action;
  for (Index i = 0; i < algebra->dim(); ++i) {
    names.push_back(algebra->basis(i).name);
    parities.push_back(algebra->parity(i));
    action.push_back(algebra->left_multiplication(algebra->basis_vector(i)));
  }
  return SuperModule(std::move(algebra), std::move(names), std::move(parities), std::move(action));
}

SuperModule SuperModule::from_generator_actions(AlgebraPtr algebra, std::vector<std::string> names,
                                                std::vector<Parity> parities,
                                                const std::vector<Matrix>& generator_action) {
  if (generator_action.size() != algebra->generators().size()) {
    throw std::invalid_argument("need one action matrix per generator");
  }
  const auto n = static_cast<Index>(parities.size());
  for (const auto& g : generator_action) {
    if (g.rows() != n || g.cols() != n) throw std::invalid_argument("generator action matrix has wrong size");
  }
  Matrix identity = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) identity(i, i) = algebra->field()(1);
  std::vector<Matrix> action;
  for (Index b = 0; b < algebra->dim(); ++b) {
    Matrix m = identity;
    for (int g : algebra->word(b)) m = product(m, generator_action[static_cast<std::size_t>(g)]);
    action.push_back(std::move(m));
  }
  return SuperModule(std::move(algebra), std::move(names), std::move(parities), std::move(action));
}

Matrix SuperModule::action_of(const Vector& a) const {
  if (a.size() != algebra_->dim()) throw std::invalid_argument("element length mismatch");
  Matrix out = Matrix::Zero(dim(), dim());
  for (Index b = 0; b < a.size(); ++b) {
    if (is_zero(a(b))) continue;
    const Matrix& r = action(b);
    for (Index j = 0; j < dim(); ++j) {
      for (Index i = 0; i < dim(); ++i) {
        if (!is_zero(r(i, j))) out(i, j) += a(b) * r(i, j);
      }
    }
  }
  return out;
}

Vector SuperModule::act(const Vector& a, const Vector& m) const {
  Vector out = Vector::Zero(dim());
  for (Index b = 0; b < a.size(); ++b) {
    if (!is_zero(a(b))) out += a(b) * apply(action(b), m);
  }
  return out;
}

Vector SuperModule::basis_vector(Index i) const {
  Vector v = Vector::Zero(dim());
  v(i) = algebra_->field()(1);
  return v;
}

bool operator==(const SuperModule& a, const SuperModule& b) {
  return a.algebra_ == b.algebra_ && a.names_ == b.names_ && a.parities_ == b.parities_ && a.action_ == b.action_;
}

SuperModule direct_sum(const SuperModule& m, const SuperModule& n) {
  if (m.algebra_ptr() != n.algebra_ptr()) throw std::invalid_argument("direct_sum: modules over different algebras");
  auto names = m.names();
  names.insert(names.end(), n.names().begin(), n.names().end());
  auto parities = m.parities();
  parities.insert(parities.end(), n.parities().begin(), n.parities().end());
  std::vector<Matrix> action;
  for (Index b = 0; b < m.algebra().dim(); ++b) {
    Matrix a = Matrix::Zero(m.dim() + n.dim(), m.dim() + n.dim());
    a.topLeftCorner(m.dim(), m.dim()) = m.action(b);
    a.bottomRightCorner(n.dim(), n.dim()) = n.action(b);
    action.push_back(std::move(a));
  }
  return SuperModule(m.algebra_ptr(), std::move(names), std::move(parities), std::move(action));
}

std::optional<std::string> module_defect(const SuperModule& m) {
  const Algebra& a = m.algebra();
  for (Index b = 0; b < a.dim(); ++b) {
    if (m.action(b).rows() != m.dim() || m.action(b).cols() != m.dim()) {
      throw std::invalid_argument("action matrix has wrong size");
    }
  }
  if (m.dim() == 0) return std::nullopt;
  const Matrix unit = m.action_of(a.unit());
  for (Index i = 0; i < m.dim(); ++i) {
    for (Index j = 0; j < m.dim(); ++j) {
      if (unit(i, j) != Scalar(i == j ? 1 : 0)) return "unit does not act as the identity";
    }
  }
  for (Index b = 0; b < a.dim(); ++b) {
    const Matrix& r = m.action(b);
    for (Index j = 0; j < m.dim(); ++j) {
      for (Index i = 0; i < m.dim(); ++i) {
        if (!is_zero(r(i, j)) && m.parity(i) != a.parity(b) + m.parity(j)) {
          return "basis element " + a.basis(b).name + " does not respect parities";
        }
      }
    }
  }
  std::vector<std::pair<std::string, Vector>> left;
  for (const auto& g : a.generators()) left.emplace_back(g.name, g.value);
  if (left.empty()) {
    for (Index b = 0; b < a.dim(); ++b) left.emplace_back(a.basis(b).name, a.basis_vector(b));
  }
  for (const auto& [name, g] : left) {
    const Matrix rg = m.action_of(g);
    for (Index b = 0; b < a.dim(); ++b) {
      if (product(rg, m.action(b)) != m.action_of(a.mult(g, a.basis_vector(b)))) {
        return "action of " + name + " times " + a.basis(b).name + " is not multiplicative";
      }
    }
  }
  return std::nullopt;
}

SuperModule parity_shift(const SuperModule& m) {
  std::vector<std::string> names;
  std::vector<Parity> parities;
  for (Index i = 0; i < m.dim(); ++i) {
    names.push_back("Pi(" + m.names()[static_cast<std::size_t>(i)] + ")");
    parities.push_back(flip(m.parity(i)));
  }
  std::vector<Matrix> action;
  for (Index b = 0; b < m.algebra().dim(); ++b) {
    action.push_back(m.algebra().parity(b) == Parity::odd ? Matrix(-m.action(b)) : m.action(b));
  }
  return SuperModule(m.algebra_ptr(), std::move(names), std::move(parities), std::move(action));
}

namespace {

std::vector<Matrix> acting_matrices(const SuperModule& m) {
  std::vector<Matrix> out;
  for (const auto& g : m.algebra().generators()) out.push_back(m.action_of(g.value));
  if (out.empty()) {
    for (Index b = 0; b < m.algebra().dim(); ++b) out.push_back(m.action(b));
  }
  return out;
}

}  // namespace

Subspace<Scalar> submodule_generated(const SuperModule& m, const std::vector<Vector>& vectors) {
  const auto acting = acting_matrices(m);
  Subspace<Scalar> s(m.dim());
  std::deque<Vector> queue;
  for (const auto& v : vectors) {
    if (s.insert(v)) queue.push_back(v);
  }
  while (!queue.empty()) {
    const Vector v = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : acting) {
      Vector w = apply(g, v);
      if (s.insert(w)) queue.push_back(std::move(w));
    }
  }
  return s;
}

Subspace<Scalar> product_subspace(const SuperModule& m, const Subspace<Scalar>& s) {
  std::vector<Vector> gens;
  for (const auto& a : s.basis()) {
    const Matrix r = m.action_of(a);
    for (Index j = 0; j < m.dim(); ++j) gens.push_back(r.col(j));
  }
  return submodule_generated(m, gens);
}

bool is_submodule(const SuperModule& m, const Subspace<Scalar>& n) {
  for (Index b = 0; b < m.algebra().dim(); ++b) {
    for (const auto& v : n.basis()) {
      if (!n.contains(apply(m.action(b), v))) return false;
    }
  }
  return true;
}

SuperModule restrict_to(const SuperModule& m, const Subspace<Scalar>& n) {
  if (!is_graded_subspace(m.parities(), n)) throw std::invalid_argument("restrict_to: subspace is not graded");
  if (!is_submodule(m, n)) throw std::invalid_argument("restrict_to: subspace is not action-closed");
  std::vector<std::string> names;
  std::vector<Parity> parities;
  for (Index p : n.pivots()) {
    names.push_back(m.names()[static_cast<std::size_t>(p)]);
    parities.push_back(m.parity(p));
  }
  std::vector<Matrix> action;
  for (Index b = 0; b < m.algebra().dim(); ++b) {
    Matrix r(n.dim(), n.dim());
    for (Index j = 0; j < n.dim(); ++j) r.col(j) = n.coordinates(apply(m.action(b), n.basis(j)));
    action.push_back(std::move(r));
  }
  return SuperModule(m.algebra_ptr(), std::move(names), std::move(parities), std::move(action));
}

SuperModule product_submodule(const SuperModule& m, const Subspace<Scalar>& s) {
  return restrict_to(m, product_subspace(m, s));
}

SuperModule quotient(const SuperModule& m, const Subspace<Scalar>& n) {
  if (!is_graded_subspace(m.parities(), n)) throw std::invalid_argument("quotient: subspace is not graded");
  if (!is_submodule(m, n)) throw std::invalid_argument("quotient: subspace is not action-closed");
  Quotient<Scalar> q(n);
  const auto free = n.non_pivots();
  std::vector<std::string> names;
  std::vector<Parity> parities;
  for (Index c : free) {
    names.push_back(m.names()[static_cast<std::size_t>(c)]);
    parities.push_back(m.parity(c));
  }
  std::vector<Matrix> action;
  const auto k = static_cast<Index>(free.size());
  for (Index b = 0; b < m.algebra().dim(); ++b) {
    Matrix r(k, k);
    for (Index j = 0; j < k; ++j) r.col(j) = q.coordinates(m.action(b).col(free[static_cast<std::size_t>(j)]));
    action.push_back(std::move(r));
  }
  return SuperModule(m.algebra_ptr(), std::move(names), std::move(parities), std::move(action));
}

Subspace<Scalar> annihilator_even(const SuperModule& m) {
  const Algebra& a = m.algebra();
  std::vector<Index> even;
  for (Index b = 0; b < a.dim(); ++b) {
    if (a.parity(b) == Parity::even) even.push_back(b);
  }
  const Index cells = m.dim() * m.dim();
  Matrix system(cells, static_cast<Index>(even.size()));
  for (std::size_t c = 0; c < even.size(); ++c) {
    const Matrix& r = m.action(even[c]);
    for (Index j = 0; j < m.dim(); ++j) {
      for (Index i = 0; i < m.dim(); ++i) system(j * m.dim() + i, static_cast<Index>(c)) = r(i, j);
    }
  }
  Subspace<Scalar> out(a.dim());
  for (const auto& k : kernel_basis(system)) {
    Vector v = a.zero();
    for (std::size_t c = 0; c < even.size(); ++c) v(even[c]) = k(static_cast<Index>(c));
    out.insert(v);
  }
  return out;
}

bool is_odd_regular(const Vector& y, const SuperModule& m) {
  const auto p = m.algebra().parity_of(y);
  if (!is_zero(y) && p != Parity::odd) throw std::invalid_argument("is_odd_regular: element is not odd");
  const Matrix r = m.action_of(y);
  if (!is_zero(product(r, r))) return false;
  return 2 * column_space(r).dim() == m.dim();
}

Subspace<Scalar> ideal_times_module(const SuperModule& m, const std::vector<Vector>& ys) {
  std::vector<Vector> gens;
  for (const auto& y : ys) {
    const Matrix r = m.action_of(y);
    for (Index j = 0; j < m.dim(); ++j) gens.push_back(r.col(j));
  }
  return submodule_generated(m, gens);
}

bool is_regular_sequence(const std::vector<Vector>& ys, const SuperModule& m) {
  SuperModule current = m;
  for (const auto& y : ys) {
    if (!is_odd_regular(y, current)) return false;
    current = quotient(current, ideal_times_module(current, {y}));
  }
  return true;
}

}  // namespace superdim
