#include "superdim/algebra.hpp"

#include <deque>
#include <set>
#include <stdexcept>

namespace superdim {

Presentation::Presentation(std::string name_, Field field_, Flavor flavor_, GeneratorList gens,
                           std::optional<int> cap_)
    : name(std::move(name_)),
      field(field_),
      flavor(flavor_),
      generators(std::make_shared<const GeneratorList>(std::move(gens))),
      cap(cap_) {}

int Presentation::generator_index(const std::string& n) const {
  for (std::size_t i = 0; i < generators->size(); ++i) {
    if ((*generators)[i].name == n) return static_cast<int>(i);
  }
  return -1;
}

SuperPolynomial Presentation::gen(const std::string& n) const {
  const int i = generator_index(n);
  if (i < 0) throw std::out_of_range("unknown generator '" + n + "'");
  return SuperPolynomial::generator(flavor, generators, i);
}

SuperPolynomial Presentation::constant(const Scalar& c) const {
  return SuperPolynomial::constant(flavor, generators, c);
}

SuperPolynomial Presentation::zero() const { return SuperPolynomial(flavor, generators); }

bool operator==(const Presentation& a, const Presentation& b) {
  if (a.name != b.name || a.field != b.field || a.flavor != b.flavor || a.cap != b.cap) return false;
  if (*a.generators != *b.generators || a.relations.size() != b.relations.size()) return false;
  for (std::size_t i = 0; i < a.relations.size(); ++i) {
    // Contexts are compared by value inside polynomial equality.
    if (!(a.relations[i] == b.relations[i])) return false;
  }
  return true;
}

struct Algebra::PresentationData {
  Presentation pres;
  int cap = 0;
  // Per degree: monomials in descending order, so larger monomials become pivots.
  std::vector<std::vector<Monomial>> monomials;
  std::vector<std::map<Monomial, Index, MonomialOrder>> column;
  // Per degree and column: basis index of a standard monomial, or -1.
  std::vector<std::vector<Index>> basis_of_column;
  // Per degree and pivot column: normal form as a sparse basis combination.
  std::vector<std::map<Index, SparseVector>> pivot_normal_form;
  std::vector<std::vector<int>> words;

  void add_monomial(Vector& out, const Monomial& m, const Scalar& c) const {
    const int d = degree(m, *pres.generators);
    if (d > cap) return;
    const auto& cols = column[static_cast<std::size_t>(d)];
    const Index col = cols.at(m);
    const Index b = basis_of_column[static_cast<std::size_t>(d)][static_cast<std::size_t>(col)];
    if (b >= 0) {
      out(b) += c;
      return;
    }
    for (const auto& [idx, v] : pivot_normal_form[static_cast<std::size_t>(d)].at(col)) out(idx) += c * v;
  }
};

Algebra::Algebra(std::string name, Field field, Flavor flavor, std::vector<BasisElement> basis,
                 std::vector<SparseVector> table, Vector unit, std::vector<NamedElement> generators)
    : name_(std::move(name)),
      field_(field),
      flavor_(flavor),
      basis_(std::move(basis)),
      table_(std::move(table)),
      unit_(std::move(unit)),
      generators_(std::move(generators)) {
  const auto n = basis_.size();
  if (table_.size() != n * n) throw std::invalid_argument("structure table must have dim^2 entries");
  if (unit_.size() != dim()) throw std::invalid_argument("unit has wrong length");
  for (const auto& g : generators_) {
    if (g.value.size() != dim()) throw std::invalid_argument("generator " + g.name + " has wrong length");
  }
  for (const auto& entry : table_) {
    for (const auto& [idx, c] : entry) {
      if (idx < 0 || idx >= dim()) throw std::invalid_argument("structure constant index out of range");
    }
  }
}

Vector Algebra::basis_vector(Index i) const {
  Vector v = zero();
  v(i) = field_(1);
  return v;
}

Vector Algebra::zero() const { return Vector::Zero(dim()); }

Vector Algebra::mult(const Vector& a, const Vector& b) const {
  if (a.size() != dim() || b.size() != dim()) throw std::invalid_argument("mult: element length mismatch");
  Vector out = zero();
  for (Index i = 0; i < dim(); ++i) {
    if (is_zero(a(i))) continue;
    for (Index j = 0; j < dim(); ++j) {
      if (is_zero(b(j))) continue;
      const Scalar c = a(i) * b(j);
      for (const auto& [k, v] : product(i, j)) out(k) += c * v;
    }
  }
  return out;
}

Matrix Algebra::left_multiplication(const Vector& a) const {
  Matrix m = Matrix::Zero(dim(), dim());
  for (Index i = 0; i < dim(); ++i) {
    if (is_zero(a(i))) continue;
    for (Index j = 0; j < dim(); ++j) {
      for (const auto& [k, v] : product(i, j)) m(k, j) += a(i) * v;
    }
  }
  return m;
}

Matrix Algebra::right_multiplication(const Vector& a) const {
  Matrix m = Matrix::Zero(dim(), dim());
  for (Index i = 0; i < dim(); ++i) {
    if (is_zero(a(i))) continue;
    for (Index j = 0; j < dim(); ++j) {
      for (const auto& [k, v] : product(j, i)) m(k, j) += a(i) * v;
    }
  }
  return m;
}

std::optional<Parity> Algebra::parity_of(const Vector& v) const {
  std::optional<Parity> p;
  for (Index i = 0; i < dim(); ++i) {
    if (is_zero(v(i))) continue;
    if (p && *p != parity(i)) return std::nullopt;
    p = parity(i);
  }
  return p.value_or(Parity::even);
}

Index Algebra::basis_index(const std::string& n) const {
  for (Index i = 0; i < dim(); ++i) {
    if (basis(i).name == n) return i;
  }
  return -1;
}

const NamedElement& Algebra::generator(const std::string& n) const {
  for (const auto& g : generators_) {
    if (g.name == n) return g;
  }
  throw std::out_of_range("algebra " + name_ + " has no generator '" + n + "'");
}

const Presentation& Algebra::presentation() const {
  if (!pres_) throw std::logic_error("algebra " + name_ + " has no presentation");
  return pres_->pres;
}

Vector Algebra::reduce(const SuperPolynomial& p) const {
  if (!pres_) throw std::logic_error("algebra " + name_ + " has no presentation");
  if (p.flavor() != pres_->pres.flavor || !(*p.context() == *pres_->pres.generators)) {
    throw std::invalid_argument("polynomial does not belong to algebra " + name_);
  }
  Vector out = zero();
  for (const auto& [m, c] : p.terms()) pres_->add_monomial(out, m, field_.bind(c));
  return out;
}

const std::vector<int>& Algebra::word(Index i) const {
  if (!pres_) throw std::logic_error("algebra " + name_ + " has no word data");
  return pres_->words.at(static_cast<std::size_t>(i));
}

namespace {

void check_relation(const Presentation& p, const SuperPolynomial& r, int cap) {
  if (r.flavor() != p.flavor || !(*r.context() == *p.generators)) {
    throw std::invalid_argument("relation " + r.to_string() + " uses a different generator context");
  }
  if (r.is_zero()) return;
  auto d = r.homogeneous_degree();
  if (!d) throw std::invalid_argument("relation " + r.to_string() + " is not homogeneous");
  if (!r.homogeneous_parity()) throw std::invalid_argument("relation " + r.to_string() + " is not parity-homogeneous");
  if (*d == 0) throw std::invalid_argument("relation " + r.to_string() + " has degree 0");
  if (*d > cap) {
    throw std::invalid_argument("relation " + r.to_string() + " has degree " + std::to_string(*d) +
                                " above cap " + std::to_string(cap));
  }
}

}  // namespace

Algebra compile(const Presentation& p) {
  if (!p.cap) throw std::invalid_argument("presentation " + p.name + " needs a cap");
  const int cap = *p.cap;
  if (cap < 0) throw std::invalid_argument("cap must be nonnegative");
  const GeneratorList& gens = *p.generators;
  for (const auto& r : p.relations) check_relation(p, r, cap);

  auto data = std::make_shared<Algebra::PresentationData>();
  data->pres = p;
  data->cap = cap;
  const auto levels = static_cast<std::size_t>(cap) + 1;
  data->monomials.resize(levels);
  data->column.assign(levels, std::map<Monomial, Index, MonomialOrder>(MonomialOrder{p.generators}));
  data->basis_of_column.resize(levels);
  data->pivot_normal_form.resize(levels);

  // Monomials of each degree, as generator times a lower monomial.
  data->monomials[0] = {Monomial(p.flavor, {})};
  for (int d = 1; d <= cap; ++d) {
    std::set<Monomial, MonomialOrder> found(MonomialOrder{p.generators});
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const int w = gens[g].bidegree.total();
      if (w > d) continue;
      for (const auto& m : data->monomials[static_cast<std::size_t>(d - w)]) {
        std::vector<int> word{static_cast<int>(g)};
        word.insert(word.end(), m.letters().begin(), m.letters().end());
        if (auto n = normalize(p.flavor, word, gens)) found.insert(n->monomial);
      }
    }
    data->monomials[static_cast<std::size_t>(d)].assign(found.rbegin(), found.rend());
  }
  for (std::size_t d = 0; d < levels; ++d) {
    for (std::size_t c = 0; c < data->monomials[d].size(); ++c) {
      data->column[d].emplace(data->monomials[d][c], static_cast<Index>(c));
    }
  }

  // Ideal closure, one degree at a time.
  std::vector<Subspace<Scalar>> ideal;
  for (std::size_t d = 0; d < levels; ++d) ideal.emplace_back(static_cast<Index>(data->monomials[d].size()));
  auto to_vector = [&](const SuperPolynomial& poly, std::size_t d) {
    Vector v = Vector::Zero(static_cast<Index>(data->monomials[d].size()));
    for (const auto& [m, c] : poly.terms()) v(data->column[d].at(m)) += p.field.bind(c);
    return v;
  };
  for (std::size_t d = 1; d < levels; ++d) {
    const Index width = static_cast<Index>(data->monomials[d].size());
    for (const auto& r : p.relations) {
      if (!r.is_zero() && static_cast<std::size_t>(*r.homogeneous_degree()) == d) ideal[d].insert(to_vector(r, d));
    }
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const auto w = static_cast<std::size_t>(gens[g].bidegree.total());
      if (w >= d) continue;
      const auto& lower = ideal[d - w];
      const auto& lower_monomials = data->monomials[d - w];
      for (Index j = 0; j < lower.dim(); ++j) {
        const Vector& v = lower.basis(j);
        for (int side = 0; side < (p.flavor == Flavor::associative ? 2 : 1); ++side) {
          Vector out = Vector::Zero(width);
          for (Index c = 0; c < v.size(); ++c) {
            if (is_zero(v(c))) continue;
            std::vector<int> word = lower_monomials[static_cast<std::size_t>(c)].letters();
            if (side == 0) {
              word.insert(word.begin(), static_cast<int>(g));
            } else {
              word.push_back(static_cast<int>(g));
            }
            if (auto n = normalize(p.flavor, word, gens)) out(data->column[d].at(n->monomial)) += n->sign * v(c);
          }
          ideal[d].insert(out);
        }
      }
    }
  }

  // Standard monomials form the basis: degree ascending, monomial order ascending.
  std::vector<BasisElement> basis;
  std::vector<Monomial> basis_monomials;
  for (std::size_t d = 0; d < levels; ++d) {
    const auto free = ideal[d].non_pivots();
    data->basis_of_column[d].assign(data->monomials[d].size(), -1);
    for (auto it = free.rbegin(); it != free.rend(); ++it) {
      const Monomial& m = data->monomials[d][static_cast<std::size_t>(*it)];
      data->basis_of_column[d][static_cast<std::size_t>(*it)] = static_cast<Index>(basis.size());
      basis.push_back({to_string(m, gens), parity(m, gens), bidegree(m, gens)});
      basis_monomials.push_back(m);
      data->words.push_back(m.letters());
    }
  }
  for (std::size_t d = 0; d < levels; ++d) {
    for (Index j = 0; j < ideal[d].dim(); ++j) {
      const Index pivot = ideal[d].pivots()[static_cast<std::size_t>(j)];
      const Vector& row = ideal[d].basis(j);
      SparseVector nf;
      for (Index c = 0; c < row.size(); ++c) {
        if (c == pivot || is_zero(row(c))) continue;
        nf.emplace_back(data->basis_of_column[d][static_cast<std::size_t>(c)], -row(c));
      }
      data->pivot_normal_form[d].emplace(pivot, std::move(nf));
    }
  }

  const auto n = basis.size();
  std::vector<SparseVector> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<int> word = basis_monomials[i].letters();
      word.insert(word.end(), basis_monomials[j].letters().begin(), basis_monomials[j].letters().end());
      auto nm = normalize(p.flavor, word, gens);
      if (!nm || degree(nm->monomial, gens) > cap) continue;
      const auto d = static_cast<std::size_t>(degree(nm->monomial, gens));
      const Index col = data->column[d].at(nm->monomial);
      const Index b = data->basis_of_column[d][static_cast<std::size_t>(col)];
      const Scalar s = p.field.bind(nm->sign);
      auto& entry = table[i * n + j];
      if (b >= 0) {
        entry.emplace_back(b, s);
      } else {
        for (const auto& [idx, v] : data->pivot_normal_form[d].at(col)) entry.emplace_back(idx, s * v);
      }
    }
  }

  Vector unit = Vector::Zero(static_cast<Index>(n));
  unit(0) = p.field(1);
  Algebra a(p.name, p.field, p.flavor, std::move(basis), std::move(table), unit, {});
  a.pres_ = data;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    a.generators_.push_back(
        {gens[g].name, gens[g].parity, a.reduce(SuperPolynomial::generator(p.flavor, p.generators, static_cast<int>(g)))});
  }
  return a;
}

Subspace<Scalar> odd_power_span(const Algebra& a, int l) {
  if (l < 0) throw std::invalid_argument("odd_power_span: negative exponent");
  if (l == 0) return Subspace<Scalar>::whole(a.dim());
  std::vector<Index> odd;
  for (Index i = 0; i < a.dim(); ++i) {
    if (a.parity(i) == Parity::odd) odd.push_back(i);
  }
  Subspace<Scalar> current(a.dim());
  for (Index i : odd) current.insert(a.basis_vector(i));
  for (int step = 1; step < l; ++step) {
    Subspace<Scalar> next(a.dim());
    for (Index i : odd) {
      for (const auto& v : current.basis()) next.insert(a.mult(a.basis_vector(i), v));
    }
    current = std::move(next);
    if (current.is_zero_space()) break;
  }
  return current;
}

namespace {

Vector accumulate(const Algebra& a, const SparseVector& s) {
  Vector v = a.zero();
  for (const auto& [k, c] : s) v(k) += c;
  return v;
}

}  // namespace

bool is_supercommutative(const Algebra& a) {
  for (Index i = 0; i < a.dim(); ++i) {
    if (a.parity(i) == Parity::odd && !is_zero(accumulate(a, a.product(i, i)))) return false;
    for (Index j = i + 1; j < a.dim(); ++j) {
      const Vector ij = accumulate(a, a.product(i, j));
      const Vector ji = accumulate(a, a.product(j, i));
      if (ij != koszul(a.parity(i), a.parity(j)) * ji) return false;
    }
  }
  return true;
}

bool is_associative(const Algebra& a) {
  const Index n = a.dim();
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const auto& ij = a.product(i, j);
      for (Index k = 0; k < n; ++k) {
        Vector left = a.zero();
        for (const auto& [m, c] : ij) {
          for (const auto& [r, v] : a.product(m, k)) left(r) += c * v;
        }
        Vector right = a.zero();
        for (const auto& [m, c] : a.product(j, k)) {
          for (const auto& [r, v] : a.product(i, m)) right(r) += c * v;
        }
        if (left != right) return false;
      }
    }
  }
  return true;
}

bool unit_is_identity(const Algebra& a) {
  for (Index i = 0; i < a.dim(); ++i) {
    const Vector e = a.basis_vector(i);
    if (a.mult(a.unit(), e) != e || a.mult(e, a.unit()) != e) return false;
  }
  return true;
}

Subspace<Scalar> ideal_generated(const Algebra& a, const std::vector<Vector>& elements) {
  Subspace<Scalar> s(a.dim());
  std::deque<Vector> queue;
  for (const auto& e : elements) {
    if (s.insert(e)) queue.push_back(e);
  }
  while (!queue.empty()) {
    const Vector v = std::move(queue.front());
    queue.pop_front();
    for (Index i = 0; i < a.dim(); ++i) {
      const Vector e = a.basis_vector(i);
      for (Vector w : {a.mult(e, v), a.mult(v, e)}) {
        if (s.insert(w)) queue.push_back(std::move(w));
      }
    }
  }
  return s;
}

bool is_two_sided_ideal(const Algebra& a, const Subspace<Scalar>& s) {
  for (const auto& v : s.basis()) {
    for (Index i = 0; i < a.dim(); ++i) {
      const Vector e = a.basis_vector(i);
      if (!s.contains(a.mult(e, v)) || !s.contains(a.mult(v, e))) return false;
    }
  }
  return true;
}

Subspace<Scalar> product_span(const Algebra& a, const Subspace<Scalar>& s, const Subspace<Scalar>& t) {
  Subspace<Scalar> out(a.dim());
  for (const auto& x : s.basis()) {
    for (const auto& y : t.basis()) out.insert(a.mult(x, y));
  }
  return out;
}

Subspace<Scalar> parity_part(const Algebra& a, const Subspace<Scalar>& s, Parity p) {
  Subspace<Scalar> out(a.dim());
  for (const auto& v : s.basis()) {
    Vector w = v;
    for (Index i = 0; i < a.dim(); ++i) {
      if (a.parity(i) != p) w(i) = Scalar(0);
    }
    out.insert(w);
  }
  return out;
}

bool is_graded_subspace(const std::vector<Parity>& parities, const Subspace<Scalar>& s) {
  for (const auto& v : s.basis()) {
    std::optional<Parity> p;
    for (Index i = 0; i < v.size(); ++i) {
      if (is_zero(v(i))) continue;
      if (p && *p != parities[static_cast<std::size_t>(i)]) return false;
      p = parities[static_cast<std::size_t>(i)];
    }
  }
  return true;
}

bool is_algebra_isomorphism(const Algebra& source, const Algebra& target, const std::vector<Vector>& images) {
  if (source.dim() != target.dim()) return false;
  if (images.size() != source.generators().size()) {
    throw std::invalid_argument("is_algebra_isomorphism: need one image per generator");
  }
  std::vector<Vector> phi;
  for (Index i = 0; i < source.dim(); ++i) {
    Vector v = target.unit();
    for (int g : source.word(i)) v = target.mult(v, images[static_cast<std::size_t>(g)]);
    const auto p = target.parity_of(v);
    if (!p || (*p != source.parity(i) && !is_zero(v))) return false;
    phi.push_back(std::move(v));
  }
  Matrix m(source.dim(), source.dim());
  for (Index i = 0; i < source.dim(); ++i) m.col(i) = phi[static_cast<std::size_t>(i)];
  if (rank(m) != source.dim()) return false;
  for (Index i = 0; i < source.dim(); ++i) {
    for (Index j = 0; j < source.dim(); ++j) {
      Vector expected = target.zero();
      for (const auto& [k, c] : source.product(i, j)) expected += c * phi[static_cast<std::size_t>(k)];
      if (target.mult(phi[static_cast<std::size_t>(i)], phi[static_cast<std::size_t>(j)]) != expected) return false;
    }
  }
  return true;
}

}  // namespace superdim
