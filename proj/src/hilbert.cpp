#include "superdim/hilbert.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace superdim {

namespace {

class MonomialTable {
 public:
  MonomialTable(Flavor flavor, Context ctx) : flavor_(flavor), ctx_(std::move(ctx)) {}

  const std::vector<Monomial>& of(Bidegree d) {
    auto it = cache_.find(d);
    if (it != cache_.end()) return it->second;
    std::vector<Monomial> out;
    std::vector<int> letters;
    if (flavor_ == Flavor::supercommutative) {
      commutative(0, d, letters, out);
    } else {
      words(d, letters, out);
    }
    return cache_.emplace(d, std::move(out)).first->second;
  }

 private:
  void commutative(std::size_t g, Bidegree left, std::vector<int>& letters, std::vector<Monomial>& out) {
    const auto& gens = *ctx_;
    if (g == gens.size()) {
      if (left.k == 0 && left.l == 0) out.push_back(normalize(flavor_, letters, gens)->monomial);
      return;
    }
    const Bidegree step = gens[g].bidegree;
    const int max_power = gens[g].parity == Parity::odd ? 1 : 1 << 20;
    const std::size_t mark = letters.size();
    for (int e = 0; e <= max_power; ++e) {
      if (left.k < 0 || left.l < 0) break;
      commutative(g + 1, left, letters, out);
      letters.push_back(static_cast<int>(g));
      left = left - step;
    }
    letters.resize(mark);
  }

  void words(Bidegree left, std::vector<int>& letters, std::vector<Monomial>& out) {
    if (left.k == 0 && left.l == 0) {
      out.emplace_back(flavor_, letters);
      return;
    }
    const auto& gens = *ctx_;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const Bidegree rest = left - gens[g].bidegree;
      if (rest.k < 0 || rest.l < 0) continue;
      letters.push_back(static_cast<int>(g));
      words(rest, letters, out);
      letters.pop_back();
    }
  }

  Flavor flavor_;
  Context ctx_;
  std::map<Bidegree, std::vector<Monomial>> cache_;
};

Vector coordinates_in(const SuperPolynomial& p, const std::map<Monomial, Index, MonomialOrder>& column,
                      const Field& field) {
  Vector v = Vector::Zero(static_cast<Index>(column.size()));
  for (const auto& [m, c] : p.terms()) v(column.at(m)) = field.bind(c);
  return v;
}

}  // namespace

std::vector<Index> BigradedTable::cumulative(int l) const {
  std::vector<Index> out;
  Index acc = 0;
  for (int k = 0; k <= kmax; ++k) out.push_back(acc += at(k, l));
  return out;
}

BigradedTable bigraded_dims(const Presentation& p, int kmax, int lmax) {
  if (kmax < 0 || lmax < 0) throw std::invalid_argument("bigraded_dims: negative bound");
  std::vector<std::pair<Bidegree, SuperPolynomial>> relations;
  for (const auto& r : p.relations) {
    if (r.is_zero()) continue;
    const auto d = r.homogeneous_bidegree();
    if (!d) throw std::invalid_argument("relation " + r.to_string() + " is not bihomogeneous");
    relations.emplace_back(*d, r.bound_to(p.field));
  }
  MonomialTable monomials(p.flavor, p.generators);
  BigradedTable t;
  t.kmax = kmax;
  t.lmax = lmax;
  t.dims.assign(static_cast<std::size_t>(lmax) + 1, std::vector<Index>(static_cast<std::size_t>(kmax) + 1, 0));
  for (int l = 0; l <= lmax; ++l) {
    for (int k = 0; k <= kmax; ++k) {
      const Bidegree box{k, l};
      const auto& basis = monomials.of(box);
      std::map<Monomial, Index, MonomialOrder> column{MonomialOrder{p.generators}};
      for (const auto& m : basis) column.emplace(m, static_cast<Index>(column.size()));
      Subspace<Scalar> ideal(static_cast<Index>(basis.size()));
      for (const auto& [d, r] : relations) {
        const Bidegree rest = box - d;
        if (rest.k < 0 || rest.l < 0) continue;
        if (p.flavor == Flavor::supercommutative) {
          for (const auto& m : monomials.of(rest)) {
            ideal.insert(coordinates_in(multiply(SuperPolynomial::monomial(p.generators, m), r), column, p.field));
          }
          continue;
        }
        for (int a = 0; a <= rest.k; ++a) {
          for (int b = 0; b <= rest.l; ++b) {
            for (const auto& u : monomials.of({a, b})) {
              const SuperPolynomial ur = multiply(SuperPolynomial::monomial(p.generators, u), r);
              for (const auto& v : monomials.of(rest - Bidegree{a, b})) {
                ideal.insert(coordinates_in(multiply(ur, SuperPolynomial::monomial(p.generators, v)), column, p.field));
              }
            }
          }
        }
      }
      t.dims[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)] = static_cast<Index>(basis.size()) - ideal.dim();
    }
  }
  return t;
}

BigradedTable bigraded_dims(const Presentation& p) {
  int odd = 0;
  for (const auto& g : *p.generators) odd += g.parity == Parity::odd;
  return bigraded_dims(p, 12, odd);
}

mpq_class FittedPolynomial::operator()(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string FittedPolynomial::to_string(const std::string& var) const {
  if (degree < 0) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree; i >= 0; --i) {
    const mpq_class& c = coefficients[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    mpq_class mag = abs(c);
    os << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (i == 0 || mag != 1) os << mag.get_str() << (i > 0 ? "*" : "");
    if (i > 0) os << var << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  return os.str();
}

std::optional<FittedPolynomial> fit_polynomial(const std::vector<mpq_class>& values, int dmax) {
  if (dmax < 0) return std::nullopt;
  const int n = static_cast<int>(values.size());
  const int need = dmax + 2;
  for (int k0 = 0; k0 + need <= n; ++k0) {
    // Leading entries of the difference table of the tail.
    std::vector<mpq_class> row(values.begin() + k0, values.end());
    std::vector<mpq_class> leading;
    int degree = -2;
    for (int order = 0; order <= dmax + 1 && !row.empty(); ++order) {
      bool all_zero = true;
      for (const auto& v : row) all_zero = all_zero && sgn(v) == 0;
      if (all_zero) {
        degree = order - 1;
        break;
      }
      leading.push_back(row.front());
      std::vector<mpq_class> next;
      for (std::size_t i = 0; i + 1 < row.size(); ++i) next.push_back(row[i + 1] - row[i]);
      row = std::move(next);
    }
    if (degree == -2) continue;
    // Newton form sum_j leading[j] * C(x - k0, j), expanded.
    FittedPolynomial f;
    f.threshold = k0;
    f.degree = degree;
    f.coefficients.assign(static_cast<std::size_t>(std::max(degree, 0)) + 1, 0);
    std::vector<mpq_class> basis{1};  // C(x - k0, j) in monomial coefficients
    for (int j = 0; j <= degree; ++j) {
      for (std::size_t i = 0; i < basis.size(); ++i) f.coefficients[i] += leading[static_cast<std::size_t>(j)] * basis[i];
      std::vector<mpq_class> next(basis.size() + 1, 0);
      const mpq_class shift = k0 + j;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        next[i + 1] += basis[i] / (j + 1);
        next[i] -= basis[i] * shift / (j + 1);
      }
      basis = std::move(next);
    }
    if (degree < 0) f.coefficients.clear();
    return f;
  }
  return std::nullopt;
}

std::optional<FittedPolynomial> fit_polynomial(const std::vector<Index>& values, int dmax) {
  std::vector<mpq_class> q;
  for (Index v : values) q.emplace_back(static_cast<long>(v));
  return fit_polynomial(q, dmax);
}

bool HilbertPolynomial::stabilized() const {
  for (const auto& r : rows) {
    if (!r) return false;
  }
  return true;
}

HilbertPolynomial hilbert_polynomial(const BigradedTable& t, int dmax, bool special) {
  HilbertPolynomial hp;
  hp.table = t;
  hp.dmax = dmax;
  hp.special = special;
  for (int l = 0; l <= t.lmax; ++l) hp.rows.push_back(fit_polynomial(t.cumulative(l), dmax));
  return hp;
}

SuperDimension sdim_from_hilbert(const HilbertPolynomial& hp) {
  int d = -1;
  int odd = 0;
  for (std::size_t l = 0; l < hp.rows.size(); ++l) {
    if (!hp.rows[l]) throw std::domain_error("row l = " + std::to_string(l) + " has not stabilized");
    const int deg = hp.rows[l]->degree;
    if (deg > d) {
      d = deg;
      odd = static_cast<int>(l);
    } else if (deg == d) {
      odd = static_cast<int>(l);
    }
  }
  if (d < 0) throw std::domain_error("all rows of the Hilbert table vanish");
  return {false, d, odd};
}

Report hilbert_report(const HilbertPolynomial& hp) {
  const std::string ref = "bigraded Hilbert polynomial";
  Report r;
  r.name = "hilbert";
  Json table = Json::array();
  for (const auto& row : hp.table.dims) table.push_back(row);
  r.values["table"] = table;
  r.values["kmax"] = hp.table.kmax;
  r.values["lmax"] = hp.table.lmax;
  r.values["special"] = hp.special;
  Json rows = Json::array();
  for (const auto& row : hp.rows) {
    if (!row) {
      rows.push_back(nullptr);
      continue;
    }
    Json coeffs = Json::array();
    for (const auto& c : row->coefficients) coeffs.push_back(rational_json(c));
    rows.push_back({{"degree", row->degree}, {"threshold", row->threshold}, {"coefficients", coeffs},
                    {"polynomial", row->to_string()}});
  }
  r.values["rows"] = rows;
  if (!r.check("every row stabilized", ref, hp.stabilized(),
               hp.stabilized() ? "" : "raise kmax to extend the table")) return r;
  for (std::size_t l = 0; l < hp.rows.size(); ++l) {
    r.check("deg g_" + std::to_string(l) + " <= " + std::to_string(hp.dmax), ref, hp.rows[l]->degree <= hp.dmax);
  }
  const SuperDimension s = sdim_from_hilbert(hp);
  r.values["sdim"] = to_json(s);
  r.values["asserted"] = hp.special;
  return r;
}

}  // namespace superdim
