#include "superdim/graded.hpp"

#include <stdexcept>

#include "superdim/sdim.hpp"

namespace superdim {

namespace {

Index first_nonzero(const Vector& v) {
  for (Index i = 0; i < v.size(); ++i) {
    if (!is_zero(v(i))) return i;
  }
  return -1;
}

std::string degree_label(BidegreeIndex d, bool bigraded) {
  return bigraded ? "(" + std::to_string(d.first) + "," + std::to_string(d.second) + ")" : std::to_string(d.first);
}

struct Piece {
  BidegreeIndex degree;
  const Quotient<Scalar>* quotient;
  Index offset;
};

// Assembles an algebra whose basis is the union of the pieces' representatives.
AlgebraPtr assemble_algebra(const Algebra& a, const std::vector<Piece>& pieces, bool bigraded, const std::string& name) {
  std::map<BidegreeIndex, const Piece*> by_degree;
  for (const auto& p : pieces) by_degree[p.degree] = &p;
  std::vector<BasisElement> basis;
  std::vector<Vector> reps;
  std::vector<BidegreeIndex> degree;
  for (const auto& p : pieces) {
    for (Index j = 0; j < p.quotient->dim(); ++j) {
      const Vector& r = p.quotient->representative(j);
      const auto par = a.parity_of(r);
      if (!par) throw std::invalid_argument(name + ": filtration is not graded by parity");
      basis.push_back({"[" + a.basis(first_nonzero(r)).name + "]_" + degree_label(p.degree, bigraded), *par,
                       Bidegree{p.degree.first, p.degree.second}});
      reps.push_back(r);
      degree.push_back(p.degree);
    }
  }
  const auto n = basis.size();
  std::vector<SparseVector> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const BidegreeIndex d{degree[i].first + degree[j].first, degree[i].second + degree[j].second};
      auto it = by_degree.find(d);
      if (it == by_degree.end()) continue;
      const Vector x = a.mult(reps[i], reps[j]);
      if (is_zero(x)) continue;
      const Vector c = it->second->quotient->coordinates(x);
      for (Index k = 0; k < c.size(); ++k) {
        if (!is_zero(c(k))) table[i * n + j].emplace_back(it->second->offset + k, c(k));
      }
    }
  }
  Vector unit = Vector::Zero(static_cast<Index>(n));
  const Piece* base = by_degree.at({0, 0});
  const Vector cu = base->quotient->coordinates(a.unit());
  for (Index k = 0; k < cu.size(); ++k) unit(base->offset + k) = cu(k);
  std::vector<NamedElement> gens;
  for (std::size_t i = 0; i < n; ++i) {
    Vector e = Vector::Zero(static_cast<Index>(n));
    e(static_cast<Index>(i)) = a.field()(1);
    gens.push_back({basis[i].name, basis[i].parity, e});
  }
  return std::make_shared<const Algebra>(name, a.field(), a.flavor(), std::move(basis), std::move(table), unit,
                                         std::move(gens));
}

SuperModule assemble_module(const SuperModule& m, const Algebra& a, const std::vector<Piece>& algebra_pieces,
                            const std::vector<Piece>& module_pieces, const AlgebraPtr& target, bool bigraded) {
  std::map<BidegreeIndex, const Piece*> by_degree;
  for (const auto& p : module_pieces) by_degree[p.degree] = &p;
  std::vector<std::string> names;
  std::vector<Parity> parities;
  std::vector<Vector> reps;
  std::vector<BidegreeIndex> degree;
  for (const auto& p : module_pieces) {
    for (Index j = 0; j < p.quotient->dim(); ++j) {
      const Vector& r = p.quotient->representative(j);
      const Index lead = first_nonzero(r);
      names.push_back("[" + m.names()[static_cast<std::size_t>(lead)] + "]_" + degree_label(p.degree, bigraded));
      parities.push_back(m.parity(lead));
      reps.push_back(r);
      degree.push_back(p.degree);
    }
  }
  const auto dim = static_cast<Index>(reps.size());
  std::vector<Matrix> action;
  for (const auto& ap : algebra_pieces) {
    for (Index i = 0; i < ap.quotient->dim(); ++i) {
      const Matrix rho = m.action_of(ap.quotient->representative(i));
      Matrix act = Matrix::Zero(dim, dim);
      for (Index j = 0; j < dim; ++j) {
        const BidegreeIndex d{ap.degree.first + degree[static_cast<std::size_t>(j)].first,
                              ap.degree.second + degree[static_cast<std::size_t>(j)].second};
        auto it = by_degree.find(d);
        if (it == by_degree.end()) continue;
        const Vector x = apply(rho, reps[static_cast<std::size_t>(j)]);
        if (is_zero(x)) continue;
        const Vector c = it->second->quotient->coordinates(x);
        for (Index k = 0; k < c.size(); ++k) act(it->second->offset + k, j) = c(k);
      }
      action.push_back(std::move(act));
    }
  }
  (void)a;
  return SuperModule(target, std::move(names), std::move(parities), std::move(action));
}

Subspace<Scalar> sum(const Subspace<Scalar>& x, const Subspace<Scalar>& y) {
  Subspace<Scalar> s = x;
  s.insert_all(y);
  return s;
}

}  // namespace

std::vector<Subspace<Scalar>> ideal_powers(const Algebra& a, const Subspace<Scalar>& ideal) {
  if (ideal.ambient_dim() != a.dim()) throw std::invalid_argument("ideal has wrong ambient dimension");
  if (!is_two_sided_ideal(a, ideal)) throw std::invalid_argument("subspace is not a two-sided ideal");
  std::vector<Subspace<Scalar>> powers{Subspace<Scalar>::whole(a.dim())};
  Subspace<Scalar> current = ideal;
  while (!current.is_zero_space()) {
    if (current.dim() == powers.back().dim() && powers.size() > 1) {
      throw std::domain_error("ideal is not nilpotent");
    }
    if (static_cast<Index>(powers.size()) > a.dim() + 1) throw std::domain_error("ideal is not nilpotent");
    powers.push_back(current);
    current = product_span(a, ideal, current);
  }
  powers.push_back(current);
  return powers;
}

Subspace<Scalar> odd_radical(const Algebra& a) {
  std::vector<Vector> odd;
  for (Index b = 0; b < a.dim(); ++b) {
    if (a.parity(b) == Parity::odd) odd.push_back(a.basis_vector(b));
  }
  return ideal_generated(a, odd);
}

Index GradedAlgebra::component_dim(int n) const {
  if (n < 0 || n > top_degree()) return 0;
  return components[static_cast<std::size_t>(n)].dim();
}

Vector GradedAlgebra::class_of(const Vector& x, int n) const {
  Vector out = algebra->zero();
  if (n < 0 || n > top_degree()) return out;
  const Vector c = components[static_cast<std::size_t>(n)].coordinates(x);
  for (Index k = 0; k < c.size(); ++k) out(offsets[static_cast<std::size_t>(n)] + k) = c(k);
  return out;
}

GradedAlgebra gr(AlgebraPtr a, const Subspace<Scalar>& ideal) {
  GradedAlgebra g;
  g.source = a;
  g.powers = ideal_powers(*a, ideal);
  std::vector<Piece> pieces;
  Index offset = 0;
  for (std::size_t n = 0; n + 1 < g.powers.size(); ++n) {
    g.components.emplace_back(g.powers[n + 1], g.powers[n]);
  }
  for (std::size_t n = 0; n < g.components.size(); ++n) {
    g.offsets.push_back(offset);
    pieces.push_back({{static_cast<int>(n), 0}, &g.components[n], offset});
    offset += g.components[n].dim();
  }
  g.algebra = assemble_algebra(*a, pieces, false, "gr(" + a->name() + ")");
  return g;
}

Index GradedModule::component_dim(int n) const {
  if (n < 0 || n >= static_cast<int>(components.size())) return 0;
  return components[static_cast<std::size_t>(n)].dim();
}

GradedModule gr_module(const SuperModule& m, const GradedAlgebra& g) {
  if (m.algebra_ptr() != g.source && !(m.algebra().dim() == g.source->dim())) {
    throw std::invalid_argument("gr_module: module is over a different algebra");
  }
  GradedModule out{{}, {}, {}, SuperModule::zero(g.algebra)};
  for (const auto& p : g.powers) out.filtration.push_back(product_subspace(m, p));
  while (out.filtration.size() > 1 && out.filtration[out.filtration.size() - 2].is_zero_space()) {
    out.filtration.pop_back();
  }
  for (std::size_t n = 0; n + 1 < out.filtration.size(); ++n) {
    out.components.emplace_back(out.filtration[n + 1], out.filtration[n]);
  }
  std::vector<Piece> algebra_pieces, module_pieces;
  Index offset = 0;
  for (std::size_t n = 0; n < out.components.size(); ++n) {
    out.offsets.push_back(offset);
    module_pieces.push_back({{static_cast<int>(n), 0}, &out.components[n], offset});
    offset += out.components[n].dim();
  }
  for (std::size_t n = 0; n < g.components.size(); ++n) {
    algebra_pieces.push_back({{static_cast<int>(n), 0}, &g.components[n], g.offsets[n]});
  }
  out.module = assemble_module(m, *g.source, algebra_pieces, module_pieces, g.algebra, false);
  return out;
}

Index BigradedAlgebra::component_dim(int k, int l) const {
  auto it = components.find({k, l});
  return it == components.end() ? 0 : it->second.dim();
}

bool BigradedAlgebra::surjects_onto(const GradedAlgebra& g) const {
  for (int n = 0; n <= g.top_degree(); ++n) {
    Subspace<Scalar> image(g.algebra->dim());
    for (const auto& [d, q] : components) {
      if (d.first + d.second != n) continue;
      for (Index j = 0; j < q.dim(); ++j) image.insert(g.class_of(q.representative(j), n));
    }
    if (image.dim() != g.component_dim(n)) return false;
  }
  return true;
}

namespace {

// I_{k,l} = I_0^k I_1^l X for X = A (or X = M through an action).
std::map<BidegreeIndex, Subspace<Scalar>> bifiltration(const Algebra& a, const Subspace<Scalar>& ideal) {
  const Subspace<Scalar> i0 = parity_part(a, ideal, Parity::even);
  const Subspace<Scalar> i1 = parity_part(a, ideal, Parity::odd);
  std::map<BidegreeIndex, Subspace<Scalar>> f;
  Subspace<Scalar> column = Subspace<Scalar>::whole(a.dim());
  for (int l = 0;; ++l) {
    if (l > a.dim() + 1) throw std::domain_error("odd part of the ideal is not nilpotent");
    Subspace<Scalar> cur = column;
    for (int k = 0;; ++k) {
      if (k > a.dim() + 1) throw std::domain_error("even part of the ideal is not nilpotent");
      f.emplace(BidegreeIndex{k, l}, cur);
      if (cur.is_zero_space()) break;
      cur = product_span(a, i0, cur);
    }
    if (column.is_zero_space()) break;
    column = product_span(a, i1, column);
  }
  return f;
}

Subspace<Scalar> lookup(const std::map<BidegreeIndex, Subspace<Scalar>>& f, int k, int l, Index ambient) {
  auto it = f.find({k, l});
  return it == f.end() ? Subspace<Scalar>(ambient) : it->second;
}

}  // namespace

BigradedAlgebra bgr(AlgebraPtr a, const Subspace<Scalar>& ideal) {
  ideal_powers(*a, ideal);  // validates ideal and nilpotency
  BigradedAlgebra b;
  b.source = a;
  b.filtration = bifiltration(*a, ideal);
  for (const auto& [d, s] : b.filtration) {
    if (s.is_zero_space()) continue;
    const auto [k, l] = d;
    const Subspace<Scalar> below =
        sum(lookup(b.filtration, k + 1, l, a->dim()), lookup(b.filtration, k, l + 1, a->dim()));
    Quotient<Scalar> q(below, s);
    if (q.dim() > 0) b.components.emplace(d, std::move(q));
  }
  std::vector<Piece> pieces;
  Index offset = 0;
  for (const auto& [d, q] : b.components) {
    b.offsets[d] = offset;
    pieces.push_back({d, &q, offset});
    offset += q.dim();
  }
  b.algebra = assemble_algebra(*a, pieces, true, "bgr(" + a->name() + ")");
  return b;
}

Index BigradedModule::component_dim(int k, int l) const {
  auto it = components.find({k, l});
  return it == components.end() ? 0 : it->second.dim();
}

BigradedModule bgr_module(const SuperModule& m, const BigradedAlgebra& b) {
  BigradedModule out{{}, {}, {}, SuperModule::zero(b.algebra)};
  for (const auto& [d, s] : b.filtration) out.filtration.emplace(d, product_subspace(m, s));
  for (const auto& [d, s] : out.filtration) {
    if (s.is_zero_space()) continue;
    const auto [k, l] = d;
    const Subspace<Scalar> below = sum(lookup(out.filtration, k + 1, l, m.dim()), lookup(out.filtration, k, l + 1, m.dim()));
    Quotient<Scalar> q(below, s);
    if (q.dim() > 0) out.components.emplace(d, std::move(q));
  }
  std::vector<Piece> algebra_pieces, module_pieces;
  Index offset = 0;
  for (const auto& [d, q] : out.components) {
    out.offsets[d] = offset;
    module_pieces.push_back({d, &q, offset});
    offset += q.dim();
  }
  for (const auto& [d, q] : b.components) algebra_pieces.push_back({d, &q, b.offsets.at(d)});
  out.module = assemble_module(m, *b.source, algebra_pieces, module_pieces, b.algebra, true);
  return out;
}

Report verify_graded_comparison(const SuperModule& m, const Subspace<Scalar>& ideal) {
  Report r;
  r.name = "graded comparison";
  const GradedAlgebra g = gr(m.algebra_ptr(), ideal);
  const GradedModule gm = gr_module(m, g);
  const SuperDimension sm = sdim(m);
  const SuperDimension sg = sdim(gm.module);
  const bool radical = odd_radical(m.algebra()) == ideal;
  r.values["sdim_M"] = sm.to_string();
  r.values["sdim_gr_M"] = sg.to_string();
  r.values["ideal_is_odd_radical"] = radical;
  Json dims = Json::array();
  for (const auto& c : gm.components) dims.push_back(c.dim());
  r.values["gr_M_component_dims"] = dims;

  r.check("sdim0 preserved", "sdim0 of M and gr_I(M) agree", sm.zero_module == sg.zero_module && sm.even == sg.even,
          sm.to_string() + " vs " + sg.to_string());
  r.check("sdim1(M) >= sdim1(gr_I M)", "passing to gr_I does not raise sdim1", odd_dimension(m) >= odd_dimension(gm.module),
          std::to_string(odd_dimension(m)) + " >= " + std::to_string(odd_dimension(gm.module)));
  if (radical) {
    r.check("sdim(M) = sdim(gr_I M) for I = I_R", "odd radical filtration preserves sdim", sm == sg,
            sm.to_string() + " = " + sg.to_string());
  }
  r.check("sum of gr_I(M) component dims = dim M", "dimension conservation", gm.module.dim() == m.dim(),
          std::to_string(gm.module.dim()) + " = " + std::to_string(m.dim()));
  return r;
}

}  // namespace superdim
