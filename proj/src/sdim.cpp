#include "superdim/sdim.hpp"

#include <stdexcept>

namespace superdim {

std::string SuperDimension::to_string() const {
  if (zero_module) return "zero module";
  return std::to_string(even) + "|" + std::to_string(odd);
}

Json to_json(const SuperDimension& s) {
  if (s.zero_module) return Json{{"zero_module", true}};
  return Json{{"even", s.even}, {"odd", s.odd}};
}

std::vector<Index> odd_power_chain(const SuperModule& m) {
  const Algebra& a = m.algebra();
  std::vector<Matrix> odd_action;
  for (Index b = 0; b < a.dim(); ++b) {
    if (a.parity(b) == Parity::odd) odd_action.push_back(m.action(b));
  }
  std::vector<Index> dims{m.dim()};
  Subspace<Scalar> current = Subspace<Scalar>::whole(m.dim());
  while (!current.is_zero_space()) {
    if (static_cast<Index>(dims.size()) > a.dim() + 1) {
      throw std::domain_error("odd part of " + a.name() + " does not act nilpotently");
    }
    Subspace<Scalar> next(m.dim());
    for (const auto& r : odd_action) {
      for (Index j = 0; j < current.dim(); ++j) next.insert(apply(r, current.basis(j)));
    }
    current = std::move(next);
    dims.push_back(current.dim());
  }
  return dims;
}

int odd_dimension(const SuperModule& m) { return static_cast<int>(odd_power_chain(m).size()) - 2; }

SuperDimension sdim(const SuperModule& m) {
  if (m.is_zero_module()) return SuperDimension::empty();
  return {false, 0, odd_dimension(m)};
}

std::vector<NamedElement> odd_candidates(const Algebra& a, OddCandidates which) {
  std::vector<NamedElement> out;
  if (which == OddCandidates::generators) {
    for (const auto& g : a.generators()) {
      if (g.parity == Parity::odd) out.push_back(g);
    }
  } else {
    for (Index b = 0; b < a.dim(); ++b) {
      if (a.parity(b) == Parity::odd) out.push_back({a.basis(b).name, Parity::odd, a.basis_vector(b)});
    }
  }
  return out;
}

namespace {

// Depth-first enumeration of size-l subsets with nonzero product action.
// Returns false from the visitor to stop early.
template <typename Visit>
bool for_each_system(const std::vector<Matrix>& action, int l, const Matrix& prefix, std::vector<int>& chosen,
                     Visit&& visit) {
  if (static_cast<int>(chosen.size()) == l) return visit(chosen, prefix);
  const int start = chosen.empty() ? 0 : chosen.back() + 1;
  const int needed = l - static_cast<int>(chosen.size());
  for (int i = start; i + needed <= static_cast<int>(action.size()); ++i) {
    Matrix next = product(prefix, action[static_cast<std::size_t>(i)]);
    if (is_zero(next)) continue;
    chosen.push_back(i);
    const bool go_on = for_each_system(action, l, next, chosen, visit);
    chosen.pop_back();
    if (!go_on) return false;
  }
  return true;
}

Matrix identity(const SuperModule& m) {
  Matrix id = Matrix::Zero(m.dim(), m.dim());
  for (Index i = 0; i < m.dim(); ++i) id(i, i) = m.algebra().field()(1);
  return id;
}

std::vector<Matrix> candidate_actions(const SuperModule& m, const std::vector<NamedElement>& cands) {
  std::vector<Matrix> out;
  for (const auto& c : cands) out.push_back(m.action_of(c.value));
  return out;
}

bool has_system(const SuperModule& m, const std::vector<Matrix>& action, const Matrix& start, int l) {
  if (is_zero(start)) return false;
  bool found = false;
  std::vector<int> chosen;
  for_each_system(action, l, start, chosen, [&](const std::vector<int>&, const Matrix&) {
    found = true;
    return false;
  });
  (void)m;
  return found;
}

}  // namespace

std::vector<OddParameterSystem> odd_parameter_systems(const SuperModule& m, int l, OddCandidates which) {
  if (l < 0) throw std::invalid_argument("odd_parameter_systems: negative size");
  const auto cands = odd_candidates(m.algebra(), which);
  const auto action = candidate_actions(m, cands);
  std::vector<OddParameterSystem> out;
  const Matrix id = identity(m);
  if (is_zero(id)) return out;
  std::vector<int> chosen;
  for_each_system(action, l, id, chosen, [&](const std::vector<int>& idx, const Matrix& p) {
    OddParameterSystem sys;
    for (int i : idx) {
      sys.names.push_back(cands[static_cast<std::size_t>(i)].name);
      sys.elements.push_back(cands[static_cast<std::size_t>(i)].value);
    }
    for (Index j = 0; j < p.cols(); ++j) {
      if (!is_zero(p.col(j))) {
        sys.witness_index = j;
        sys.witness_image = p.col(j);
        break;
      }
    }
    out.push_back(std::move(sys));
    return true;
  });
  return out;
}

int odd_dimension_by_subsets(const SuperModule& m, OddCandidates which) {
  if (m.is_zero_module()) return -1;
  const auto action = candidate_actions(m, odd_candidates(m.algebra(), which));
  const Matrix id = identity(m);
  int l = 0;
  while (l < static_cast<int>(action.size()) && has_system(m, action, id, l + 1)) ++l;
  return l;
}

Vector product_of(const Algebra& a, const std::vector<Vector>& ys) {
  Vector p = a.unit();
  for (const auto& y : ys) p = a.mult(p, y);
  return p;
}

bool is_extendable_to_longest(const std::vector<Vector>& ys, const SuperModule& m) {
  if (!is_regular_sequence(ys, m)) throw std::invalid_argument("is_extendable_to_longest: sequence is not odd regular");
  if (m.is_zero_module()) {
    if (ys.empty()) return true;
    throw std::domain_error("is_extendable_to_longest: zero module has no odd parameters");
  }
  const SuperModule q = quotient(m, ideal_times_module(m, ys));
  return odd_dimension(q) == odd_dimension(m) - static_cast<int>(ys.size());
}

Report verify_factoring(const SuperModule& m, const std::vector<Vector>& ys) {
  const std::string ref = "factoring by an odd regular sequence";
  Report r;
  r.name = "factoring";
  const int t = static_cast<int>(ys.size());
  r.values["t"] = t;
  if (!is_regular_sequence(ys, m)) {
    r.check("sequence is odd regular", ref, false);
    return r;
  }
  if (m.is_zero_module()) {
    r.check("zero module with empty sequence", ref, t == 0);
    return r;
  }
  const Algebra& a = m.algebra();
  const int s = odd_dimension(m);
  const SuperModule q = quotient(m, ideal_times_module(m, ys));
  const int sq = odd_dimension(q);
  Subspace<Scalar> span_y(a.dim());
  span_y.insert(product_of(a, ys));
  const SuperModule image = product_submodule(m, span_y);
  const int si = odd_dimension(image);
  r.values["sdim1_M"] = s;
  r.values["sdim1_M_mod_IM"] = sq;
  r.values["sdim1_yt_M"] = si;

  r.check("sdim1(M) >= t", ref, s >= t, std::to_string(s) + " >= " + std::to_string(t));
  r.check("sdim1(M/IM) = sdim1(y^t M)", ref, sq == si, std::to_string(sq) + " = " + std::to_string(si));
  r.check("sdim1(M/IM) <= sdim1(M) - t", ref, sq <= s - t,
          std::to_string(sq) + " <= " + std::to_string(s - t));

  const bool criterion = sq == s - t;
  const auto action = candidate_actions(m, odd_candidates(a));
  const bool extension = s - t >= 0 && has_system(m, action, m.action_of(product_of(a, ys)), s - t);
  r.values["extendable"] = criterion;
  r.check("extendable to a longest system iff sdim1(M/IM) = sdim1(M) - t", ref, criterion == extension,
          std::string("criterion ") + (criterion ? "true" : "false") + ", subset search " +
              (extension ? "true" : "false"));
  return r;
}

}  // namespace superdim
