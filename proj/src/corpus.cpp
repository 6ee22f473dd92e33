#include "superdim/corpus.hpp"

#include <algorithm>
#include <stdexcept>

#include "superdim/graded.hpp"
#include "superdim/sdim.hpp"

namespace superdim {

namespace {

std::string idx(int i) { return std::to_string(i); }

Vector embed_pi(const Vector& w, Index dim_r) {
  Vector out = Vector::Zero(dim_r);
  out.tail(w.size()) = w;
  return out;
}

Presentation grassmann_ring(const Field& field, const std::vector<std::string>& names) {
  GeneratorList g;
  for (const auto& n : names) g.push_back(GeneratorSpec::make(n, Parity::odd));
  return Presentation("grassmann" + std::to_string(names.size()), field, Flavor::supercommutative, g,
                      static_cast<int>(names.size()));
}

SuperModule quotient_by(const SuperModule& m, const std::vector<Vector>& ys) {
  return quotient(m, ideal_times_module(m, ys));
}

}  // namespace

EpsilonTensor::Entry EpsilonTensor::at(int i, int j, int k) {
  for (int v : {i, j, k}) {
    if (v < 1 || v > 4) throw std::out_of_range("t index out of range");
  }
  if (i == j || j == k || i == k) return {};
  int a[3] = {i, j, k};
  int sign = 1;
  for (int p = 0; p < 3; ++p) {
    for (int q = 0; q + 1 < 3 - p; ++q) {
      if (a[q] > a[q + 1]) {
        std::swap(a[q], a[q + 1]);
        sign = -sign;
      }
    }
  }
  return {sign, "t" + idx(a[0]) + idx(a[1]) + idx(a[2])};
}

Presentation c1_algebra_b(const Field& field) {
  GeneratorList g;
  for (int i = 1; i <= 3; ++i) g.push_back(GeneratorSpec::make("phi" + idx(i), Parity::odd, Bidegree{1, 0}));
  for (int i = 1; i <= 3; ++i) g.push_back(GeneratorSpec::make("psi" + idx(i), Parity::even, Bidegree{1, 0}));
  Presentation p("B", field, Flavor::associative, g, 3);
  auto phi = [&](int i) { return p.gen("phi" + idx(i)); };
  auto psi = [&](int i) { return p.gen("psi" + idx(i)); };
  for (int i = 1; i <= 3; ++i) p.relations.push_back(multiply(phi(i), psi(i)) - multiply(psi(i), phi(i)));
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) p.relations.push_back(multiply(phi(i), phi(j)));
  }
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      p.relations.push_back(multiply(psi(i), phi(j)) - multiply(phi(i), psi(j)) - multiply(phi(j), psi(i)) +
                            multiply(psi(j), phi(i)));
    }
  }
  return p;
}

Presentation c1_ring(const Field& field) {
  Presentation p = grassmann_ring(field, {"Z1", "Z2", "Z3", "Y"});
  p.name = "R";
  return p;
}

C1 build_c1(const Field& field) {
  auto bp = std::make_shared<const Algebra>(compile(c1_algebra_b(field)));
  auto rp = std::make_shared<const Algebra>(compile(c1_ring(field)));
  const Algebra& b = *bp;
  const Index n = b.dim();

  std::vector<std::string> names;
  std::vector<Parity> parities;
  for (const auto& e : b.basis()) {
    names.push_back(e.name);
    parities.push_back(e.parity);
  }
  for (const auto& e : b.basis()) {
    names.push_back("Pi(" + e.name + ")");
    parities.push_back(flip(e.parity));
  }

  std::vector<Matrix> gens;
  for (int i = 1; i <= 3; ++i) {
    const Matrix lphi = b.left_multiplication(b.generator("phi" + idx(i)).value);
    const Matrix lpsi = b.left_multiplication(b.generator("psi" + idx(i)).value);
    Matrix z = Matrix::Zero(2 * n, 2 * n);
    z.topLeftCorner(n, n) = lphi;
    z.bottomLeftCorner(n, n) = lpsi;
    z.bottomRightCorner(n, n) = -lphi;
    gens.push_back(std::move(z));
  }
  Matrix y = Matrix::Zero(2 * n, 2 * n);
  for (Index i = 0; i < n; ++i) y(n + i, i) = field(1);
  gens.push_back(std::move(y));

  C1 c{bp, rp, SuperModule::from_generator_actions(rp, std::move(names), std::move(parities), gens)};
  if (auto defect = module_defect(c.m)) throw std::logic_error("c1 module: " + *defect);
  return c;
}

Report verify_c1(const C1& c) {
  const std::string ref_b = "phi'_1 psi'_2 phi'_3 is nonzero in B";
  const std::string ref = "Z_i Z_j M in YM and Z1 Z2 Z3 M != 0 give sdim1(M) = 3 and sdim1(M/YM) <= 1";
  const Algebra& b = *c.b;
  const Algebra& r = *c.r;
  Report rep;
  rep.name = "c1";

  const auto& bp = b.presentation();
  const Vector w = b.reduce(multiply(multiply(bp.gen("phi1"), bp.gen("psi2")), bp.gen("phi3")));
  rep.values["dim_B"] = b.dim();
  rep.values["dim_M"] = c.m.dim();
  rep.check("phi'1 psi'2 phi'3 != 0 in B", ref_b, !is_zero(w));
  rep.check("module axioms", ref, check_module(c.m));

  const Vector y = r.generator("Y").value;
  std::vector<Vector> z;
  for (int i = 1; i <= 3; ++i) z.push_back(r.generator("Z" + idx(i)).value);

  rep.check("Y is M-regular", "Y v = Pi v is odd regular", is_odd_regular(y, c.m));

  const Subspace<Scalar> ym = ideal_times_module(c.m, {y});
  bool inside = true;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const Matrix a = c.m.action_of(r.mult(z[static_cast<std::size_t>(i)], z[static_cast<std::size_t>(j)]));
      for (Index col = 0; col < a.cols(); ++col) inside = inside && ym.contains(Vector(a.col(col)));
    }
  }
  rep.check("Z_i Z_j M in YM", ref, inside);
  rep.check("Z1 Z2 Z3 M != 0", ref, !is_zero(c.m.action_of(product_of(r, z))));

  const SuperDimension s = sdim(c.m);
  rep.values["sdim"] = to_json(s);
  rep.check("sdim(M) = 0|3", ref, s == SuperDimension{false, 0, 3}, s.to_string());

  const SuperModule q = quotient_by(c.m, {y});
  const int sq = odd_dimension(q);
  rep.values["sdim1_M_mod_YM"] = sq;
  rep.check("sdim1(M/YM) <= 1", ref, sq <= 1, std::to_string(sq));

  const bool ext = is_extendable_to_longest({y}, c.m);
  rep.values["Y_extendable"] = ext;
  rep.check("(Y) not extendable to a longest system", "Y lies in no system of odd parameters of length 3", !ext);
  return rep;
}

Presentation c2_cover(const Field& field) {
  GeneratorList g;
  for (const char* t : {"t123", "t124", "t134", "t234"}) g.push_back(GeneratorSpec::make(t, Parity::even));
  for (int i = 1; i <= 4; ++i) g.push_back(GeneratorSpec::make("Y" + idx(i), Parity::odd));
  Presentation p("Aprime", field, Flavor::supercommutative, g, 3);
  for (int a = 0; a < 4; ++a) {
    for (int b = a; b < 4; ++b) p.relations.push_back(multiply(p.gen((*p.generators)[static_cast<std::size_t>(a)].name),
                                                               p.gen((*p.generators)[static_cast<std::size_t>(b)].name)));
  }
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) {
      for (int k = j + 1; k <= 4; ++k) {
        p.relations.push_back(multiply(multiply(p.gen("Y" + idx(i)), p.gen("Y" + idx(j))), p.gen("Y" + idx(k))));
      }
    }
  }
  return p;
}

namespace {

SuperPolynomial t_times(const Presentation& p, int i, int j, int k, const SuperPolynomial& x) {
  const auto e = EpsilonTensor::at(i, j, k);
  if (e.sign == 0) return p.zero();
  return Scalar(e.sign) * multiply(p.gen(e.name), x);
}

SuperPolynomial t_poly(const Presentation& p, int i, int j, int k) { return t_times(p, i, j, k, p.constant(1)); }

SuperPolynomial star(const Presentation& p, int i, int j, int k, int s) {
  return t_times(p, s, k, j, p.gen("Y" + idx(i))) + t_times(p, s, k, i, p.gen("Y" + idx(j)));
}

}  // namespace

Presentation c2_quotient(const Field& field) {
  Presentation p = c2_cover(field);
  p.name = "A";
  std::vector<SuperPolynomial> extra;
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      for (int k = 1; k <= 4; ++k) {
        for (int s = 1; s <= 4; ++s) extra.push_back(star(p, i, j, k, s));
        extra.push_back(t_times(p, j, k, i, p.gen("Y" + idx(i))));
      }
    }
  }
  for (auto& e : extra) {
    if (e.is_zero()) continue;
    e *= e.terms().begin()->second.inverse();
    if (std::find(p.relations.begin(), p.relations.end(), e) == p.relations.end()) p.relations.push_back(e);
  }
  return p;
}

namespace {

// Y indices of a basis element of A' that involves no t; nullopt otherwise.
std::optional<std::vector<int>> pure_y(const Algebra& cover, Index b) {
  std::vector<int> ys;
  for (int g : cover.word(b)) {
    if (g < 4) return std::nullopt;
    ys.push_back(g - 3);
  }
  return ys;
}

Cochain build_pi_prime(const Algebra& cover, const Algebra& a) {
  const Presentation& p = a.presentation();
  Cochain f = Cochain::zero(1, Parity::odd, cover.dim(), a.dim());
  for (Index u = 0; u < cover.dim(); ++u) {
    const auto x = pure_y(cover, u);
    if (!x || x->empty()) continue;
    for (Index v = 0; v < cover.dim(); ++v) {
      const auto y = pure_y(cover, v);
      if (!y || y->empty()) continue;
      SuperPolynomial value = p.zero();
      if (x->size() == 2 && y->size() == 1) {
        value = t_poly(p, (*x)[0], (*x)[1], (*y)[0]);
      } else if (x->size() == 1 && y->size() == 2) {
        value = t_poly(p, (*y)[0], (*y)[1], (*x)[0]);
      } else if (x->size() == 2 && y->size() == 2) {
        const int i = (*x)[0], j = (*x)[1], s = (*y)[0], k = (*y)[1];
        value = -t_times(p, s, k, j, p.gen("Y" + idx(i)));
      }
      if (!value.is_zero()) f.set({u, v}, a.reduce(value));
    }
  }
  return f;
}

bool vanishes_on(const Cochain& f, const Algebra& cover, const Subspace<Scalar>& ideal) {
  for (Index i = 0; i < ideal.dim(); ++i) {
    const Vector& v = ideal.basis(i);
    for (Index b = 0; b < cover.dim(); ++b) {
      const Vector e = cover.basis_vector(b);
      if (!is_zero(f.evaluate({v, e})) || !is_zero(f.evaluate({e, v}))) return false;
    }
  }
  return true;
}

std::vector<SuperPolynomial> quotient_generators(const Presentation& cover, const Presentation& a) {
  // Relations of A beyond those of A', rewritten in the cover's context.
  std::vector<SuperPolynomial> out;
  for (std::size_t i = cover.relations.size(); i < a.relations.size(); ++i) {
    SuperPolynomial q = cover.zero();
    for (const auto& [m, c] : a.relations[i].terms()) q.add_term(m, c);
    out.push_back(q);
  }
  return out;
}

}  // namespace

C2 build_c2(const Field& field) {
  C2 c;
  const Presentation pc = c2_cover(field);
  const Presentation pa = c2_quotient(field);
  c.cover = std::make_shared<const Algebra>(compile(pc));
  c.a = std::make_shared<const Algebra>(compile(pa));
  const Algebra& cover = *c.cover;
  const Algebra& a = *c.a;

  std::vector<Vector> gens;
  for (const auto& q : quotient_generators(pc, pa)) gens.push_back(cover.reduce(q));
  c.ideal = ideal_generated(cover, gens);
  if (cover.dim() - c.ideal.dim() != a.dim()) throw std::logic_error("c2: dim A' - dim I != dim A");

  c.pi_prime = build_pi_prime(cover, a);
  if (!vanishes_on(c.pi_prime, cover, c.ideal)) throw std::logic_error("c2: pi' does not vanish on I");

  Cochain pi = Cochain::zero(1, Parity::odd, a.dim(), a.dim());
  std::vector<Index> lift;
  for (const auto& e : a.basis()) {
    const Index l = cover.basis_index(e.name);
    if (l < 0) throw std::logic_error("c2: basis element " + e.name + " of A is not a monomial of A'");
    lift.push_back(l);
  }
  for (Index u = 0; u < a.dim(); ++u) {
    for (Index v = 0; v < a.dim(); ++v) {
      pi.set({u, v}, c.pi_prime.value({lift[static_cast<std::size_t>(u)], lift[static_cast<std::size_t>(v)]}));
    }
  }
  c.pi = ExtensionDatum::make(std::move(pi), a);
  c.r = build_A_pi(c.a, c.pi);
  return c;
}

std::vector<Vector> c2_z_elements(const C2& c) {
  const Presentation& p = c.cover->presentation();
  // (i, j, s, k) with i < j, s < k and {i, j, s, k} = {1, 2, 3, 4}.
  const int table[6][4] = {{2, 3, 1, 4}, {2, 4, 1, 3}, {3, 4, 1, 2}, {1, 4, 2, 3}, {1, 3, 2, 4}, {1, 2, 3, 4}};
  std::vector<Vector> out;
  for (const auto& row : table) out.push_back(c.cover->reduce(star(p, row[0], row[1], row[3], row[2])));
  return out;
}

Report verify_c2(const C2& c) {
  const std::string ref_i = "t123 Y4 does not belong to I";
  const std::string ref = "Y1 o Y2 o Y3 o Y4 = Pi(t123 Y4) != 0, so sdim1(R) = 4 while sdim1(R/Ry) <= 2";
  const Algebra& cover = *c.cover;
  const Algebra& a = *c.a;
  const Algebra& r = *c.r;
  Report rep;
  rep.name = "c2";
  rep.values["dim_A_prime"] = cover.dim();
  rep.values["dim_I"] = c.ideal.dim();
  rep.values["dim_A"] = a.dim();
  rep.values["dim_R"] = r.dim();

  rep.check("sdim1(A') = 2", "A' has odd dimension 2", odd_dimension(SuperModule::regular(c.cover)) == 2);
  rep.check("pi'(I, A') = pi'(A', I) = 0", "pi' induces pi on A = A'/I", vanishes_on(c.pi_prime, cover, c.ideal));
  rep.check("pi is a cocycle", "super-skew odd cocycle in C^1(A, A)", is_cocycle_pi(c.pi, a));

  const auto z = c2_z_elements(c);
  auto zi = [&](int i) { return z[static_cast<std::size_t>(i - 1)]; };
  rep.check("z1 = -z5 - z6", ref_i, zi(1) == -zi(5) - zi(6));
  rep.check("z2 = -z4 + z6", ref_i, zi(2) == -zi(4) + zi(6));
  rep.check("z3 = z4 + z5", ref_i, zi(3) == zi(4) + zi(5));
  const Index zrank = Subspace<Scalar>::spanned_by(cover.dim(), z).dim();
  rep.values["rank_z"] = zrank;
  rep.check("z4, z5, z6 span all z_i freely", ref_i, zrank == 3 && Subspace<Scalar>::spanned_by(cover.dim(), {zi(4), zi(5), zi(6)}).dim() == 3);

  const auto& pc = cover.presentation();
  const Vector v4 = cover.reduce(multiply(pc.gen("t123"), pc.gen("Y4")));
  rep.check("v4 not in span(z4, z5, z6)", ref_i, !in_span<Scalar>({zi(4), zi(5), zi(6)}, v4));
  rep.check("t123 Y4 not in I", ref_i, !c.ideal.contains(v4));

  const SuperModule reg = SuperModule::regular(c.r);
  const Vector y = r.generator("y").value;
  rep.check("y = Pi 1 is regular in R", "Pi 1 is an odd regular element of A_pi", is_odd_regular(y, reg));

  std::vector<Vector> ys;
  for (int i = 1; i <= 4; ++i) ys.push_back(r.generator("Y" + idx(i)).value);
  const Vector prod = product_of(r, ys);
  const auto& pa = a.presentation();
  const Vector expected = embed_pi(a.reduce(multiply(pa.gen("t123"), pa.gen("Y4"))), r.dim());
  rep.check("Y1 o Y2 o Y3 o Y4 = Pi(t123 Y4) != 0", ref, prod == expected && !is_zero(prod));

  const SuperDimension s = sdim(reg);
  rep.values["sdim"] = to_json(s);
  rep.check("sdim(R) = 0|4", ref, s == SuperDimension{false, 0, 4}, s.to_string());

  const int sq = odd_dimension(quotient_by(reg, {y}));
  rep.values["sdim1_R_mod_Ry"] = sq;
  rep.check("sdim1(R/Ry) <= 2", ref, sq <= 2, std::to_string(sq));

  const auto zero = ExtensionDatum::make(Cochain::zero(1, Parity::odd, a.dim(), a.dim()), a);
  const bool split = adapted_equivalence(c.pi, zero, c.a).has_value();
  rep.values["split"] = split;
  rep.check("extension is not split", "the class of pi in SH^1(A, A) is nonzero", !split);
  return rep;
}

Report verify_gr_example(const C1& c) {
  const std::string ref = "gr_I(M) for I = RY has sdim1 = 2 < sdim1(M) = 3";
  const Algebra& r = *c.r;
  Report rep;
  rep.name = "gr";

  const Vector y = r.generator("Y").value;
  const Subspace<Scalar> ideal = ideal_generated(r, {y});
  const GradedAlgebra g = gr(c.r, ideal);
  std::vector<Vector> images;
  std::vector<Vector> zc;
  for (int i = 1; i <= 3; ++i) {
    zc.push_back(g.class_of(r.generator("Z" + idx(i)).value, 0));
    images.push_back(zc.back());
  }
  const Vector yc = g.class_of(y, 1);
  images.push_back(yc);
  rep.check("gr_I(R) = R", ref, is_algebra_isomorphism(r, *g.algebra, images));

  const GradedModule gm = gr_module(c.m, g);
  rep.values["gr_M_component_dims"] = Json::array();
  for (int n = 0; n < static_cast<int>(gm.components.size()); ++n) rep.values["gr_M_component_dims"].push_back(gm.component_dim(n));
  const int sg = odd_dimension(gm.module);
  rep.values["sdim1_gr_M"] = sg;
  rep.check("sdim1(gr_I M) = 2", ref, sg == 2, std::to_string(sg));

  bool trivial = true;
  for (const auto& zi : zc) {
    for (const auto& zj : zc) trivial = trivial && is_zero(gm.module.action_of(g.algebra->mult(zi, zj)));
  }
  rep.check("Z_i Z_j acts as zero on gr_I M", ref, trivial);
  rep.check("{Z1, Y} is a longest system of gr_I M", ref,
            !is_zero(gm.module.action_of(g.algebra->mult(zc[0], yc))) && sg == 2);

  const GradedAlgebra gr_rad = gr(c.r, odd_radical(r));
  const int sr = odd_dimension(gr_module(c.m, gr_rad).module);
  rep.values["sdim1_gr_IR_M"] = sr;
  rep.check("sdim1(gr_{I_R} M) = 3", "odd radical filtration preserves sdim", sr == 3, std::to_string(sr));
  return rep;
}

Report verify_flat_example(const C2& c) {
  const std::string ref = "R is free over K[y] and Ksdim1(R) > Ksdim1(K[y]) + Ksdim1(R/Ry)";
  const std::string ref_g = "Ksdim1(A/Az) = Ksdim1(A) - 1 for a Grassmann algebra";
  const Algebra& r = *c.r;
  Report rep;
  rep.name = "flat";

  const Vector y = r.generator("y").value;
  const Index rk = rank(r.left_multiplication(y));
  rep.values["rank_y"] = rk;
  rep.values["dim_R"] = r.dim();
  rep.check("rank(y) = dim R / 2", ref, 2 * rk == r.dim());

  const auto ky = std::make_shared<const Algebra>(compile(grassmann_ring(r.field(), {"y"})));
  const int sy = odd_dimension(SuperModule::regular(ky));
  rep.values["sdim1_K_y"] = sy;
  rep.check("sdim1(K[y]) = 1", ref, sy == 1);

  const SuperModule reg = SuperModule::regular(c.r);
  const int sr = odd_dimension(reg);
  const int sq = odd_dimension(quotient_by(reg, {y}));
  rep.values["sdim1_R"] = sr;
  rep.values["sdim1_R_mod_Ry"] = sq;
  rep.check("sdim1(R) > sdim1(K[y]) + sdim1(R/Ry)", ref, sr > sy + sq,
            std::to_string(sr) + " > " + std::to_string(sy) + " + " + std::to_string(sq));

  Json drops = Json::array();
  for (int s = 1; s <= 3; ++s) {
    std::vector<std::string> names;
    for (int i = 1; i <= s; ++i) names.push_back("z" + idx(i));
    const auto lam = std::make_shared<const Algebra>(compile(grassmann_ring(r.field(), names)));
    const SuperModule m = SuperModule::regular(lam);
    const int q = odd_dimension(quotient_by(m, {lam->generator("z1").value}));
    drops.push_back(q);
    rep.check("sdim1(L" + idx(s) + "/L" + idx(s) + " z1) = " + idx(s - 1), ref_g, q == s - 1 && odd_dimension(m) == s,
              std::to_string(q));
  }
  rep.values["grassmann_quotient_sdim1"] = drops;
  return rep;
}

const std::vector<std::string>& corpus_case_names() {
  static const std::vector<std::string> names{"c1", "c2", "flat", "gr"};
  return names;
}

Report run_corpus_case(const std::string& name, const Field& field) {
  if (name == "c1") return verify_c1(build_c1(field));
  if (name == "c2") return verify_c2(build_c2(field));
  if (name == "gr") return verify_gr_example(build_c1(field));
  if (name == "flat") return verify_flat_example(build_c2(field));
  throw std::invalid_argument("unknown corpus case '" + name + "'");
}

}  // namespace superdim
