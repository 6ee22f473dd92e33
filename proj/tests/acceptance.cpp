// Runs the ten acceptance criteria and prints one PASS/FAIL line each.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "hochschild_support.hpp"
#include "superdim/corpus.hpp"
#include "superdim/graded.hpp"
#include "superdim/hilbert.hpp"
#include "superdim/sdim.hpp"
#include "superdim/textio.hpp"
#include "test_support.hpp"

using namespace superdim;
using namespace superdim::testing;

namespace {

// Collects failed expectations of one criterion.
struct Outcome {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void expect(const Report& r) {
    for (const auto& c : r.failures()) failures.push_back(r.name + ": " + c.label + " " + c.detail);
  }
};

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(SUPERDIM_CORPUS_DIR) + "/" + name);
  if (!in) throw std::runtime_error("cannot read " + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const C1& c1() {
  static const C1 c = build_c1();
  return c;
}

const C2& c2() {
  static const C2 c = build_c2();
  return c;
}

void criterion_1(Outcome& o) {
  const Report r = verify_c1(c1());
  o.expect(r);
  o.expect(c1().b->dim() == 101, "dim B = 101");
  o.expect(c1().m.dim() == 202, "dim M = 202");
  o.expect(r.values["sdim"] == Json{{"even", 0}, {"odd", 3}}, "sdim M = 0|3");
  o.expect(r.values["sdim1_M_mod_YM"] == 1, "sdim1(M/YM) = 1");
  o.expect(r.values["Y_extendable"] == false, "Y does not extend");
}

void criterion_2(Outcome& o) {
  const Report r = verify_c2(c2());
  o.expect(r);
  o.expect(c2().a->dim() == 16, "dim A = 16");
  o.expect(c2().r->dim() == 32, "dim A_pi = 32");
  o.expect(r.values["sdim"] == Json{{"even", 0}, {"odd", 4}}, "sdim A_pi = 0|4");
  o.expect(r.values["sdim1_R_mod_Ry"] == 2, "sdim1(R/Ry) = 2");
}

void criterion_3(Outcome& o) {
  std::mt19937 rng(101);
  int algebras = 0, cochains = 0;
  for (int trial = 0; trial < 24; ++trial) {
    const AlgebraPtr a = compiled(random_presentation(rng, Field::rationals(), 5));
    ++algebras;
    const SuperModule m = trial % 2 ? SuperModule::regular(a) : random_module(rng, a);
    for (int n = 0; n <= 1; ++n) {
      for (Parity p : {Parity::even, Parity::odd}) {
        const Cochain f = random_cochain(rng, m, n, p);
        const Cochain d = coboundary(f, m);
        o.expect(d.parity == p, "delta preserves parity");
        o.expect(is_homogeneous(d, m), "delta f homogeneous");
        o.expect(is_zero(coboundary(d, m).table), "delta delta = 0");
        for (Index c = 0; c < d.tuple_count(); ++c) {
          o.expect(d.table.col(c) == coboundary_oracle(f, m, d.tuple(c)), "delta matches the defining formula");
        }
        const Cochain g =
            random_combination(rng, c_basis(m, n, p), Cochain::zero(n, p, a->dim(), m.dim()), a->field());
        o.expect(is_in_C(g, m), "C^n membership");
        o.expect(is_in_C(coboundary(g, m), m), "delta maps C^n into C^{n+1}");
        cochains += 2;
      }
    }
  }
  o.expect(algebras >= 20 && cochains >= 100, "sample counts");
}

void criterion_4(Outcome& o) {
  std::mt19937 rng(59);
  int samples = 0, cocycles = 0, broken = 0;
  for (int trial = 0; trial < 15; ++trial) {
    const AlgebraPtr a = compiled(random_presentation(rng, Field::rationals(), 5));
    const SuperModule r = SuperModule::regular(a);
    const auto z1 = odd_cocycle_basis(r);
    const auto c0 = c_basis(r, 0, Parity::odd);
    for (int k = 0; k < 4; ++k) {
      Cochain pi = Cochain::zero(1, Parity::odd, a->dim(), a->dim());
      if (k == 0) {
        pi = random_combination(rng, z1, pi, a->field());
      } else if (k == 1) {
        pi = coboundary(random_combination(rng, c0, Cochain::zero(0, Parity::odd, a->dim(), a->dim()), a->field()), r);
      } else if (k == 2) {
        pi = random_combination(rng, z1, pi, a->field());
        pi.table += random_super_skew(rng, *a, true).table;
      } else {
        pi = random_super_skew(rng, *a, false);
      }
      const ExtensionDatum datum = ExtensionDatum::make(pi, *a);
      const AlgebraPtr ext = build_A_pi_unchecked(a, datum);
      const bool cocycle = is_cocycle_pi(datum, *a);
      o.expect(cocycle == (is_associative(*ext) && unit_is_identity(*ext)), "cocycle iff A_pi associative");
      o.expect(is_supercommutative(*ext), "A_pi supercommutative");
      ++samples;
      cocycles += cocycle;
      broken += !cocycle;
    }
  }
  // The corpus cocycle and a corrupted copy.
  o.expect(is_cocycle_pi(c2().pi, *c2().a), "corpus pi is a cocycle");
  o.expect(is_associative(*c2().r), "corpus A_pi associative");
  o.expect(samples >= 50 && cocycles >= 10 && broken >= 10, "sample counts");
}

void criterion_5(Outcome& o) {
  const SuperModule& m = c1().m;
  const AlgebraPtr& r = c1().r;
  o.expect(verify_graded_comparison(m, ideal_generated(*r, {r->generator("Y").value})));
  o.expect(verify_graded_comparison(m, odd_radical(*r)));
  o.expect(verify_gr_example(c1()));

  std::mt19937 rng(17);
  int cases = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const AlgebraPtr a = compiled(random_presentation(rng, Field::rationals(), 10));
    const SuperModule n = random_module(rng, a);
    const auto ideal = trial % 4 == 0 ? odd_radical(*a) : random_nilpotent_ideal(rng, *a);
    const GradedAlgebra g = gr(a, ideal);
    o.expect(is_associative(*g.algebra) && is_supercommutative(*g.algebra) && unit_is_identity(*g.algebra),
             "gr A is a supercommutative superalgebra");
    o.expect(check_module(gr_module(n, g).module), "gr M is a module");
    o.expect(verify_graded_comparison(n, ideal));
    ++cases;
  }
  o.expect(cases >= 50, "sample counts");
}

void criterion_6(Outcome& o) {
  auto free_super = [](int d, int s) {
    GeneratorList g;
    for (int i = 1; i <= d; ++i) g.push_back(GeneratorSpec::make("X" + std::to_string(i), Parity::even));
    for (int i = 1; i <= s; ++i) g.push_back(GeneratorSpec::make("Y" + std::to_string(i), Parity::odd));
    return Presentation("free", Field::rationals(), Flavor::supercommutative, g);
  };
  for (auto [d, s] : {std::pair{1, 1}, std::pair{2, 3}, std::pair{3, 2}}) {
    const std::string tag = std::to_string(d) + "|" + std::to_string(s);
    const BigradedTable t = bigraded_dims(free_super(d, s));
    for (int l = 0; l <= s; ++l) {
      for (int k = 0; k <= t.kmax; ++k) {
        o.expect(t.at(k, l) == binomial(k + d - 1, d - 1) * binomial(s, l), "table entry for " + tag);
      }
    }
    const HilbertPolynomial hp = hilbert_polynomial(t, d);
    o.expect(hp.stabilized(), "stabilized for " + tag);
    for (const auto& row : hp.rows) o.expect(row && row->degree == d, "row degree for " + tag);
    o.expect(sdim_from_hilbert(hp) == SuperDimension{false, d, s}, "sdim for " + tag);
    o.expect(hilbert_report(hp));
  }
  Presentation xy = free_super(1, 1);
  xy.relations.push_back(multiply(xy.gen("X1"), xy.gen("Y1")));
  const BigradedTable t = bigraded_dims(xy);
  for (int k = 0; k <= t.kmax; ++k) {
    o.expect(t.at(k, 0) == 1, "XY: even row");
    o.expect(t.at(k, 1) == (k == 0 ? 1 : 0), "XY: odd row");
  }
  const HilbertPolynomial hp = hilbert_polynomial(t, 1);
  o.expect(hp.rows[0] && hp.rows[0]->degree == 1 && hp.rows[1] && hp.rows[1]->degree == 0, "XY: degrees");
  o.expect(sdim_from_hilbert(hp) == SuperDimension{false, 1, 0}, "XY: sdim 1|0");
}

void criterion_7(Outcome& o) {
  const Report rc1 = verify_factoring(c1().m, {c1().r->generator("Y").value});
  o.expect(rc1);
  o.expect(rc1.values["extendable"] == false, "c1: Y not extendable");
  const Report rc2 = verify_factoring(SuperModule::regular(c2().r), {c2().r->generator("y").value});
  o.expect(rc2);
  o.expect(rc2.values["extendable"] == false, "c2: y not extendable");
  for (int s = 1; s <= 4; ++s) {
    const AlgebraPtr a = compiled(grassmann(s));
    const SuperModule r = SuperModule::regular(a);
    std::vector<Vector> ys;
    for (int t = 1; t <= s; ++t) {
      ys.push_back(a->generator("z" + std::to_string(t)).value);
      const Report rep = verify_factoring(r, ys);
      o.expect(rep);
      o.expect(rep.values["extendable"] == true && rep.values["sdim1_M_mod_IM"] == s - t,
               "Grassmann " + std::to_string(s) + ": prefix of length " + std::to_string(t));
    }
  }
}

void criterion_8(Outcome& o) {
  const Report r = verify_flat_example(c2());
  o.expect(r);
  o.expect(r.values["rank_y"] == 16, "rank of y = 16");
  o.expect(r.values["grassmann_quotient_sdim1"] == Json{0, 1, 2}, "Grassmann quotients");
}

void chain_vs_subsets(Outcome& o, const SuperModule& m, const std::string& tag) {
  const auto chain = odd_power_chain(m);
  const int ncand = static_cast<int>(odd_candidates(m.algebra(), OddCandidates::generators).size());
  for (int l = 0; l <= ncand + 1; ++l) {
    const bool nonzero = l < static_cast<int>(chain.size()) && chain[static_cast<std::size_t>(l)] > 0;
    o.expect(!odd_parameter_systems(m, l).empty() == nonzero, tag + ": systems of size " + std::to_string(l));
  }
  o.expect(odd_dimension_by_subsets(m) == odd_dimension(m), tag + ": sdim1 by subsets");
}

void criterion_9(Outcome& o) {
  chain_vs_subsets(o, c1().m, "c1 M");
  chain_vs_subsets(o, SuperModule::regular(c2().r), "c2 A_pi");
  const AlgebraPtr g = compiled(parse_presentation(slurp("grassmann2.alg")));
  chain_vs_subsets(o, parse_module(slurp("grassmann2_small.mod"), g), "grassmann2_small");
  chain_vs_subsets(o, SuperModule::regular(compiled(parse_presentation(slurp("grassmann3.alg")))), "grassmann3");
  chain_vs_subsets(o, SuperModule::regular(compiled(parse_presentation(slurp("truncated_xz.alg")))), "truncated_xz");

  std::mt19937 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const AlgebraPtr a = compiled(random_presentation(rng, Field::rationals(), 10));
    const SuperModule m = random_module(rng, a);
    chain_vs_subsets(o, m, "random " + std::to_string(trial));
    o.expect(odd_dimension_by_subsets(m, OddCandidates::basis) == odd_dimension(m), "basis candidates");
  }
}

void criterion_10(Outcome& o) {
  for (const auto& name : corpus_case_names()) {
    const std::string first = emit_report(to_json(run_corpus_case(name)));
    o.expect(first == emit_report(to_json(run_corpus_case(name))), name + ": repeated runs agree");
    o.expect(first == slurp("golden/" + name + ".json"), name + ": golden file");
  }
  for (const auto& entry : std::filesystem::directory_iterator(SUPERDIM_CORPUS_DIR)) {
    const std::string file = entry.path().filename().string();
    if (entry.path().extension() != ".alg") continue;
    const Presentation p = parse_presentation(slurp(file));
    o.expect(parse_presentation(print_presentation(p)) == p, file + ": round trip");
  }
  const AlgebraPtr r = compiled(parse_presentation(slurp("c1_R.alg")));
  const SuperModule m = parse_module(slurp("c1_M.mod"), r);
  o.expect(parse_module(print_module(m), r) == m, "c1_M.mod: round trip");
  const AlgebraPtr g = compiled(parse_presentation(slurp("grassmann2.alg")));
  const SuperModule n = parse_module(slurp("grassmann2_small.mod"), g);
  o.expect(parse_module(print_module(n, "N"), g) == n, "grassmann2_small.mod: round trip");
  const Algebra a = compile(parse_presentation(slurp("c2_A.alg")));
  const Cochain pi = parse_cochain(slurp("c2_pi.coc"), a);
  o.expect(parse_cochain(print_cochain(pi, a), a) == pi, "c2_pi.coc: round trip");
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"c1 counterexample", criterion_1},
      {"c2 non-split extension", criterion_2},
      {"Hochschild complex laws", criterion_3},
      {"cocycle iff associative", criterion_4},
      {"graded comparison", criterion_5},
      {"Hilbert polynomials", criterion_6},
      {"factoring by odd regular sequences", criterion_7},
      {"flat example", criterion_8},
      {"subset search vs odd power chain", criterion_9},
      {"determinism and DSL round trip", criterion_10},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [title, body] : criteria) {
    ++index;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      body(o);
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= 60) o.failures.push_back("over the 60 s budget");
    const bool pass = o.failures.empty();
    failed += !pass;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << index << ": " << title << " (" << std::fixed
              << std::setprecision(2) << seconds << " s)\n";
    for (std::size_t i = 0; i < o.failures.size() && i < 10; ++i) std::cout << "    " << o.failures[i] << "\n";
  }
  return failed == 0 ? 0 : 1;
}
