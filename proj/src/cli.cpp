#include "superdim/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "superdim/corpus.hpp"
#include "superdim/graded.hpp"
#include "superdim/hilbert.hpp"
#include "superdim/hochschild.hpp"
#include "superdim/sdim.hpp"
#include "superdim/textio.hpp"

namespace superdim {

namespace {

// Input problems that should end the run with exit_usage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <typename F>
auto with_file(const std::string& path, F&& parse) {
  const std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw UsageError(path + ":" + e.what());
  }
}

struct Options {
  std::string field;
  std::string format = "text";
  unsigned seed = 1;

  std::string algebra;
  std::string module;
  int size = -1;
  std::string candidates = "generators";
  std::string elems;
  std::string ideal;
  bool bigraded = false;
  bool verify = false;
  int kmax = 12;
  int lmax = -1;
  int dmax = -1;
  bool fit = false;
  bool special = false;
  int n = 0;
  std::string cocycle;
  bool build_api = false;
  std::string classify;
  int samples = 0;
  std::string corpus_case = "all";
  std::string emit;
};

Presentation load_presentation(const Options& o) {
  Presentation p = with_file(o.algebra, [](const std::string& t) { return parse_presentation(t); });
  if (!o.field.empty()) {
    p.field = Field::parse(o.field);
    for (auto& r : p.relations) r = r.bound_to(p.field);
  }
  return p;
}

AlgebraPtr load_algebra(const Options& o) { return std::make_shared<const Algebra>(compile(load_presentation(o))); }

SuperModule load_module(const Options& o, const AlgebraPtr& a) {
  if (o.module.empty()) return SuperModule::regular(a);
  return with_file(o.module, [&](const std::string& t) { return parse_module(t, a); });
}

std::vector<Vector> parse_elements(const std::string& list, const Algebra& a) {
  std::vector<Vector> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(a.reduce(parse_polynomial(item, a.presentation())));
    } catch (const ParseError& e) {
      throw UsageError("element '" + item + "': " + e.bare_message());
    }
  }
  if (out.empty()) throw UsageError("empty element list");
  return out;
}

Json dims_json(const std::map<BidegreeIndex, Quotient<Scalar>>& components) {
  Json out = Json::array();
  for (const auto& [kl, q] : components) out.push_back({{"k", kl.first}, {"l", kl.second}, {"dim", q.dim()}});
  return out;
}

struct Outcome {
  Json result = Json::object();
  std::vector<Report> reports;
};

Outcome cmd_sdim(const Options& o) {
  const auto a = load_algebra(o);
  const SuperModule m = load_module(o, a);
  Outcome out;
  out.result["dim"] = m.dim();
  out.result["sdim"] = to_json(sdim(m));
  if (!m.is_zero_module()) out.result["odd_power_chain"] = odd_power_chain(m);
  return out;
}

Outcome cmd_odd_params(const Options& o) {
  const auto a = load_algebra(o);
  const SuperModule m = load_module(o, a);
  OddCandidates which = OddCandidates::generators;
  if (o.candidates == "basis") {
    which = OddCandidates::basis;
  } else if (o.candidates != "generators") {
    throw UsageError("--candidates must be generators or basis");
  }
  const int l = o.size >= 0 ? o.size : odd_dimension(m);
  Outcome out;
  out.result["size"] = l;
  out.result["sdim1"] = odd_dimension(m);
  Json systems = Json::array();
  if (l >= 0) {
    for (const auto& s : odd_parameter_systems(m, l, which)) systems.push_back(s.names);
  }
  out.result["systems"] = systems;
  return out;
}

Outcome cmd_regular(const Options& o) {
  const auto a = load_algebra(o);
  const SuperModule m = load_module(o, a);
  const auto ys = parse_elements(o.elems, *a);
  for (const auto& y : ys) {
    if (a->parity_of(y) != Parity::odd) throw UsageError("--elems must be odd elements");
  }
  Outcome out;
  const bool regular = is_regular_sequence(ys, m);
  out.result["regular"] = regular;
  if (regular) {
    out.result["extendable"] = is_extendable_to_longest(ys, m);
    out.reports.push_back(verify_factoring(m, ys));
  }
  return out;
}

Outcome cmd_gr(const Options& o) {
  const auto a = load_algebra(o);
  const SuperModule m = load_module(o, a);
  Subspace<Scalar> ideal = o.ideal == "odd-radical" ? odd_radical(*a) : ideal_generated(*a, parse_elements(o.ideal, *a));
  Outcome out;
  out.result["ideal_dim"] = ideal.dim();
  if (o.bigraded) {
    const BigradedAlgebra b = bgr(a, ideal);
    const BigradedModule bm = bgr_module(m, b);
    out.result["bgr_A_components"] = dims_json(b.components);
    out.result["bgr_M_components"] = dims_json(bm.components);
    out.result["sdim_bgr_M"] = to_json(sdim(bm.module));
  } else {
    const GradedAlgebra g = gr(a, ideal);
    const GradedModule gm = gr_module(m, g);
    Json ad = Json::array(), md = Json::array();
    for (int n = 0; n <= g.top_degree(); ++n) ad.push_back(g.component_dim(n));
    for (int n = 0; n < static_cast<int>(gm.components.size()); ++n) md.push_back(gm.component_dim(n));
    out.result["gr_A_components"] = ad;
    out.result["gr_M_components"] = md;
    out.result["sdim_gr_M"] = to_json(sdim(gm.module));
  }
  out.result["sdim_M"] = to_json(sdim(m));
  if (o.verify) out.reports.push_back(verify_graded_comparison(m, ideal));
  return out;
}

Outcome cmd_hilbert(const Options& o) {
  const Presentation p = load_presentation(o);
  int odd = 0, even = 0;
  for (const auto& g : *p.generators) (g.parity == Parity::odd ? odd : even) += 1;
  const BigradedTable t = bigraded_dims(p, o.kmax, o.lmax >= 0 ? o.lmax : odd);
  Outcome out;
  if (!o.fit) {
    Json table = Json::array();
    for (const auto& row : t.dims) table.push_back(row);
    out.result["table"] = table;
    return out;
  }
  const HilbertPolynomial hp = hilbert_polynomial(t, o.dmax >= 0 ? o.dmax : even, o.special);
  Report r = hilbert_report(hp);
  out.result = r.values;
  r.values = Json::object();
  out.reports.push_back(std::move(r));
  return out;
}

Outcome cmd_hochschild(const Options& o) {
  const auto a = load_algebra(o);
  const SuperModule m = load_module(o, a);
  Outcome out;
  const auto [even, odd] = sh_dim(m, o.n);
  out.result["n"] = o.n;
  out.result["SH"] = {{"even", even}, {"odd", odd}};

  if (o.samples > 0) {
    // delta delta = 0 on random homogeneous cochains.
    std::mt19937 rng(o.seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    bool ok = true;
    for (int s = 0; s < o.samples; ++s) {
      const Parity par = s % 2 ? Parity::odd : Parity::even;
      Cochain f = Cochain::zero(o.n, par, a->dim(), m.dim());
      for (Index c = 0; c < f.tuple_count(); ++c) {
        Parity want = par;
        for (Index b : f.tuple(c)) want = want + a->parity(b);
        for (Index j = 0; j < m.dim(); ++j) {
          if (m.parity(j) == want) f.table(j, c) = a->field()(coeff(rng));
        }
      }
      ok = ok && is_zero(coboundary(coboundary(f, m), m).table);
    }
    Report r;
    r.name = "complex";
    r.check("delta delta = 0 on " + std::to_string(o.samples) + " sampled cochains", "coboundaries square to zero", ok);
    out.reports.push_back(std::move(r));
  }

  if (!o.cocycle.empty()) {
    if (!o.module.empty()) throw UsageError("--cocycle needs M = A");
    auto load = [&](const std::string& path) {
      Cochain f = with_file(path, [&](const std::string& t) { return parse_cochain(t, *a); });
      try {
        return ExtensionDatum::make(std::move(f), *a);
      } catch (const std::invalid_argument& e) {
        throw UsageError(path + ": " + e.what());
      }
    };
    const ExtensionDatum pi = load(o.cocycle);
    Report r;
    r.name = "cocycle";
    const bool cocycle = is_cocycle_pi(pi, *a);
    r.check("pi is a cocycle", "pi(1,a) = 0 and the cocycle identity", cocycle);
    if (cocycle && o.build_api) {
      const AlgebraPtr api = build_A_pi(a, pi);
      const Vector y = api->generator("y").value;
      const SuperModule reg = SuperModule::regular(api);
      out.result["dim_A_pi"] = api->dim();
      out.result["sdim_A_pi"] = to_json(sdim(reg));
      r.check("A_pi is associative", "cocycle gives an associative product", is_associative(*api));
      r.check("y = Pi 1 is regular", "Pi 1 is an odd regular element of A_pi", is_odd_regular(y, reg));
    }
    if (cocycle && !o.classify.empty()) {
      const ExtensionDatum other = load(o.classify);
      const bool other_cocycle = is_cocycle_pi(other, *a);
      r.check("second pi is a cocycle", "pi(1,a) = 0 and the cocycle identity", other_cocycle);
      if (other_cocycle) {
        const auto f = adapted_equivalence(pi, other, a);
        out.result["adaptively_isomorphic"] = f.has_value();
        if (f) out.result["certificate"] = print_cochain(*f, *a, "f");
      }
    }
    out.reports.push_back(std::move(r));
  }
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path.string());
  f << text;
}

Outcome cmd_corpus(const Options& o) {
  const Field field = o.field.empty() ? Field::rationals() : Field::parse(o.field);
  std::vector<std::string> names;
  if (o.corpus_case == "all") {
    names = corpus_case_names();
  } else {
    const auto& all = corpus_case_names();
    if (std::find(all.begin(), all.end(), o.corpus_case) == all.end()) {
      throw UsageError("unknown corpus case '" + o.corpus_case + "'");
    }
    names.push_back(o.corpus_case);
  }
  Outcome out;
  for (const auto& n : names) out.reports.push_back(run_corpus_case(n, field));

  if (!o.emit.empty()) {
    namespace fs = std::filesystem;
    const fs::path dir(o.emit);
    fs::create_directories(dir / "golden");
    const C1 c1 = build_c1(field);
    const C2 c2 = build_c2(field);
    write_file(dir / "c1_B.alg", print_presentation(c1.b->presentation()));
    write_file(dir / "c1_R.alg", print_presentation(c1.r->presentation()));
    write_file(dir / "c1_M.mod", print_module(c1.m, "M"));
    write_file(dir / "c2_Aprime.alg", print_presentation(c2.cover->presentation()));
    write_file(dir / "c2_A.alg", print_presentation(c2.a->presentation()));
    write_file(dir / "c2_pi.coc", print_cochain(c2.pi.pi, *c2.a, "pi"));
    for (const auto& r : out.reports) write_file(dir / "golden" / (r.name + ".json"), emit_report(to_json(r)));
  }
  return out;
}

// Super-dimensions print as "e|o".
std::string render(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object() && v.size() == 2 && v.contains("even") && v.contains("odd"))
    return v["even"].dump() + "|" + v["odd"].dump();
  if (v.is_object() && v.contains("zero_module")) return "zero module";
  return v.dump();
}

void print_text(std::ostream& os, const std::string& command, unsigned seed, const Outcome& o) {
  os << command << " (seed " << seed << ")\n";
  for (const auto& [k, v] : o.result.items()) os << "  " << k << ": " << render(v) << "\n";
  for (const auto& r : o.reports) {
    os << r.name << ": " << (r.passed() ? "PASS" : "FAIL") << "\n";
    for (const auto& c : r.clauses) {
      os << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.label;
      if (!c.detail.empty()) os << " (" << c.detail << ")";
      if (!c.passed) os << " -- " << c.reference;
      os << "\n";
    }
    for (const auto& [k, v] : r.values.items()) os << "  " << k << ": " << render(v) << "\n";
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Krull super-dimension toolkit", "superdim"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Options o;
  app.add_option("--field", o.field, "Ground field override: q or f<p>");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "report"}));
  app.add_option("--seed", o.seed, "Seed for sampled checks");

  auto* sdim_cmd = app.add_subcommand("sdim", "Super-dimension of a module (default: the regular module)");
  auto* params = app.add_subcommand("odd-params", "Systems of odd parameters of a given size");
  auto* regular = app.add_subcommand("regular", "Odd regular sequences and the factoring statements");
  auto* gr_cmd = app.add_subcommand("gr", "Associated graded and bigraded objects");
  auto* hilbert = app.add_subcommand("hilbert", "Bigraded Hilbert table and polynomials");
  auto* hoch = app.add_subcommand("hochschild", "Superized Hochschild cohomology and extensions");
  auto* corpus = app.add_subcommand("corpus", "Reconstructed examples");

  for (auto* c : {sdim_cmd, params, regular, gr_cmd, hilbert, hoch}) {
    c->add_option("algebra", o.algebra, "Presentation file")->required();
  }
  for (auto* c : {sdim_cmd, params, regular, gr_cmd, hoch}) c->add_option("--module", o.module, "Module file");
  params->add_option("--size", o.size, "System length (default sdim1)");
  params->add_option("--candidates", o.candidates, "generators or basis");
  regular->add_option("--elems", o.elems, "Comma-separated odd elements")->required();
  gr_cmd->add_option("--ideal", o.ideal, "Comma-separated generators or odd-radical")->required();
  gr_cmd->add_flag("--bigraded", o.bigraded);
  gr_cmd->add_flag("--verify", o.verify);
  hilbert->add_option("--kmax", o.kmax);
  hilbert->add_option("--lmax", o.lmax);
  hilbert->add_option("--dmax", o.dmax, "Degree bound for fitting (default: number of even generators)");
  hilbert->add_flag("--fit", o.fit);
  hilbert->add_flag("--special", o.special, "The filtration is special; assert the super-dimension");
  hoch->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);
  hoch->add_option("--cocycle", o.cocycle, "Odd super-skew pi in C^1(A, A)");
  hoch->add_flag("--build-api", o.build_api);
  hoch->add_option("--classify", o.classify, "Second pi to compare up to adapted isomorphism");
  hoch->add_option("--samples", o.samples, "Sampled delta delta = 0 checks");
  corpus->add_option("--case", o.corpus_case)->check(CLI::IsMember({"c1", "c2", "gr", "flat", "all"}));
  corpus->add_option("--emit", o.emit, "Write presentation, module, cochain and golden files here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_usage;
  }

  Outcome result;
  std::string command;
  try {
    if (!o.field.empty()) Field::parse(o.field);
    command = app.get_subcommands().front()->get_name();
    if (command == "sdim") result = cmd_sdim(o);
    if (command == "odd-params") result = cmd_odd_params(o);
    if (command == "regular") result = cmd_regular(o);
    if (command == "gr") result = cmd_gr(o);
    if (command == "hilbert") result = cmd_hilbert(o);
    if (command == "hochschild") result = cmd_hochschild(o);
    if (command == "corpus") result = cmd_corpus(o);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  if (o.format == "report") {
    Json doc{{"command", command}, {"seed", o.seed}, {"result", result.result}};
    Json reports = Json::object();
    for (const auto& r : result.reports) reports[r.name] = to_json(r);
    if (!result.reports.empty()) doc["reports"] = reports;
    out << emit_report(doc);
  } else {
    print_text(out, command, o.seed, result);
  }

  bool passed = true;
  for (const auto& r : result.reports) {
    for (const auto& c : r.failures()) {
      passed = false;
      err << "FAIL " << r.name << ": " << c.label << " -- " << c.reference << "\n";
    }
  }
  return passed ? exit_ok : exit_verification_failed;
}

}  // namespace superdim
