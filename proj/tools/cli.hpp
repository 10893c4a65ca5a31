#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tpolar/tpolar.hpp"

namespace tpolar::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kParseError = 2,
  kPrecondition = 3,
  kGenericity = 4,
};

struct RunConfig {
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = 42;
  unsigned trials = 2;
  bool json = false;

  RandomizationConfig randomization() const {
    RandomizationConfig cfg;
    cfg.prime = static_cast<Residue>(prime);
    cfg.seed = seed;
    cfg.trials = trials;
    if (prime != cfg.prime) throw PreconditionError("prime must be below 2^32");
    cfg.validate();
    return cfg;
  }
};

struct PolynomialInput {
  std::string poly;
  std::string file;
  std::string vars;
};

using json = nlohmann::ordered_json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

/// x0..xm where m is the largest index among identifiers of the form x<digits>.
inline std::vector<std::string> infer_variables(const std::string& text) {
  static const std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
  static const std::regex indexed("x([0-9]+)");
  long max_index = -1;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), ident); it != std::sregex_iterator(); ++it) {
    std::smatch m;
    const std::string name = it->str();
    if (!std::regex_match(name, m, indexed)) {
      throw ParseError("cannot infer variables from identifier '" + name + "'; pass --vars",
                       static_cast<std::size_t>(it->position()));
    }
    max_index = std::max(max_index, std::stol(m[1].str()));
  }
  if (max_index < 0) throw ParseError("cannot infer variables from a constant; pass --vars", 0);
  if (max_index >= static_cast<long>(kMaxVars)) throw PreconditionError("too many variables");
  return default_variable_names(static_cast<std::size_t>(max_index) + 1);
}

inline Polynomial load_polynomial(const PolynomialInput& in, const PrimeField& field) {
  if (in.poly.empty() == in.file.empty()) throw ParseError("exactly one of --poly and --file is required", 0);
  std::string text = in.poly.empty() ? read_file(in.file) : in.poly;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  std::vector<std::string> vars = in.vars.empty() ? infer_variables(text) : parse_variable_list(in.vars);
  return parse_polynomial(text, vars, field);
}

inline json int_array(const std::vector<std::int64_t>& v) { return json(v); }

inline void add_common(CLI::App* sub, RunConfig& rc) {
  sub->add_option("--prime", rc.prime, "field characteristic (odd prime < 2^32)")->capture_default_str();
  sub->add_option("--seed", rc.seed, "master random seed")->capture_default_str();
  sub->add_option("--trials", rc.trials, "independent trials that must agree")->capture_default_str();
  sub->add_flag("--json", rc.json, "machine-readable output");
}

inline void add_polynomial(CLI::App* sub, PolynomialInput& in) {
  sub->add_option("--poly", in.poly, "homogeneous polynomial");
  sub->add_option("--file", in.file, "file holding the polynomial");
  sub->add_option("--vars", in.vars, "comma-separated variable names (default x0..xm)");
}

inline void append_config(json& j, const RunConfig& rc) {
  j["prime"] = rc.prime;
  j["seed"] = rc.seed;
  j["trials"] = rc.trials;
}

inline int cmd_multidegrees(const PolynomialInput& in, const RunConfig& rc, bool gradient, std::ostream& out) {
  const RandomizationConfig cfg = rc.randomization();
  Polynomial f = load_polynomial(in, PrimeField(cfg.prime));
  RationalMapSpec phi = gradient ? gradient_map(f, {.seed = rc.seed}) : toric_polar_map(f, {.seed = rc.seed});
  MultidegreeVector d = multidegrees(phi, cfg);
  if (rc.json) {
    json j;
    j["map"] = gradient ? "gradient" : "toric";
    j["n"] = d.n();
    j["degree"] = d.topological_degree();
    j["multidegrees"] = int_array(d.values);
    append_config(j, rc);
    out << j.dump() << '\n';
  } else {
    out << (gradient ? "gradient" : "toric polar") << " map of P^" << d.n() << "\n";
    out << "multidegrees: " << d.to_string() << "\n";
    out << "degree: " << d.topological_degree() << (d.is_dominant() ? "" : " (not dominant)") << "\n";
  }
  return kOk;
}

inline int cmd_csm(const PolynomialInput& in, const RunConfig& rc, std::ostream& out) {
  const RandomizationConfig cfg = rc.randomization();
  Polynomial f = load_polynomial(in, PrimeField(cfg.prime));
  MultidegreeVector d = multidegrees(toric_polar_map(f, {.seed = rc.seed}), cfg);
  ChowClassVector c = csm_standard_complement(d);
  const std::int64_t chi_u = euler_standard_complement(d);
  const std::int64_t chi_d = euler_hypersurface_off_coordinates(d);
  if (rc.json) {
    json j;
    j["n"] = d.n();
    j["multidegrees"] = int_array(d.values);
    j["class"] = int_array(c.coefficients());
    j["euler_complement"] = chi_u;
    j["euler_hypersurface_off_coordinates"] = chi_d;
    append_config(j, rc);
    out << j.dump() << '\n';
  } else {
    out << "multidegrees: " << d.to_string() << "\n";
    out << "c_SM of the complement of D and the coordinate hyperplanes: " << c.to_string() << "\n";
    out << "chi(U) = " << chi_u << "\n";
    out << "chi(D \\ H) = " << chi_d << "\n";
  }
  return kOk;
}

inline int cmd_curve(const PolynomialInput& in, const RunConfig& rc, std::ostream& out) {
  const RandomizationConfig cfg = rc.randomization();
  Polynomial f = load_polynomial(in, PrimeField(cfg.prime));
  PlaneCurveReport r = plane_degree_formula(f);
  const std::int64_t engine = topological_degree(toric_polar_map(f, {.seed = rc.seed}), cfg);
  if (rc.json) {
    json j;
    j["k"] = r.k;
    j["milnor_sum"] = r.milnor_sum;
    j["incidence"] = r.incidence;
    j["tangency"] = r.tangency;
    j["degree"] = r.degree_formula;
    j["engine_degree"] = engine;
    out << j.dump() << '\n';
  } else {
    out << "k = " << r.k << "\n";
    out << "sum of Milnor numbers = " << r.milnor_sum << " (assumes weighted homogeneous singularities)\n";
    out << "fundamental incidence = " << r.incidence << "\n";
    out << "tangency = " << r.tangency << " (points per line: " << r.per_line[0] << "," << r.per_line[1] << ","
        << r.per_line[2] << ")\n";
    out << "degree from formula = " << r.degree_formula << "\n";
    out << "degree from engine = " << engine << (engine == r.degree_formula ? "" : "  MISMATCH") << "\n";
  }
  return kOk;
}

struct VerifyArgs {
  std::string corpus_file;
  std::vector<std::string> untranslated;
  std::size_t pairs = 10;
};

inline int cmd_verify(const VerifyArgs& va, const RunConfig& rc, std::ostream& out) {
  VerifyOptions opts;
  opts.randomization = rc.randomization();
  opts.untranslated_class_identity = va.untranslated;
  opts.reducible_pairs = va.pairs;
  std::vector<CorpusEntry> corpus;
  if (va.corpus_file.empty()) {
    corpus = default_corpus();
  } else {
    std::ifstream file(va.corpus_file);
    if (!file) throw PreconditionError("cannot open '" + va.corpus_file + "'");
    corpus = parse_corpus(file);
  }
  VerifyReport report = verify_propositions(rc.seed, corpus, opts);
  if (rc.json) {
    json j;
    j["seed"] = rc.seed;
    j["passed"] = report.checks.size() - report.failure_count();
    j["failed"] = report.failure_count();
    json checks = json::array();
    for (const auto& c : report.checks) {
      json cj;
      cj["name"] = c.name;
      cj["passed"] = c.passed;
      if (!c.passed) cj["witness"] = c.witness;
      checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    append_config(j, rc);
    out << j.dump() << '\n';
  } else {
    for (const auto& c : report.checks) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.passed) out << ": " << c.witness;
      out << "\n";
    }
    out << report.checks.size() - report.failure_count() << " passed, " << report.failure_count() << " failed\n";
  }
  return report.all_passed() ? kOk : kCheckFailed;
}

/// Runs the command line `args` (without the program name).
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toric polar maps: multidegrees, CSM classes and plane-curve degree formulas"};
  app.name("tpolar");
  app.require_subcommand(1);

  RunConfig rc;
  PolynomialInput in;
  bool gradient = false;
  VerifyArgs va;

  auto* md = app.add_subcommand("multidegrees", "multidegrees of the toric polar (or gradient) map");
  add_polynomial(md, in);
  add_common(md, rc);
  md->add_flag("--gradient", gradient, "use the gradient map instead");

  auto* csm = app.add_subcommand("csm", "CSM class of the standard complement and Euler characteristics");
  add_polynomial(csm, in);
  add_common(csm, rc);

  auto* curve = app.add_subcommand("curve", "degree formula for a plane curve");
  add_polynomial(curve, in);
  add_common(curve, rc);

  auto* verify = app.add_subcommand("verify", "run the proposition checks on a corpus");
  verify->add_option("--file", va.corpus_file, "corpus manifest (default: built-in corpus)");
  verify->add_option("--untranslated", va.untranslated, "entries whose class identity uses the polynomial as given");
  verify->add_option("--pairs", va.pairs, "random reducible pairs")->capture_default_str();
  add_common(verify, rc);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }

  try {
    if (md->parsed()) return cmd_multidegrees(in, rc, gradient, out);
    if (csm->parsed()) return cmd_csm(in, rc, out);
    if (curve->parsed()) return cmd_curve(in, rc, out);
    return cmd_verify(va, rc, out);
  } catch (const tpolar::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const GenericityError& e) {
    err << "genericity failure: " << e.what() << "\n";
    return kGenericity;
  } catch (const tpolar::Error& e) {
    err << "error: " << e.what() << "\n";
    return kPrecondition;
  }
}

}  // namespace tpolar::cli
