#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <future>
#include <sstream>
#include <string>
#include <vector>

#include "tpolar/classes.hpp"
#include "tpolar/constructions.hpp"
#include "tpolar/curves.hpp"
#include "tpolar/gcd.hpp"
#include "tpolar/maps.hpp"

namespace tpolar {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string witness;  // empty when passed
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }
  std::size_t failure_count() const noexcept {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
  }
};

struct VerifyOptions {
  RandomizationConfig randomization{};
  /// Entries whose complement-class identity is checked on the polynomial
  /// as given rather than on a random translate.
  std::vector<std::string> untranslated_class_identity;
  std::size_t reducible_pairs = 10;
  std::size_t monomial_matrices = 1;
  /// Size caps for the heavier per-entry checks.
  std::size_t max_pyramid_arity = 4;
  int max_curve_degree = 3;
};

namespace detail {

enum class CheckKind : std::uint64_t {
  Translate = 1,
  MonomialMatrix = 2,
  ReduciblePairs = 3,
};

inline std::string join_values(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

inline std::string expected_string(const CorpusEntry& e) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < e.expected->size(); ++i) {
    os << (i ? "," : "");
    if ((*e.expected)[i]) os << *(*e.expected)[i];
    else os << '*';
  }
  os << ')';
  return os.str();
}

inline std::int64_t generic_arrangement_euler(std::int64_t n, std::int64_t m) {
  std::int64_t chi = 0;
  for (std::int64_t i = 0; i <= n; ++i) chi += (i % 2 ? -1 : 1) * binomial(m, i) * (n - i + 1);
  return chi;
}

using CheckTask = std::function<CheckResult()>;

/// Runs `body`; any library error becomes a failed check with the message
/// as witness.
inline CheckTask make_check(std::string name, std::function<std::string()> body) {
  return [name = std::move(name), body = std::move(body)]() {
    CheckResult r{name, true, {}};
    try {
      r.witness = body();
      r.passed = r.witness.empty();
    } catch (const std::exception& e) {
      r.passed = false;
      r.witness = std::string("error: ") + e.what();
    }
    return r;
  };
}

struct GeneralPositionData {
  MultidegreeVector toric;
  MultidegreeVector gradient;
};

inline GeneralPositionData general_position_data(const Polynomial& g, const RandomizationConfig& cfg) {
  return {multidegrees(toric_polar_map(g), cfg), multidegrees(gradient_map(g), cfg)};
}

}  // namespace detail

/// Runs every proposition check applicable to the corpus entries. Random
/// objects are derived from `seed`; failures are reported, not thrown.
inline VerifyReport verify_propositions(std::uint64_t seed, const std::vector<CorpusEntry>& corpus,
                                        const VerifyOptions& opts = {}) {
  using detail::make_check;
  RandomizationConfig cfg = opts.randomization;
  cfg.seed = seed;
  cfg.validate();
  const PrimeField field(cfg.prime);

  std::vector<detail::CheckTask> tasks;
  std::vector<std::size_t> plane_entries;  // candidates for reducible pairs

  for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
    const CorpusEntry& e = corpus[idx];
    Polynomial f(field, 1);
    try {
      f = e.parse(field);
    } catch (const std::exception& err) {
      tasks.push_back(make_check("parse:" + e.name, [msg = std::string(err.what())] { return "error: " + msg; }));
      continue;
    }
    const int k = f.total_degree();
    const std::size_t arity = f.arity();
    const bool plane = arity == 3 && k >= 1 && k <= opts.max_curve_degree;
    if (plane) plane_entries.push_back(idx);

    if (e.expected) {
      tasks.push_back(make_check("multidegrees:" + e.name, [e, f, cfg]() -> std::string {
        MultidegreeVector d = multidegrees(toric_polar_map(f), cfg);
        if (e.matches_expected(d)) return {};
        return "got " + d.to_string() + ", expected " + detail::expected_string(e);
      }));
    }

    if (k >= 1 && k <= 3 && arity <= 4) {
      tasks.push_back(make_check("reducedness:" + e.name, [f, cfg]() -> std::string {
        MultidegreeVector d = multidegrees(toric_polar_map(f), cfg);
        for (unsigned m : {2u, 3u}) {
          MultidegreeVector dm = multidegrees(toric_polar_map(f.pow(m), {.reduce = false}), cfg);
          if (!(dm == d)) return "power " + std::to_string(m) + ": " + dm.to_string() + " vs " + d.to_string();
        }
        return {};
      }));
    }

    if (plane) {
      tasks.push_back(make_check("plane-degree-formula:" + e.name, [f, cfg]() -> std::string {
        PlaneCurveReport r = plane_degree_formula(f);
        std::int64_t engine = topological_degree(toric_polar_map(f), cfg);
        if (engine == r.degree_formula) return {};
        return "formula " + std::to_string(r.degree_formula) + " (k=" + std::to_string(r.k) + ", mu=" +
               std::to_string(r.milnor_sum) + ", i=" + std::to_string(r.incidence) + ", t=" +
               std::to_string(r.tangency) + ") vs engine " + std::to_string(engine);
      }));
    }

    if (plane && k >= 2) {
      const std::uint64_t s1 = derive_seed(seed, idx, static_cast<std::uint64_t>(detail::CheckKind::Translate));
      const std::uint64_t s2 = derive_seed(s1, idx, 1);
      // Each general-position check gets one resample before failing.
      auto with_resample = [f, cfg, s1, s2](auto&& test) -> std::string {
        std::string w1 = test(detail::general_position_data(random_translate(f, s1), cfg));
        if (w1.empty()) return {};
        std::string w2 = test(detail::general_position_data(random_translate(f, s2), cfg));
        if (w2.empty()) return {};
        return w1 + "; after resampling: " + w2;
      };
      const std::int64_t n = 2;
      tasks.push_back(make_check("general-position-degree:" + e.name, [f, k, with_resample]() -> std::string {
        const std::int64_t mu = total_milnor(f);
        const std::int64_t expected = deg_from_milnor_general_position(k, n, mu);
        return with_resample([&](const detail::GeneralPositionData& g) -> std::string {
          if (g.toric.topological_degree() == expected) return {};
          return "deg " + std::to_string(g.toric.topological_degree()) + " vs k^n - mu = " + std::to_string(expected);
        });
      }));
      tasks.push_back(make_check("toric-gradient-transform:" + e.name, [with_resample]() -> std::string {
        return with_resample([](const detail::GeneralPositionData& g) -> std::string {
          MultidegreeVector t = toric_from_gradient(g.gradient);
          if (t == g.toric && toric_gradient_identity_holds(g.toric, g.gradient)) return {};
          return "toric " + g.toric.to_string() + " vs transform of gradient " + g.gradient.to_string() + " = " +
                 t.to_string();
        });
      }));
      const bool as_given = std::find(opts.untranslated_class_identity.begin(), opts.untranslated_class_identity.end(),
                                      e.name) != opts.untranslated_class_identity.end();
      auto class_test = [](const detail::GeneralPositionData& g) -> std::string {
        ChowClassVector lhs = csm_complement_D_from_gradient(g.gradient);
        ChowClassVector standard = csm_standard_complement(g.toric);
        if (check_union_general_section(lhs, standard)) return {};
        return "c_SM(P^n \\ D) = " + lhs.to_string() + " vs (1+h)^(n+1) * " + standard.to_string() + " = " +
               (ChowClassVector::one_plus_h_power(lhs.n(), static_cast<int>(lhs.n()) + 1) * standard).to_string();
      };
      if (as_given) {
        tasks.push_back(make_check("complement-class-identity:" + e.name, [f, cfg, class_test]() -> std::string {
          return class_test(detail::general_position_data(f, cfg));
        }));
      } else {
        tasks.push_back(make_check("complement-class-identity:" + e.name,
                                   [with_resample, class_test]() -> std::string { return with_resample(class_test); }));
      }
    }

    if (k >= 1 && k <= 3 && arity <= opts.max_pyramid_arity && arity + 1 <= kMaxVars) {
      tasks.push_back(make_check("pyramid:" + e.name, [f, k, cfg]() -> std::string {
        Polynomial m = Polynomial::monomial(f.field(), f.arity(), Monomial::variable(0, static_cast<std::uint16_t>(k - 1)));
        Polynomial p = pyramid(f, m);
        std::int64_t base = topological_degree(toric_polar_map(f), cfg);
        std::int64_t lifted = topological_degree(toric_polar_map(p), cfg);
        if (base == lifted) return {};
        return "deg T_f = " + std::to_string(base) + ", pyramid " + std::to_string(lifted);
      }));
    }

    if (plane) {
      for (std::size_t j = 0; j < opts.monomial_matrices; ++j) {
        const std::uint64_t s = derive_seed(seed, idx, static_cast<std::uint64_t>(detail::CheckKind::MonomialMatrix) + 16 * j);
        const std::string suffix = e.name + "#" + std::to_string(j);
        tasks.push_back(make_check("monomial-invariance:" + suffix, [f, cfg, s]() -> std::string {
          Rng rng(s);
          MonomialMatrix a = random_invertible_monomial_matrix(2, 2, rng);
          Polynomial pulled = strip_monomial_factor(monomial_pullback(f, a));
          std::int64_t base = topological_degree(toric_polar_map(f), cfg);
          std::int64_t after = topological_degree(toric_polar_map(pulled), cfg);
          std::int64_t sum_deg = topological_degree(toric_polar_map(monomial_sum_polynomial(a, f.field())), cfg);
          if (base == after && sum_deg == 1) return {};
          return "A rows det " + std::to_string(a.determinant()) + ": deg T_f = " + std::to_string(base) +
                 ", after pullback " + std::to_string(after) + ", deg T_{g_A} = " + std::to_string(sum_deg);
        }));
      }
    }

    if (e.name.rfind("arrangement", 0) == 0 && k >= 1) {
      tasks.push_back(make_check("arrangement-euler:" + e.name, [f, k, cfg]() -> std::string {
        const std::int64_t n = static_cast<std::int64_t>(f.arity()) - 1;
        const std::int64_t lines = n + 1 + k;
        const std::int64_t chi = detail::generic_arrangement_euler(n, lines);
        const std::int64_t expected = (n % 2 ? -1 : 1) * chi;
        const std::int64_t engine = topological_degree(toric_polar_map(f), cfg);
        if (engine == expected) return {};
        return "deg " + std::to_string(engine) + " vs (-1)^n chi = " + std::to_string(expected) + " for " +
               std::to_string(lines) + " hyperplanes";
      }));
    }
  }

  // Random coprime pairs of plane curves from the corpus.
  if (plane_entries.size() >= 2 && opts.reducible_pairs > 0) {
    Rng rng(derive_seed(seed, 0, static_cast<std::uint64_t>(detail::CheckKind::ReduciblePairs)));
    std::size_t made = 0;
    for (std::size_t attempt = 0; made < opts.reducible_pairs && attempt < 50 * opts.reducible_pairs; ++attempt) {
      std::size_t i = plane_entries[rng() % plane_entries.size()];
      std::size_t j = plane_entries[rng() % plane_entries.size()];
      if (i == j) continue;
      Polynomial f = corpus[i].parse(field), g = corpus[j].parse(field);
      if (!multivariate_gcd(f, g).is_constant()) continue;
      ++made;
      tasks.push_back(make_check("reducible-curves:" + corpus[i].name + "*" + corpus[j].name + "#" + std::to_string(made),
                                 [f, g, cfg]() -> std::string {
                                   ReducibleCompositionCheck c = reducible_composition_check(f, g, cfg);
                                   if (c.holds()) return {};
                                   return "deg T_fg = " + std::to_string(c.degree_product) + " vs " +
                                          std::to_string(c.degree_f) + " + " + std::to_string(c.degree_g) + " + " +
                                          std::to_string(c.intersections);
                                 }));
    }
  }

  VerifyReport report;
  report.checks.reserve(tasks.size());
  if (cfg.parallel) {
    std::vector<std::future<CheckResult>> futures;
    futures.reserve(tasks.size());
    for (auto& t : tasks) futures.push_back(std::async(std::launch::async, t));
    for (auto& fut : futures) report.checks.push_back(fut.get());
  } else {
    for (auto& t : tasks) report.checks.push_back(t());
  }
  return report;
}

inline VerifyReport verify_propositions(std::uint64_t seed) { return verify_propositions(seed, default_corpus()); }

}  // namespace tpolar
