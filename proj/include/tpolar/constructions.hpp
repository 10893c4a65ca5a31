#pragma once

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tpolar/errors.hpp"
#include "tpolar/maps.hpp"
#include "tpolar/monomial_matrix.hpp"
#include "tpolar/parser.hpp"
#include "tpolar/polynomial.hpp"

namespace tpolar {

/// f + m * x_{n+1}, in one more variable. m must be a monomial of degree
/// deg f - 1 in the variables of f.
inline Polynomial pyramid(const Polynomial& f, const Polynomial& m) {
  if (f.arity() != m.arity()) throw PreconditionError("pyramid: f and m must share variables");
  if (!f.is_homogeneous() || f.total_degree() < 1) throw PreconditionError("pyramid: f must be homogeneous of positive degree");
  if (m.size() != 1) throw PreconditionError("pyramid: m must be a single monomial");
  if (m.total_degree() != f.total_degree() - 1) throw PreconditionError("pyramid: deg m must equal deg f - 1");
  const std::size_t n1 = f.arity() + 1;
  if (n1 > kMaxVars) throw PreconditionError("pyramid: too many variables");
  return f.with_arity(n1) + m.with_arity(n1) * Polynomial::variable(f.field(), n1, f.arity());
}

/// f_n = sum_j x_0 ... (x_j omitted) ... x_n.
inline Polynomial cremona_poly(std::size_t n, PrimeField field = PrimeField{}) {
  if (n < 1) throw PreconditionError("cremona polynomial needs n >= 1");
  Polynomial f(field, n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    Monomial m;
    for (std::size_t i = 0; i <= n; ++i)
      if (i != j) m[i] = 1;
    f += Polynomial::monomial(field, n + 1, m);
  }
  return f;
}

/// q_n = x_1^2 + x_0 x_1 + x_0 x_2 + ... + x_0 x_n.
inline Polynomial dolgachev_quadric(std::size_t n, PrimeField field = PrimeField{}) {
  if (n < 1) throw PreconditionError("dolgachev quadric needs n >= 1");
  Polynomial f = Polynomial::monomial(field, n + 1, Monomial::variable(1, 2));
  for (std::size_t i = 1; i <= n; ++i) f += Polynomial::monomial(field, n + 1, Monomial::variable(0) * Monomial::variable(i));
  return f;
}

enum class Family { A, B, C };

/// Hypersurfaces in P^n with birational toric polar map:
///   A: x1^2 + x1 x2 + x0 (x1 + ... + xn)
///   B: (x0 + x1)^k + x1^(k-1) x2 + x2^(k-1) x3 + ... + x_{n-1}^(k-1) x_n
///   C: (x0^2 + x1^2 + x2^2 - 2x0x1 - 2x0x2 - 2x1x2) + x2 x3 + ... + x_{n-1} x_n
inline Polynomial example_family(Family which, std::size_t n, int k = 2, PrimeField field = PrimeField{}) {
  if (n < 2) throw PreconditionError("example families need n >= 2");
  if (n + 1 > kMaxVars) throw PreconditionError("example family: too many variables");
  const std::size_t a = n + 1;
  auto x = [&](std::size_t i) { return Polynomial::variable(field, a, i); };
  Polynomial f(field, a);
  switch (which) {
    case Family::A: {
      Polynomial s(field, a);
      for (std::size_t i = 1; i <= n; ++i) s += x(i);
      f = x(1) * x(1) + x(1) * x(2) + x(0) * s;
      break;
    }
    case Family::B: {
      if (k < 1) throw PreconditionError("family B needs k >= 1");
      f = (x(0) + x(1)).pow(static_cast<unsigned>(k));
      for (std::size_t i = 1; i < n; ++i) f += x(i).pow(static_cast<unsigned>(k - 1)) * x(i + 1);
      break;
    }
    case Family::C: {
      f = x(0) * x(0) + x(1) * x(1) + x(2) * x(2) - (x(0) * x(1) + x(0) * x(2) + x(1) * x(2)) * field.from_int(2);
      for (std::size_t i = 2; i < n; ++i) f += x(i) * x(i + 1);
      break;
    }
  }
  return f;
}

inline Family parse_family(std::string_view s) {
  if (s == "a" || s == "A") return Family::A;
  if (s == "b" || s == "B") return Family::B;
  if (s == "c" || s == "C") return Family::C;
  throw PreconditionError("unknown family '" + std::string(s) + "' (expected a, b or c)");
}

/// g_A: the sum of the monomials of an invertible monomial transformation.
inline Polynomial monomial_sum_polynomial(const MonomialMatrix& a, PrimeField field = PrimeField{}) {
  if (a.has_common_factor()) throw PreconditionError("monomial matrix: monomials share a common factor");
  if (!a.is_invertible()) throw PreconditionError("monomial matrix: |det A| != k, the map is not birational");
  Polynomial g(field, a.size());
  for (std::size_t i = 0; i < a.size(); ++i) g += Polynomial::monomial(field, a.size(), a.monomial(i));
  return g;
}

inline constexpr int kMonomialMatrixAttempts = 100000;

/// Uniformly sampled rows summing to k, accepted when the monomials have
/// no common factor and |det A| = k.
inline MonomialMatrix random_invertible_monomial_matrix(std::size_t n, int k, Rng& rng) {
  const std::size_t size = n + 1;
  for (int attempt = 0; attempt < kMonomialMatrixAttempts; ++attempt) {
    std::vector<std::vector<int>> rows(size, std::vector<int>(size, 0));
    for (auto& r : rows)
      for (int unit = 0; unit < k; ++unit) ++r[rng() % size];
    MonomialMatrix a(rows);
    if (!a.has_common_factor() && a.is_invertible()) return a;
  }
  throw GenericityError("no invertible monomial matrix found for n = " + std::to_string(n) + ", k = " + std::to_string(k));
}

/// Divides out the largest monomial factor.
inline Polynomial strip_monomial_factor(const Polynomial& f) { return f.divide_by_monomial(f.monomial_content()); }

/// One manifest line: `name | variables | polynomial | expected multidegrees`.
/// Expected entries may be `*` for "not checked".
struct CorpusEntry {
  std::string name;
  std::vector<std::string> variables;
  std::string polynomial;
  std::optional<std::vector<std::optional<std::int64_t>>> expected;

  Polynomial parse(PrimeField field = PrimeField{}) const { return parse_polynomial(polynomial, variables, field); }

  bool matches_expected(const MultidegreeVector& d) const {
    if (!expected) return true;
    if (expected->size() != d.values.size()) return false;
    for (std::size_t i = 0; i < d.values.size(); ++i)
      if ((*expected)[i] && *(*expected)[i] != d.values[i]) return false;
    return true;
  }
};

namespace detail {

inline std::string trim_copy(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

}  // namespace detail

/// Parses a corpus manifest. Blank lines and lines starting with '#' are
/// skipped. Errors report the 1-based line number as position.
inline std::vector<CorpusEntry> parse_corpus(std::istream& in) {
  std::vector<CorpusEntry> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = detail::trim_copy(line);
    if (t.empty() || t.front() == '#') continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
      std::size_t bar = t.find('|', start);
      fields.push_back(detail::trim_copy(std::string_view(t).substr(start, bar == std::string::npos ? std::string::npos : bar - start)));
      if (bar == std::string::npos) break;
      start = bar + 1;
    }
    if (fields.size() < 3 || fields.size() > 4) throw ParseError("corpus line needs 3 or 4 '|'-separated fields", lineno);
    CorpusEntry e;
    e.name = fields[0];
    if (e.name.empty()) throw ParseError("corpus entry without a name", lineno);
    e.variables = parse_variable_list(fields[1]);
    e.polynomial = fields[2];
    if (fields.size() == 4 && !fields[3].empty()) {
      std::vector<std::optional<std::int64_t>> exp;
      std::stringstream ss(fields[3]);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        tok = detail::trim_copy(tok);
        if (tok == "*") {
          exp.emplace_back(std::nullopt);
          continue;
        }
        try {
          std::size_t used = 0;
          long long v = std::stoll(tok, &used);
          if (used != tok.size()) throw std::invalid_argument(tok);
          exp.emplace_back(v);
        } catch (const std::exception&) {
          throw ParseError("bad expected multidegree '" + tok + "'", lineno);
        }
      }
      if (exp.size() != e.variables.size()) throw ParseError("expected multidegrees must have one entry per variable", lineno);
      e.expected = std::move(exp);
    }
    // Validate the polynomial text now so errors carry the line number.
    try {
      (void)e.parse();
    } catch (const ParseError& err) {
      throw ParseError("corpus entry '" + e.name + "': " + err.what(), lineno);
    }
    out.push_back(std::move(e));
  }
  return out;
}

inline std::vector<CorpusEntry> parse_corpus(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_corpus(in);
}

/// The built-in corpus; also shipped as data/corpus.txt.
inline constexpr std::string_view kDefaultCorpus = R"(# name | variables | polynomial | expected multidegrees (optional, '*' = unchecked)
kapranov-cusp | x0,x1,x2 | 4*x1^3 - x0*x1^2 - 18*x0*x1*x2 + 27*x0*x2^2 + 4*x0^2*x2 | 1,3,2
dolgachev-q2 | x0,x1,x2 | x1^2 + x0*x1 + x0*x2 | 1,2,1
dolgachev-q3 | x0,x1,x2,x3 | x1^2 + x0*x1 + x0*x2 + x0*x3 | 1,2,2,1
dolgachev-q4 | x0,x1,x2,x3,x4 | x1^2 + x0*x1 + x0*x2 + x0*x3 + x0*x4 | 1,2,2,2,1
cremona-f2 | x0,x1,x2 | x1*x2 + x0*x2 + x0*x1 | 1,2,1
cremona-f3 | x0,x1,x2,x3 | x1*x2*x3 + x0*x2*x3 + x0*x1*x3 + x0*x1*x2 | 1,3,3,1
conic-nongeneral | x0,x1,x2 | x0^2 - x1*x2 | 1,2,0
smooth-conic | x0,x1,x2 | x0^2 + x1^2 + x2^2
nodal-cubic | x0,x1,x2 | x1^2*x2 - x0^2*(x0 + x2)
family-a-2 | x0,x1,x2 | x1^2 + x1*x2 + x0*(x1 + x2) | 1,*,1
family-a-3 | x0,x1,x2,x3 | x1^2 + x1*x2 + x0*(x1 + x2 + x3) | 1,*,*,1
family-b-2-2 | x0,x1,x2 | (x0 + x1)^2 + x1*x2 | 1,*,1
family-b-3-2 | x0,x1,x2,x3 | (x0 + x1)^2 + x1*x2 + x2*x3 | 1,*,*,1
family-b-2-3 | x0,x1,x2 | (x0 + x1)^3 + x1^2*x2 | 1,*,1
family-b-3-3 | x0,x1,x2,x3 | (x0 + x1)^3 + x1^2*x2 + x2^2*x3 | 1,*,*,1
family-c-2 | x0,x1,x2 | x0^2 + x1^2 + x2^2 - 2*x0*x1 - 2*x0*x2 - 2*x1*x2 | 1,*,1
family-c-3 | x0,x1,x2,x3 | x0^2 + x1^2 + x2^2 - 2*x0*x1 - 2*x0*x2 - 2*x1*x2 + x2*x3 | 1,*,*,1
arrangement-1 | x0,x1,x2 | x0 + 2*x1 + 3*x2 | 1,1,1
arrangement-2 | x0,x1,x2 | (x0 + 2*x1 + 3*x2)*(x0 + 5*x1 + 11*x2) | 1,2,3
)";

inline std::vector<CorpusEntry> default_corpus() { return parse_corpus(kDefaultCorpus); }

}  // namespace tpolar
