#pragma once

#include <cstddef>
#include <cstdint>
#include <future>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tpolar/errors.hpp"
#include "tpolar/gcd.hpp"
#include "tpolar/groebner.hpp"
#include "tpolar/hilbert.hpp"
#include "tpolar/monomial_matrix.hpp"
#include "tpolar/polynomial.hpp"

namespace tpolar {

/// Knobs of the randomized multidegree computation. The prime must be the
/// characteristic of the map's coefficient field.
struct RandomizationConfig {
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = 42;
  int trials = 2;
  /// Run the per-slice, per-trial tasks on std::async threads.
  bool parallel = false;

  void validate() const {
    if (trials < 1) throw PreconditionError("trials must be at least 1");
    if (!is_prime(prime)) throw PreconditionError("prime " + std::to_string(prime) + " is not prime");
  }
};

/// A rational self-map of P^n: n+1 homogeneous coordinates of one degree
/// with no common factor.
class RationalMapSpec {
 public:
  /// Divides out the gcd of the coordinates.
  static RationalMapSpec from_coordinates(std::vector<Polynomial> coords) {
    if (coords.empty()) throw PreconditionError("a rational map needs coordinates");
    const std::size_t arity = coords.front().arity();
    if (coords.size() != arity) throw PreconditionError("a self-map of P^n needs n+1 coordinates in n+1 variables");
    int degree = -1;
    for (const auto& q : coords) {
      if (q.arity() != arity) throw PreconditionError("coordinates live in different rings");
      if (q.is_zero()) continue;
      if (!q.is_homogeneous()) throw PreconditionError("map coordinates must be homogeneous");
      if (degree >= 0 && q.total_degree() != degree) throw PreconditionError("map coordinates must share one degree");
      degree = q.total_degree();
    }
    if (degree < 0) throw PreconditionError("all map coordinates are zero");
    Polynomial g = multivariate_gcd(coords);
    if (!g.is_constant()) {
      for (auto& q : coords)
        if (!q.is_zero()) q = exact_quotient(q, g);
      degree -= g.total_degree();
    }
    RationalMapSpec spec;
    spec.coords_ = std::move(coords);
    spec.degree_ = degree;
    return spec;
  }

  std::size_t n() const noexcept { return coords_.size() - 1; }
  int degree() const noexcept { return degree_; }
  const std::vector<Polynomial>& coordinates() const noexcept { return coords_; }
  const PrimeField& field() const { return coords_.front().field(); }

 private:
  RationalMapSpec() = default;
  std::vector<Polynomial> coords_;
  int degree_ = 0;
};

/// Multidegrees d_0..d_n; d_n is the topological degree.
struct MultidegreeVector {
  std::vector<std::int64_t> values;

  std::size_t n() const noexcept { return values.empty() ? 0 : values.size() - 1; }
  std::int64_t topological_degree() const { return values.back(); }
  bool is_dominant() const { return values.back() != 0; }

  /// True when no zero sits strictly between two nonzero entries.
  bool has_no_internal_zeros() const {
    std::size_t first = values.size(), last = 0;
    for (std::size_t i = 0; i < values.size(); ++i)
      if (values[i] != 0) {
        first = std::min(first, i);
        last = i;
      }
    for (std::size_t i = first; i < last; ++i)
      if (values[i] == 0) return false;
    return true;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
    os << ')';
    return os.str();
  }

  friend bool operator==(const MultidegreeVector&, const MultidegreeVector&) = default;
};

struct PolarMapOptions {
  /// Replace f by its squarefree part before differentiating.
  bool reduce = true;
  std::uint64_t seed = 0x5eedULL;
};

namespace detail {

inline void require_map_input(const Polynomial& f, int min_degree, const char* what) {
  if (f.is_zero() || !f.is_homogeneous()) throw PreconditionError(std::string(what) + ": input must be a nonzero homogeneous polynomial");
  if (f.total_degree() < min_degree) {
    throw PreconditionError(std::string(what) + ": input degree must be at least " + std::to_string(min_degree));
  }
}

}  // namespace detail

/// T_f = (x_0 df/dx_0 : ... : x_n df/dx_n), built from the squarefree part
/// of f with the coordinate gcd removed. f must not be divisible by any
/// coordinate variable.
inline RationalMapSpec toric_polar_map(const Polynomial& f, const PolarMapOptions& opts = {}) {
  detail::require_map_input(f, 1, "toric polar map");
  for (std::size_t i = 0; i < f.arity(); ++i) {
    if (f.divisible_by_variable(i)) {
      throw PreconditionError("toric polar map: input is divisible by coordinate variable x" + std::to_string(i));
    }
  }
  const Polynomial fr = opts.reduce ? squarefree_part(f, opts.seed) : f;
  std::vector<Polynomial> coords;
  coords.reserve(f.arity());
  for (std::size_t i = 0; i < f.arity(); ++i)
    coords.push_back(partial_derivative(fr, i).multiply_monomial(Monomial::variable(i)));
  return RationalMapSpec::from_coordinates(std::move(coords));
}

/// grad f = (df/dx_0 : ... : df/dx_n) of the squarefree part of f, gcd removed.
inline RationalMapSpec gradient_map(const Polynomial& f, const PolarMapOptions& opts = {}) {
  detail::require_map_input(f, 2, "gradient map");
  const Polynomial fr = opts.reduce ? squarefree_part(f, opts.seed) : f;
  if (fr.total_degree() < 2) throw PreconditionError("gradient map: reduced input is linear, the map is constant");
  std::vector<Polynomial> coords;
  coords.reserve(f.arity());
  for (std::size_t i = 0; i < f.arity(); ++i) coords.push_back(partial_derivative(fr, i));
  return RationalMapSpec::from_coordinates(std::move(coords));
}

using Matrix = std::vector<std::vector<Residue>>;

/// Rank of a matrix over the field.
inline std::size_t matrix_rank(Matrix a, const PrimeField& F) {
  std::size_t rank = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    Residue inv = F.inv(a[rank][c]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      Residue factor = F.mul(a[r][c], inv);
      for (std::size_t k = c; k < cols; ++k) a[r][k] = F.sub(a[r][k], F.mul(factor, a[rank][k]));
    }
    ++rank;
  }
  return rank;
}

inline constexpr int kMatrixResamples = 16;

/// Uniform random rows x cols matrix of full rank min(rows, cols).
inline Matrix random_full_rank_matrix(const PrimeField& F, std::size_t rows, std::size_t cols, Rng& rng) {
  for (int attempt = 0; attempt < kMatrixResamples; ++attempt) {
    Matrix m(rows, std::vector<Residue>(cols));
    for (auto& r : m)
      for (auto& x : r) x = F.random(rng);
    if (matrix_rank(m, F) == std::min(rows, cols)) return m;
  }
  throw GenericityError("could not sample a full-rank matrix");
}

/// f(M x): x_i is replaced by sum_j M[i][j] y_j, with y in M's column count
/// many variables.
inline Polynomial linear_substitution(const Polynomial& f, const Matrix& m) {
  if (m.size() != f.arity()) throw PreconditionError("linear substitution: matrix rows must match arity");
  const std::size_t out_arity = m.empty() ? 0 : m[0].size();
  std::vector<Polynomial> images;
  images.reserve(m.size());
  for (const auto& row : m) {
    if (row.size() != out_arity) throw PreconditionError("linear substitution: ragged matrix");
    std::vector<Term> t;
    for (std::size_t j = 0; j < out_arity; ++j) t.push_back({Monomial::variable(j), row[j]});
    images.push_back(Polynomial::from_terms(f.field(), out_arity, std::move(t)));
  }
  return f.substitute(images);
}

/// f composed with a random invertible linear change of coordinates.
inline Polynomial random_translate(const Polynomial& f, std::uint64_t seed) {
  if (!f.is_homogeneous()) throw PreconditionError("random translate needs a homogeneous polynomial");
  Rng rng(mix_seed(seed));
  return linear_substitution(f, random_full_rank_matrix(f.field(), f.arity(), f.arity(), rng));
}

/// phi_A^*(f): x_i is replaced by the monomial in row i of A.
inline Polynomial monomial_pullback(const Polynomial& f, const MonomialMatrix& a) {
  if (a.size() != f.arity()) throw PreconditionError("monomial pullback: matrix size must match arity");
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < a.size(); ++i) images.push_back(Polynomial::monomial(f.field(), f.arity(), a.monomial(i)));
  return f.substitute(images);
}

namespace detail {

inline Polynomial random_combination(const std::vector<Polynomial>& polys, const PrimeField& F, std::size_t arity,
                                     Rng& rng) {
  Polynomial acc(F, arity);
  for (const auto& p : polys) acc += p * F.random(rng);
  return acc;
}

/// Degree of the finite scheme cut from the preimage of a random
/// codimension-j subspace by a random P^j, after excising the base locus.
/// The n-j linear forms are realized by restricting the coordinates to a
/// random P^j parametrized by a full-rank matrix.
inline std::int64_t slice_degree(const RationalMapSpec& phi, std::size_t j, std::uint64_t seed) {
  const auto& F = phi.field();
  const std::size_t n = phi.n();
  Rng rng(seed);
  std::vector<Polynomial> restricted;
  if (j < n) {
    Matrix m = random_full_rank_matrix(F, n + 1, j + 1, rng);
    for (const auto& q : phi.coordinates()) restricted.push_back(linear_substitution(q, m));
  } else {
    restricted = phi.coordinates();
  }
  const std::size_t arity = j + 1;
  Ideal slice(F, arity);
  for (std::size_t a = 0; a < j; ++a) slice.add(random_combination(restricted, F, arity, rng));
  Polynomial g = random_combination(restricted, F, arity, rng);
  if (g.is_zero()) throw GenericityError("slice " + std::to_string(j) + ": random coordinate combination vanished");
  HilbertData h = hilbert_dim_degree(saturate(slice, g));
  if (h.is_empty()) return 0;
  if (h.projective_dimension != 0) {
    throw GenericityError("slice " + std::to_string(j) + " has projective dimension " +
                          std::to_string(h.projective_dimension) + " (seed " + std::to_string(seed) + ")");
  }
  return *h.degree;
}

inline std::int64_t agreed_slice_degree(const RationalMapSpec& phi, std::size_t j, const RandomizationConfig& cfg) {
  std::vector<std::int64_t> results(static_cast<std::size_t>(cfg.trials));
  std::vector<std::uint64_t> seeds(results.size());
  for (std::size_t t = 0; t < results.size(); ++t) seeds[t] = derive_seed(cfg.seed, j, t);
  if (cfg.parallel && results.size() > 1) {
    std::vector<std::future<std::int64_t>> futs;
    for (auto s : seeds) futs.push_back(std::async(std::launch::async, [&phi, j, s] { return slice_degree(phi, j, s); }));
    for (std::size_t t = 0; t < futs.size(); ++t) results[t] = futs[t].get();
  } else {
    for (std::size_t t = 0; t < results.size(); ++t) results[t] = slice_degree(phi, j, seeds[t]);
  }
  for (std::size_t t = 1; t < results.size(); ++t) {
    if (results[t] != results[0]) {
      throw GenericityError("multidegree d_" + std::to_string(j) + ": trials disagree (" + std::to_string(results[0]) +
                            " with seed " + std::to_string(seeds[0]) + ", " + std::to_string(results[t]) +
                            " with seed " + std::to_string(seeds[t]) + "); rerun with another seed or prime");
    }
  }
  return results[0];
}

inline void check_config(const RationalMapSpec& phi, const RandomizationConfig& cfg) {
  cfg.validate();
  if (phi.field().modulus() != cfg.prime) {
    throw PreconditionError("map coefficients live modulo " + std::to_string(phi.field().modulus()) +
                            " but the configuration asks for " + std::to_string(cfg.prime));
  }
}

}  // namespace detail

/// Multidegrees d_0..d_n of a rational map by randomized slicing. Every
/// d_j must agree across `cfg.trials` independent draws.
inline MultidegreeVector multidegrees(const RationalMapSpec& phi, const RandomizationConfig& cfg = {}) {
  detail::check_config(phi, cfg);
  const std::size_t n = phi.n();
  MultidegreeVector out;
  out.values.resize(n + 1);
  if (cfg.parallel) {
    std::vector<std::future<std::int64_t>> futs;
    for (std::size_t j = 0; j <= n; ++j)
      futs.push_back(std::async(std::launch::async, [&phi, j, cfg] {
        RandomizationConfig inner = cfg;
        inner.parallel = false;
        return detail::agreed_slice_degree(phi, j, inner);
      }));
    for (std::size_t j = 0; j <= n; ++j) out.values[j] = futs[j].get();
  } else {
    for (std::size_t j = 0; j <= n; ++j) out.values[j] = detail::agreed_slice_degree(phi, j, cfg);
  }
  if (out.values[0] != 1) throw GenericityError("computed d_0 = " + std::to_string(out.values[0]) + ", expected 1");
  if (n >= 1 && out.values[1] != phi.degree()) {
    throw GenericityError("computed d_1 = " + std::to_string(out.values[1]) + " differs from the coordinate degree " +
                          std::to_string(phi.degree()));
  }
  return out;
}

/// d_n alone; 0 iff the map is not dominant.
inline std::int64_t topological_degree(const RationalMapSpec& phi, const RandomizationConfig& cfg = {}) {
  detail::check_config(phi, cfg);
  return detail::agreed_slice_degree(phi, phi.n(), cfg);
}

}  // namespace tpolar
