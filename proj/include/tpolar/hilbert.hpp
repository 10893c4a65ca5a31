#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "tpolar/errors.hpp"
#include "tpolar/groebner.hpp"
#include "tpolar/monomial.hpp"

namespace tpolar {

using IntPoly = std::vector<std::int64_t>;  // coefficient of t^i at index i

/// Projective dimension and degree of a homogeneous ideal, read from the
/// Hilbert series N(t) / (1 - t)^(dim + 2) with N(1) != 0.
struct HilbertData {
  IntPoly numerator;
  int projective_dimension = -1;  // -1: empty projective scheme
  std::optional<std::int64_t> degree;

  bool is_empty() const noexcept { return projective_dimension < 0; }
  /// Empty schemes count as degree 0.
  std::int64_t degree_or_zero() const noexcept { return degree.value_or(0); }
};

namespace detail {

inline void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline IntPoly add_shifted(IntPoly a, const IntPoly& b, int shift) {
  if (a.size() < b.size() + static_cast<std::size_t>(shift)) a.resize(b.size() + static_cast<std::size_t>(shift), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + static_cast<std::size_t>(shift)] += b[i];
  trim(a);
  return a;
}

inline void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& o) { return o.divides(g); });
    if (!redundant) out.push_back(g);
  }
  gens = std::move(out);
}

inline int single_variable(const Monomial& m) {
  int var = -1;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (m[i] == 0) continue;
    if (var >= 0) return -2;
    var = static_cast<int>(i);
  }
  return var;
}

/// Numerator of the Hilbert series of k[x]/(gens), with the series written
/// over (1 - t)^nvars. Recursive pivot splitting:
/// N(I) = N(I + <p>) + t^deg(p) N(I : p).
inline IntPoly hilbert_numerator(std::vector<Monomial> gens) {
  minimalize(gens);
  if (gens.empty()) return {1};
  if (gens.front().is_one()) return {};
  // Split off the generators that are powers of a single variable.
  std::vector<Monomial> mixed;
  IntPoly pure = {1};
  for (const auto& g : gens) {
    if (single_variable(g) >= 0) {
      IntPoly factor(static_cast<std::size_t>(g.degree()) + 1, 0);
      factor[0] = 1;
      factor.back() = -1;
      IntPoly prod(pure.size() + factor.size() - 1, 0);
      for (std::size_t i = 0; i < pure.size(); ++i)
        for (std::size_t j = 0; j < factor.size(); ++j) prod[i + j] += pure[i] * factor[j];
      pure = std::move(prod);
    } else {
      mixed.push_back(g);
    }
  }
  if (mixed.empty()) {
    trim(pure);
    return pure;
  }
  // Pivot: the variable occurring in the most mixed generators, raised to
  // its smallest positive exponent there.
  std::size_t best = 0;
  int best_count = -1;
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    int count = 0;
    for (const auto& g : mixed) count += g[v] > 0;
    if (count > best_count) {
      best_count = count;
      best = v;
    }
  }
  std::uint16_t e = UINT16_MAX;
  for (const auto& g : mixed)
    if (g[best] > 0) e = std::min(e, g[best]);
  const Monomial pivot = Monomial::variable(best, e);

  std::vector<Monomial> with_pivot = gens;
  with_pivot.push_back(pivot);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) colon.push_back(g / gcd(g, pivot));
  return add_shifted(hilbert_numerator(std::move(with_pivot)), hilbert_numerator(std::move(colon)), e);
}

}  // namespace detail

/// Hilbert data of the ideal generated by monomials in `nvars` variables.
inline HilbertData hilbert_from_monomials(std::vector<Monomial> monomials, std::size_t nvars) {
  HilbertData out;
  IntPoly n = detail::hilbert_numerator(std::move(monomials));
  int pole = static_cast<int>(nvars);
  if (n.empty()) {
    out.numerator = {};
    return out;
  }
  // Divide by (1 - t) while N(1) == 0.
  auto value_at_one = [](const IntPoly& p) {
    std::int64_t s = 0;
    for (auto c : p) s += c;
    return s;
  };
  while (pole > 0 && value_at_one(n) == 0) {
    // Synthetic division by (1 - t): q_i = sum_{j<=i} n_j.
    IntPoly q(n.size() - 1, 0);
    std::int64_t acc = 0;
    for (std::size_t i = 0; i + 1 < n.size(); ++i) {
      acc += n[i];
      q[i] = acc;
    }
    n = std::move(q);
    detail::trim(n);
    --pole;
  }
  out.numerator = n;
  out.projective_dimension = pole - 1;
  if (pole > 0) out.degree = value_at_one(n);
  return out;
}

/// Projective dimension and degree of V(I) from the leading-term ideal of
/// a graded reverse lexicographic basis.
inline HilbertData hilbert_dim_degree(const Ideal& ideal) {
  if (!ideal.is_homogeneous()) throw PreconditionError("Hilbert data needs a homogeneous ideal");
  GroebnerBasis gb = buchberger(ideal, MonomialOrder::grevlex());
  return hilbert_from_monomials(gb.leading_monomials(), ideal.arity());
}

/// dim_k k[x]/I for a zero-dimensional ideal: the number of standard
/// monomials of a Groebner basis.
inline std::int64_t vector_space_dimension(const GroebnerBasis& gb) {
  if (gb.is_unit()) return 0;
  auto leads = gb.leading_monomials();
  std::vector<int> bound(gb.arity, -1);
  for (const auto& m : leads) {
    int v = detail::single_variable(m);
    if (v < 0) continue;
    int& b = bound[static_cast<std::size_t>(v)];
    int e = m[static_cast<std::size_t>(v)];
    b = b < 0 ? e : std::min(b, e);
  }
  for (std::size_t i = 0; i < gb.arity; ++i)
    if (bound[i] < 0) throw PreconditionError("quotient is not finite-dimensional (positive-dimensional ideal)");
  std::int64_t count = 0;
  Monomial m;
  // Odometer over the box prod [0, bound_i).
  for (;;) {
    if (std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); })) ++count;
    std::size_t i = 0;
    for (; i < gb.arity; ++i) {
      if (++m[i] < bound[i]) break;
      m[i] = 0;
    }
    if (i == gb.arity) break;
  }
  return count;
}

inline std::int64_t vector_space_dimension(const Ideal& ideal) {
  if (ideal.is_zero()) {
    if (ideal.arity() == 0) return 1;
    throw PreconditionError("quotient is not finite-dimensional (zero ideal)");
  }
  return vector_space_dimension(buchberger(ideal, MonomialOrder::grevlex()));
}

}  // namespace tpolar
