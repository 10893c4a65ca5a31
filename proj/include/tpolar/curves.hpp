#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tpolar/errors.hpp"
#include "tpolar/gcd.hpp"
#include "tpolar/groebner.hpp"
#include "tpolar/hilbert.hpp"
#include "tpolar/maps.hpp"
#include "tpolar/polynomial.hpp"

namespace tpolar {

/// Local and incidence invariants of a reduced plane curve C = V(f), and the
/// resulting value k^2 - sum mu - incidence - tangency for deg T_f.
struct PlaneCurveReport {
  int k = 0;
  std::int64_t milnor_sum = 0;
  int incidence = 0;
  int tangency = 0;
  /// Distinct points of C on the coordinate line x_j = 0.
  std::array<int, 3> per_line{};
  std::int64_t degree_formula = 0;
};

namespace detail {

inline void require_plane_curve(const Polynomial& f, const char* what) {
  if (f.arity() != 3) throw PreconditionError(std::string(what) + ": a plane curve needs exactly 3 variables");
  if (f.is_zero() || !f.is_homogeneous() || f.total_degree() < 1) {
    throw PreconditionError(std::string(what) + ": need a nonconstant homogeneous polynomial");
  }
  for (std::size_t i = 0; i < 3; ++i) {
    if (f.divisible_by_variable(i)) {
      throw PreconditionError(std::string(what) + ": the coordinate line x" + std::to_string(i) + " = 0 is a component");
    }
  }
}

/// Terms of f free of x_j: the restriction to the line x_j = 0.
inline Polynomial restrict_to_coordinate_line(const Polynomial& f, std::size_t j) {
  std::vector<Term> kept;
  for (const auto& t : f.terms())
    if (t.m[j] == 0) kept.push_back(t);
  return Polynomial::from_terms(f.field(), f.arity(), std::move(kept));
}

}  // namespace detail

/// Number of fundamental points (1:0:0), (0:1:0), (0:0:1) on C.
inline int fundamental_incidence(const Polynomial& f) {
  detail::require_plane_curve(f, "fundamental incidence");
  const int k = f.total_degree();
  int count = 0;
  for (std::size_t i = 0; i < 3; ++i)
    if (f.coefficient(Monomial::variable(i, k)) == 0) ++count;
  return count;
}

/// Distinct intersection points of C with each coordinate line.
inline std::array<int, 3> coordinate_line_point_counts(const Polynomial& f) {
  detail::require_plane_curve(f, "tangency contribution");
  std::array<int, 3> out{};
  for (std::size_t j = 0; j < 3; ++j) {
    Polynomial r = detail::restrict_to_coordinate_line(f, j);
    if (r.is_zero()) throw PreconditionError("restriction to a coordinate line vanishes identically");
    std::size_t a = j == 0 ? 1 : 0, b = j == 2 ? 1 : 2;
    out[j] = binary_form_distinct_roots(r, a, b);
  }
  return out;
}

/// sum_j sum_{p in C n H_j} (I_p(C, H_j) - 1) = sum_j (k - #(C n H_j)).
inline int tangency_contribution(const Polynomial& f) {
  auto counts = coordinate_line_point_counts(f);
  const int k = f.total_degree();
  return 3 * k - counts[0] - counts[1] - counts[2];
}

/// Number of distinct points of a zero-dimensional affine ideal: adjoin the
/// squarefree part of the eliminant in each variable, then count standard
/// monomials.
inline std::int64_t distinct_point_count(const Ideal& ideal) {
  GroebnerBasis gb = buchberger(ideal, MonomialOrder::grevlex());
  if (gb.is_unit()) return 0;
  const std::size_t n = ideal.arity();
  Ideal radical = gb.ideal();
  for (std::size_t v = 0; v < n; ++v) {
    const std::uint32_t others = static_cast<std::uint32_t>((1ULL << n) - 1) & ~(1u << v);
    Ideal elim = others ? eliminate(ideal, others) : ideal;
    if (elim.is_zero()) throw PreconditionError("ideal is not zero-dimensional");
    Polynomial eliminant = multivariate_gcd(elim.generators());
    radical.add(squarefree_part(eliminant));
  }
  return vector_space_dimension(radical);
}

/// Milnor number of C at a rational point, from the Jacobian ideal of an
/// affine chart centred at the point: dim k[u,v]/I - dim k[u,v]/(I : m^inf).
inline std::int64_t milnor_at_point(const Polynomial& f, const std::array<std::int64_t, 3>& point) {
  if (f.arity() != 3 || !f.is_homogeneous() || f.is_zero()) throw PreconditionError("milnor number: need a plane curve");
  const auto& F = f.field();
  std::array<Residue, 3> p{};
  for (std::size_t i = 0; i < 3; ++i) p[i] = F.from_int(point[i]);
  std::size_t chart = 3;
  for (std::size_t i = 0; i < 3 && chart == 3; ++i)
    if (p[i] != 0) chart = i;
  if (chart == 3) throw PreconditionError("milnor number: the zero vector is not a projective point");
  const Residue scale = F.inv(p[chart]);
  std::vector<Polynomial> images;
  std::size_t local = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i == chart) {
      images.push_back(Polynomial::constant(F, 2, 1));
    } else {
      images.push_back(Polynomial::constant(F, 2, F.mul(p[i], scale)) + Polynomial::variable(F, 2, local++));
    }
  }
  Polynomial g = f.substitute(images);
  if (g.coefficient(Monomial{}) != 0) throw PreconditionError("milnor number: the point is not on the curve");
  Ideal jac(F, 2, {partial_derivative(g, 0), partial_derivative(g, 1)});
  GroebnerBasis gb = buchberger(jac, MonomialOrder::grevlex());
  if (gb.is_unit()) return 0;
  std::int64_t total = 0;
  try {
    total = vector_space_dimension(gb);
  } catch (const PreconditionError&) {
    throw PreconditionError("milnor number: non-isolated singularity (positive-dimensional Jacobian ideal)");
  }
  Ideal away = intersect(saturate(jac, Polynomial::variable(F, 2, 0)), saturate(jac, Polynomial::variable(F, 2, 1)));
  return total - vector_space_dimension(buchberger(away, MonomialOrder::grevlex()));
}

/// Degree of the singular scheme V(f_x0, f_x1, f_x2). Equals the sum of
/// Tjurina numbers, hence of Milnor numbers when every singularity is
/// weighted homogeneous (nodes, cusps, ordinary multiple points).
inline std::int64_t total_milnor(const Polynomial& f) {
  if (f.arity() != 3 || !f.is_homogeneous() || f.total_degree() < 1) throw PreconditionError("total milnor: need a plane curve");
  Ideal jac(f.field(), 3);
  for (std::size_t i = 0; i < 3; ++i) jac.add(partial_derivative(f, i));
  HilbertData h = hilbert_dim_degree(jac);
  if (h.is_empty()) return 0;
  if (h.projective_dimension != 0) throw PreconditionError("total milnor: positive-dimensional singular locus (curve not reduced)");
  return *h.degree;
}

inline PlaneCurveReport plane_degree_formula(const Polynomial& f) {
  detail::require_plane_curve(f, "plane degree formula");
  if (squarefree_part(f).total_degree() != f.total_degree()) throw PreconditionError("plane degree formula: curve is not reduced");
  PlaneCurveReport r;
  r.k = f.total_degree();
  r.milnor_sum = total_milnor(f);
  r.incidence = fundamental_incidence(f);
  r.per_line = coordinate_line_point_counts(f);
  r.tangency = 3 * r.k - r.per_line[0] - r.per_line[1] - r.per_line[2];
  r.degree_formula = static_cast<std::int64_t>(r.k) * r.k - r.milnor_sum - r.incidence - r.tangency;
  return r;
}

/// #((V(f) n V(g)) \ H) for coprime plane curves.
inline std::int64_t distinct_intersections_off_H(const Polynomial& f, const Polynomial& g) {
  if (f.arity() != 3 || g.arity() != 3) throw PreconditionError("intersections: need plane curves");
  if (!f.is_homogeneous() || !g.is_homogeneous() || f.is_zero() || g.is_zero()) {
    throw PreconditionError("intersections: need nonzero homogeneous polynomials");
  }
  if (!multivariate_gcd(f, g).is_constant()) throw PreconditionError("intersections: curves share a component");
  const auto& F = f.field();
  Ideal sat = saturate(Ideal(F, 3, {f, g}), Polynomial::monomial(F, 3, Monomial{1, 1, 1}));
  // Every surviving point has x0 != 0; work on the chart x0 = 1.
  std::vector<Polynomial> chart = {Polynomial::constant(F, 2, 1), Polynomial::variable(F, 2, 0),
                                   Polynomial::variable(F, 2, 1)};
  Ideal affine(F, 2);
  for (const auto& q : sat.generators()) affine.add(q.substitute(chart));
  if (affine.is_zero()) throw PreconditionError("intersections: curves share a component");
  return distinct_point_count(affine);
}

struct ReducibleCompositionCheck {
  std::int64_t degree_product = 0;
  std::int64_t degree_f = 0;
  std::int64_t degree_g = 0;
  std::int64_t intersections = 0;

  bool holds() const noexcept { return degree_product == degree_f + degree_g + intersections; }
};

/// Evaluates deg T_{fg} against deg T_f + deg T_g + #off-H intersections.
inline ReducibleCompositionCheck reducible_composition_check(const Polynomial& f, const Polynomial& g,
                                                             const RandomizationConfig& cfg = {}) {
  ReducibleCompositionCheck c;
  c.intersections = distinct_intersections_off_H(f, g);
  c.degree_f = topological_degree(toric_polar_map(f), cfg);
  c.degree_g = topological_degree(toric_polar_map(g), cfg);
  c.degree_product = topological_degree(toric_polar_map(f * g), cfg);
  return c;
}

}  // namespace tpolar
