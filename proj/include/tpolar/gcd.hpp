#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "tpolar/errors.hpp"
#include "tpolar/polynomial.hpp"

namespace tpolar {

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};

/// Multivariate division by a single divisor under the canonical order.
inline DivisionResult divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw Error("division by zero polynomial");
  Polynomial q(f.field(), f.arity()), r(f.field(), f.arity()), p = f;
  const auto& F = f.field();
  const Term lead = g.leading_term();
  const Residue inv_lead = F.inv(lead.c);
  std::vector<Term> rem_terms;
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    if (lead.m.divides(lt.m)) {
      Monomial m = lt.m / lead.m;
      Residue c = F.mul(lt.c, inv_lead);
      q += Polynomial::monomial(F, f.arity(), m, c);
      p -= g.multiply_monomial(m, c);
    } else {
      rem_terms.push_back(lt);
      p -= Polynomial::monomial(F, f.arity(), lt.m, lt.c);
    }
  }
  r = Polynomial::from_terms(F, f.arity(), std::move(rem_terms));
  return {std::move(q), std::move(r)};
}

/// f / g, which must be exact.
inline Polynomial exact_quotient(const Polynomial& f, const Polynomial& g) {
  auto [q, r] = divide(f, g);
  if (!r.is_zero()) throw Error("inexact polynomial division");
  return q;
}

inline Polynomial multivariate_gcd(const Polynomial& f, const Polynomial& g);

namespace detail {

/// Coefficients of f as a polynomial in x_var; entry d multiplies x_var^d.
inline std::vector<Polynomial> coefficients_in(const Polynomial& f, std::size_t var) {
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(std::max(f.degree_in(var), 0)) + 1);
  for (const auto& t : f.terms()) {
    Monomial m = t.m;
    std::size_t d = m[var];
    m[var] = 0;
    buckets[d].push_back({m, t.c});
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(Polynomial::from_terms(f.field(), f.arity(), std::move(b)));
  return out;
}

inline Polynomial leading_coefficient_in(const Polynomial& f, std::size_t var) {
  int d = f.degree_in(var);
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    if (t.m[var] != d) continue;
    Monomial m = t.m;
    m[var] = 0;
    out.push_back({m, t.c});
  }
  return Polynomial::from_terms(f.field(), f.arity(), std::move(out));
}

inline Polynomial content_in(const Polynomial& f, std::size_t var) {
  Polynomial c(f.field(), f.arity());
  for (const auto& coeff : coefficients_in(f, var)) {
    if (coeff.is_zero()) continue;
    c = multivariate_gcd(c, coeff);
    if (c.is_constant()) break;
  }
  return c;
}

inline Polynomial primitive_part_in(const Polynomial& f, std::size_t var) {
  if (f.is_zero()) return f;
  return exact_quotient(f, content_in(f, var));
}

/// Lazy pseudo-remainder of a by b with respect to x_var.
inline Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, std::size_t var) {
  const int db = b.degree_in(var);
  const Polynomial lb = leading_coefficient_in(b, var);
  while (!a.is_zero() && a.degree_in(var) >= db) {
    const int s = a.degree_in(var) - db;
    Polynomial la = leading_coefficient_in(a, var);
    a = a * lb - la * b.multiply_monomial(Monomial::variable(var, s));
  }
  return a;
}

}  // namespace detail

/// Monic gcd (canonical leading coefficient 1) by recursive
/// content/primitive-part Euclid on the highest occurring variable.
inline Polynomial multivariate_gcd(const Polynomial& f, const Polynomial& g) {
  if (f.arity() != g.arity() || !(f.field() == g.field())) throw PreconditionError("gcd operands differ in ring");
  if (f.is_zero() && g.is_zero()) throw PreconditionError("gcd of two zero polynomials");
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  if (f.is_constant() || g.is_constant()) return Polynomial::constant(f.field(), f.arity(), 1);

  // Shared monomial factor first; cheap and common for our inputs.
  Monomial mc = gcd(f.monomial_content(), g.monomial_content());
  if (!mc.is_one()) {
    Polynomial rest = multivariate_gcd(f.divide_by_monomial(f.monomial_content()),
                                       g.divide_by_monomial(g.monomial_content()));
    return rest.multiply_monomial(mc).monic();
  }

  const std::uint32_t mask = f.variable_mask() | g.variable_mask();
  const std::size_t var = static_cast<std::size_t>(31 - std::countl_zero(mask));
  if (f.degree_in(var) == 0) return multivariate_gcd(f, detail::content_in(g, var));
  if (g.degree_in(var) == 0) return multivariate_gcd(detail::content_in(f, var), g);

  Polynomial cf = detail::content_in(f, var);
  Polynomial cg = detail::content_in(g, var);
  Polynomial c = multivariate_gcd(cf, cg);
  Polynomial a = exact_quotient(f, cf);
  Polynomial b = exact_quotient(g, cg);
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  for (;;) {
    Polynomial r = detail::pseudo_remainder(a, b, var);
    if (r.is_zero()) return (c * detail::primitive_part_in(b, var)).monic();
    if (r.degree_in(var) == 0) return c.monic();
    a = std::move(b);
    b = detail::primitive_part_in(r, var);
  }
}

/// gcd of a list; zero entries are ignored. Throws if all are zero.
inline Polynomial multivariate_gcd(const std::vector<Polynomial>& polys) {
  const Polynomial* first = nullptr;
  for (const auto& p : polys)
    if (!p.is_zero()) {
      first = &p;
      break;
    }
  if (!first) throw PreconditionError("gcd of an all-zero list");
  Polynomial g = first->monic();
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    g = multivariate_gcd(g, p);
    if (g.is_constant()) break;
  }
  return g;
}

inline constexpr int kSquarefreeRetries = 8;

/// f / gcd(f, D_l f) for a random direction l. The result is checked to be
/// squarefree with a second, independent direction. Returns f itself when
/// f is already squarefree.
inline Polynomial squarefree_part(const Polynomial& f, std::uint64_t seed = 0x5eedULL) {
  if (f.is_zero()) throw PreconditionError("squarefree part of zero");
  const auto& F = f.field();
  if (f.is_constant()) return Polynomial::constant(F, f.arity(), 1);
  if (static_cast<std::uint64_t>(f.total_degree()) >= F.modulus())
    throw PreconditionError("characteristic does not exceed the degree");
  Rng rng(mix_seed(seed));
  auto random_direction = [&] {
    std::vector<Residue> dir(f.arity());
    for (auto& x : dir) x = F.random(rng);
    return dir;
  };
  for (int attempt = 0; attempt < kSquarefreeRetries; ++attempt) {
    auto dir = random_direction();
    Polynomial d = directional_derivative(f, dir);
    if (d.is_zero()) continue;
    Polynomial g = multivariate_gcd(f, d);
    Polynomial reduced = g.is_constant() ? f : exact_quotient(f, g).monic();
    auto check_dir = random_direction();
    Polynomial dr = directional_derivative(reduced, check_dir);
    if (dr.is_zero()) continue;
    if (multivariate_gcd(reduced, dr).is_constant()) return reduced;
  }
  throw GenericityError("squarefree part: degenerate random directions after " +
                        std::to_string(kSquarefreeRetries) + " attempts");
}

/// Distinct roots in P^1 of a binary form in variables a and b.
inline int binary_form_distinct_roots(const Polynomial& f, std::size_t a, std::size_t b) {
  if (f.is_zero()) throw PreconditionError("binary form is zero");
  if (a >= f.arity() || b >= f.arity() || a == b) throw PreconditionError("invalid binary form variables");
  const std::uint32_t allowed = (1u << a) | (1u << b);
  if ((f.variable_mask() & ~allowed) != 0) throw PreconditionError("not a binary form in the kept variables");
  if (!f.is_homogeneous()) throw PreconditionError("binary form must be homogeneous");
  return squarefree_part(f).total_degree();
}

}  // namespace tpolar
