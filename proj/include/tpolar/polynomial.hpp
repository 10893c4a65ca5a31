#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tpolar/errors.hpp"
#include "tpolar/monomial.hpp"
#include "tpolar/prime_field.hpp"

namespace tpolar {

struct Term {
  Monomial m;
  Residue c;
};

/// Sparse multivariate polynomial over a prime field.
///
/// Terms are kept sorted in descending graded reverse lexicographic order
/// with no zero coefficients, so two equal polynomials have identical term
/// vectors. Algorithms that need another order re-sort a private copy.
class Polynomial {
 public:
  Polynomial(PrimeField field, std::size_t arity) : field_(field), arity_(arity) {
    if (arity > kMaxVars) throw PreconditionError("arity exceeds " + std::to_string(kMaxVars));
  }

  static Polynomial constant(PrimeField field, std::size_t arity, std::int64_t c) {
    return monomial(field, arity, Monomial{}, field.from_int(c));
  }
  static Polynomial variable(PrimeField field, std::size_t arity, std::size_t i) {
    if (i >= arity) throw PreconditionError("variable index out of range");
    return monomial(field, arity, Monomial::variable(i), 1);
  }
  static Polynomial monomial(PrimeField field, std::size_t arity, const Monomial& m, Residue c = 1) {
    Polynomial p(field, arity);
    p.check_fits(m);
    if (c % field.modulus() != 0) p.terms_.push_back({m, static_cast<Residue>(c % field.modulus())});
    return p;
  }
  /// Accepts terms in any order, with repeats and zeros.
  static Polynomial from_terms(PrimeField field, std::size_t arity, std::vector<Term> terms) {
    Polynomial p(field, arity);
    for (const auto& t : terms) p.check_fits(t.m);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const PrimeField& field() const noexcept { return field_; }
  std::size_t arity() const noexcept { return arity_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }

  /// Maximal total degree; -1 for the zero polynomial.
  int total_degree() const noexcept { return terms_.empty() ? -1 : terms_.front().m.degree(); }

  bool is_homogeneous() const noexcept {
    return terms_.empty() ||
           std::all_of(terms_.begin(), terms_.end(),
                       [d = terms_.front().m.degree()](const Term& t) { return t.m.degree() == d; });
  }

  int degree_in(std::size_t var) const noexcept {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& t : terms_) d = std::max(d, int{t.m[var]});
    return d;
  }

  /// Bit i set iff x_i occurs in some term.
  std::uint32_t variable_mask() const noexcept {
    std::uint32_t m = 0;
    for (const auto& t : terms_) m |= t.m.support_mask();
    return m;
  }

  Residue coefficient(const Monomial& m) const noexcept {
    for (const auto& t : terms_)
      if (t.m == m) return t.c;
    return 0;
  }

  /// Leading term under the canonical (graded reverse lexicographic) order.
  const Term& leading_term() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return terms_.front();
  }

  Term leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    auto it = std::max_element(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
      return order.compare(a.m, b.m) < 0;
    });
    return *it;
  }

  /// Scaled so that the canonical leading coefficient is 1 (zero stays zero).
  Polynomial monic() const {
    if (terms_.empty() || terms_.front().c == 1) return *this;
    return *this * field_.inv(terms_.front().c);
  }

  /// gcd of all term monomials; the largest monomial dividing the polynomial.
  Monomial monomial_content() const noexcept {
    if (terms_.empty()) return {};
    Monomial g = terms_.front().m;
    for (const auto& t : terms_) g = gcd(g, t.m);
    return g;
  }

  bool divisible_by_variable(std::size_t i) const noexcept {
    return !terms_.empty() && monomial_content()[i] > 0;
  }

  /// Requires m to divide every term.
  Polynomial divide_by_monomial(const Monomial& m) const {
    Polynomial r(field_, arity_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      if (!m.divides(t.m)) throw Error("monomial does not divide polynomial");
      r.terms_.push_back({t.m / m, t.c});
    }
    return r;
  }

  Polynomial multiply_monomial(const Monomial& m, Residue c = 1) const {
    Polynomial r(field_, arity_);
    if (c == 0) return r;
    r.check_fits(m);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.m * m, field_.mul(t.c, c)});
    return r;
  }

  /// Same polynomial viewed in a ring with `arity` variables. Shrinking
  /// requires the dropped variables not to occur.
  Polynomial with_arity(std::size_t arity) const {
    Polynomial r(field_, arity);
    for (const auto& t : terms_) r.check_fits(t.m);
    r.terms_ = terms_;
    return r;
  }

  /// Renames x_i to x_{map[i]} in a ring of the given arity.
  Polynomial permute_variables(std::span<const std::size_t> map, std::size_t arity) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m;
      for (std::size_t i = 0; i < arity_; ++i) {
        if (t.m[i] == 0) continue;
        if (i >= map.size() || map[i] >= arity) throw PreconditionError("variable map out of range");
        m[map[i]] = static_cast<std::uint16_t>(m[map[i]] + t.m[i]);
      }
      out.push_back({m, t.c});
    }
    return from_terms(field_, arity, std::move(out));
  }

  Residue evaluate(std::span<const Residue> point) const {
    if (point.size() < arity_) throw PreconditionError("evaluation point too short");
    Residue acc = 0;
    for (const auto& t : terms_) {
      Residue v = t.c;
      for (std::size_t i = 0; i < arity_; ++i)
        if (t.m[i]) v = field_.mul(v, field_.pow(point[i], t.m[i]));
      acc = field_.add(acc, v);
    }
    return acc;
  }

  /// Composition: x_i is replaced by images[i]; the result lives in the
  /// images' ring.
  Polynomial substitute(std::span<const Polynomial> images) const {
    if (images.size() != arity_) throw PreconditionError("substitution needs one image per variable");
    if (images.empty()) return *this;
    const std::size_t out_arity = images.front().arity();
    // Cache powers of each image, built lazily.
    std::vector<std::vector<Polynomial>> powers(arity_);
    auto power = [&](std::size_t i, int e) -> const Polynomial& {
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(constant(field_, out_arity, 1));
      while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
      return cache[e];
    };
    Polynomial acc(field_, out_arity);
    for (const auto& t : terms_) {
      Polynomial prod = constant(field_, out_arity, 1) * t.c;
      for (std::size_t i = 0; i < arity_; ++i)
        if (t.m[i]) prod = prod * power(i, t.m[i]);
      acc += prod;
    }
    return acc;
  }

  Polynomial pow(unsigned e) const {
    Polynomial r = constant(field_, arity_, 1);
    Polynomial b = *this;
    while (e) {
      if (e & 1u) r = r * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.c = field_.neg(t.c);
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = add_scaled(o, 1); }
  Polynomial& operator-=(const Polynomial& o) { return *this = add_scaled(o, field_.neg(1)); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return a.add_scaled(b, 1); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a.add_scaled(b, a.field_.neg(1));
  }

  friend Polynomial operator*(const Polynomial& a, Residue c) {
    Polynomial r(a.field_, a.arity_);
    c = static_cast<Residue>(c % a.field_.modulus());
    if (c == 0) return r;
    r.terms_ = a.terms_;
    for (auto& t : r.terms_) t.c = a.field_.mul(t.c, c);
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial r(a.field_, a.arity_);
    if (a.is_zero() || b.is_zero()) return r;
    if (b.size() == 1) return a.multiply_monomial(b.terms_[0].m, b.terms_[0].c);
    if (a.size() == 1) return b.multiply_monomial(a.terms_[0].m, a.terms_[0].c);
    r.terms_.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) r.terms_.push_back({s.m * t.m, a.field_.mul(s.c, t.c)});
    r.normalize();
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) noexcept {
    if (a.arity_ != b.arity_ || !(a.field_ == b.field_) || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].m == b.terms_[i].m) || a.terms_[i].c != b.terms_[i].c) return false;
    return true;
  }

  /// Canonical text: descending graded reverse lexicographic terms,
  /// coefficients as symmetric residues.
  std::string to_string(std::span<const std::string> names = {}) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
      std::int64_t c = field_.to_signed(t.c);
      if (first) {
        if (c < 0) os << '-';
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      std::uint64_t mag = static_cast<std::uint64_t>(c < 0 ? -c : c);
      bool wrote = false;
      if (mag != 1 || t.m.is_one()) {
        os << mag;
        wrote = true;
      }
      for (std::size_t i = 0; i < arity_; ++i) {
        if (t.m[i] == 0) continue;
        if (wrote) os << '*';
        if (i < names.size()) {
          os << names[i];
        } else {
          os << 'x' << i;
        }
        if (t.m[i] > 1) os << '^' << t.m[i];
        wrote = true;
      }
    }
    return os.str();
  }

 private:
  void check_fits(const Monomial& m) const {
    for (std::size_t i = arity_; i < kMaxVars; ++i)
      if (m[i]) throw PreconditionError("monomial uses a variable beyond the ring arity");
  }

  void check_compatible(const Polynomial& o) const {
    if (arity_ != o.arity_) throw PreconditionError("arity mismatch");
    if (!(field_ == o.field_)) throw PreconditionError("field mismatch");
  }

  Polynomial add_scaled(const Polynomial& o, Residue s) const {
    check_compatible(o);
    static const MonomialOrder order = MonomialOrder::grevlex();
    Polynomial r(field_, arity_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      int c;
      if (i == terms_.size()) {
        c = -1;
      } else if (j == o.terms_.size()) {
        c = 1;
      } else {
        c = order.compare(terms_[i].m, o.terms_[j].m);
      }
      if (c > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        Residue v = field_.mul(o.terms_[j].c, s);
        if (v) r.terms_.push_back({o.terms_[j].m, v});
        ++j;
      } else {
        Residue v = field_.add(terms_[i].c, field_.mul(o.terms_[j].c, s));
        if (v) r.terms_.push_back({terms_[i].m, v});
        ++i;
        ++j;
      }
    }
    return r;
  }

  void normalize() {
    static const MonomialOrder order = MonomialOrder::grevlex();
    for (auto& t : terms_) t.c = static_cast<Residue>(t.c % field_.modulus());
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return order.compare(a.m, b.m) > 0; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms_.size();) {
      Monomial m = terms_[i].m;
      Residue c = 0;
      for (; i < terms_.size() && terms_[i].m == m; ++i) c = field_.add(c, terms_[i].c);
      if (c) terms_[out++] = {m, c};
    }
    terms_.resize(out);
  }

  PrimeField field_;
  std::size_t arity_;
  std::vector<Term> terms_;
};

inline Polynomial operator*(Residue c, const Polynomial& a) { return a * c; }

inline Polynomial partial_derivative(const Polynomial& f, std::size_t i) {
  if (i >= f.arity()) throw PreconditionError("derivative variable out of range");
  std::vector<Term> out;
  out.reserve(f.size());
  const auto& F = f.field();
  for (const auto& t : f.terms()) {
    if (t.m[i] == 0) continue;
    Monomial m = t.m;
    Residue c = F.mul(t.c, F.from_int(m[i]));
    m[i] = static_cast<std::uint16_t>(m[i] - 1);
    out.push_back({m, c});
  }
  return Polynomial::from_terms(F, f.arity(), std::move(out));
}

/// Sum_i direction[i] * df/dx_i.
inline Polynomial directional_derivative(const Polynomial& f, std::span<const Residue> direction) {
  if (direction.size() != f.arity()) throw PreconditionError("direction length differs from arity");
  Polynomial acc(f.field(), f.arity());
  for (std::size_t i = 0; i < f.arity(); ++i)
    if (direction[i]) acc += partial_derivative(f, i) * direction[i];
  return acc;
}

/// Whether sum_i x_i df/dx_i = deg(f) * f. Throws on non-homogeneous input.
inline bool euler_identity_check(const Polynomial& f) {
  if (!f.is_homogeneous()) throw PreconditionError("Euler identity needs a homogeneous polynomial");
  if (f.is_zero()) return true;
  Polynomial lhs(f.field(), f.arity());
  for (std::size_t i = 0; i < f.arity(); ++i)
    lhs += partial_derivative(f, i).multiply_monomial(Monomial::variable(i));
  return lhs == f * f.field().from_int(f.total_degree());
}

inline std::vector<std::string> default_variable_names(std::size_t arity) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < arity; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

}  // namespace tpolar
