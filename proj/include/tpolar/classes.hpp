#pragma once

#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "tpolar/errors.hpp"
#include "tpolar/maps.hpp"

namespace tpolar {

/// sum_i c_i h^i in A_*(P^n), truncated at h^(n+1).
class ChowClassVector {
 public:
  explicit ChowClassVector(std::vector<std::int64_t> coefficients) : c_(std::move(coefficients)) {
    if (c_.empty()) throw PreconditionError("a class vector needs at least one coefficient");
  }

  static ChowClassVector zero(std::size_t n) { return ChowClassVector(std::vector<std::int64_t>(n + 1, 0)); }
  static ChowClassVector one(std::size_t n) {
    auto v = zero(n);
    v.c_[0] = 1;
    return v;
  }

  /// (1+h)^e truncated; e may be negative (geometric-series expansion).
  static ChowClassVector one_plus_h_power(std::size_t n, int e) {
    std::vector<std::int64_t> c(n + 1, 0);
    // Coefficients of (1+h)^e satisfy c_{k+1} = c_k (e - k) / (k + 1).
    c[0] = 1;
    for (std::size_t k = 0; k < n; ++k) {
      c[k + 1] = c[k] * (e - static_cast<std::int64_t>(k)) / static_cast<std::int64_t>(k + 1);
    }
    return ChowClassVector(std::move(c));
  }

  std::size_t n() const noexcept { return c_.size() - 1; }
  const std::vector<std::int64_t>& coefficients() const noexcept { return c_; }
  std::int64_t operator[](std::size_t i) const { return c_.at(i); }

  /// Coefficient of h^n: the degree of the class, i.e. its Euler characteristic.
  std::int64_t degree() const noexcept { return c_.back(); }

  friend ChowClassVector operator*(const ChowClassVector& a, const ChowClassVector& b) {
    if (a.n() != b.n()) throw PreconditionError("class vectors over different P^n");
    std::vector<std::int64_t> c(a.c_.size(), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; i + j < c.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return ChowClassVector(std::move(c));
  }

  friend ChowClassVector operator+(const ChowClassVector& a, const ChowClassVector& b) {
    if (a.n() != b.n()) throw PreconditionError("class vectors over different P^n");
    std::vector<std::int64_t> c(a.c_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.c_[i];
    return ChowClassVector(std::move(c));
  }

  friend bool operator==(const ChowClassVector&, const ChowClassVector&) = default;

  std::string to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
    os << ']';
    return os.str();
  }

 private:
  std::vector<std::int64_t> c_;
};

inline std::int64_t binomial(std::int64_t r, std::int64_t j) {
  if (j < 0 || j > r) return 0;
  std::int64_t b = 1;
  for (std::int64_t i = 1; i <= j; ++i) b = b * (r - j + i) / i;
  return b;
}

/// sum_i (-1)^i v_i h^i.
inline ChowClassVector alternating_class(const MultidegreeVector& v) {
  std::vector<std::int64_t> c(v.values.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (i % 2 ? -1 : 1) * v.values[i];
  return ChowClassVector(std::move(c));
}

/// c_SM of P^n minus (D union the coordinate hyperplanes), from the
/// multidegrees of the toric polar map.
inline ChowClassVector csm_standard_complement(const MultidegreeVector& d) { return alternating_class(d); }

/// chi(P^n \ (D u H)) = (-1)^n d_n.
inline std::int64_t euler_standard_complement(const MultidegreeVector& d) {
  return (d.n() % 2 ? -1 : 1) * d.topological_degree();
}

/// chi(D \ H) = (-1)^(n-1) d_n.
inline std::int64_t euler_hypersurface_off_coordinates(const MultidegreeVector& d) {
  return -euler_standard_complement(d);
}

/// q(h/(1+h)) truncated: each h^i is replaced by h^i (1+h)^(-i).
inline ChowClassVector substitute_h_over_one_plus_h(const ChowClassVector& q) {
  const std::size_t n = q.n();
  std::vector<std::int64_t> out(n + 1, 0);
  for (std::size_t i = 0; i <= n; ++i) {
    if (q[i] == 0) continue;
    auto expansion = ChowClassVector::one_plus_h_power(n, -static_cast<int>(i));
    for (std::size_t k = 0; i + k <= n; ++k) out[i + k] += q[i] * expansion[k];
  }
  return ChowClassVector(std::move(out));
}

/// c_SM of P^n \ D from the gradient-map multidegrees g:
/// (1+h)^n q(h/(1+h)) with q(h) = sum (-1)^i g_i h^i.
inline ChowClassVector csm_complement_D_from_gradient(const MultidegreeVector& g) {
  const std::size_t n = g.n();
  return ChowClassVector::one_plus_h_power(n, static_cast<int>(n)) *
         substitute_h_over_one_plus_h(alternating_class(g));
}

/// d_r = sum_j C(r, j) g_j.
inline MultidegreeVector toric_from_gradient(const MultidegreeVector& g) {
  MultidegreeVector d;
  d.values.resize(g.values.size());
  for (std::size_t r = 0; r < g.values.size(); ++r)
    for (std::size_t j = 0; j <= r; ++j) d.values[r] += binomial(static_cast<std::int64_t>(r), static_cast<std::int64_t>(j)) * g.values[j];
  return d;
}

/// g_r = sum_j (-1)^(r-j) C(r, j) d_j, the inverse of toric_from_gradient.
inline MultidegreeVector gradient_from_toric(const MultidegreeVector& d) {
  MultidegreeVector g;
  g.values.resize(d.values.size());
  for (std::size_t r = 0; r < d.values.size(); ++r)
    for (std::size_t j = 0; j <= r; ++j)
      g.values[r] += ((r - j) % 2 ? -1 : 1) * binomial(static_cast<std::int64_t>(r), static_cast<std::int64_t>(j)) * d.values[j];
  return g;
}

/// (1+h) p(h) == q(h/(1+h)) with p, q the alternating classes of the toric
/// and gradient multidegrees.
inline bool toric_gradient_identity_holds(const MultidegreeVector& d, const MultidegreeVector& g) {
  if (d.n() != g.n()) return false;
  const std::size_t n = d.n();
  return ChowClassVector::one_plus_h_power(n, 1) * alternating_class(d) ==
         substitute_h_over_one_plus_h(alternating_class(g));
}

/// c_SM(P^n \ D) == (1+h)^(n+1) c_SM(P^n \ (D u H)), the identity for a
/// general translate D.
inline bool check_union_general_section(const ChowClassVector& csm_complement_d, const ChowClassVector& csm_standard) {
  if (csm_complement_d.n() != csm_standard.n()) throw PreconditionError("class vectors over different P^n");
  const std::size_t n = csm_standard.n();
  return csm_complement_d == ChowClassVector::one_plus_h_power(n, static_cast<int>(n) + 1) * csm_standard;
}

/// k^n - sum of Milnor numbers: deg T_f for a general translate with
/// isolated singularities.
inline std::int64_t deg_from_milnor_general_position(std::int64_t k, std::int64_t n, std::int64_t milnor_sum) {
  if (k < 1 || n < 1 || milnor_sum < 0) throw PreconditionError("need k >= 1, n >= 1, milnor_sum >= 0");
  std::int64_t p = 1;
  for (std::int64_t i = 0; i < n; ++i) p *= k;
  return p - milnor_sum;
}

}  // namespace tpolar
