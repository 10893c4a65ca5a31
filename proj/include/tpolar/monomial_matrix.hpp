#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <utility>
#include <vector>

#include "tpolar/errors.hpp"
#include "tpolar/monomial.hpp"

namespace tpolar {

/// Square matrix of nonnegative exponents; row i is the exponent vector of
/// the i-th monomial of the map phi_A. Every row sums to the same k.
class MonomialMatrix {
 public:
  explicit MonomialMatrix(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    const std::size_t n = rows_.size();
    if (n == 0 || n > kMaxVars) throw PreconditionError("monomial matrix size out of range");
    for (const auto& r : rows_) {
      if (r.size() != n) throw PreconditionError("monomial matrix must be square");
      for (int a : r)
        if (a < 0) throw PreconditionError("monomial matrix entries must be nonnegative");
    }
    k_ = std::accumulate(rows_[0].begin(), rows_[0].end(), 0);
    for (const auto& r : rows_)
      if (std::accumulate(r.begin(), r.end(), 0) != k_) throw PreconditionError("monomial matrix rows must share one sum");
    if (k_ < 1) throw PreconditionError("monomial matrix row sum must be positive");
  }

  std::size_t size() const noexcept { return rows_.size(); }
  int row_sum() const noexcept { return k_; }
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }

  Monomial monomial(std::size_t i) const {
    Monomial m;
    for (std::size_t j = 0; j < rows_.size(); ++j) m[j] = static_cast<std::uint16_t>(rows_[i][j]);
    return m;
  }

  /// Exact integer determinant (fraction-free Bareiss elimination).
  std::int64_t determinant() const {
    const std::size_t n = rows_.size();
    std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i][j] = rows_[i][j];
    std::int64_t sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (a[k][k] == 0) {
        std::size_t swap = k + 1;
        while (swap < n && a[swap][k] == 0) ++swap;
        if (swap == n) return 0;
        std::swap(a[k], a[swap]);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i)
        for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
  }

  /// The monomials share a variable factor (some column has a positive minimum).
  bool has_common_factor() const {
    for (std::size_t j = 0; j < rows_.size(); ++j) {
      int lo = rows_[0][j];
      for (const auto& r : rows_) lo = std::min(lo, r[j]);
      if (lo > 0) return true;
    }
    return false;
  }

  /// phi_A is birational iff |det A| = k.
  bool is_invertible() const { return std::llabs(determinant()) == k_; }

 private:
  std::vector<std::vector<int>> rows_;
  int k_ = 0;
};

}  // namespace tpolar
