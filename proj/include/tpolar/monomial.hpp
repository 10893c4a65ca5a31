#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>

#include "tpolar/errors.hpp"

namespace tpolar {

/// Upper bound on the number of variables of any ring, auxiliary variables included.
inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector x_0^{a_0} ... x_{N-1}^{a_{N-1}}. Entries past the ring's
/// arity are always zero, so no operation here needs to know the arity.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};

  Monomial() = default;
  Monomial(std::initializer_list<int> exps) {
    if (exps.size() > kMaxVars) throw PreconditionError("too many variables");
    std::size_t i = 0;
    for (int x : exps) {
      if (x < 0) throw PreconditionError("negative exponent");
      e[i++] = static_cast<std::uint16_t>(x);
    }
  }

  static Monomial variable(std::size_t i, int power = 1) {
    Monomial m;
    m.e[i] = static_cast<std::uint16_t>(power);
    return m;
  }

  std::uint16_t operator[](std::size_t i) const { return e[i]; }
  std::uint16_t& operator[](std::size_t i) { return e[i]; }

  int degree() const noexcept {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }

  bool is_one() const noexcept {
    return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
  }

  /// Bit i set iff x_i occurs.
  std::uint32_t support_mask() const noexcept {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e[i]) m |= 1u << i;
    return m;
  }

  bool divides(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e[i] > other.e[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) noexcept {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
    return r;
  }

  /// Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) noexcept {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] - b.e[i]);
    return r;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

inline Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

inline Monomial gcd(const Monomial& a, const Monomial& b) noexcept {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = std::min(a.e[i], b.e[i]);
  return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) noexcept {
  return (a.support_mask() & b.support_mask()) == 0;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto x : m.e) h = (h ^ x) * 1099511628211ULL;
    return static_cast<std::size_t>(h);
  }
};

/// A global multiplicative monomial order.
///
/// Variable x_0 is the largest variable in every order. The elimination
/// order compares the block of variables in `block_mask` first (graded
/// reverse lexicographic within the block), then the remaining variables
/// (again graded reverse lexicographic); any monomial involving a block
/// variable is larger than every monomial free of them.
class MonomialOrder {
 public:
  enum class Kind { GradedReverseLex, Lex, BlockElimination };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::GradedReverseLex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  /// Eliminates the first `k` variables.
  static MonomialOrder block_elimination(std::size_t k) {
    if (k > kMaxVars) throw PreconditionError("elimination block larger than the ring");
    return MonomialOrder(Kind::BlockElimination, static_cast<std::uint32_t>((1ULL << k) - 1));
  }
  /// Eliminates an arbitrary variable set, given as a bit mask.
  static MonomialOrder elimination(std::uint32_t mask) {
    return MonomialOrder(Kind::BlockElimination, mask);
  }

  Kind kind() const noexcept { return kind_; }
  std::uint32_t block_mask() const noexcept { return mask_; }

  /// Three-way comparison: >0 if a > b, <0 if a < b, 0 if equal.
  int compare(const Monomial& a, const Monomial& b) const noexcept {
    switch (kind_) {
      case Kind::Lex:
        for (std::size_t i = 0; i < kMaxVars; ++i)
          if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
        return 0;
      case Kind::GradedReverseLex:
        return grevlex_on(a, b, ~0u);
      case Kind::BlockElimination: {
        int c = grevlex_on(a, b, mask_);
        if (c != 0) return c;
        return grevlex_on(a, b, ~mask_);
      }
    }
    return 0;
  }

  bool greater(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind k, std::uint32_t mask) : kind_(k), mask_(mask) {}

  static int grevlex_on(const Monomial& a, const Monomial& b, std::uint32_t mask) noexcept {
    int da = 0, db = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (mask & (1u << i)) {
        da += a.e[i];
        db += b.e[i];
      }
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = kMaxVars; i-- > 0;) {
      if ((mask & (1u << i)) && a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
  }

  Kind kind_;
  std::uint32_t mask_;
};

}  // namespace tpolar
