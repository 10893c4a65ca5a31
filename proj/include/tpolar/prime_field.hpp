#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "tpolar/errors.hpp"

namespace tpolar {

using Residue = std::uint32_t;

inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL}) {
    if (n % d == 0) return n == d;
  }
  for (std::uint64_t d = 11; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Arithmetic in Z/pZ for a prime p < 2^32. Residues are stored reduced.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p = kDefaultPrime) : p_(p) {
    if (p < 3 || p >= (1ULL << 32) || !is_prime(p)) {
      throw PreconditionError("modulus " + std::to_string(p) + " is not an odd prime below 2^32");
    }
  }

  std::uint64_t modulus() const noexcept { return p_; }

  Residue add(Residue a, Residue b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Residue>(s >= p_ ? s - p_ : s);
  }
  Residue sub(Residue a, Residue b) const noexcept {
    return a >= b ? a - b : static_cast<Residue>(std::uint64_t{a} + p_ - b);
  }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : static_cast<Residue>(p_ - a); }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>(std::uint64_t{a} * b % p_);
  }

  Residue pow(Residue a, std::uint64_t e) const noexcept {
    std::uint64_t r = 1, b = a;
    while (e) {
      if (e & 1) r = r * b % p_;
      b = b * b % p_;
      e >>= 1;
    }
    return static_cast<Residue>(r);
  }

  Residue inv(Residue a) const {
    if (a == 0) throw Error("inverse of zero in prime field");
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), nr = a;
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return static_cast<Residue>(t);
  }

  Residue div(Residue a, Residue b) const { return mul(a, inv(b)); }

  Residue from_int(std::int64_t v) const noexcept {
    std::int64_t m = v % static_cast<std::int64_t>(p_);
    if (m < 0) m += static_cast<std::int64_t>(p_);
    return static_cast<Residue>(m);
  }

  /// Symmetric representative in (-p/2, p/2].
  std::int64_t to_signed(Residue a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - static_cast<std::int64_t>(p_)
                      : static_cast<std::int64_t>(a);
  }

  template <class Rng>
  Residue random(Rng& rng) const {
    return static_cast<Residue>(rng() % p_);
  }

  template <class Rng>
  Residue random_nonzero(Rng& rng) const {
    return static_cast<Residue>(1 + rng() % (p_ - 1));
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

/// SplitMix64 finalizer; used to derive independent sub-seeds.
inline std::uint64_t mix_seed(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) noexcept {
  return mix_seed(mix_seed(mix_seed(seed) ^ a) ^ (b * 0x2545f4914f6cdd1dULL));
}

using Rng = std::mt19937_64;

}  // namespace tpolar
