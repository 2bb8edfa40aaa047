#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace jt {

/// An element of F_p, stored as its least nonnegative residue. The modulus
/// lives in the owning PrimeField, not in the element.
struct Fp {
  std::uint32_t v = 0;

  constexpr bool is_zero() const { return v == 0; }
  friend constexpr bool operator==(Fp, Fp) = default;
  friend std::ostream& operator<<(std::ostream& os, Fp x) { return os << x.v; }
};

/// The prime field F_p for a word-sized prime p (p < 2^31). Primality is
/// checked once here; everything downstream trusts it.
class PrimeField {
 public:
  static constexpr std::uint64_t kMaxPrime = (1ULL << 31) - 1;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (!is_prime(p)) {
      throw std::invalid_argument("modulus " + std::to_string(p) +
                                  " is not a prime below 2^31");
    }
  }

  static constexpr bool is_prime(std::uint64_t p) {
    if (p < 2 || p > kMaxPrime) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
      if (p % d == 0) return false;
    return true;
  }

  std::uint32_t p() const { return static_cast<std::uint32_t>(p_); }

  Fp zero() const { return {0}; }
  Fp one() const { return {1}; }

  Fp from_int(std::int64_t x) const {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    return {static_cast<std::uint32_t>(r)};
  }
  Fp from_uint(std::uint64_t x) const { return {static_cast<std::uint32_t>(x % p_)}; }

  Fp add(Fp a, Fp b) const {
    std::uint64_t s = std::uint64_t{a.v} + b.v;
    return {static_cast<std::uint32_t>(s >= p_ ? s - p_ : s)};
  }
  Fp sub(Fp a, Fp b) const {
    return {static_cast<std::uint32_t>(a.v >= b.v ? a.v - b.v : a.v + p_ - b.v)};
  }
  Fp neg(Fp a) const { return a.v == 0 ? a : Fp{static_cast<std::uint32_t>(p_ - a.v)}; }
  Fp mul(Fp a, Fp b) const {
    return {static_cast<std::uint32_t>(std::uint64_t{a.v} * b.v % p_)};
  }
  /// a + b*c
  Fp fma(Fp a, Fp b, Fp c) const {
    return {static_cast<std::uint32_t>((std::uint64_t{a.v} + std::uint64_t{b.v} * c.v) % p_)};
  }
  Fp pow(Fp a, std::uint64_t e) const {
    Fp r = one();
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  Fp inv(Fp a) const {
    if (a.is_zero()) throw std::domain_error("inverse of zero in F_p");
    return pow(a, p_ - 2);
  }
  Fp div(Fp a, Fp b) const { return mul(a, inv(b)); }

  /// (-1)^e
  Fp sign(std::int64_t e) const { return (e % 2 == 0) ? one() : neg(one()); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
};

}  // namespace jt
