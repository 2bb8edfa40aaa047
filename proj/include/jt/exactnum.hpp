#pragma once

// Exact integer/rational arithmetic and binomial coefficients: exact, mod p
// (Lucas) and p-adic valuation (Kummer), plus the Roberts determinant
//   d_k = prod_{i=0}^{k-1} C(a+i, b) / C(b+i, b)
// of the k x k matrix with (i,j) entry C(a, b+j-i).

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "jt/errors.hpp"
#include "jt/field.hpp"

namespace jt {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// C(n, k) for n >= 0; zero when k < 0 or k > n.
inline BigInt binom_exact(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::invalid_argument("binom_exact: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::int64_t t = 1; t <= k; ++t) {
    r *= n - k + t;
    r /= t;
  }
  return r;
}

/// Falling-factorial binomial n(n-1)...(n-k+1)/k!, defined for every integer
/// n; zero for k < 0. Agrees with binom_exact when n >= 0.
inline BigInt binom_signed(std::int64_t n, std::int64_t k) {
  if (k < 0) return 0;
  if (n >= 0) return binom_exact(n, k);
  // C(n, k) = (-1)^k C(k - n - 1, k)
  BigInt r = binom_exact(k - n - 1, k);
  return (k % 2 == 0) ? r : BigInt(-r);
}

namespace detail {

// C(a, b) mod p for 0 <= a < p.
inline Fp small_binom_mod(std::uint64_t a, std::uint64_t b, const PrimeField& F) {
  if (b > a) return F.zero();
  b = std::min(b, a - b);
  Fp num = F.one(), den = F.one();
  for (std::uint64_t t = 1; t <= b; ++t) {
    num = F.mul(num, F.from_uint(a - b + t));
    den = F.mul(den, F.from_uint(t));
  }
  return F.div(num, den);
}

}  // namespace detail

/// C(n, k) mod p by Lucas's theorem, digit by digit in base p.
inline Fp binom_mod_p(std::int64_t n, std::int64_t k, const PrimeField& F) {
  if (n < 0) throw std::invalid_argument("binom_mod_p: n must be nonnegative");
  if (k < 0 || k > n) return F.zero();
  const std::uint64_t p = F.p();
  auto nn = static_cast<std::uint64_t>(n);
  auto kk = static_cast<std::uint64_t>(k);
  Fp r = F.one();
  while (kk > 0 && !r.is_zero()) {
    r = F.mul(r, detail::small_binom_mod(nn % p, kk % p, F));
    nn /= p;
    kk /= p;
  }
  return r;
}

/// v_p(C(n, k)) = number of carries when adding k and n-k in base p.
inline std::int64_t vp_binom(std::int64_t n, std::int64_t k, std::uint64_t p) {
  if (k < 0 || k > n)
    throw std::out_of_range("vp_binom: k=" + std::to_string(k) + " outside [0, " +
                            std::to_string(n) + "]");
  auto x = static_cast<std::uint64_t>(k);
  auto y = static_cast<std::uint64_t>(n - k);
  std::int64_t carries = 0;
  std::uint64_t carry = 0;
  while (x > 0 || y > 0 || carry > 0) {
    std::uint64_t s = x % p + y % p + carry;
    carry = s >= p ? 1 : 0;
    carries += static_cast<std::int64_t>(carry);
    x /= p;
    y /= p;
  }
  return carries;
}

/// Exact p-adic valuation of a nonzero integer.
inline std::int64_t vp_exact(BigInt x, std::uint64_t p) {
  if (x == 0) throw std::domain_error("vp_exact: valuation of zero");
  std::int64_t v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

/// num/den in lowest terms with a positive denominator.
inline BigRat make_rational(BigInt num, BigInt den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return BigRat(num, den);
}

inline Fp reduce_mod_p(const BigInt& x, const PrimeField& F) {
  BigInt r = x % F.p();
  if (r < 0) r += F.p();
  return Fp{r.convert_to<std::uint32_t>()};
}

/// Exact Roberts determinant d_k. The product is accumulated over the
/// rationals and must land on an integer.
inline BigInt roberts_dk(std::int64_t a, std::int64_t b, std::int64_t k) {
  if (a < 0 || b < 0 || k < 1) throw std::invalid_argument("roberts_dk: need a, b >= 0 and k >= 1");
  BigRat prod = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    prod *= make_rational(binom_exact(a + i, b), binom_exact(b + i, b));
    if (prod == 0) return 0;
  }
  if (boost::multiprecision::denominator(prod) != 1)
    throw integrality_error("roberts_dk(" + std::to_string(a) + "," + std::to_string(b) + "," +
                            std::to_string(k) + ") is not an integer");
  return boost::multiprecision::numerator(prod);
}

/// d_k written as p^valuation * unit with unit a nonzero residue. When d_k
/// itself is zero, valuation is kZeroValuation and unit is 0.
struct PadicValue {
  static constexpr std::int64_t kZeroValuation = std::numeric_limits<std::int64_t>::max();

  std::int64_t valuation = 0;
  Fp unit{1};

  bool is_zero() const { return valuation == kZeroValuation; }
  /// True iff the value is a unit mod p, i.e. its reduction is nonzero.
  bool invertible_mod_p() const { return valuation == 0; }
  /// phi(value): the reduction mod p.
  Fp reduced() const { return valuation == 0 ? unit : Fp{0}; }
};

namespace detail {

// Running product of integers kept as p^v * (unit mod p).
class PadicAccumulator {
 public:
  explicit PadicAccumulator(const PrimeField& F) : F_(F) {}

  void mul(std::int64_t t) { absorb(t, true); }
  void div(std::int64_t t) { absorb(t, false); }

  void mul(const PadicAccumulator& o) {
    v_ += o.v_;
    u_ = F_.mul(u_, o.u_);
  }
  void div(const PadicAccumulator& o) {
    v_ -= o.v_;
    u_ = F_.div(u_, o.u_);
  }

  std::int64_t valuation() const { return v_; }
  Fp unit() const { return u_; }

 private:
  void absorb(std::int64_t t, bool multiply) {
    if (t <= 0) throw std::invalid_argument("PadicAccumulator: factor must be positive");
    const auto p = static_cast<std::int64_t>(F_.p());
    std::int64_t e = 0;
    while (t % p == 0) {
      t /= p;
      ++e;
    }
    Fp f = F_.from_int(t);
    if (multiply) {
      v_ += e;
      u_ = F_.mul(u_, f);
    } else {
      v_ -= e;
      u_ = F_.div(u_, f);
    }
  }

  PrimeField F_;
  std::int64_t v_ = 0;
  Fp u_{1};
};

}  // namespace detail

/// d_k mod p without big integers. The valuation is the Kummer sum
/// sum_i (v_p C(a+i,b) - v_p C(b+i,b)); the unit part is tracked through
/// the ratios C(x+1,b) = C(x,b) * (x+1)/(x+1-b).
inline PadicValue roberts_dk_unit_mod_p(std::int64_t a, std::int64_t b, std::int64_t k,
                                        const PrimeField& F) {
  if (a < 0 || b < 0 || k < 1)
    throw std::invalid_argument("roberts_dk_unit_mod_p: need a, b >= 0 and k >= 1");
  // Row 1 of the matrix is C(a, b+j-1) = 0 for all j when a < b.
  if (a < b) return {PadicValue::kZeroValuation, F.zero()};

  std::int64_t valuation = 0;
  for (std::int64_t i = 0; i < k; ++i)
    valuation += vp_binom(a + i, b, F.p()) - vp_binom(b + i, b, F.p());

  detail::PadicAccumulator top(F);     // C(a+i, b)
  detail::PadicAccumulator bottom(F);  // C(b+i, b)
  for (std::int64_t t = 1; t <= b; ++t) {
    top.mul(a - b + t);
    top.div(t);
  }
  detail::PadicAccumulator acc(F);
  for (std::int64_t i = 0; i < k; ++i) {
    if (i > 0) {
      top.mul(a + i);
      top.div(a + i - b);
      bottom.mul(b + i);
      bottom.div(i);
    }
    acc.mul(top);
    acc.div(bottom);
  }
  if (acc.valuation() != valuation)
    throw consistency_error("roberts_dk_unit_mod_p: Kummer valuation disagrees with factor tracking");
  return {valuation, acc.unit()};
}

}  // namespace jt
