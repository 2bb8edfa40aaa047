#pragma once

// Explicit generators y_1, ..., y_m with V_m (x) V_n = (+)_i FG y_i.
//
// For a run [a+1, b] of equal lambda, S_b = (g-1)^{m+n-2b} : D_{m+n-b} -> D_b
// is invertible, and
//   singleton run (a+1 = b):  y_b     = S_b^{-1} x_b
//   run leader (a+1 < b):     y_{a+1} = U S_b^{-1} x_b
//   other members:            y_i     = (-1)^{i-a-1} h_1^{i-a-1} y_{a+1}
// S_b^{-1} comes from the closed-form adjugate of the binomial matrix
// C(a', b'+j-i) (a' = m+n-2b, b' = m-b), not from elimination.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jt/decomp.hpp"
#include "jt/errors.hpp"
#include "jt/exactnum.hpp"
#include "jt/gfp.hpp"
#include "jt/tensorspace.hpp"

namespace jt {

using BigIntMatrix = std::vector<std::vector<BigInt>>;

namespace detail {

// Tables shared by every entry z_{i,j} of one adjugate.
struct AdjugateTables {
  std::int64_t a, b, k;
  BigInt dk;
  std::vector<BigInt> top_binom;  // C(a+k-1, l-1), l = 1..k
  std::vector<BigInt> rising;     // C(a+d-1, d), d = 0..k-1 (signed binomial)
  BigIntMatrix lagrange_num;      // prod_{r != i} (l - b - r), [i-1][l-1]
  std::vector<BigInt> lagrange_den;  // prod_{r != i} (i - r)

  AdjugateTables(std::int64_t a_, std::int64_t b_, std::int64_t k_)
      : a(a_), b(b_), k(k_), dk(roberts_dk(a_, b_, k_)) {
    const auto K = static_cast<std::size_t>(k);
    for (std::int64_t l = 1; l <= k; ++l) top_binom.push_back(binom_exact(a + k - 1, l - 1));
    for (std::int64_t d = 0; d < k; ++d) rising.push_back(binom_signed(a + d - 1, d));
    lagrange_num.assign(K, std::vector<BigInt>(K));
    for (std::int64_t i = 1; i <= k; ++i) {
      BigInt den = 1;
      for (std::int64_t r = 1; r <= k; ++r)
        if (r != i) den *= i - r;
      lagrange_den.push_back(den);
      for (std::int64_t l = 1; l <= k; ++l) {
        BigInt num = 1;
        for (std::int64_t r = 1; r <= k; ++r)
          if (r != i) num *= l - b - r;
        lagrange_num[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(l - 1)] = num;
      }
    }
  }

  BigInt entry(std::int64_t i, std::int64_t j) const {
    const BigInt row_binom = binom_exact(a + k - 1, b + i - 1);
    if (row_binom == 0)
      throw std::domain_error("adjugate closed form undefined: C(a+k-1, b+i-1) = 0 (requires a >= b)");
    BigInt sum = 0;
    for (std::int64_t l = 1; l <= j; ++l) {
      BigInt term = top_binom[static_cast<std::size_t>(l - 1)] * rising[static_cast<std::size_t>(j - l)] *
                    lagrange_num[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(l - 1)];
      if ((l + j) % 2) term = -term;
      sum += term;
    }
    const BigInt num = dk * sum;
    const BigInt den = row_binom * lagrange_den[static_cast<std::size_t>(i - 1)];
    const BigRat z = make_rational(num, den);
    if (boost::multiprecision::denominator(z) != 1)
      throw integrality_error("adjugate entry z_{" + std::to_string(i) + "," + std::to_string(j) +
                              "} is not an integer");
    return boost::multiprecision::numerator(z);
  }
};

}  // namespace detail

/// Exact (i,j) entry of adj(M) for M = (C(a, b+j-i))_{k x k}, 1-based.
/// Defined whenever a >= b.
inline BigInt ny_adjugate_entry(std::int64_t a, std::int64_t b, std::int64_t k, std::int64_t i,
                                std::int64_t j) {
  if (i < 1 || i > k || j < 1 || j > k) throw std::out_of_range("ny_adjugate_entry: index outside [1, k]");
  return detail::AdjugateTables(a, b, k).entry(i, j);
}

inline BigIntMatrix ny_adjugate_exact(std::int64_t a, std::int64_t b, std::int64_t k) {
  const detail::AdjugateTables tab(a, b, k);
  BigIntMatrix adj(static_cast<std::size_t>(k), std::vector<BigInt>(static_cast<std::size_t>(k)));
  for (std::int64_t i = 1; i <= k; ++i)
    for (std::int64_t j = 1; j <= k; ++j)
      adj[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = tab.entry(i, j);
  return adj;
}

/// A_k^{-1} = det_unit^{-1} * adjugate over F_p.
struct NYInverse {
  int k = 0;
  Fp det_unit;
  FpMatrix adjugate;

  FpMatrix inverse() const { return adjugate.scaled(adjugate.field().inv(det_unit)); }
};

inline NYInverse ny_inverse(const Params& P, int k) {
  if (k < 1 || k > P.m) throw std::out_of_range("ny_inverse: k outside [1, m]");
  const std::int64_t a = P.m + P.n - 2 * k, b = P.m - k;
  const PadicValue det = roberts_dk_unit_mod_p(a, b, k, P.field);
  if (!det.invertible_mod_p())
    throw std::domain_error("ny_inverse: A_" + std::to_string(k) + " is singular mod " + std::to_string(P.p()));
  const detail::AdjugateTables tab(a, b, k);
  if (reduce_mod_p(tab.dk, P.field) != det.unit)
    throw consistency_error("ny_inverse: exact and mod-p determinants disagree");

  const auto K = static_cast<std::size_t>(k);
  FpMatrix adj(P.field, K, K);
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = 0; j < K; ++j)
      adj.set(i, j, reduce_mod_p(tab.entry(static_cast<std::int64_t>(i + 1), static_cast<std::int64_t>(j + 1)), P.field));
  return {k, det.unit, std::move(adj)};
}

enum class CaseTag { leading_singleton, leading_block, shifted };

inline std::string_view to_string(CaseTag c) {
  switch (c) {
    case CaseTag::leading_singleton: return "leading-singleton";
    case CaseTag::leading_block: return "leading-block";
    case CaseTag::shifted: return "shifted";
  }
  return "?";
}

inline std::optional<CaseTag> parse_case_tag(std::string_view s) {
  for (auto c : {CaseTag::leading_singleton, CaseTag::leading_block, CaseTag::shifted})
    if (to_string(c) == s) return c;
  return std::nullopt;
}

struct Generator {
  int i = 0;
  DiagVector y;     // in D_{m+n-i}
  int lambda = 0;
  int socle_index = 0;  // m+n+1-i-lambda: (g-1)^{lambda-1} y = x_{socle_index}
  CaseTag tag = CaseTag::leading_singleton;

  friend bool operator==(const Generator&, const Generator&) = default;
};

using GeneratorSet = std::vector<Generator>;

/// S_b^{-1}(x_b) in D_{m+n-b}.
inline DiagVector leading_solution(const Params& P, int b) {
  const NYInverse inv = ny_inverse(P, b);
  return apply_matrix(P, inv.inverse(), socle_vector(P, b), P.m + P.n - b);
}

inline DiagVector gen_case1(const Params& P, int b) {
  if (b < 1 || b > P.m) throw std::out_of_range("gen_case1: b outside [1, m]");
  return leading_solution(P, b);
}

inline DiagVector gen_case2(const Params& P, int a, int b) {
  if (!(a >= 0 && a + 1 < b && b <= P.m)) throw std::out_of_range("gen_case2: need 0 <= a, a+1 < b <= m");
  return apply_matrix(P, u_matrix(P, a, b), leading_solution(P, b), P.m + P.n - a - 1);
}

/// Coefficients of the run leader padded with i-a-1 trailing zeros, times
/// (-1)^{i-a-1}, over B_{m+n-i}. Same as (-1)^{i-a-1} h_1^{i-a-1}(y_leader).
inline DiagVector gen_case3(const Params& P, const DiagVector& y_leader, int a, int i) {
  if (!(a >= 0 && a + 2 <= i && i <= P.m)) throw std::out_of_range("gen_case3: need a+2 <= i <= m");
  if (y_leader.k != P.m + P.n - a - 1 || y_leader.coeffs.size() != static_cast<std::size_t>(a + 1))
    throw std::invalid_argument("gen_case3: leader must lie in D_{m+n-a-1}");
  const Fp sgn = P.field.sign(i - a - 1);
  DiagVector y{P.m + P.n - i, std::vector<Fp>(static_cast<std::size_t>(i))};
  for (std::size_t t = 0; t < y_leader.coeffs.size(); ++t) y.coeffs[t] = P.field.mul(sgn, y_leader.coeffs[t]);
  return y;
}

inline GeneratorSet build_generators(const Params& P, const Decomposition& d) {
  GeneratorSet out;
  out.reserve(static_cast<std::size_t>(P.m));
  for (const Block& blk : d.blocks) {
    auto make = [&](int i, DiagVector y, CaseTag tag) {
      const int lam = d.lambda[static_cast<std::size_t>(i - 1)];
      out.push_back({i, std::move(y), lam, P.m + P.n + 1 - i - lam, tag});
    };
    if (blk.a + 1 == blk.b) {
      make(blk.b, gen_case1(P, blk.b), CaseTag::leading_singleton);
      continue;
    }
    const DiagVector leader = gen_case2(P, blk.a, blk.b);
    make(blk.a + 1, leader, CaseTag::leading_block);
    for (int i = blk.a + 2; i <= blk.b; ++i) make(i, gen_case3(P, leader, blk.a, i), CaseTag::shifted);
  }
  return out;
}

inline GeneratorSet build_generators(const Params& P) { return build_generators(P, decompose(P)); }

}  // namespace jt
