#pragma once

// Combinatorics of V_m (x) V_n in the diagonal basis v_{i,j} = u_i (x) g^{n-i} w_j.
//
// D_k is spanned by the v_{i,j} with i + j = k + 1, ordered by ascending i.
// g - 1 maps D_k into D_{k-1} by v_{i,j} -> v_{i-1,j} + v_{i,j-1}, dropping
// indices that leave [1,m] x [1,n].

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jt/exactnum.hpp"
#include "jt/field.hpp"
#include "jt/gfp.hpp"

namespace jt {

/// A prime p and Jordan block sizes 1 <= m <= n.
struct Params {
  Params(std::uint64_t p, int m_, int n_) : field(p), m(m_), n(n_) {
    if (m < 1 || n < m)
      throw std::invalid_argument("need 1 <= m <= n, got m=" + std::to_string(m) +
                                  " n=" + std::to_string(n));
  }

  PrimeField field;
  int m;
  int n;

  std::uint32_t p() const { return field.p(); }
  int top_diagonal() const { return m + n - 1; }
  std::size_t dim() const { return static_cast<std::size_t>(m) * static_cast<std::size_t>(n); }
};

/// Smallest a with p^a >= n. V_n is indecomposable only for groups of order
/// p^a at least this large; reported, never enforced.
inline int min_group_exponent(std::uint64_t p, int n) {
  int a = 0;
  std::uint64_t q = 1;
  while (q < static_cast<std::uint64_t>(n)) {
    q *= p;
    ++a;
  }
  return a;
}

struct Position {
  int row;  // i in v_{i,j}
  int col;  // j in v_{i,j}
  friend bool operator==(Position, Position) = default;
};

/// The ordered basis B_k of D_k: v_{lo, k+1-lo}, ..., v_{hi, k+1-hi}.
struct DiagIndex {
  int k = 0;
  int lo = 1;  // max(1, k+1-n)
  int hi = 0;  // min(k, m)

  std::size_t size() const { return hi >= lo ? static_cast<std::size_t>(hi - lo + 1) : 0; }
  Position at(std::size_t t) const {
    const int i = lo + static_cast<int>(t);
    return {i, k + 1 - i};
  }
  std::vector<Position> positions() const {
    std::vector<Position> out;
    out.reserve(size());
    for (std::size_t t = 0; t < size(); ++t) out.push_back(at(t));
    return out;
  }
  /// Slot of v_{i, k+1-i}, or -1 if outside the diagonal.
  int slot_of_row(int i) const { return (i >= lo && i <= hi) ? i - lo : -1; }
};

/// Any integer k is accepted here; diagonals outside [1, m+n-1] are empty.
inline DiagIndex diagonal(const Params& P, int k) {
  if (k < 1 || k > P.top_diagonal()) return {k, 1, 0};
  return {k, std::max(1, k + 1 - P.n), std::min(k, P.m)};
}

inline DiagIndex basis_of(const Params& P, int k) {
  if (k < 1 || k > P.top_diagonal())
    throw std::out_of_range("basis_of: diagonal " + std::to_string(k) + " outside [1, " +
                            std::to_string(P.top_diagonal()) + "]");
  return diagonal(P, k);
}

/// An element of D_k as coefficients over B_k. Diagonals with k < 1 are the
/// zero space and carry no coefficients.
struct DiagVector {
  int k = 0;
  std::vector<Fp> coeffs;

  bool is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](Fp x) { return x.is_zero(); });
  }
  friend bool operator==(const DiagVector&, const DiagVector&) = default;
};

inline DiagVector zero_vector(const Params& P, int k) { return {k, std::vector<Fp>(diagonal(P, k).size())}; }

/// Basis vector v_{i,j} as an element of D_{i+j-1}.
inline DiagVector basis_vector(const Params& P, int i, int j) {
  if (i < 1 || i > P.m || j < 1 || j > P.n)
    throw std::out_of_range("basis_vector: (" + std::to_string(i) + "," + std::to_string(j) + ")");
  auto v = zero_vector(P, i + j - 1);
  v.coeffs[static_cast<std::size_t>(diagonal(P, v.k).slot_of_row(i))] = P.field.one();
  return v;
}

/// x_i = sum_{j=1}^{i} (-1)^{j-1} v_{j, i+1-j}, which spans ker(g-1) on D_i.
inline DiagVector socle_vector(const Params& P, int i) {
  if (i < 1 || i > P.m)
    throw std::out_of_range("socle_vector: index " + std::to_string(i) + " outside [1, m]");
  DiagVector x{i, std::vector<Fp>(static_cast<std::size_t>(i))};
  for (int j = 1; j <= i; ++j) x.coeffs[static_cast<std::size_t>(j - 1)] = P.field.sign(j - 1);
  return x;
}

/// Matrix of (g-1)^{s-r} : D_s -> D_r with respect to B_s and B_r; the
/// (i,j) entry is C(s-r, m_s - m_r + j - i).
inline FpMatrix power_matrix(const Params& P, int s, int r) {
  if (!(1 <= r && r < s && s <= P.top_diagonal()))
    throw std::out_of_range("power_matrix: need 1 <= r < s <= m+n-1");
  const DiagIndex Bs = diagonal(P, s), Br = diagonal(P, r);
  FpMatrix M(P.field, Br.size(), Bs.size());
  for (std::size_t i = 0; i < Br.size(); ++i)
    for (std::size_t j = 0; j < Bs.size(); ++j) {
      const std::int64_t idx = Bs.lo - Br.lo + static_cast<std::int64_t>(j) - static_cast<std::int64_t>(i);
      M.set(i, j, binom_mod_p(s - r, idx, P.field));
    }
  return M;
}

/// A_k, the matrix of S_k = (g-1)^{m+n-2k} : D_{m+n-k} -> D_k, with entries
/// C(m+n-2k, m-k+j-i). For k = m = n it is the identity.
inline FpMatrix a_matrix(const Params& P, int k) {
  if (k < 1 || k > P.m) throw std::out_of_range("a_matrix: k outside [1, m]");
  const auto K = static_cast<std::size_t>(k);
  FpMatrix A(P.field, K, K);
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = 0; j < K; ++j)
      A.set(i, j, binom_mod_p(P.m + P.n - 2 * k,
                              P.m - k + static_cast<std::int64_t>(j) - static_cast<std::int64_t>(i),
                              P.field));
  return A;
}

/// A(r,s): r x r upper unitriangular with entries C(s, j-i).
inline FpMatrix a_struct_matrix(int r, int s, const PrimeField& F) {
  if (r < 1 || s < 1) throw std::invalid_argument("a_struct_matrix: need r, s >= 1");
  FpMatrix A(F, static_cast<std::size_t>(r), static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j)
      A.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), binom_mod_p(s, j - i, F));
  return A;
}

/// B(r,s): r x r upper unitriangular with entries (-1)^{j-i} C(s-1+j-i, s-1);
/// the inverse of A(r,s).
inline FpMatrix b_struct_matrix(int r, int s, const PrimeField& F) {
  if (r < 1 || s < 1) throw std::invalid_argument("b_struct_matrix: need r, s >= 1");
  FpMatrix B(F, static_cast<std::size_t>(r), static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j)
      B.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j),
            F.mul(F.sign(j - i), binom_mod_p(s - 1 + j - i, s - 1, F)));
  return B;
}

/// M(U) for U : D_{m+n-b} -> D_{m+n-a-1}, the left inverse of
/// T = (g-1)^{b-a-1} restricted to D_{m+n-a-1}. Shape (a+1) x b:
/// (0_{a+1, b-a-1} | B(a+1, b-a-1)).
inline FpMatrix u_matrix(const Params& P, int a, int b) {
  if (!(a >= 0 && a + 1 < b && b <= P.m))
    throw std::out_of_range("u_matrix: need 0 <= a, a+1 < b <= m");
  const auto rows = static_cast<std::size_t>(a + 1);
  const auto zero_cols = static_cast<std::size_t>(b - a - 1);
  FpMatrix U(P.field, rows, static_cast<std::size_t>(b));
  const FpMatrix B = b_struct_matrix(a + 1, b - a - 1, P.field);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < rows; ++j) U.set(i, zero_cols + j, B(i, j));
  return U;
}

namespace detail {

template <class Step>
DiagVector shift_down(const Params& P, const DiagVector& v, Step step) {
  const DiagIndex src = diagonal(P, v.k);
  if (v.coeffs.size() != src.size()) throw std::invalid_argument("DiagVector length does not match its diagonal");
  const DiagIndex dst = diagonal(P, v.k - 1);
  DiagVector out{v.k - 1, std::vector<Fp>(dst.size())};
  for (std::size_t t = 0; t < src.size(); ++t) {
    if (v.coeffs[t].is_zero()) continue;
    const Position pos = src.at(t);
    step(pos, [&](int i, int j) {
      if (i < 1 || j < 1) return;
      auto& c = out.coeffs[static_cast<std::size_t>(dst.slot_of_row(i))];
      c = P.field.add(c, v.coeffs[t]);
    });
  }
  return out;
}

}  // namespace detail

/// (g-1)(v) for v in D_k; lands in D_{k-1}.
inline DiagVector apply_nilpotent(const Params& P, const DiagVector& v) {
  return detail::shift_down(P, v, [](Position q, auto emit) {
    emit(q.row - 1, q.col);
    emit(q.row, q.col - 1);
  });
}

inline DiagVector apply_nilpotent_pow(const Params& P, DiagVector v, int times) {
  for (int t = 0; t < times; ++t) v = apply_nilpotent(P, v);
  return v;
}

/// h_1(v_{i,j}) = v_{i-1,j}.
inline DiagVector apply_h1(const Params& P, const DiagVector& v) {
  return detail::shift_down(P, v, [](Position q, auto emit) { emit(q.row - 1, q.col); });
}

/// h_2(v_{i,j}) = v_{i,j-1}.
inline DiagVector apply_h2(const Params& P, const DiagVector& v) {
  return detail::shift_down(P, v, [](Position q, auto emit) { emit(q.row, q.col - 1); });
}

inline DiagVector scale(const Params& P, DiagVector v, Fp s) {
  for (auto& c : v.coeffs) c = P.field.mul(c, s);
  return v;
}

/// Applies a matrix expressed over B_from to v, giving coordinates over B_to.
inline DiagVector apply_matrix(const Params& P, const FpMatrix& M, const DiagVector& v, int to_k) {
  if (M.rows() != diagonal(P, to_k).size())
    throw std::invalid_argument("apply_matrix: target diagonal does not match matrix rows");
  return {to_k, mat_vec(M, v.coeffs)};
}

}  // namespace jt
