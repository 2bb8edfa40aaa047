#pragma once

// Dense matrices over F_p and Gaussian elimination (rank, determinant,
// inverse, solve). Plain O(n^3) elimination with first-nonzero pivoting.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jt/field.hpp"

namespace jt {

class FpMatrix {
 public:
  FpMatrix(const PrimeField& F, std::size_t rows, std::size_t cols)
      : F_(F), rows_(rows), cols_(cols), a_(rows * cols) {}

  static FpMatrix identity(const PrimeField& F, std::size_t n) {
    FpMatrix I(F, n, n);
    for (std::size_t i = 0; i < n; ++i) I.set(i, i, F.one());
    return I;
  }

  /// Row-major integer data, reduced mod p.
  static FpMatrix from_rows(const PrimeField& F,
                            std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.begin()->size() : 0;
    FpMatrix M(F, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw std::invalid_argument("FpMatrix::from_rows: ragged rows");
      std::size_t j = 0;
      for (auto x : row) M.set(i, j++, F.from_int(x));
      ++i;
    }
    return M;
  }

  const PrimeField& field() const { return F_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Fp operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Fp x) { a_[r * cols_ + c] = x; }

  std::span<const Fp> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }
  std::span<Fp> row(std::size_t r) { return {a_.data() + r * cols_, cols_}; }

  FpMatrix transpose() const {
    FpMatrix T(F_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) T.set(j, i, (*this)(i, j));
    return T;
  }

  FpMatrix scaled(Fp s) const {
    FpMatrix R = *this;
    for (auto& x : R.a_) x = F_.mul(x, s);
    return R;
  }

  bool is_zero() const {
    for (auto x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend bool operator==(const FpMatrix& A, const FpMatrix& B) {
    return A.F_ == B.F_ && A.rows_ == B.rows_ && A.cols_ == B.cols_ && A.a_ == B.a_;
  }

  friend std::ostream& operator<<(std::ostream& os, const FpMatrix& M) {
    for (std::size_t i = 0; i < M.rows_; ++i) {
      for (std::size_t j = 0; j < M.cols_; ++j) os << (j ? " " : "") << M(i, j).v;
      os << '\n';
    }
    return os;
  }

 private:
  PrimeField F_;
  std::size_t rows_, cols_;
  std::vector<Fp> a_;
};

namespace detail {

inline void require_same_field(const PrimeField& a, const PrimeField& b, const char* what) {
  if (!(a == b)) throw std::invalid_argument(std::string(what) + ": mixed moduli");
}

}  // namespace detail

inline FpMatrix mat_mul(const FpMatrix& A, const FpMatrix& B) {
  detail::require_same_field(A.field(), B.field(), "mat_mul");
  if (A.cols() != B.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
  const PrimeField& F = A.field();
  const std::uint64_t p = F.p();
  FpMatrix C(F, A.rows(), B.cols());
  std::vector<std::uint64_t> acc(B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < A.cols(); ++k) {
      const std::uint64_t a = A(i, k).v;
      if (a == 0) continue;
      auto brow = B.row(k);
      for (std::size_t j = 0; j < B.cols(); ++j) acc[j] = (acc[j] + a * brow[j].v) % p;
    }
    for (std::size_t j = 0; j < B.cols(); ++j) C.set(i, j, Fp{static_cast<std::uint32_t>(acc[j])});
  }
  return C;
}

inline std::vector<Fp> mat_vec(const FpMatrix& A, std::span<const Fp> x) {
  if (A.cols() != x.size()) throw std::invalid_argument("mat_vec: dimension mismatch");
  const PrimeField& F = A.field();
  std::vector<Fp> y(A.rows());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    Fp s = F.zero();
    for (std::size_t j = 0; j < A.cols(); ++j) s = F.fma(s, A(i, j), x[j]);
    y[i] = s;
  }
  return y;
}

namespace detail {

struct Echelon {
  std::size_t rank = 0;
  Fp det_factor{1};  // product of pivots times permutation sign
  std::vector<std::size_t> pivot_cols;
};

// Reduces M in place to reduced row echelon form on its first `ncols`
// columns (the remaining columns ride along as an augmented block).
inline Echelon reduce(FpMatrix& M, std::size_t ncols) {
  const PrimeField& F = M.field();
  const std::uint64_t p = F.p();
  Echelon e;
  bool negate = false;
  for (std::size_t c = 0; c < ncols && e.rank < M.rows(); ++c) {
    std::size_t piv = e.rank;
    while (piv < M.rows() && M(piv, c).is_zero()) ++piv;
    if (piv == M.rows()) continue;
    if (piv != e.rank) {
      auto a = M.row(piv), b = M.row(e.rank);
      std::swap_ranges(a.begin(), a.end(), b.begin());
      negate = !negate;
    }
    const Fp pv = M(e.rank, c);
    e.det_factor = F.mul(e.det_factor, pv);
    const Fp pinv = F.inv(pv);
    auto prow = M.row(e.rank);
    for (auto& x : prow) x = F.mul(x, pinv);
    for (std::size_t r = 0; r < M.rows(); ++r) {
      if (r == e.rank) continue;
      const Fp f = M(r, c);
      if (f.is_zero()) continue;
      const std::uint64_t nf = p - f.v;
      auto rr = M.row(r);
      for (std::size_t j = c; j < M.cols(); ++j)
        rr[j] = Fp{static_cast<std::uint32_t>((rr[j].v + nf * prow[j].v) % p)};
    }
    e.pivot_cols.push_back(c);
    ++e.rank;
  }
  if (negate) e.det_factor = F.neg(e.det_factor);
  return e;
}

}  // namespace detail

inline std::size_t gauss_rank(FpMatrix A) { return detail::reduce(A, A.cols()).rank; }

inline Fp gauss_det(FpMatrix A) {
  if (!A.square()) throw std::invalid_argument("gauss_det: matrix is not square");
  auto e = detail::reduce(A, A.cols());
  return e.rank == A.rows() ? e.det_factor : A.field().zero();
}

/// The inverse, or nullopt when A is singular.
inline std::optional<FpMatrix> gauss_inverse(const FpMatrix& A) {
  if (!A.square()) throw std::invalid_argument("gauss_inverse: matrix is not square");
  const std::size_t n = A.rows();
  FpMatrix aug(A.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.set(i, j, A(i, j));
    aug.set(i, n + i, A.field().one());
  }
  if (detail::reduce(aug, n).rank < n) return std::nullopt;
  FpMatrix inv(A.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.set(i, j, aug(i, n + j));
  return inv;
}

enum class SolveStatus { unique, no_solution, non_unique };

struct SolveResult {
  SolveStatus status;
  /// The solution when unique; a particular solution when non_unique;
  /// empty when there is none.
  std::vector<Fp> x;
};

inline SolveResult gauss_solve(const FpMatrix& A, std::span<const Fp> b) {
  if (A.rows() != b.size()) throw std::invalid_argument("gauss_solve: dimension mismatch");
  const std::size_t n = A.cols();
  FpMatrix aug(A.field(), A.rows(), n + 1);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.set(i, j, A(i, j));
    aug.set(i, n, b[i]);
  }
  auto e = detail::reduce(aug, n);
  for (std::size_t r = e.rank; r < A.rows(); ++r)
    if (!aug(r, n).is_zero()) return {SolveStatus::no_solution, {}};
  std::vector<Fp> x(n);
  for (std::size_t r = 0; r < e.rank; ++r) x[e.pivot_cols[r]] = aug(r, n);
  return {e.rank == n ? SolveStatus::unique : SolveStatus::non_unique, std::move(x)};
}

}  // namespace jt
