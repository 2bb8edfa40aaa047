#pragma once

// V_m (x) V_n as an explicit mn-dimensional space over F_p in the standard
// basis u_i (x) w_j (row-major in (i, j)), with g acting as J_m (x) J_n.

#include <cstdlib>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "jt/exactnum.hpp"
#include "jt/gfp.hpp"
#include "jt/tensorspace.hpp"

namespace jt {

inline constexpr std::size_t kDefaultSizeGuard = 4096;

/// Largest mn for which dense full-model computations run. JT_SIZE_GUARD
/// overrides the default; larger values are at the caller's own risk.
inline std::size_t full_model_guard() {
  if (const char* env = std::getenv("JT_SIZE_GUARD")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultSizeGuard;
}

struct FullVector {
  std::vector<Fp> coords;

  bool is_zero() const {
    for (auto x : coords)
      if (!x.is_zero()) return false;
    return true;
  }
  friend bool operator==(const FullVector&, const FullVector&) = default;
};

inline std::size_t full_index(const Params& P, int i, int j) {
  return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(P.n) + static_cast<std::size_t>(j - 1);
}

/// v_{i,j} = u_i (x) g^{n-i} w_j = sum_t C(n-i, t) u_i (x) w_{j-t}.
inline FullVector expand_to_standard(const Params& P, const DiagVector& v) {
  const DiagIndex B = diagonal(P, v.k);
  if (v.coeffs.size() != B.size()) throw std::invalid_argument("expand_to_standard: malformed DiagVector");
  FullVector out{std::vector<Fp>(P.dim())};
  for (std::size_t s = 0; s < B.size(); ++s) {
    const Fp c = v.coeffs[s];
    if (c.is_zero()) continue;
    const Position q = B.at(s);
    for (int t = 0; t <= P.n - q.row && q.col - t >= 1; ++t) {
      auto& slot = out.coords[full_index(P, q.row, q.col - t)];
      slot = P.field.add(slot, P.field.mul(c, binom_mod_p(P.n - q.row, t, P.field)));
    }
  }
  return out;
}

/// Matrix of g - 1 on the standard basis: g(u_i (x) w_j) = (u_{i-1} + u_i) (x) (w_{j-1} + w_j).
inline FpMatrix nilpotent_full_matrix(const Params& P) {
  FpMatrix N(P.field, P.dim(), P.dim());
  for (int i = 1; i <= P.m; ++i)
    for (int j = 1; j <= P.n; ++j) {
      const std::size_t c = full_index(P, i, j);
      if (i > 1 && j > 1) N.set(full_index(P, i - 1, j - 1), c, P.field.one());
      if (i > 1) N.set(full_index(P, i - 1, j), c, P.field.one());
      if (j > 1) N.set(full_index(P, i, j - 1), c, P.field.one());
    }
  return N;
}

/// (g - 1) y computed straight from the action, without forming the matrix.
inline FullVector apply_full_nilpotent(const Params& P, const FullVector& y) {
  if (y.coords.size() != P.dim()) throw std::invalid_argument("apply_full_nilpotent: wrong length");
  FullVector out{std::vector<Fp>(P.dim())};
  auto bump = [&](int i, int j, Fp c) {
    auto& s = out.coords[full_index(P, i, j)];
    s = P.field.add(s, c);
  };
  for (int i = 1; i <= P.m; ++i)
    for (int j = 1; j <= P.n; ++j) {
      const Fp c = y.coords[full_index(P, i, j)];
      if (c.is_zero()) continue;
      if (i > 1 && j > 1) bump(i - 1, j - 1, c);
      if (i > 1) bump(i - 1, j, c);
      if (j > 1) bump(i, j - 1, c);
    }
  return out;
}

/// y, Ny, N^2 y, ... up to (not including) the first zero vector.
inline std::vector<FullVector> krylov_sequence(const Params& P, FullVector y) {
  std::vector<FullVector> seq;
  while (!y.is_zero() && seq.size() <= P.dim()) {
    seq.push_back(y);
    y = apply_full_nilpotent(P, y);
  }
  return seq;
}

inline FpMatrix stack_rows(const Params& P, const std::vector<FullVector>& vs) {
  FpMatrix M(P.field, vs.size(), P.dim());
  for (std::size_t r = 0; r < vs.size(); ++r)
    for (std::size_t c = 0; c < P.dim(); ++c) M.set(r, c, vs[r].coords[c]);
  return M;
}

/// dim span{N^t y : t >= 0}, i.e. dim FG y.
inline std::size_t cyclic_dim(const Params& P, const FullVector& y) {
  const auto seq = krylov_sequence(P, y);
  if (seq.empty()) return 0;
  return gauss_rank(stack_rows(P, seq));
}

}  // namespace jt
