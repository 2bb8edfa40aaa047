#pragma once

// The decomposition V_m (x) V_n = V_{lambda_1} + ... + V_{lambda_m}.
//
// Production route: the right endpoints b of the runs of equal lambda are
// exactly the k in [1, m] with det A_k != 0 mod p, and a run [a+1, b] has
// lambda = m + n - a - b. The rank-profile route reads the Jordan type of
// g - 1 off rank N^t and exists only as an independent check.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "jt/errors.hpp"
#include "jt/exactnum.hpp"
#include "jt/full_model.hpp"
#include "jt/gfp.hpp"
#include "jt/tensorspace.hpp"

namespace jt {

/// A maximal run [a+1, b] of equal lambda values.
struct Block {
  int a = 0;
  int b = 0;
  int value = 0;

  int size() const { return b - a; }
  friend bool operator==(const Block&, const Block&) = default;
};

struct Decomposition {
  std::vector<int> lambda;  // non-increasing, length m
  std::vector<Block> blocks;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Decomposition& d) {
    os << "(";
    for (std::size_t i = 0; i < d.lambda.size(); ++i) os << (i ? "," : "") << d.lambda[i];
    return os << ")";
  }
};

/// det A_k != 0 mod p, decided from the Roberts determinant with
/// a = m+n-2k, b = m-k.
inline bool a_matrix_invertible(const Params& P, int k) {
  return roberts_dk_unit_mod_p(P.m + P.n - 2 * k, P.m - k, k, P.field).invertible_mod_p();
}

/// {k in [1, m] : det A_k != 0 mod p}; always contains m.
inline std::vector<int> leading_endpoints(const Params& P) {
  std::vector<int> out;
  for (int k = 1; k <= P.m; ++k)
    if (a_matrix_invertible(P, k)) out.push_back(k);
  if (out.empty() || out.back() != P.m)
    throw consistency_error("leading_endpoints: A_m is singular mod p");
  return out;
}

/// Groups equal consecutive lambda values into runs. No theory is assumed:
/// value is whatever lambda holds on the run.
inline std::vector<Block> blocks_from_lambda(const std::vector<int>& lambda) {
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < lambda.size();) {
    std::size_t j = i;
    while (j + 1 < lambda.size() && lambda[j + 1] == lambda[i]) ++j;
    blocks.push_back({static_cast<int>(i), static_cast<int>(j + 1), lambda[i]});
    i = j + 1;
  }
  return blocks;
}

inline Decomposition lambda_from_endpoints(const Params& P, const std::vector<int>& endpoints) {
  if (endpoints.empty() || endpoints.back() != P.m)
    throw std::invalid_argument("lambda_from_endpoints: endpoints must end at m");
  if (!std::is_sorted(endpoints.begin(), endpoints.end()) || endpoints.front() < 1 ||
      std::adjacent_find(endpoints.begin(), endpoints.end()) != endpoints.end())
    throw std::invalid_argument("lambda_from_endpoints: endpoints must be strictly increasing in [1, m]");

  Decomposition d;
  int prev = 0;
  for (int b : endpoints) {
    const Block blk{prev, b, P.m + P.n - prev - b};
    d.blocks.push_back(blk);
    for (int k = prev + 1; k <= b; ++k) d.lambda.push_back(blk.value);
    prev = b;
  }
  const long long total = std::accumulate(d.lambda.begin(), d.lambda.end(), 0LL);
  if (total != static_cast<long long>(P.dim()))
    throw consistency_error("lambda_from_endpoints: sum of lambda is " + std::to_string(total) +
                            ", expected " + std::to_string(P.dim()));
  if (!std::is_sorted(d.lambda.rbegin(), d.lambda.rend()) || d.lambda.back() < 1)
    throw consistency_error("lambda_from_endpoints: lambda is not a non-increasing positive sequence");
  return d;
}

inline Decomposition decompose(const Params& P) { return lambda_from_endpoints(P, leading_endpoints(P)); }

/// Checks a caller-supplied decomposition against the determinant criterion.
inline bool validate_decomposition(const Params& P, const Decomposition& d) {
  try {
    return d == decompose(P);
  } catch (const std::exception&) {
    return false;
  }
}

/// Jordan type of N = g - 1 from its rank sequence: the number of blocks of
/// size >= t is rank N^{t-1} - rank N^t.
inline Decomposition rank_profile_lambda(const Params& P, std::size_t guard = full_model_guard()) {
  if (P.dim() > guard)
    throw std::length_error("rank_profile_lambda: m*n = " + std::to_string(P.dim()) +
                            " exceeds size guard " + std::to_string(guard));
  const FpMatrix N = nilpotent_full_matrix(P);
  const std::size_t dim = P.dim();

  // sparse rows of N; N^t = N * N^{t-1}
  std::vector<std::vector<std::size_t>> nz(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c)
      if (!N(r, c).is_zero()) nz[r].push_back(c);

  std::vector<std::size_t> ranks{dim};
  FpMatrix power = N;
  while (true) {
    ranks.push_back(gauss_rank(power));
    if (ranks.back() == 0 || ranks.size() > dim + 1) break;
    FpMatrix next(P.field, dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
      auto out = next.row(r);
      for (std::size_t c : nz[r]) {
        const Fp coef = N(r, c);
        auto src = power.row(c);
        for (std::size_t j = 0; j < dim; ++j) out[j] = P.field.fma(out[j], coef, src[j]);
      }
    }
    power = std::move(next);
  }
  if (ranks.back() != 0) throw consistency_error("rank_profile_lambda: g - 1 is not nilpotent");

  // at_least[t] = number of blocks of size >= t, t = 1..T
  const std::size_t T = ranks.size() - 1;
  std::vector<std::size_t> at_least(T + 2, 0);
  for (std::size_t t = 1; t <= T; ++t) at_least[t] = ranks[t - 1] - ranks[t];

  Decomposition d;
  for (std::size_t t = T; t >= 1; --t) {
    const std::size_t exactly = at_least[t] - at_least[t + 1];
    for (std::size_t c = 0; c < exactly; ++c) d.lambda.push_back(static_cast<int>(t));
  }
  d.blocks = blocks_from_lambda(d.lambda);
  return d;
}

}  // namespace jt
