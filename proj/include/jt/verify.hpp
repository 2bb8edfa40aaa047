#pragma once

// Brute-force certification of a decomposition and its generators. Every
// check is recomputed from the action of g - 1; nothing is taken from the
// construction. Failures are reported, never thrown.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <numeric>
#include <string>
#include <vector>

#include "jt/decomp.hpp"
#include "jt/full_model.hpp"
#include "jt/gens.hpp"
#include "jt/tensorspace.hpp"

namespace jt {

struct GeneratorCheck {
  int i = 0;
  bool shape_check = false;       // y_i is a well-formed element of D_{m+n-i}
  bool socle_check = false;       // (g-1)^{lambda_i - 1} y_i = x_{m+n+1-i-lambda_i}
  bool nilpotency_check = false;  // (g-1)^{lambda_i} y_i = 0
  bool shift_check = true;        // non-leaders: y_i = -h_1(y_{i-1}) within the run
  long cyclic_dim = -1;           // dim FG y_i; -1 when the full model was skipped

  bool ok(int lambda, bool full_skipped) const {
    return shape_check && socle_check && nilpotency_check && shift_check &&
           (full_skipped || cyclic_dim == lambda);
  }
};

struct VerifyReport {
  std::vector<GeneratorCheck> per_generator;
  bool lambda_check = false;     // lambda agrees with the determinant criterion
  bool socle_permutation = false;  // i -> socle index is a permutation of [m]
  long direct_sum_rank = -1;     // -1 when the full model was skipped
  bool full_checks_skipped = false;
  bool total_ok = false;
  std::vector<std::string> problems;
};

inline VerifyReport verify_all(const Params& P, const Decomposition& d, const GeneratorSet& gens,
                               std::size_t guard = full_model_guard()) {
  VerifyReport rep;
  auto problem = [&](std::string s) { rep.problems.push_back(std::move(s)); };
  const auto m = static_cast<std::size_t>(P.m);

  rep.lambda_check = validate_decomposition(P, d);
  if (!rep.lambda_check) problem("lambda disagrees with the determinant criterion");
  const bool lambda_usable = d.lambda.size() == m && std::all_of(d.lambda.begin(), d.lambda.end(),
                                                                  [&](int l) { return l >= 1 && l <= P.m + P.n - 1; });
  if (!lambda_usable) problem("lambda must have m entries in [1, m+n-1]");
  if (gens.size() != m) problem("expected " + std::to_string(m) + " generators, got " + std::to_string(gens.size()));

  rep.full_checks_skipped = P.dim() > guard;

  // generators indexed by i
  std::vector<const Generator*> by_index(m + 1, nullptr);
  for (const auto& g : gens) {
    if (g.i < 1 || g.i > P.m || by_index[static_cast<std::size_t>(g.i)]) {
      problem("generator index " + std::to_string(g.i) + " is out of range or repeated");
      continue;
    }
    by_index[static_cast<std::size_t>(g.i)] = &g;
  }

  // run leaders according to the supplied lambda
  std::vector<bool> is_leader(m + 1, true);
  if (lambda_usable)
    for (std::size_t i = 2; i <= m; ++i) is_leader[i] = d.lambda[i - 1] != d.lambda[i - 2];

  std::vector<int> socle_hits(m + 1, 0);
  std::vector<FullVector> all_krylov;
  bool all_ok = rep.lambda_check && lambda_usable && gens.size() == m;

  for (std::size_t i = 1; i <= m; ++i) {
    GeneratorCheck chk;
    chk.i = static_cast<int>(i);
    const Generator* g = by_index[i];
    if (!g || !lambda_usable) {
      rep.per_generator.push_back(chk);
      all_ok = false;
      continue;
    }
    const int lam = d.lambda[i - 1];
    const int target = P.m + P.n + 1 - static_cast<int>(i) - lam;
    try {
      chk.shape_check = g->y.k == P.m + P.n - static_cast<int>(i) &&
                        g->y.coeffs.size() == diagonal(P, g->y.k).size() &&
                        std::all_of(g->y.coeffs.begin(), g->y.coeffs.end(), [&](Fp c) { return c.v < P.p(); }) &&
                        !g->y.is_zero() && g->lambda == lam && g->socle_index == target;
      if (chk.shape_check) {
        const DiagVector top = apply_nilpotent_pow(P, g->y, lam - 1);
        if (target >= 1 && target <= P.m) {
          chk.socle_check = top == socle_vector(P, target);
          ++socle_hits[static_cast<std::size_t>(target)];
        }
        chk.nilpotency_check = apply_nilpotent(P, top).is_zero();

        if (!is_leader[i]) {
          const Generator* prev = by_index[i - 1];
          chk.shift_check = prev && prev->y.k == g->y.k + 1 &&
                            prev->y.coeffs.size() == diagonal(P, prev->y.k).size() &&
                            scale(P, apply_h1(P, prev->y), P.field.neg(P.field.one())) == g->y;
        }
        if (!rep.full_checks_skipped) {
          auto seq = krylov_sequence(P, expand_to_standard(P, g->y));
          chk.cyclic_dim = seq.empty() ? 0 : static_cast<long>(gauss_rank(stack_rows(P, seq)));
          all_krylov.insert(all_krylov.end(), seq.begin(), seq.end());
        }
      }
    } catch (const std::exception& e) {
      problem("generator " + std::to_string(i) + ": " + e.what());
      chk.shape_check = false;
    }
    if (!chk.ok(lam, rep.full_checks_skipped)) {
      all_ok = false;
      problem("generator " + std::to_string(i) + " failed verification");
    }
    rep.per_generator.push_back(chk);
  }

  rep.socle_permutation = std::all_of(socle_hits.begin() + 1, socle_hits.end(), [](int c) { return c == 1; });
  if (!rep.socle_permutation) {
    all_ok = false;
    problem("socle indices do not form a permutation of [m]");
  }

  if (!rep.full_checks_skipped) {
    rep.direct_sum_rank = all_krylov.empty() ? 0 : static_cast<long>(gauss_rank(stack_rows(P, all_krylov)));
    if (rep.direct_sum_rank != static_cast<long>(P.dim())) {
      all_ok = false;
      problem("cyclic submodules span dimension " + std::to_string(rep.direct_sum_rank) + ", expected " +
              std::to_string(P.dim()));
    }
  }
  rep.total_ok = all_ok;
  return rep;
}

}  // namespace jt
