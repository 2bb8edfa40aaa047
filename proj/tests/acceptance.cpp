// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances are fixed below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "reference_data.hpp"

using namespace jt;
using namespace jt::testing;

namespace {

constexpr double kExampleSeconds = 0.1;
constexpr double kSweepSeconds = 300.0;
constexpr int kMinMutations = 100;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::string str(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

Outcome decomposition_example(std::uint64_t p, int m, int n, const std::vector<int>& want) {
  Outcome o;
  const auto t0 = Clock::now();
  const Decomposition d = decompose(Params(p, m, n));
  const double secs = seconds_since(t0);
  if (d.lambda != want) o.fail("lambda = " + str(d.lambda));
  if (secs >= kExampleSeconds) o.fail("took " + std::to_string(secs) + " s");
  if (o.ok) o.detail = str(d.lambda) + " in " + std::to_string(secs * 1000) + " ms";
  return o;
}

Outcome c1() { return decomposition_example(5, 6, 9, {14, 10, 10, 10, 6, 4}); }

Outcome c2() { return decomposition_example(7, 12, 13, {21, 21, 21, 21, 16, 14, 12, 7, 7, 7, 7, 2}); }

Outcome c3() {
  Outcome o;
  const Params P(7, 12, 13);
  if (ny_inverse(P, 5).inverse() != printed_a5_inverse()) o.fail("closed-form A_5^{-1} differs");
  if (ny_inverse(P, 11).inverse() != printed_a11_inverse()) o.fail("closed-form A_11^{-1} differs");
  if (gauss_inverse(a_matrix(P, 5)) != printed_a5_inverse()) o.fail("elimination A_5^{-1} differs");
  if (gauss_inverse(a_matrix(P, 11)) != printed_a11_inverse()) o.fail("elimination A_11^{-1} differs");
  if (o.ok) o.detail = "A_5^{-1}, A_11^{-1} entry-for-entry";
  return o;
}

Outcome c4() {
  Outcome o;
  const Params P(7, 12, 13);
  const GeneratorSet g = build_generators(P);
  if (g.size() != 12) {
    o.fail("expected 12 generators");
    return o;
  }
  auto expect = [&](const char* name, const DiagVector& got, const DiagVector& want) {
    if (got != want) o.fail(std::string(name) + " differs");
  };
  expect("y_5", g[4].y, terms(P, 20, {{8, 13, 6}, {9, 12, 5}, {10, 11, 5}, {11, 10, 6}, {12, 9, 4}}));
  expect("S_11^{-1} x_11", leading_solution(P, 11), coeffs(14, P.field, {1, 3, 3, 1, 0, 0, 0, 6, 4, 4, 6}));
  expect("y_8", g[7].y, terms(P, 17, {{5, 13, 1}, {12, 6, 6}}));
  expect("y_9", g[8].y, terms(P, 16, {{4, 13, 6}, {11, 6, 1}}));
  expect("y_10", g[9].y, terms(P, 15, {{3, 13, 1}, {10, 6, 6}}));
  expect("y_11", g[10].y, terms(P, 14, {{2, 13, 6}, {9, 6, 1}}));
  if (o.ok) o.detail = "y_5, S_11^{-1} x_11, y_8..y_11 exact";
  return o;
}

Outcome c5() {
  Outcome o;
  const auto t0 = Clock::now();
  int cases = 0;
  for (std::uint64_t p : {2, 3, 5, 7, 11})
    for (int m = 1; m <= 12; ++m)
      for (int n = m; n <= 12; ++n) {
        ++cases;
        const Params P(p, m, n);
        const std::string at = "p=" + std::to_string(p) + " m=" + std::to_string(m) + " n=" + std::to_string(n);
        const Decomposition d = decompose(P);
        if (d != rank_profile_lambda(P)) o.fail("lambda mismatch at " + at);
        const VerifyReport r = verify_all(P, d, build_generators(P, d));
        if (!r.total_ok) o.fail("verify_all failed at " + at);
        if (r.full_checks_skipped) o.fail("full model skipped at " + at);
      }
  const double secs = seconds_since(t0);
  if (secs >= kSweepSeconds) o.fail("took " + std::to_string(secs) + " s");
  if (o.ok) o.detail = std::to_string(cases) + " cases in " + std::to_string(secs) + " s";
  return o;
}

Outcome c6() {
  Outcome o;
  // delta identity: sum_k (-1)^{j-k} C(s, k-i) C(s-1+j-k, s-1) = [i = j]
  for (int s = 1; s <= 12; ++s)
    for (int i = 1; i <= 12; ++i)
      for (int j = i; j <= 12; ++j) {
        BigInt sum = 0;
        for (int k = i; k <= j; ++k) {
          const BigInt t = binom_by_factorials(s, k - i) * binom_by_factorials(s - 1 + j - k, s - 1);
          sum += ((j - k) % 2 == 0) ? t : BigInt(-t);
        }
        if (sum != (i == j ? 1 : 0)) o.fail("delta identity at s=" + std::to_string(s));
      }

  // A(r,s) B(r,s) = I over the integers, and the library's reductions agree
  const PrimeField F(13);
  for (int r = 1; r <= 12; ++r)
    for (int s = 1; s <= 12; ++s) {
      IntMatrix A(r, std::vector<BigInt>(r)), B(r, std::vector<BigInt>(r));
      for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j) {
          A[i][j] = binom_by_factorials(s, j - i);
          const BigInt b = binom_by_factorials(s - 1 + j - i, s - 1);
          B[i][j] = ((j - i) % 2 == 0) ? b : BigInt(-b);
        }
      const IntMatrix AB = int_mul(A, B);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
          if (AB[i][j] != (i == j ? 1 : 0)) o.fail("A(r,s)B(r,s) != I at r=" + std::to_string(r));
      if (a_struct_matrix(r, s, F) != reduce(A, F) || b_struct_matrix(r, s, F) != reduce(B, F))
        o.fail("structure matrices differ from oracle at r=" + std::to_string(r) + " s=" + std::to_string(s));
    }

  // M(U) M(T) = I for 0 <= a, a+1 < b <= 10
  for (std::uint64_t p : kSmallPrimes)
    for (int n : {10, 11, 14}) {
      const Params P(p, 10, n);
      for (int b = 2; b <= 10; ++b)
        for (int a = 0; a + 1 < b; ++a) {
          const FpMatrix T = power_matrix(P, P.m + P.n - a - 1, P.m + P.n - b);
          if (mat_mul(u_matrix(P, a, b), T) != FpMatrix::identity(P.field, a + 1))
            o.fail("M(U)M(T) != I at a=" + std::to_string(a) + " b=" + std::to_string(b));
        }
    }

  // closed-form adjugate: adj M = d_k I exactly, and equal to the cofactor adjugate
  for (int a = 0; a <= 12; ++a)
    for (int b = 0; b <= a; ++b)
      for (int k = 1; k <= 6; ++k) {
        const IntMatrix M = binomial_matrix(a, b, k);
        const IntMatrix adj = ny_adjugate_exact(a, b, k);
        const IntMatrix prod = int_mul(adj, M);
        const BigInt d = laplace_det(M);
        if (roberts_dk(a, b, k) != d) o.fail("Roberts determinant differs at a=" + std::to_string(a));
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j)
            if (prod[i][j] != (i == j ? d : BigInt(0))) o.fail("adj M != d_k I at a=" + std::to_string(a));
        if (adj != cofactor_adjugate(M)) o.fail("adjugate differs from cofactors at a=" + std::to_string(a));
      }

  // Lucas and Kummer against exact binomials
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    const PrimeField Fp_(p);
    for (int n = 0; n <= 200; ++n)
      for (int k = 0; k <= n; ++k) {
        const BigInt c = binom_by_factorials(n, k);
        if (binom_mod_p(n, k, Fp_) != reduce_mod_p(c, Fp_)) o.fail("Lucas differs at n=" + std::to_string(n));
        if (vp_binom(n, k, p) != vp_exact(c, p)) o.fail("Kummer differs at n=" + std::to_string(n));
      }
  }
  if (o.ok) o.detail = "delta identity, A*B, U*T, adjugate, Lucas/Kummer";
  return o;
}

Outcome c7() {
  Outcome o;
  int cases = 0;
  for (int m = 1; m <= 8; ++m)
    for (int n = m; n <= 8; ++n)
      for (std::uint64_t p = static_cast<std::uint64_t>(m + n); p <= 31; ++p) {
        if (!PrimeField::is_prime(p)) continue;
        ++cases;
        const Params P(p, m, n);
        const std::string at = "p=" + std::to_string(p) + " m=" + std::to_string(m) + " n=" + std::to_string(n);
        const Decomposition d = decompose(P);
        for (int i = 1; i <= m; ++i)
          if (d.lambda[static_cast<std::size_t>(i - 1)] != m + n - 2 * i + 1) o.fail("lambda at " + at);
        for (const auto& g : build_generators(P, d))
          if (g.tag != CaseTag::leading_singleton) o.fail("non-singleton case at " + at);
      }
  if (o.ok) o.detail = std::to_string(cases) + " cases";
  return o;
}

Outcome c8() {
  Outcome o;
  std::mt19937 rng(20240611);
  const std::vector<std::array<int, 3>> shapes{{7, 12, 13}, {5, 6, 9}, {2, 5, 7}, {3, 6, 8}, {11, 9, 10}, {3, 4, 4}};
  int coeff_mutations = 0, lambda_mutations = 0, missed = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto& s = shapes[static_cast<std::size_t>(trial) % shapes.size()];
    const Params P(static_cast<std::uint64_t>(s[0]), s[1], s[2]);
    const Decomposition d = decompose(P);
    GeneratorSet gens = build_generators(P, d);
    Decomposition dd = d;
    if (trial % 3 != 2) {
      auto& y = gens[std::uniform_int_distribution<std::size_t>(0, gens.size() - 1)(rng)].y;
      auto& c = y.coeffs[std::uniform_int_distribution<std::size_t>(0, y.coeffs.size() - 1)(rng)];
      c = P.field.add(c, P.field.from_uint(std::uniform_int_distribution<std::uint32_t>(1, P.p() - 1)(rng)));
      ++coeff_mutations;
    } else {
      auto& l = dd.lambda[std::uniform_int_distribution<std::size_t>(0, dd.lambda.size() - 1)(rng)];
      const int delta = std::uniform_int_distribution<int>(1, 3)(rng);
      l = (rng() % 2 && l > delta) ? l - delta : l + delta;
      ++lambda_mutations;
    }
    if (verify_all(P, dd, gens).total_ok) ++missed;
  }
  if (coeff_mutations + lambda_mutations < kMinMutations) o.fail("too few mutations");
  if (missed) o.fail(std::to_string(missed) + " mutations went undetected");
  if (o.ok)
    o.detail = std::to_string(coeff_mutations) + " coefficient + " + std::to_string(lambda_mutations) +
               " lambda mutations, all detected";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"1 decompose(5,6,9)", c1},     {"2 decompose(7,12,13)", c2}, {"3 inverse matrices", c3},
      {"4 generator coefficients", c4}, {"5 oracle sweep", c5},       {"6 structural identities", c6},
      {"7 Clebsch-Gordan regime", c7},  {"8 fault sensitivity", c8}};
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s  %-26s %s\n", o.ok ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
    failures += !o.ok;
  }
  return failures ? 1 : 0;
}
