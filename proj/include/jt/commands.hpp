#pragma once

// The jt command layer: each command turns a CliConfig into a document or
// a table. Argument parsing lives in tools/jt.cpp.

#include <algorithm>
#include <array>
#include <atomic>
#include <initializer_list>
#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "jt/decomp.hpp"
#include "jt/document.hpp"
#include "jt/gens.hpp"
#include "jt/tensorspace.hpp"
#include "jt/verify.hpp"

namespace jt {

enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2 };

enum class Format { text, json };

struct CliConfig {
  std::string command;
  std::uint64_t p = 0;
  int m = 0;
  int n = 0;
  Format format = Format::text;
  bool verify = false;
  std::optional<std::string> out;
  std::optional<std::string> in;
  std::vector<std::uint64_t> sweep_primes{2, 3, 5, 7, 11};
  int max_n = 12;
  unsigned threads = 0;  // 0: hardware concurrency
  bool inject_fault = false;
};

/// Puts m <= n (the tensor product is symmetric). Returns true if swapped.
inline bool normalize(CliConfig& cfg) {
  if (cfg.m > cfg.n) {
    std::swap(cfg.m, cfg.n);
    return true;
  }
  return false;
}

inline OutputDocument cmd_decompose(const CliConfig& cfg) {
  const Params P(cfg.p, cfg.m, cfg.n);
  OutputDocument doc;
  doc.p = cfg.p;
  doc.m = cfg.m;
  doc.n = cfg.n;
  doc.decomposition = decompose(P);
  return doc;
}

inline OutputDocument cmd_generators(const CliConfig& cfg) {
  OutputDocument doc = cmd_decompose(cfg);
  const Params P(cfg.p, cfg.m, cfg.n);
  doc.generators = build_generators(P, doc.decomposition);
  if (cfg.verify) doc.report = verify_all(P, doc.decomposition, *doc.generators);
  return doc;
}

/// Audits a previously emitted document; one without generators gets them
/// rebuilt from the stated parameters.
inline OutputDocument cmd_verify(const OutputDocument& input) {
  OutputDocument doc = input;
  const Params P(doc.p, doc.m, doc.n);
  if (!doc.generators) doc.generators = build_generators(P, decompose(P));
  doc.report = verify_all(P, doc.decomposition, *doc.generators);
  return doc;
}

inline OutputDocument cmd_verify(const CliConfig& cfg) {
  CliConfig c = cfg;
  c.verify = true;
  return cmd_generators(c);
}

inline int exit_code_for(const OutputDocument& doc) {
  return (doc.report && !doc.report->total_ok) ? kExitVerifyFailed : kExitOk;
}

struct SweepRow {
  std::uint64_t p = 0;
  int m = 0;
  int n = 0;
  bool lambda_match = false;
  bool verified = false;
  double millis = 0;
  std::string error;

  bool ok() const { return lambda_match && verified && error.empty(); }
};

inline SweepRow sweep_one(std::uint64_t p, int m, int n, bool inject_fault) {
  SweepRow row;
  row.p = p;
  row.m = m;
  row.n = n;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const Params P(p, m, n);
    const Decomposition d = decompose(P);
    row.lambda_match = d == rank_profile_lambda(P);
    GeneratorSet gens = build_generators(P, d);
    if (inject_fault && !gens.empty()) {
      auto& c = gens.front().y.coeffs.front();
      c = P.field.add(c, P.field.one());
    }
    row.verified = verify_all(P, d, gens).total_ok;
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  row.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return row;
}

/// One row per (p, m, n) with 1 <= m <= n <= max_n, sorted by (p, m, n)
/// regardless of which worker finished first.
inline std::vector<SweepRow> run_sweep(std::vector<std::uint64_t> primes, int max_n, unsigned threads,
                                       bool inject_fault = false) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  std::vector<SweepRow> rows;
  for (auto p : primes)
    for (int m = 1; m <= max_n; ++m)
      for (int n = m; n <= max_n; ++n) {
        SweepRow r;
        r.p = p;
        r.m = m;
        r.n = n;
        rows.push_back(r);
      }

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(rows.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < rows.size();)
      rows[i] = sweep_one(rows[i].p, rows[i].m, rows[i].n, inject_fault);
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  return rows;
}

inline void render_sweep(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "p\tm\tn\tlambda\tverify\tms\n";
  for (const auto& r : rows) {
    os << r.p << '\t' << r.m << '\t' << r.n << '\t' << (r.lambda_match ? "OK" : "MISMATCH") << '\t'
       << (r.verified ? "OK" : "FAIL") << '\t' << r.millis;
    if (!r.error.empty()) os << "\terror: " << r.error;
    os << '\n';
  }
}

struct SelftestItem {
  std::string name;
  bool ok = false;
};

namespace detail {

inline DiagVector from_terms(const Params& P, int k, std::initializer_list<std::array<int, 3>> terms) {
  DiagVector v = zero_vector(P, k);
  const DiagIndex B = diagonal(P, k);
  for (const auto& [row, col, value] : terms) {
    if (row + col - 1 != k) throw std::invalid_argument("from_terms: term off the diagonal");
    v.coeffs[static_cast<std::size_t>(B.slot_of_row(row))] = P.field.from_int(value);
  }
  return v;
}

}  // namespace detail

/// Reproduces the two published worked examples: V_6 (x) V_9 in
/// characteristic 5 and V_12 (x) V_13 in characteristic 7.
inline std::vector<SelftestItem> run_selftest() {
  std::vector<SelftestItem> out;
  auto check = [&](std::string name, auto&& fn) {
    bool ok = false;
    try {
      ok = fn();
    } catch (const std::exception&) {
      ok = false;
    }
    out.push_back({std::move(name), ok});
  };

  check("p=5 V_6 (x) V_9 lambda = 14,10,10,10,6,4", [] {
    return decompose(Params(5, 6, 9)).lambda == std::vector<int>{14, 10, 10, 10, 6, 4};
  });
  check("p=5 V_6 (x) V_9 socle targets x1,x4,x3,x2,x5,x6", [] {
    const Params P(5, 6, 9);
    std::vector<int> socle;
    for (const auto& g : build_generators(P)) socle.push_back(g.socle_index);
    return socle == std::vector<int>{1, 4, 3, 2, 5, 6};
  });
  check("p=7 V_12 (x) V_13 lambda = 21x4,16,14,12,7x4,2", [] {
    return decompose(Params(7, 12, 13)).lambda == std::vector<int>{21, 21, 21, 21, 16, 14, 12, 7, 7, 7, 7, 2};
  });
  check("p=7 V_12 (x) V_13 generators y5, y8..y11", [] {
    const Params P(7, 12, 13);
    const auto g = build_generators(P);
    using detail::from_terms;
    return g[4].y == from_terms(P, 20, {{{8, 13, 6}}, {{9, 12, 5}}, {{10, 11, 5}}, {{11, 10, 6}}, {{12, 9, 4}}}) &&
           g[7].y == from_terms(P, 17, {{{5, 13, 1}}, {{12, 6, 6}}}) &&
           g[8].y == from_terms(P, 16, {{{4, 13, 6}}, {{11, 6, 1}}}) &&
           g[9].y == from_terms(P, 15, {{{3, 13, 1}}, {{10, 6, 6}}}) &&
           g[10].y == from_terms(P, 14, {{{2, 13, 6}}, {{9, 6, 1}}});
  });
  for (auto [p, m, n] : {std::array<int, 3>{5, 6, 9}, std::array<int, 3>{7, 12, 13}}) {
    check("verify_all p=" + std::to_string(p) + " m=" + std::to_string(m) + " n=" + std::to_string(n), [=] {
      const Params P(static_cast<std::uint64_t>(p), m, n);
      const auto d = decompose(P);
      return verify_all(P, d, build_generators(P, d)).total_ok;
    });
  }
  return out;
}

}  // namespace jt
