#pragma once

// Serialized form of a decomposition and its generators.
//
// JSON layout:
//   { "p", "m", "n", "lambda": [int], "blocks": [{"a","b","lambda"}],
//     "generators": [{"i","lambda","socle_index","case",
//                     "coeffs": [{"row","col","value"}]}],
//     "verified": bool, "verification": {...}, "min_group_exponent", "version" }
// "generators" is present only when generators were computed, "verified" and
// "verification" only when a check ran. Coefficients are the nonzero
// entries of y_i over the basis v_{row,col}, 1-based. min_group_exponent is
// the least a with p^a >= n (informational only).

#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "jt/decomp.hpp"
#include "jt/gens.hpp"
#include "jt/tensorspace.hpp"
#include "jt/verify.hpp"

namespace jt {

inline constexpr const char* kVersion = "1.0.0";

struct OutputDocument {
  std::uint64_t p = 0;
  int m = 0;
  int n = 0;
  Decomposition decomposition;
  std::optional<GeneratorSet> generators;
  std::optional<VerifyReport> report;
  std::string version = kVersion;
};

/// Schema violations in an input document.
struct document_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline nlohmann::json generator_to_json(const Params& P, const Generator& g) {
  nlohmann::json coeffs = nlohmann::json::array();
  const DiagIndex B = diagonal(P, g.y.k);
  for (std::size_t t = 0; t < g.y.coeffs.size() && t < B.size(); ++t) {
    if (g.y.coeffs[t].is_zero()) continue;
    const Position q = B.at(t);
    coeffs.push_back({{"row", q.row}, {"col", q.col}, {"value", g.y.coeffs[t].v}});
  }
  return {{"i", g.i},
          {"lambda", g.lambda},
          {"socle_index", g.socle_index},
          {"case", std::string(to_string(g.tag))},
          {"coeffs", coeffs}};
}

inline nlohmann::json report_to_json(const VerifyReport& r) {
  nlohmann::json per = nlohmann::json::array();
  for (const auto& c : r.per_generator)
    per.push_back({{"i", c.i},
                   {"shape", c.shape_check},
                   {"socle", c.socle_check},
                   {"nilpotency", c.nilpotency_check},
                   {"shift", c.shift_check},
                   {"cyclic_dim", c.cyclic_dim}});
  return {{"lambda_check", r.lambda_check},
          {"socle_permutation", r.socle_permutation},
          {"direct_sum_rank", r.direct_sum_rank},
          {"full_checks_skipped", r.full_checks_skipped},
          {"per_generator", per},
          {"problems", r.problems}};
}

inline nlohmann::json to_json(const OutputDocument& doc) {
  const Params P(doc.p, doc.m, doc.n);
  nlohmann::json j;
  j["p"] = doc.p;
  j["m"] = doc.m;
  j["n"] = doc.n;
  j["lambda"] = doc.decomposition.lambda;
  j["blocks"] = nlohmann::json::array();
  for (const auto& b : doc.decomposition.blocks) j["blocks"].push_back({{"a", b.a}, {"b", b.b}, {"lambda", b.value}});
  if (doc.generators) {
    j["generators"] = nlohmann::json::array();
    for (const auto& g : *doc.generators) j["generators"].push_back(generator_to_json(P, g));
  }
  if (doc.report) {
    j["verified"] = doc.report->total_ok;
    j["verification"] = report_to_json(*doc.report);
  }
  j["min_group_exponent"] = min_group_exponent(doc.p, doc.n);
  j["version"] = doc.version;
  return j;
}

namespace detail {

template <class T>
T require(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw document_error(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw document_error(std::string("field \"") + key + "\" has the wrong type");
  }
}

}  // namespace detail

/// Reads a document back. Structural problems throw document_error; bad
/// mathematical content (off-diagonal or unreduced coefficients) is kept in
/// a form that verify_all rejects, so audits stay informative.
inline OutputDocument from_json(const nlohmann::json& j) {
  OutputDocument doc;
  doc.p = detail::require<std::uint64_t>(j, "p");
  doc.m = detail::require<int>(j, "m");
  doc.n = detail::require<int>(j, "n");
  const Params P = [&] {
    try {
      return Params(doc.p, doc.m, doc.n);
    } catch (const std::exception& e) {
      throw document_error(e.what());
    }
  }();
  doc.decomposition.lambda = detail::require<std::vector<int>>(j, "lambda");
  doc.decomposition.blocks = blocks_from_lambda(doc.decomposition.lambda);
  if (j.contains("version")) doc.version = detail::require<std::string>(j, "version");

  if (j.contains("generators")) {
    const auto& arr = j.at("generators");
    if (!arr.is_array()) throw document_error("\"generators\" must be an array");
    GeneratorSet gens;
    for (const auto& gj : arr) {
      Generator g;
      g.i = detail::require<int>(gj, "i");
      g.lambda = detail::require<int>(gj, "lambda");
      g.socle_index = detail::require<int>(gj, "socle_index");
      const auto tag = parse_case_tag(detail::require<std::string>(gj, "case"));
      if (!tag) throw document_error("unknown case tag for generator " + std::to_string(g.i));
      g.tag = *tag;
      const int k = P.m + P.n - g.i;
      const DiagIndex B = diagonal(P, k);
      g.y = {k, std::vector<Fp>(B.size())};
      const auto& cj = gj.contains("coeffs") ? gj.at("coeffs") : nlohmann::json();
      if (!cj.is_array()) throw document_error("generator " + std::to_string(g.i) + ": \"coeffs\" must be an array");
      for (const auto& c : cj) {
        const int row = detail::require<int>(c, "row");
        const int col = detail::require<int>(c, "col");
        const auto value = detail::require<std::int64_t>(c, "value");
        const int slot = (row + col - 1 == k && col >= 1 && col <= P.n) ? B.slot_of_row(row) : -1;
        if (slot < 0 || value < 0 || value > UINT32_MAX) {
          g.y = {-1, {}};  // not an element of D_{m+n-i}
          break;
        }
        g.y.coeffs[static_cast<std::size_t>(slot)] = Fp{static_cast<std::uint32_t>(value)};
      }
      gens.push_back(std::move(g));
    }
    doc.generators = std::move(gens);
  }
  return doc;
}

inline std::string format_vector(const Params& P, const DiagVector& v) {
  const DiagIndex B = diagonal(P, v.k);
  std::ostringstream os;
  bool first = true;
  for (std::size_t t = 0; t < v.coeffs.size() && t < B.size(); ++t) {
    if (v.coeffs[t].is_zero()) continue;
    const Position q = B.at(t);
    os << (first ? "" : " + ") << v.coeffs[t].v << "*v(" << q.row << "," << q.col << ")";
    first = false;
  }
  return first ? "0" : os.str();
}

inline void render_text(std::ostream& os, const OutputDocument& doc) {
  const Params P(doc.p, doc.m, doc.n);
  os << "V_" << doc.m << " (x) V_" << doc.n << " over F_" << doc.p << "\n";
  os << "lambda:";
  for (int l : doc.decomposition.lambda) os << ' ' << l;
  os << "\nblocks:";
  for (const auto& b : doc.decomposition.blocks) os << " [a=" << b.a << " b=" << b.b << " lambda=" << b.value << "]";
  os << '\n';
  if (doc.generators) {
    os << "generators:\n";
    for (const auto& g : *doc.generators)
      os << "  y_" << g.i << " (lambda=" << g.lambda << " socle_index=" << g.socle_index << " case=" << to_string(g.tag)
         << "): " << format_vector(P, g.y) << '\n';
  }
  if (doc.report) {
    os << "verified: " << (doc.report->total_ok ? "true" : "false") << '\n';
    for (const auto& s : doc.report->problems) os << "  problem: " << s << '\n';
  }
  os << "min_group_exponent: " << min_group_exponent(doc.p, doc.n) << '\n';
  os << "version: " << doc.version << '\n';
}

}  // namespace jt
