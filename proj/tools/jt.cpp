// jt: decompositions of V_m (x) V_n for cyclic p-groups, with explicit
// generators for every summand.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "jt/commands.hpp"

namespace {

void add_params(CLI::App* cmd, jt::CliConfig& cfg, bool required = true) {
  auto* p = cmd->add_option("--p", cfg.p, "prime characteristic");
  auto* m = cmd->add_option("--m", cfg.m, "first Jordan block size");
  auto* n = cmd->add_option("--n", cfg.n, "second Jordan block size");
  if (required) {
    p->required();
    m->required();
    n->required();
  }
}

void add_output(CLI::App* cmd, jt::CliConfig& cfg) {
  const std::map<std::string, jt::Format> formats{{"text", jt::Format::text}, {"json", jt::Format::json}};
  cmd->add_option("--format", cfg.format, "output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  cmd->add_option("--out", cfg.out, "write output to FILE instead of stdout");
}

int emit(const jt::CliConfig& cfg, const std::string& body) {
  if (!cfg.out) {
    std::cout << body;
    return jt::kExitOk;
  }
  std::ofstream f(*cfg.out);
  if (!f) {
    std::cerr << "jt: cannot open " << *cfg.out << " for writing\n";
    return jt::kExitUsage;
  }
  f << body;
  return jt::kExitOk;
}

int emit_document(const jt::CliConfig& cfg, const jt::OutputDocument& doc) {
  std::ostringstream os;
  if (cfg.format == jt::Format::json)
    os << jt::to_json(doc).dump(2) << '\n';
  else
    jt::render_text(os, doc);
  const int rc = emit(cfg, os.str());
  return rc != jt::kExitOk ? rc : jt::exit_code_for(doc);
}

void check_params(jt::CliConfig& cfg) {
  if (!jt::PrimeField::is_prime(cfg.p)) throw CLI::ValidationError("--p", std::to_string(cfg.p) + " is not a prime below 2^31");
  if (cfg.m < 1 || cfg.n < 1) throw CLI::ValidationError("--m/--n", "block sizes must be positive");
  if (jt::normalize(cfg))
    std::cerr << "jt: note: m > n, swapped to m=" << cfg.m << " n=" << cfg.n << " (the tensor product is symmetric)\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decompose V_m (x) V_n over F_p and produce a generator for each summand"};
  app.set_version_flag("--version", jt::kVersion);
  app.require_subcommand(1);

  jt::CliConfig cfg;

  auto* decompose = app.add_subcommand("decompose", "print the lambda sequence and its blocks");
  add_params(decompose, cfg);
  add_output(decompose, cfg);

  auto* generators = app.add_subcommand("generators", "print lambda together with a generator of each summand");
  add_params(generators, cfg);
  add_output(generators, cfg);
  generators->add_flag("--verify", cfg.verify, "certify the output by brute force (exit 1 on failure)");

  auto* verify = app.add_subcommand("verify", "certify computed generators, or audit a JSON document with --in");
  add_params(verify, cfg, false);
  add_output(verify, cfg);
  verify->add_option("--in", cfg.in, "JSON document to audit")->check(CLI::ExistingFile);

  auto* sweep = app.add_subcommand("sweep", "cross-check both lambda routes and verify generators over a range");
  sweep->add_option("--primes", cfg.sweep_primes, "primes to sweep")->delimiter(',');
  sweep->add_option("--max-n", cfg.max_n, "largest n (all 1 <= m <= n <= max-n)")->check(CLI::PositiveNumber);
  sweep->add_option("--threads", cfg.threads, "worker threads (0 = hardware concurrency)");
  sweep->add_option("--out", cfg.out, "write the table to FILE instead of stdout");
  sweep->add_flag("--inject-fault", cfg.inject_fault, "corrupt one generator per row (exercises the failure path)");

  auto* selftest = app.add_subcommand("selftest", "reproduce the published worked examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? jt::kExitOk : jt::kExitUsage;
  }

  try {
    if (*decompose || *generators || (*verify && !cfg.in)) {
      if (*verify && (cfg.p == 0 || cfg.m == 0 || cfg.n == 0)) {
        std::cerr << "jt verify: need --in FILE or all of --p, --m, --n\n";
        return jt::kExitUsage;
      }
      check_params(cfg);
    }
    if (*decompose) return emit_document(cfg, jt::cmd_decompose(cfg));
    if (*generators) return emit_document(cfg, jt::cmd_generators(cfg));
    if (*verify) {
      if (!cfg.in) return emit_document(cfg, jt::cmd_verify(cfg));
      std::ifstream f(*cfg.in);
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(f);
      } catch (const nlohmann::json::exception& e) {
        std::cerr << "jt verify: " << *cfg.in << ": " << e.what() << '\n';
        return jt::kExitUsage;
      }
      return emit_document(cfg, jt::cmd_verify(jt::from_json(j)));
    }
    if (*sweep) {
      for (auto p : cfg.sweep_primes)
        if (!jt::PrimeField::is_prime(p)) {
          std::cerr << "jt sweep: " << p << " is not a prime below 2^31\n";
          return jt::kExitUsage;
        }
      const auto rows = jt::run_sweep(cfg.sweep_primes, cfg.max_n, cfg.threads, cfg.inject_fault);
      std::ostringstream os;
      jt::render_sweep(os, rows);
      const int rc = emit(cfg, os.str());
      if (rc != jt::kExitOk) return rc;
      const bool all_ok = std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.ok(); });
      return all_ok ? jt::kExitOk : jt::kExitVerifyFailed;
    }
    if (*selftest) {
      bool all_ok = true;
      for (const auto& item : jt::run_selftest()) {
        std::cout << (item.ok ? "PASS  " : "FAIL  ") << item.name << '\n';
        all_ok = all_ok && item.ok;
      }
      return all_ok ? jt::kExitOk : jt::kExitVerifyFailed;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "jt: " << e.what() << '\n';
    return jt::kExitUsage;
  } catch (const jt::document_error& e) {
    std::cerr << "jt: malformed document: " << e.what() << '\n';
    return jt::kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "jt: " << e.what() << '\n';
    return jt::kExitUsage;
  }
  return jt::kExitUsage;
}
