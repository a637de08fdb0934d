// Command-line front end: generate classical moment sequences, run and
// extend Hankel factorizations, execute the verification checks, and emit
// polynomials and machine-readable reports.
//
// Exit codes: 0 all requested checks pass, 1 a mathematical check failed,
// 2 malformed or invalid input.

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "orthopoly/orthopoly.hpp"

using nlohmann::ordered_json;
using namespace orthopoly;

namespace {

constexpr std::array<const char*, 9> kCheckOrder = {
    "recurrence", "cholesky", "selfadjoint", "bochner", "hahn",
    "ngn",        "struct1",  "struct2",     "rodrigues"};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string family;
  std::string a, b, c, d, e;
  std::string alpha = "1";
  std::string mu0;
  long n = 1;
  long k = 0;
  std::string checks = "all";
  std::string format = "text";
  std::string out;
  bool no_timing = false;
};

struct Config {
  Rat a, b, c, d, e;
  Rat mu0;
  std::string family = "custom";
  long n = 1;
  long k = 0;
  std::vector<std::string> checks;
  std::string format = "text";
  std::string out;
  bool no_timing = false;
};

Config resolve_config(const Options& opts) {
  Config cfg;
  cfg.n = opts.n;
  cfg.k = opts.k;
  cfg.format = opts.format;
  cfg.out = opts.out;
  cfg.no_timing = opts.no_timing;
  if (cfg.n < 1) throw UsageError("--n must be at least 1");
  if (cfg.k < 0) throw UsageError("--k must be nonnegative");

  const bool explicit_data = !opts.a.empty() || !opts.b.empty() ||
                             !opts.c.empty() || !opts.d.empty() ||
                             !opts.e.empty();
  if (!opts.family.empty() && explicit_data) {
    throw UsageError("--family and explicit --a..--e are mutually exclusive");
  }
  if (!opts.family.empty()) {
    cfg.family = opts.family;
    if (opts.family == "hermite") {
      cfg.a = 0; cfg.b = 0; cfg.c = 1; cfg.d = -2; cfg.e = 0;
      cfg.mu0 = 1;
    } else if (opts.family == "laguerre") {
      cfg.a = 0; cfg.b = 1; cfg.c = 0; cfg.d = -1; cfg.e = 1;
      cfg.mu0 = 1;
    } else if (opts.family == "legendre") {
      cfg.a = -1; cfg.b = 0; cfg.c = 1; cfg.d = -2; cfg.e = 0;
      cfg.mu0 = 2;
    } else if (opts.family == "bessel") {
      cfg.a = 1; cfg.b = 0; cfg.c = 0;
      cfg.d = rat_from_string(opts.alpha);
      cfg.e = 2;
      cfg.mu0 = 1;
    } else {
      throw UsageError("unknown family: " + opts.family);
    }
  } else {
    if (opts.a.empty() || opts.b.empty() || opts.c.empty() || opts.d.empty() ||
        opts.e.empty()) {
      throw UsageError("either --family or all of --a --b --c --d --e required");
    }
    cfg.a = rat_from_string(opts.a);
    cfg.b = rat_from_string(opts.b);
    cfg.c = rat_from_string(opts.c);
    cfg.d = rat_from_string(opts.d);
    cfg.e = rat_from_string(opts.e);
    cfg.mu0 = 1;
  }
  if (!opts.mu0.empty()) cfg.mu0 = rat_from_string(opts.mu0);

  if (opts.checks == "all") {
    cfg.checks.assign(kCheckOrder.begin(), kCheckOrder.end());
  } else {
    std::stringstream stream(opts.checks);
    std::string name;
    while (std::getline(stream, name, ',')) {
      if (name.empty()) continue;
      bool known = false;
      for (const char* candidate : kCheckOrder) known |= (name == candidate);
      if (!known) throw UsageError("unknown check: " + name);
      cfg.checks.push_back(name);
    }
    // Normalize to the fixed documented order so failure indices are stable.
    std::vector<std::string> ordered;
    for (const char* candidate : kCheckOrder) {
      for (const auto& chosen : cfg.checks) {
        if (chosen == candidate) {
          ordered.push_back(chosen);
          break;
        }
      }
    }
    cfg.checks = std::move(ordered);
  }
  if (cfg.checks.empty()) throw UsageError("--checks must be nonempty");
  return cfg;
}

ordered_json config_json(const Config& cfg) {
  ordered_json j;
  j["family"] = cfg.family;
  j["a"] = to_string(cfg.a);
  j["b"] = to_string(cfg.b);
  j["c"] = to_string(cfg.c);
  j["d"] = to_string(cfg.d);
  j["e"] = to_string(cfg.e);
  j["mu0"] = to_string(cfg.mu0);
  j["n"] = cfg.n;
  j["k"] = cfg.k;
  j["checks"] = cfg.checks;
  j["format"] = cfg.format;
  return j;
}

ordered_json strings_of(const RatVector& values, long limit = -1) {
  ordered_json out = ordered_json::array();
  long count = limit < 0 ? static_cast<long>(values.size())
                         : std::min<long>(limit, values.size());
  for (long i = 0; i < count; ++i) out.push_back(to_string(values[i]));
  return out;
}

PearsonData validated_data(const Config& cfg, long gram_order) {
  return validate_pearson(cfg.a, cfg.b, cfg.c, cfg.d, cfg.e, 2 * gram_order);
}

struct ChainResult {
  std::optional<CholeskyState> chain;
  long failed_at = -1;
};

ChainResult chain_upto(const MomentSequence& m, long target) {
  ChainResult result;
  try {
    result.chain = cholesky_init(build_gram(m, 0));
  } catch (const QuasiDefiniteViolation& violation) {
    result.failed_at = violation.order();
    return result;
  }
  while (result.chain->order() < target) {
    try {
      result.chain = cholesky_extend(*result.chain, m);
    } catch (const QuasiDefiniteViolation& violation) {
      result.failed_at = violation.order();
      break;
    }
  }
  return result;
}

void emit(const Config& cfg, const std::string& payload) {
  if (cfg.out.empty()) {
    std::cout << payload;
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) throw UsageError("cannot open output path: " + cfg.out);
    file << payload;
  }
}

ordered_json check_pass() {
  ordered_json j;
  j["status"] = "pass";
  j["pass"] = true;
  return j;
}

ordered_json check_fail(long failed_at, const std::string& detail = "") {
  ordered_json j;
  j["status"] = "fail";
  j["pass"] = false;
  if (failed_at >= 0) j["failed_at"] = failed_at;
  if (!detail.empty()) j["detail"] = detail;
  return j;
}

ordered_json check_skipped(const std::string& reason) {
  ordered_json j;
  j["status"] = "skipped";
  j["reason"] = reason;
  return j;
}

struct VerifyResult {
  ordered_json report;
  bool any_failed = false;
  std::string first_failure;
};

void note_failure(VerifyResult& result, const std::string& message) {
  result.any_failed = true;
  if (result.first_failure.empty()) result.first_failure = message;
}

// Runs the requested checks in dependency order and assembles the report
// skeleton shared by `verify` and `report`.
VerifyResult run_verify(const Config& cfg, bool with_polynomials) {
  VerifyResult result;
  const long n = cfg.n;
  const long extra = std::max<long>(cfg.k, 1);
  const long target = n + extra;

  PearsonData data = validated_data(cfg, target);
  MomentSequence base = generate_moments(data, cfg.mu0, target);
  ChainResult chain = chain_upto(base, target);
  const long reach = chain.chain ? chain.chain->order() : -1;

  ordered_json report;
  report["config"] = config_json(cfg);
  report["moments"] = strings_of(base.values, 2 * n + 1);

  if (chain.chain) {
    report["h"] = strings_of(chain.chain->h_values(), std::min(reach, n) + 1);
  } else {
    report["h"] = ordered_json::array();
  }

  {
    ordered_json lambdas = ordered_json::array();
    for (long j = 0; j <= n; ++j) {
      lambdas.push_back(to_string(Rat(j) * (Rat(j - 1) * data.a + data.d)));
    }
    report["lambda"] = lambdas;
  }

  ordered_json sigma = ordered_json::object();
  {
    MomentSequence level = base;
    for (long i = 1; i <= cfg.k; ++i) {
      level = derive_sigma(level);
      sigma[std::to_string(i)] = strings_of(level.values, 2 * n + 1 - 2 * i);
    }
  }
  report["sigma"] = sigma;

  ordered_json checks = ordered_json::object();
  RatVector varpi_values;

  for (const auto& name : cfg.checks) {
    if (name == "recurrence") {
      if (auto bad = first_recurrence_violation(base)) {
        checks[name] = check_fail(*bad);
        note_failure(result, "recurrence failed at n=" + std::to_string(*bad));
      } else {
        checks[name] = check_pass();
      }
    } else if (name == "cholesky") {
      if (chain.failed_at >= 0 && chain.failed_at <= n) {
        checks[name] = check_fail(chain.failed_at,
                                  "QuasiDefiniteViolation at order " +
                                      std::to_string(chain.failed_at));
        note_failure(result, "QuasiDefiniteViolation at order " +
                                 std::to_string(chain.failed_at));
      } else if (verify_factorization(chain.chain->truncated(n),
                                      build_gram(base, n))) {
        checks[name] = check_pass();
      } else {
        checks[name] = check_fail(-1, "factorization identity violated");
        note_failure(result, "cholesky orthogonality failed");
      }
    } else if (name == "selfadjoint") {
      long failed = -1;
      for (long ord = 0; ord <= n && failed < 0; ++ord) {
        if (!check_self_adjoint(data, build_gram(base, ord))) failed = ord;
      }
      if (failed < 0) {
        checks[name] = check_pass();
      } else {
        checks[name] = check_fail(failed);
        note_failure(result,
                     "selfadjoint failed at order " + std::to_string(failed));
      }
    } else if (name == "bochner") {
      if (reach < n) {
        checks[name] = check_skipped("factorization unavailable at order " +
                                     std::to_string(n));
        continue;
      }
      EigenReport eigen = bochner_verify(chain.chain->truncated(n), data);
      if (eigen.all_passed) {
        checks[name] = check_pass();
      } else {
        long failed = 0;
        while (eigen.passed[failed]) ++failed;
        checks[name] = check_fail(failed);
        note_failure(result, "bochner failed at j=" + std::to_string(failed));
      }
    } else if (name == "hahn") {
      if (cfg.k < 1) {
        checks[name] = check_skipped("requires --k >= 1");
        continue;
      }
      ordered_json h_map = ordered_json::object();
      long failed_depth = -1;
      std::string detail;
      for (long depth = 1; depth <= cfg.k && failed_depth < 0; ++depth) {
        if (reach < n + depth) {
          failed_depth = depth;
          detail = "factorization unavailable at order " +
                   std::to_string(n + depth);
          break;
        }
        try {
          DerivedBasis db =
              hahn_basis(chain.chain->truncated(n + depth), data, depth);
          MomentSequence level = base;
          for (long i = 0; i < depth; ++i) level = derive_sigma(level);
          if (!hahn_verify(db, build_gram(level, n))) {
            failed_depth = depth;
            break;
          }
          h_map[std::to_string(depth)] = strings_of(db.h);
        } catch (const Error& error) {
          failed_depth = depth;
          detail = error.what();
        }
      }
      if (failed_depth < 0) {
        checks[name] = check_pass();
        checks[name]["h"] = h_map;
      } else {
        checks[name] = check_fail(failed_depth, detail);
        note_failure(result,
                     "hahn failed at depth " + std::to_string(failed_depth));
      }
    } else if (name == "ngn") {
      long failed = -1;
      for (long ord = 0; ord <= n && failed < 0; ++ord) {
        if (!ngn_check(base, data, ord)) failed = ord;
      }
      if (failed < 0) {
        checks[name] = check_pass();
      } else {
        checks[name] = check_fail(failed);
        note_failure(result, "ngn failed at n=" + std::to_string(failed));
      }
    } else if (name == "struct1") {
      if (n < 2) {
        checks[name] = check_skipped("requires --n >= 2");
        continue;
      }
      if (reach < n) {
        checks[name] = check_skipped("factorization unavailable at order " +
                                     std::to_string(n));
        continue;
      }
      try {
        StructureCoeffs coeffs =
            first_structure(chain.chain->truncated(n), base, data, n);
        ordered_json triples = ordered_json::array();
        for (const auto& triple : coeffs.first) {
          triples.push_back(ordered_json::array(
              {to_string(triple[0]), to_string(triple[1]), to_string(triple[2])}));
        }
        checks[name] = check_pass();
        checks[name]["coefficients"] = triples;
        checks[name]["d_recovered"] = to_string(coeffs.d_recovered);
        checks[name]["e_recovered"] = to_string(coeffs.e_recovered);
      } catch (const Error& error) {
        checks[name] = check_fail(-1, error.what());
        note_failure(result, error.what());
      }
    } else if (name == "struct2") {
      if (n < 2) {
        checks[name] = check_skipped("requires --n >= 2");
        continue;
      }
      if (reach < n + 1) {
        checks[name] = check_skipped("factorization unavailable at order " +
                                     std::to_string(n + 1));
        continue;
      }
      try {
        StructureCoeffs coeffs =
            second_structure(chain.chain->truncated(n + 1), base, data, n);
        ordered_json pairs = ordered_json::array();
        for (const auto& pair : coeffs.second) {
          pairs.push_back(
              ordered_json::array({to_string(pair[0]), to_string(pair[1])}));
        }
        ordered_json recovered = ordered_json::array();
        for (const auto& value : coeffs.pearson_recovered) {
          recovered.push_back(to_string(value));
        }
        checks[name] = check_pass();
        checks[name]["coefficients"] = pairs;
        checks[name]["pearson_recovered"] = recovered;
        checks[name]["t"] = to_string(coeffs.t);
      } catch (const Error& error) {
        checks[name] = check_fail(-1, error.what());
        note_failure(result, error.what());
      }
    } else if (name == "rodrigues") {
      if (cfg.k < 1) {
        checks[name] = check_skipped("requires --k >= 1");
        continue;
      }
      long failed_depth = -1;
      std::string detail;
      for (long depth = 1; depth <= std::min(cfg.k, n) && failed_depth < 0;
           ++depth) {
        if (reach < n + depth) {
          failed_depth = depth;
          detail = "factorization unavailable at order " +
                   std::to_string(n + depth);
          break;
        }
        try {
          RodriguesReport rodrigues =
              rodrigues_verify(base, *chain.chain, data, n, depth);
          if (!rodrigues.passed) {
            failed_depth = depth;
            break;
          }
          varpi_values.push_back(rodrigues.varpi);
        } catch (const Error& error) {
          failed_depth = depth;
          detail = error.what();
        }
      }
      if (failed_depth < 0) {
        checks[name] = check_pass();
      } else {
        checks[name] = check_fail(failed_depth, detail);
        note_failure(result, "rodrigues failed at depth " +
                                 std::to_string(failed_depth));
      }
    }
  }

  report["checks"] = checks;

  if (with_polynomials) {
    ordered_json polys = ordered_json::array();
    if (reach >= n) {
      for (const Polynomial& poly :
           extract_polynomials(chain.chain->truncated(n))) {
        polys.push_back(format_polynomial(poly));
      }
    }
    report["polynomials"] = polys;
  }

  report["varpi"] = strings_of(varpi_values);
  result.report = std::move(report);
  return result;
}

std::string render_verify_text(const ordered_json& report, bool no_timing,
                               double elapsed_ms) {
  std::ostringstream out;
  out << "family: " << report["config"]["family"].get<std::string>() << "\n";
  for (const auto& [name, body] : report["checks"].items()) {
    out << name << ": " << body["status"].get<std::string>();
    if (body.contains("failed_at")) out << " at " << body["failed_at"];
    if (body.contains("detail"))
      out << " (" << body["detail"].get<std::string>() << ")";
    out << "\n";
  }
  auto list = [&out](const char* label, const ordered_json& values) {
    out << label << " = [";
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) out << ", ";
      out << values[i].get<std::string>();
    }
    out << "]\n";
  };
  list("h", report["h"]);
  list("lambda", report["lambda"]);
  if (!report["varpi"].empty()) list("varpi", report["varpi"]);
  if (!no_timing) out << "time_ms: " << elapsed_ms << "\n";
  return out.str();
}

int cmd_verify(const Config& cfg) {
  auto start = std::chrono::steady_clock::now();
  VerifyResult result = run_verify(cfg, false);
  double elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                start)
          .count();
  if (!cfg.no_timing) result.report["timing_ms"] = elapsed_ms;

  std::string payload;
  if (cfg.format == "json") {
    payload = result.report.dump(2) + "\n";
  } else if (cfg.format == "csv") {
    std::ostringstream out;
    out << "check,status\n";
    for (const auto& [name, body] : result.report["checks"].items()) {
      out << name << "," << body["status"].get<std::string>() << "\n";
    }
    payload = out.str();
  } else {
    payload = render_verify_text(result.report, cfg.no_timing, elapsed_ms);
  }
  std::cout << payload;
  // The JSON report is always written when a path is given, whatever the
  // chosen display format.
  if (!cfg.out.empty()) {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) throw UsageError("cannot open output path: " + cfg.out);
    file << result.report.dump(2) << "\n";
  }
  if (result.any_failed) {
    std::cerr << result.first_failure << "\n";
    return 1;
  }
  return 0;
}

int cmd_report(const Config& cfg) {
  auto start = std::chrono::steady_clock::now();
  Config full = cfg;
  full.checks.assign(kCheckOrder.begin(), kCheckOrder.end());
  VerifyResult result = run_verify(full, true);
  double elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                start)
          .count();
  if (!cfg.no_timing) result.report["timing_ms"] = elapsed_ms;
  emit(cfg, result.report.dump(2) + "\n");
  if (result.any_failed) {
    std::cerr << result.first_failure << "\n";
    return 1;
  }
  return 0;
}

int cmd_gen(const Config& cfg) {
  PearsonData data = validated_data(cfg, cfg.n);
  MomentSequence base = generate_moments(data, cfg.mu0, cfg.n);

  std::vector<MomentSequence> levels;  // sigma^(1)..sigma^(k)
  {
    MomentSequence level = base;
    for (long i = 1; i <= cfg.k; ++i) {
      level = derive_sigma(level);
      levels.push_back(level);
    }
  }

  std::string payload;
  if (cfg.format == "json") {
    ordered_json report;
    report["config"] = config_json(cfg);
    report["moments"] = strings_of(base.values);
    ordered_json sigma = ordered_json::object();
    for (long i = 0; i < static_cast<long>(levels.size()); ++i) {
      sigma[std::to_string(i + 1)] = strings_of(levels[i].values);
    }
    report["sigma"] = sigma;
    payload = report.dump(2) + "\n";
  } else if (cfg.format == "csv") {
    std::ostringstream out;
    out << "n,mu";
    for (long i = 1; i <= static_cast<long>(levels.size()); ++i) {
      out << ",sigma" << i;
    }
    out << "\n";
    for (long idx = 0; idx < base.size(); ++idx) {
      out << idx << "," << to_string(base.values[idx]);
      for (const auto& level : levels) {
        out << ",";
        if (idx < level.size()) out << to_string(level.values[idx]);
      }
      out << "\n";
    }
    payload = out.str();
  } else {
    std::ostringstream out;
    for (long idx = 0; idx < base.size(); ++idx) {
      out << "mu_" << idx << " = " << to_string(base.values[idx]) << "\n";
    }
    for (long i = 0; i < static_cast<long>(levels.size()); ++i) {
      for (long idx = 0; idx < levels[i].size(); ++idx) {
        out << "sigma^(" << (i + 1) << ")_" << idx << " = "
            << to_string(levels[i].values[idx]) << "\n";
      }
    }
    payload = out.str();
  }
  emit(cfg, payload);
  return 0;
}

int cmd_factor(const Config& cfg) {
  PearsonData data = validated_data(cfg, cfg.n);
  MomentSequence base = generate_moments(data, cfg.mu0, cfg.n);
  CholeskyState chain = cholesky_chain(base, cfg.n);  // throws on violation

  std::string payload;
  if (cfg.format == "json") {
    ordered_json report;
    report["config"] = config_json(cfg);
    report["h"] = strings_of(chain.h_values());
    ordered_json columns = ordered_json::array();
    for (long j = 0; j <= chain.order(); ++j) {
      columns.push_back(strings_of(chain.column(j)));
    }
    report["s_columns"] = columns;
    payload = report.dump(2) + "\n";
  } else if (cfg.format == "csv") {
    std::ostringstream out;
    out << "j,h\n";
    for (long j = 0; j <= chain.order(); ++j) {
      out << j << "," << to_string(chain.h(j)) << "\n";
    }
    payload = out.str();
  } else {
    std::ostringstream out;
    for (long j = 0; j <= chain.order(); ++j) {
      out << "h_" << j << " = " << to_string(chain.h(j)) << "\n";
    }
    payload = out.str();
  }
  emit(cfg, payload);
  return 0;
}

int cmd_polys(const Config& cfg) {
  PearsonData data = validated_data(cfg, cfg.n);
  MomentSequence base = generate_moments(data, cfg.mu0, cfg.n);
  CholeskyState chain = cholesky_chain(base, cfg.n);
  std::vector<Polynomial> polys = extract_polynomials(chain);

  std::vector<std::vector<Polynomial>> families;  // depth 1..k
  for (long depth = 1; depth <= std::min(cfg.k, cfg.n); ++depth) {
    families.push_back(derivative_family(polys, depth));
  }

  std::string payload;
  if (cfg.format == "json") {
    ordered_json report;
    report["config"] = config_json(cfg);
    ordered_json p_list = ordered_json::array();
    ordered_json p_coeffs = ordered_json::array();
    for (const Polynomial& poly : polys) {
      p_list.push_back(format_polynomial(poly));
      p_coeffs.push_back(strings_of(poly.coefficients()));
    }
    report["polynomials"] = p_list;
    report["coefficients"] = p_coeffs;
    ordered_json q_map = ordered_json::object();
    for (std::size_t depth = 0; depth < families.size(); ++depth) {
      ordered_json q_list = ordered_json::array();
      for (const Polynomial& poly : families[depth]) {
        q_list.push_back(format_polynomial(poly));
      }
      q_map[std::to_string(depth + 1)] = q_list;
    }
    report["q"] = q_map;
    payload = report.dump(2) + "\n";
  } else {
    std::ostringstream out;
    for (std::size_t j = 0; j < polys.size(); ++j) {
      out << "P_" << j << " = " << format_polynomial(polys[j]) << "\n";
    }
    for (std::size_t depth = 0; depth < families.size(); ++depth) {
      for (std::size_t j = 0; j < families[depth].size(); ++j) {
        out << "Q^(" << (depth + 1) << ")_" << j << " = "
            << format_polynomial(families[depth][j]) << "\n";
      }
    }
    payload = out.str();
  }
  emit(cfg, payload);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact classical moment sequences, Hankel factorizations and "
               "orthogonal-polynomial checks"};
  app.require_subcommand(1);

  Options opts;
  auto add_common = [&opts](CLI::App* cmd) {
    cmd->add_option("--family", opts.family,
                    "one of hermite, laguerre, legendre, bessel");
    cmd->add_option("--alpha", opts.alpha, "bessel parameter (rational)");
    cmd->add_option("--a", opts.a, "phi x^2 coefficient");
    cmd->add_option("--b", opts.b, "phi x coefficient");
    cmd->add_option("--c", opts.c, "phi constant coefficient");
    cmd->add_option("--d", opts.d, "psi x coefficient");
    cmd->add_option("--e", opts.e, "psi constant coefficient");
    cmd->add_option("--mu0", opts.mu0, "mu_0 (rational, nonzero)");
    cmd->add_option("--n", opts.n, "Gram order N (moments run to 2N)");
    cmd->add_option("--k", opts.k, "derived-sequence depth");
    cmd->add_option("--checks", opts.checks, "comma list or 'all'");
    cmd->add_option("--format", opts.format)
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", opts.out, "output path (JSON report for verify)");
    cmd->add_flag("--no-timing", opts.no_timing, "omit the timing field");
    return cmd;
  };

  CLI::App* gen = add_common(app.add_subcommand("gen", "emit moment sequences"));
  CLI::App* factor =
      add_common(app.add_subcommand("factor", "emit the Hankel factorization"));
  CLI::App* verify =
      add_common(app.add_subcommand("verify", "run verification checks"));
  CLI::App* polys =
      add_common(app.add_subcommand("polys", "emit orthogonal polynomials"));
  CLI::App* report =
      add_common(app.add_subcommand("report", "full machine-readable report"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    Config cfg = resolve_config(opts);
    if (gen->parsed()) return cmd_gen(cfg);
    if (factor->parsed()) return cmd_factor(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (polys->parsed()) return cmd_polys(cfg);
    if (report->parsed()) return cmd_report(cfg);
    return 2;
  } catch (const QuasiDefiniteViolation& error) {
    std::cerr << error.what() << "\n";
    return 1;
  } catch (const StructureViolation& error) {
    std::cerr << error.what() << "\n";
    return 1;
  } catch (const RecurrenceViolation& error) {
    std::cerr << error.what() << "\n";
    return 1;
  } catch (const Error& error) {
    std::cerr << error.what() << "\n";
    return 2;
  } catch (const std::exception& error) {
    std::cerr << error.what() << "\n";
    return 2;
  }
}
