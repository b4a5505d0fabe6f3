// Copyright 2026 The djdisc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "djdisc/cli.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "djdisc/channels.hpp"
#include "djdisc/discrimination.hpp"
#include "djdisc/dj.hpp"
#include "djdisc/errors.hpp"
#include "djdisc/json_io.hpp"
#include "djdisc/random.hpp"

namespace djdisc::cli {
namespace {

// The exhaustive commands refuse anything above this bit-width.
constexpr int kExhaustiveMaxBits = 3;
constexpr double kSearchSuccessTarget = 1.0 - 1e-6;
constexpr double kSearchPerfectTol = 1e-3;

struct RunConfig {
  int n = 1;
  std::optional<double> tol;
  std::uint64_t seed = 1;
  int samples = 50;
  int restarts = 20;
  int iterations = 500;
  std::vector<double> phases;
  std::string povm = "certainty";
  std::string input;
  std::string output;
  std::string format = "json";
};

struct Report {
  Json body;
  int exit_code;
};

double resolve_tolerance(const RunConfig& cfg) {
  if (cfg.tol) {
    if (!(*cfg.tol > 0.0)) throw Error(Errc::InvalidArgument, "--tol must be positive");
    return *cfg.tol;
  }
  if (const char* env = std::getenv("DJDISC_TOL"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const double tol = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(tol > 0.0)) {
      throw Error(Errc::InvalidArgument, std::string("DJDISC_TOL is not a positive number: ") + env);
    }
    return tol;
  }
  return default_tolerance();
}

void require_bits(int n, int cap) {
  if (n < 1) throw Error(Errc::InvalidArgument, "--n must be >= 1");
  if (n > cap) {
    throw Error(Errc::ResourceLimit,
                "--n " + std::to_string(n) + " exceeds the limit of " + std::to_string(cap));
  }
}

Report verify_channel(const RunConfig& cfg) {
  require_bits(cfg.n, kExhaustiveMaxBits);
  if (cfg.samples < 1) throw Error(Errc::InvalidArgument, "--samples must be >= 1");
  const double tol = resolve_tolerance(cfg);
  const ClassEnsemble balanced(FunctionClass::Balanced, cfg.n);
  const std::size_t dim = std::size_t{1} << cfg.n;

  Rng rng = make_rng(cfg.seed);
  double max_residual = 0.0;
  for (int s = 0; s < cfg.samples; ++s) {
    const DensityOperator rho = random_density(dim, rng);
    const double r = frobenius_distance(apply_ensemble_channel(balanced, rho).matrix(),
                                        apply_balanced_channel(rho).matrix());
    max_residual = std::max(max_residual, r);
  }
  const bool pass = max_residual <= tol;
  Json body{{"command", "verify-channel"}, {"n", cfg.n},
            {"samples", cfg.samples},      {"seed", cfg.seed},
            {"oracle_count", balanced.members().size()},
            {"max_residual", max_residual}, {"tol", tol},
            {"pass", pass}};
  return {std::move(body), pass ? kExitOk : kExitPropertyFailure};
}

Report certify(const RunConfig& cfg) {
  if (cfg.input.empty()) throw Error(Errc::InvalidArgument, "certify needs a state file");
  const double tol = resolve_tolerance(cfg);
  const DensityOperator rho = read_density_file(cfg.input);
  const CertaintyCertificate cert = certainty_certificate(rho, tol);
  return {certificate_to_json(cert), cert.verdict ? kExitOk : kExitPropertyFailure};
}

Report sweep(const RunConfig& cfg) {
  require_bits(cfg.n, kExhaustiveMaxBits);
  const double tol = resolve_tolerance(cfg);
  const std::size_t dim = std::size_t{1} << cfg.n;
  std::vector<double> phases = cfg.phases;
  if (phases.empty()) phases.assign(dim, 0.0);
  if (phases.size() != dim) {
    throw Error(Errc::InvalidArgument, "--phases needs " + std::to_string(dim) + " values, got " +
                                           std::to_string(phases.size()));
  }
  const PureState phi = PureState::uniform(phases);
  const TwoOutcomePovm povm =
      cfg.povm == "identity-half" ? TwoOutcomePovm::identity_half(dim) : build_certainty_povm(phi);
  const SweepSummary s = sweep_all(cfg.n, phi, povm);
  return {summary_to_json(s), s.min_success >= 1.0 - tol ? kExitOk : kExitPropertyFailure};
}

Report search(const RunConfig& cfg) {
  require_bits(cfg.n, kExhaustiveMaxBits);
  const SearchResult r = search_perfect_state(cfg.n, cfg.seed, cfg.restarts, cfg.iterations);
  const bool perfect =
      is_perfect_initial_state(DensityOperator::from_pure(r.state), kSearchPerfectTol);
  Json body{{"command", "search"},
            {"n", cfg.n},
            {"seed", cfg.seed},
            {"restarts", cfg.restarts},
            {"iterations", cfg.iterations},
            {"success", r.success},
            {"best_restart", r.best_restart},
            {"is_perfect_initial_state", perfect},
            {"state", state_to_json(r.state)}};
  return {std::move(body), r.success >= kSearchSuccessTarget ? kExitOk : kExitPropertyFailure};
}

Report classical(const RunConfig& cfg) {
  require_bits(cfg.n, kClassicalMaxBits);
  const ClassicalWitness w = classical_witness(cfg.n);
  return {witness_to_json(w), w.verified() ? kExitOk : kExitPropertyFailure};
}

std::string csv_cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string render(const Json& body, const std::string& format) {
  if (format != "csv") return body.dump(2) + "\n";
  std::string header;
  std::string row;
  for (const auto& [key, value] : body.items()) {
    if (value.is_structured()) continue;
    if (!header.empty()) {
      header += ',';
      row += ',';
    }
    header += key;
    row += csv_cell(value);
  }
  return header + "\n" + row + "\n";
}

int exit_code_for(Errc code) {
  return code == Errc::ResourceLimit ? kExitResourceLimit : kExitInputError;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Deutsch-Jozsa oracle discrimination toolkit", "djdisc"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--tol", cfg.tol, "Tolerance (default: DJDISC_TOL or 1e-9)");
    sub->add_option("--format", cfg.format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output", cfg.output, "Write the report to this file instead of stdout");
  };

  auto* verify = app.add_subcommand("verify-channel", "Brute-force vs closed-form balanced channel");
  verify->add_option("--n", cfg.n, "Argument bit-width")->required();
  verify->add_option("--samples", cfg.samples, "Random mixed states to test");
  verify->add_option("--seed", cfg.seed, "RNG seed");
  add_common(verify);

  auto* cert = app.add_subcommand("certify", "Perfect-discrimination certificate for a state file");
  cert->add_option("input,--input", cfg.input, "State or density-matrix JSON file")->required();
  add_common(cert);

  auto* sw = app.add_subcommand("sweep", "Run the certainty algorithm against every admissible oracle");
  sw->add_option("--n", cfg.n, "Argument bit-width")->required();
  sw->add_option("--phases", cfg.phases, "Comma-separated phases theta_x in radians")
      ->delimiter(',');
  sw->add_option("--povm", cfg.povm, "Measurement")
      ->check(CLI::IsMember({"certainty", "identity-half"}));
  add_common(sw);

  auto* se = app.add_subcommand("search", "Numerically search for a perfect initial state");
  se->add_option("--n", cfg.n, "Argument bit-width")->required();
  se->add_option("--seed", cfg.seed, "RNG seed")->default_val(7);
  se->add_option("--restarts", cfg.restarts, "Random restarts");
  se->add_option("--iterations", cfg.iterations, "Gradient steps per restart");
  add_common(se);

  auto* cl = app.add_subcommand("classical", "Classical worst-case query witness");
  cl->add_option("--n", cfg.n, "Argument bit-width")->required();
  add_common(cl);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  try {
    Report report;
    if (verify->parsed()) {
      report = verify_channel(cfg);
    } else if (cert->parsed()) {
      report = certify(cfg);
    } else if (sw->parsed()) {
      report = sweep(cfg);
    } else if (se->parsed()) {
      report = search(cfg);
    } else {
      report = classical(cfg);
    }
    const std::string text = render(report.body, cfg.format);
    if (cfg.output.empty()) {
      out << text;
    } else {
      std::ofstream file(cfg.output);
      if (!file || !(file << text)) {
        err << "error: cannot write " << cfg.output << "\n";
        return kExitInputError;
      }
    }
    return report.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

}  // namespace djdisc::cli
