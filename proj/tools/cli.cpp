#include "cli.hpp"

#include <cstdint>
#include <fstream>
#include <string>

#include "CLI11.hpp"
#include "uqd/errors.hpp"
#include "uqd/sampler.hpp"
#include "uqd/serialize.hpp"
#include "uqd/spectral.hpp"
#include "uqd/strategy.hpp"
#include "uqd/sweep.hpp"
#include "uqd/verify.hpp"

namespace uqd::cli {

namespace {

void print_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

int cmd_optimize(int n, double eta1, std::ostream& out) {
  print_json(out, decide({n, eta1}));
  return kExitOk;
}

int cmd_sweep(int n, int points, const std::string& path, std::ostream& err) {
  const auto rows = sweep(n, points);
  std::ofstream file(path);
  if (!file) {
    err << "cannot open '" << path << "' for writing\n";
    return kExitFailure;
  }
  write_sweep_csv(file, rows);
  file.close();
  if (!file) {
    err << "failed writing '" << path << "'\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_spectrum(int n, double c1, double c2, std::ostream& out) {
  print_json(out, spectrum_report(build_povm(n, PovmParams(c1, c2))));
  return kExitOk;
}

int cmd_montecarlo(int n, double eta1, std::uint64_t samples, std::uint64_t seed,
                   std::ostream& out) {
  const StrategyDecision d = decide({n, eta1});
  print_json(out, mc_average_success(n, PovmParams(d.c1, d.c2), eta1, samples, seed));
  return kExitOk;
}

int cmd_verify(int n_max, std::ostream& out, std::ostream& err) {
  const auto results = run_verification(n_max);
  for (const CheckResult& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " deviation=" << r.deviation
        << " tolerance=" << r.tolerance << '\n';
  }
  for (const CheckResult& r : results) {
    if (!r.passed) {
      err << "verification failed: " << r.name << '\n';
      return kExitFailure;
    }
  }
  out << "all " << results.size() << " checks passed\n";
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unambiguous discriminator for registers of unknown qubits", "uqd"};
  app.require_subcommand(1);

  int n = 0;
  double eta1 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  int points = 101;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 42;
  std::string out_path;
  int n_max = 3;

  auto* optimize = app.add_subcommand("optimize", "Optimal strategy for (n, eta1) as JSON");
  optimize->add_option("--n", n, "Program copies per state")->required()->check(CLI::PositiveNumber);
  optimize->add_option("--eta1", eta1, "Prior of the first register")->required()->check(CLI::Range(0.0, 1.0));

  auto* sweep_cmd = app.add_subcommand("sweep", "CSV of success probabilities over eta1 in [0, 1]");
  sweep_cmd->add_option("--n", n, "Program copies per state")->required()->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--points", points, "Number of priors")->check(CLI::Range(2, 100000000));
  sweep_cmd->add_option("--out", out_path, "Output CSV path")->required();

  auto* spectrum = app.add_subcommand("spectrum", "Block spectra of the failure element as JSON");
  spectrum->add_option("--n", n, "Program copies per state")->required()->check(CLI::PositiveNumber);
  spectrum->add_option("--c1", c1, "Scale of Pi1")->required()->check(CLI::Range(0.0, 1.0));
  spectrum->add_option("--c2", c2, "Scale of Pi2")->required()->check(CLI::Range(0.0, 1.0));

  auto* montecarlo = app.add_subcommand("montecarlo", "Monte Carlo average success at the optimum");
  montecarlo->add_option("--n", n, "Program copies per state")->required()->check(CLI::PositiveNumber);
  montecarlo->add_option("--eta1", eta1, "Prior of the first register")->required()->check(CLI::Range(0.0, 1.0));
  montecarlo->add_option("--samples", samples, "Random qubit pairs")
      ->check(CLI::Range(static_cast<std::uint64_t>(kMinMonteCarloSamples), UINT64_MAX));
  montecarlo->add_option("--seed", seed, "Random seed");

  auto* verify = app.add_subcommand("verify", "Oracle cross-check suite");
  verify->add_option("--n-max", n_max, "Largest n to check (at most 5)")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*optimize) return cmd_optimize(n, eta1, out);
    if (*sweep_cmd) return cmd_sweep(n, points, out_path, err);
    if (*spectrum) return cmd_spectrum(n, c1, c2, out);
    if (*montecarlo) return cmd_montecarlo(n, eta1, samples, seed, out);
    if (*verify) return cmd_verify(n_max, out, err);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "refused: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace uqd::cli
