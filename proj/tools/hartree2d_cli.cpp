// Command line driver: single solves and kappa sweeps from a config file.
#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <string>
#include <utility>
#include <vector>

#include "hartree/config.hpp"
#include "hartree/sweep.hpp"

namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitNoConvergence = 3;
constexpr int kExitIoError = 4;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-component Hartree ground states on a square domain"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand(
      "solve", "Run the solver over the configured kappa values");
  std::string config_path;
  std::string kappa_override;
  std::string out_override;
  std::string conv_override;
  std::string init_override;
  int threads_override = 0;
  solve->add_option("--config", config_path, "Config file (key = value lines)")
      ->required();
  solve->add_option("--kappa", kappa_override,
                    "Comma separated kappa list override");
  solve->add_option("--out", out_override, "Output directory override");
  solve->add_option("--threads", threads_override, "Thread budget override");
  solve->add_option("--conv", conv_override,
                    "Convolution path override: direct | fast");
  solve->add_option("--init", init_override,
                    "Initial state override: uniform | gaussian | "
                    "from-file:<path>");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfigError;
  }

  std::vector<std::pair<std::string, std::string>> overrides;
  if (solve->count("--kappa")) overrides.emplace_back("kappa", kappa_override);
  if (solve->count("--out")) overrides.emplace_back("out", out_override);
  if (solve->count("--threads"))
    overrides.emplace_back("threads", std::to_string(threads_override));
  if (solve->count("--conv")) overrides.emplace_back("conv", conv_override);
  if (solve->count("--init")) overrides.emplace_back("init", init_override);

  hartree::RunConfig cfg;
  try {
    cfg = hartree::parse_config(config_path, overrides);
  } catch (const hartree::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfigError;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfigError;
  }

  try {
    const hartree::SweepOutcome outcome = hartree::run_sweep(cfg);
    for (const auto& r : outcome.records) {
      std::printf("kappa=%-8g mu1=%-12.6g mu2=%-12.6g D0=%-12.6g %s "
                  "(%ld outer, %ld pm, %.2fs)\n",
                  r.kappa, r.mu1, r.mu2, r.d0,
                  r.converged ? "converged" : "NOT CONVERGED",
                  r.outer_iterations, r.pm_iterations, r.seconds);
    }
    std::printf("outputs in %s\n", outcome.output_dir.c_str());
    return outcome.exit_code;
  } catch (const hartree::IoError& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return kExitIoError;
  } catch (const hartree::MssError& e) {
    std::fprintf(stderr, "solver error: %s\n", e.what());
    return kExitNoConvergence;
  } catch (const hartree::PowerMethodError& e) {
    std::fprintf(stderr, "solver error: %s\n", e.what());
    return kExitNoConvergence;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfigError;
  }
}
