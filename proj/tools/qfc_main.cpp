#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qfc/run.hpp"
#include "qfc/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitScenario = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;

struct CommonArgs {
  std::string scenario;
  std::string out_dir;
  int threads = 1;
  bool oracle = false;
};

void attach_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--scenario", args.scenario, "Scenario JSON file")->required();
  cmd->add_option("--out", args.out_dir, "Output directory (created if missing)")->required();
  cmd->add_option("--threads", args.threads, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_flag("--oracle", args.oracle,
                "Cross-validate propagator coefficients against the RK4 reference");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Single-photon frequency conversion: rate sweeps, correlation traces and "
               "model validity reports"};
  app.set_version_flag("--version", qfc::kVersion);
  app.require_subcommand(1);

  CommonArgs args;
  CLI::App* rate_sweep =
      app.add_subcommand("rate-sweep", "Peak conversion rate versus crystal length");
  attach_common(rate_sweep, args);
  CLI::App* correlations =
      app.add_subcommand("correlations", "g1/g2 traces versus delay at fixed output time");
  attach_common(correlations, args);
  CLI::App* validity =
      app.add_subcommand("validity", "Evaluate the model regime checks");
  attach_common(validity, args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);  // usage errors keep CLI11's own codes
  }

  qfc::RunOptions opts;
  opts.threads = args.threads;
  opts.oracle_check = args.oracle;

  try {
    const qfc::Scenario scenario = qfc::load_scenario(args.scenario);
    if (rate_sweep->parsed()) {
      qfc::run_rate_sweep(scenario, args.scenario, args.out_dir, opts);
    } else if (correlations->parsed()) {
      qfc::run_correlations(scenario, args.scenario, args.out_dir, opts);
    } else {
      if (!qfc::run_validity(scenario, args.scenario, args.out_dir, opts))
        return kExitNumerical;
    }
    return kExitOk;
  } catch (const qfc::ScenarioError& e) {
    std::cerr << "scenario error: " << e.what() << '\n';
    return kExitScenario;
  } catch (const qfc::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
}
