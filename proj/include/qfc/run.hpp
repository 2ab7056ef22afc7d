#pragma once

#include <filesystem>
#include <string>

#include "qfc/scenario.hpp"

namespace qfc {

struct RunOptions {
  int threads = 1;
  bool oracle_check = false;
  double oracle_tol = 1e-6;
};

/// Writes rate_sweep.csv and manifest.json into out_dir. Throws
/// ScenarioError / IoError / std::runtime_error (numerical failure,
/// including an oracle disagreement beyond oracle_tol).
void run_rate_sweep(const Scenario& s, const std::string& scenario_path,
                    const std::filesystem::path& out_dir, const RunOptions& opts);

/// Writes g1.csv, g2.csv and manifest.json into out_dir.
void run_correlations(const Scenario& s, const std::string& scenario_path,
                      const std::filesystem::path& out_dir, const RunOptions& opts);

/// Writes validity.json and manifest.json, prints the report to stdout.
/// Returns true when every evaluated check passes.
bool run_validity(const Scenario& s, const std::string& scenario_path,
                  const std::filesystem::path& out_dir, const RunOptions& opts);

}  // namespace qfc
