#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qfc/core.hpp"
#include "qfc/correlations.hpp"
#include "qfc/errors.hpp"
#include "qfc/source.hpp"

namespace qfc {

/// Crystal-length grid of a rate sweep, in multiples of L0.
struct SweepGrid {
  double start = 0.1;
  double end = 3.0;
  int n_lengths = 59;

  std::vector<double> values() const;
  void validate() const;
};

/// Delay grid of a correlation trace. pulse_index 0 selects the middle
/// pulse of the train as the fixed output time.
struct TraceGrid {
  double dt_start = 0.0;
  double dt_end = 0.0;
  int n_delays = 0;
  int pulse_index = 0;

  TimeGrid delays() const { return TimeGrid{dt_start, dt_end, n_delays}; }
  void validate() const;
};

struct ValidityParams {
  int order_n = 0;
  double threshold = 0.1;
};

/// One fully parsed scenario file. Parsing is strict: unknown keys raise
/// ScenarioError so that typos cannot silently fall back to defaults.
struct Scenario {
  int schema_version = 1;
  PhysicalConfig physical;
  NoiseModel noise;
  PulseTrainSpec pulses;
  std::string width_convention = "intensity_fwhm";
  double width_value = 0.0;  ///< as given in the file, before conversion
  std::optional<SweepGrid> sweep;
  std::optional<TraceGrid> trace;
  Normalization normalization = Normalization::raw;
  ValidityParams validity;
  int samples_per_sigma = 64;

  /// Trace pulse index with 0 resolved to the middle pulse (1-based).
  int resolved_pulse_index() const;
};

Scenario parse_scenario(const nlohmann::json& j);
/// Reads and parses a scenario file; unreadable paths and invalid JSON are
/// both reported as ScenarioError (the scenario is the broken input).
Scenario load_scenario(const std::filesystem::path& path);

/// Resolved echo of the scenario (defaults filled in), embedded in run
/// manifests.
nlohmann::json scenario_to_json(const Scenario& s);

std::string to_string(Normalization n);
Normalization normalization_from_string(const std::string& name);

}  // namespace qfc
