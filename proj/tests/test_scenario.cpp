#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "qfc/errors.hpp"
#include "qfc/scenario.hpp"

using namespace qfc;
using nlohmann::json;

namespace {

const std::filesystem::path kScenarioDir = QFC_SCENARIO_DIR;
const std::filesystem::path kTmpDir = QFC_TEST_TMP_DIR;

json minimal_scenario() {
  return json{{"schema_version", 1},
              {"physical",
               {{"crystal_length_m", 0.05},
                {"group_velocity_p_m_s", 1.4e8},
                {"group_velocity_i_m_s", 1.4e8},
                {"coupling_omega0_rad_s", 3.8e9}}},
              {"noise", json::object()},
              {"pulses", {{"count", 2}, {"rep_period_s", 1e-7}, {"width_s", 1e-9}}}};
}

std::filesystem::path write_tmp(const std::string& name, const std::string& body) {
  std::filesystem::create_directories(kTmpDir);
  const auto path = kTmpDir / name;
  std::ofstream out(path);
  out << body;
  return path;
}

}  // namespace

TEST_CASE("the shipped sweep scenario parses to its literal values") {
  const Scenario s = load_scenario(kScenarioDir / "paper_fig2.json");
  CHECK(s.schema_version == 1);
  CHECK(s.physical.crystal_length == 0.05677887462121212);
  CHECK(s.physical.group_velocity_p == 136269299.0909091);
  CHECK(s.physical.group_velocity_i == 136269299.0909091);
  CHECK(s.physical.coupling_omega0 == 3769911184.3077517);
  CHECK(s.physical.pump_phase_phi_s == 0.0);
  CHECK(s.physical.photon_bandwidth_delta_k == 27.6651542897622);
  CHECK(s.noise.noise_bandwidth == 5e10);
  REQUIRE(s.noise.channels_p.size() == 1);
  REQUIRE(s.noise.channels_i.size() == 2);
  CHECK(s.noise.channels_p[0].loss_rate_plus == 113097335.52923255);
  CHECK(s.noise.channels_p[0].gain_rate_minus == 0.0);
  CHECK(s.noise.channels_i[1].gain_rate_minus == 226194671.0584651);
  CHECK(s.noise.has_gain());
  CHECK(s.pulses.n_pulses == 10);
  CHECK(s.pulses.rep_period == 1e-7);
  CHECK(s.pulses.sigma_t == doctest::Approx(6.00561204393225e-10).epsilon(1e-15));
  CHECK(s.width_convention == "intensity_fwhm");
  REQUIRE(s.sweep.has_value());
  CHECK(s.sweep->start == 0.1);
  CHECK(s.sweep->end == 3.0);
  CHECK(s.sweep->n_lengths == 59);
  CHECK_FALSE(s.trace.has_value());
  CHECK(s.normalization == Normalization::rescaled_to_ideal_max);
}

TEST_CASE("the shipped trace scenario selects the middle pulse") {
  const Scenario s = load_scenario(kScenarioDir / "paper_fig3.json");
  REQUIRE(s.trace.has_value());
  CHECK(s.trace->dt_start == -1.25e-7);
  CHECK(s.trace->dt_end == 1.25e-7);
  CHECK(s.trace->n_delays == 100001);
  CHECK(s.trace->pulse_index == 0);
  CHECK(s.resolved_pulse_index() == 5);  // (10 + 1) / 2, 1-based
  CHECK(s.normalization == Normalization::rescaled_to_noiseless_max);
}

TEST_CASE("a minimal scenario fills in the documented defaults") {
  const Scenario s = parse_scenario(minimal_scenario());
  CHECK(s.physical.pump_phase_phi_s == 0.0);
  CHECK(s.physical.photon_bandwidth_delta_k == 0.0);
  CHECK_FALSE(s.physical.gvd_p.has_value());
  CHECK(s.noise.empty());
  CHECK(s.normalization == Normalization::raw);
  CHECK(s.validity.order_n == 0);
  CHECK(s.validity.threshold == 0.1);
  CHECK(s.samples_per_sigma == 64);
  CHECK(s.resolved_pulse_index() == 1);  // middle of a two-pulse train rounds up front
  // intensity fwhm of 1 ns converts to the train's sigma
  CHECK(s.pulses.sigma_t == doctest::Approx(6.00561204393225e-10).epsilon(1e-15));
}

TEST_CASE("the sigma width convention is taken verbatim") {
  json j = minimal_scenario();
  j["pulses"]["width_convention"] = "sigma";
  j["pulses"]["width_s"] = 7e-10;
  const Scenario s = parse_scenario(j);
  CHECK(s.pulses.sigma_t == 7e-10);
  CHECK(s.width_value == 7e-10);

  j["pulses"]["width_convention"] = "half_maximum";
  CHECK_THROWS_AS(parse_scenario(j), ScenarioError);
}

TEST_CASE("unknown keys are rejected wherever they appear") {
  for (const char* where : {"top", "physical", "noise", "pulses", "channel"}) {
    json j = minimal_scenario();
    if (std::string(where) == "top")
      j["surprise"] = 1;
    else if (std::string(where) == "channel")
      j["noise"]["channels_p"] = json::array({{{"loss_per_s", 1e8}, {"colour", "red"}}});
    else
      j[where]["surprise"] = 1;
    CAPTURE(where);
    CHECK_THROWS_AS(parse_scenario(j), ScenarioError);
  }
}

TEST_CASE("errors carry the offending field by name") {
  json j = minimal_scenario();
  j["pulses"]["count"] = 0;
  try {
    parse_scenario(j);
    FAIL("expected a scenario error");
  } catch (const ScenarioError& e) {
    CHECK(std::string(e.what()).find("count") != std::string::npos);
  }

  j = minimal_scenario();
  j["unexpected"] = true;
  try {
    parse_scenario(j);
    FAIL("expected a scenario error");
  } catch (const ScenarioError& e) {
    CHECK(std::string(e.what()).find("unexpected") != std::string::npos);
  }
}

TEST_CASE("required keys and bad values are rejected") {
  json j = minimal_scenario();
  j["physical"].erase("coupling_omega0_rad_s");
  CHECK_THROWS_AS(parse_scenario(j), ScenarioError);

  j = minimal_scenario();
  j.erase("pulses");
  CHECK_THROWS_AS(parse_scenario(j), ScenarioError);

  j = minimal_scenario();
  j["schema_version"] = 2;
  CHECK_THROWS_AS(parse_scenario(j), ScenarioError);

  j = minimal_scenario();
  j["pulses"]["width_s"] = -1e-9;
  CHECK_THROWS_AS(parse_scenario(j), ScenarioError);

  j = minimal_scenario();
  j["normalization"] = "biggest";
  CHECK_THROWS_AS(parse_scenario(j), ScenarioError);

  j = minimal_scenario();
  j["trace"] = {{"dt_start_s", -1e-9}, {"dt_end_s", 1e-9}, {"n_delays", 11},
                {"pulse_index", 7}};
  CHECK_THROWS_AS(parse_scenario(j), ScenarioError);  // beyond the two-pulse train

  j = minimal_scenario();
  j["samples_per_sigma"] = 2;
  CHECK_THROWS_AS(parse_scenario(j), ScenarioError);

  j = minimal_scenario();
  j["sweep"] = {{"l_over_l0_start", 0.5}, {"l_over_l0_end", 0.4}, {"n_lengths", 10}};
  CHECK_THROWS_AS(parse_scenario(j), ScenarioError);
}

TEST_CASE("scenario files that cannot be read raise scenario errors") {
  CHECK_THROWS_AS(load_scenario(kTmpDir / "does_not_exist.json"), ScenarioError);
  const auto broken = write_tmp("broken.json", "{\"schema_version\": 1,,}");
  CHECK_THROWS_AS(load_scenario(broken), ScenarioError);
}

TEST_CASE("the resolved echo exposes derived quantities") {
  const Scenario s = load_scenario(kScenarioDir / "paper_fig3.json");
  const json echo = scenario_to_json(s);
  CHECK(echo["pulses"]["sigma_t_s"].get<double>() ==
        doctest::Approx(6.00561204393225e-10).epsilon(1e-15));
  CHECK(echo["trace"]["resolved_pulse_index"].get<int>() == 5);
  CHECK(echo["normalization"].get<std::string>() == "rescaled_to_noiseless_max");
  CHECK(echo["physical"]["crystal_length_m"].get<double>() == s.physical.crystal_length);
}

TEST_CASE("normalization names round-trip") {
  for (auto n : {Normalization::raw, Normalization::rescaled_to_ideal_max,
                 Normalization::rescaled_to_noiseless_max})
    CHECK(normalization_from_string(to_string(n)) == n);
  CHECK_THROWS_AS(normalization_from_string("maximal"), ScenarioError);
}

TEST_CASE("sweep grids expand to evenly spaced multiples") {
  SweepGrid g{0.5, 1.5, 3};
  const std::vector<double> v = g.values();
  REQUIRE(v.size() == 3);
  CHECK(v[0] == 0.5);
  CHECK(v[1] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(v[2] == 1.5);
  SweepGrid single{2.0, 2.0, 1};
  CHECK(single.values() == std::vector<double>{2.0});
}
