#include "qfc/run.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>

#include "qfc/csv.hpp"
#include "qfc/oracle.hpp"
#include "qfc/version.hpp"

namespace qfc {

namespace {

using nlohmann::json;

void ensure_out_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir))
    throw IoError("cannot create output directory: " + dir.string());
}

// Closed form against the RK4 reference for one (config, noise) pair;
// returns the worst per-component deviation on an O(1) scale.
double oracle_disagreement(const PhysicalConfig& cfg, const NoiseModel& noise) {
  const EffectiveKappas k = effective_kappas(noise);
  const double tau = cfg.transit_time();
  const PropagatorCoefficients closed = propagator_coeffs(
      cfg.coupling_omega0, cfg.pump_phase_phi_s, k.kappa_p, k.kappa_i, tau);
  const double scale =
      std::max({cfg.coupling_omega0, std::abs(k.kappa_p), std::abs(k.kappa_i)});
  double h = tau / 128.0;
  if (scale > 0.0) h = std::min(h, 1e-3 / scale);
  const oracle::CoefficientTriple rk = oracle::rk4_propagator(
      cfg.coupling_omega0, cfg.pump_phase_phi_s, k.kappa_p, k.kappa_i, tau, h);
  auto dev = [](std::complex<double> a, std::complex<double> b) {
    return std::abs(a - b) / std::max(1.0, std::abs(a));
  };
  return std::max({dev(closed.f1p, rk.f1p), dev(closed.f1i, rk.f1i), dev(closed.f2, rk.f2)});
}

void require_oracle_agreement(double worst, double tol) {
  if (!(worst <= tol))
    throw std::runtime_error("oracle cross-check failed: coefficient disagreement " +
                             format_g17(worst) + " exceeds " + format_g17(tol));
}

void warn_if_above_unity(double p_i, const std::string& where) {
  if (p_i > 1.0)
    std::cerr << "warning: conversion probability " << format_g17(p_i) << " exceeds 1 " << where
              << " (net gain regime; value reported unclamped)\n";
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw IoError("write failed: " + path.string());
}

json manifest_skeleton(const std::string& command, const Scenario& s,
                       const std::string& scenario_path) {
  json m;
  m["generator"] = {{"name", "qfc"}, {"version", kVersion}};
  m["command"] = command;
  m["scenario_file"] = scenario_path;
  m["scenario"] = scenario_to_json(s);
  return m;
}

const char* verdict_name(CheckVerdict v) {
  switch (v) {
    case CheckVerdict::pass: return "pass";
    case CheckVerdict::fail: return "fail";
    case CheckVerdict::not_evaluated: return "not_evaluated";
  }
  return "not_evaluated";
}

}  // namespace

void run_rate_sweep(const Scenario& s, const std::string& scenario_path,
                    const std::filesystem::path& out_dir, const RunOptions& opts) {
  if (!s.sweep) throw ScenarioError("rate-sweep needs a 'sweep' section in the scenario");
  ensure_out_dir(out_dir);

  SweepOptions sweep_opts;
  sweep_opts.samples_per_sigma = s.samples_per_sigma;
  sweep_opts.threads = opts.threads;
  const std::vector<double> lengths = s.sweep->values();
  const SweepResult result =
      sweep_length(s.physical, s.pulses, s.noise, lengths, s.normalization, sweep_opts);

  double worst_oracle = 0.0;
  if (opts.oracle_check) {
    const double L0 = result.reference_length;
    for (double l : lengths) {
      PhysicalConfig cfg = s.physical;
      cfg.crystal_length = l * L0;
      worst_oracle = std::max(worst_oracle, oracle_disagreement(cfg, s.noise));
    }
    require_oracle_agreement(worst_oracle, opts.oracle_tol);
  }

  double max_p_i = 0.0, max_p_i_length = 0.0;
  for (const auto& p : result.points)
    if (p.conversion_prob > max_p_i) {
      max_p_i = p.conversion_prob;
      max_p_i_length = p.L_over_L0;
    }
  warn_if_above_unity(max_p_i, "at L/L0=" + format_g17(max_p_i_length));

  const auto csv_path = out_dir / "rate_sweep.csv";
  {
    CsvWriter csv(csv_path, {"L_over_L0", "peak_rate_ideal", "peak_rate_lossy",
                             "peak_rate_total", "background"});
    for (const auto& p : result.points)
      csv.row({p.L_over_L0, p.peak_ideal, p.peak_lossy, p.peak_total, p.background});
    csv.close();
  }

  json manifest = manifest_skeleton("rate-sweep", s, scenario_path);
  manifest["outputs"] = {"rate_sweep.csv"};
  json derived;
  derived["reference_length_m"] = result.reference_length;
  derived["normalizer_per_s"] = result.normalizer;
  derived["max_conversion_prob"] = max_p_i;
  if (s.noise.has_gain()) {
    const SnrReport snr = compute_snr(s.physical, s.pulses, s.noise);
    derived["snr"] = {{"value", snr.snr},
                      {"signal_peak_per_s", snr.signal_peak},
                      {"background_per_s", snr.background}};
  }
  if (opts.oracle_check) derived["oracle_max_disagreement"] = worst_oracle;
  manifest["derived"] = derived;
  write_json_file(out_dir / "manifest.json", manifest);

  std::cout << "wrote " << csv_path.string() << " (" << result.points.size() << " rows)\n";
}

void run_correlations(const Scenario& s, const std::string& scenario_path,
                      const std::filesystem::path& out_dir, const RunOptions& opts) {
  if (!s.trace) throw ScenarioError("correlations needs a 'trace' section in the scenario");
  ensure_out_dir(out_dir);

  ConversionModel model(s.physical, s.pulses, s.noise);
  if (opts.oracle_check)
    require_oracle_agreement(oracle_disagreement(s.physical, s.noise), opts.oracle_tol);
  warn_if_above_unity(model.conversion_prob(), "for the configured crystal length");

  const int pulse = s.resolved_pulse_index();
  const double t_out = model.tau() + s.pulses.center(pulse);
  const TimeGrid grid = s.trace->delays();
  if (s.pulses.center(pulse) + grid.t_start < 0.0)
    throw ScenarioError("trace: delay window reaches before the crystal transit time");

  const CorrelationTrace tr_g1 =
      correlation_trace(model, TraceKind::g1, grid, t_out, s.normalization, opts.threads);
  const CorrelationTrace tr_g2 =
      correlation_trace(model, TraceKind::g2, grid, t_out, s.normalization, opts.threads);

  const auto g1_path = out_dir / "g1.csv";
  {
    CsvWriter csv(g1_path, {"dt_s", "g1_raw_per_s", "g1_rescaled"});
    for (int k = 0; k < grid.n_samples; ++k)
      csv.row({grid.at(k), tr_g1.raw[k], tr_g1.rescaled[k]});
    csv.close();
  }

  const auto g2_path = out_dir / "g2.csv";
  {
    CsvWriter csv(g2_path,
                  {"dt_s", "g2_raw_per_s2", "g2_rescaled", "term_converted_per_s2",
                   "term_interference_per_s2", "term_signal_background_per_s2",
                   "term_background_profile_per_s2", "term_background_sq_per_s2"});
    for (int k = 0; k < grid.n_samples; ++k) {
      const G2Terms& t = tr_g2.terms[k];
      csv.row({grid.at(k), tr_g2.raw[k], tr_g2.rescaled[k], t.converted, t.interference,
               t.signal_background, t.background_profile, t.background_sq});
    }
    csv.close();
  }

  json manifest = manifest_skeleton("correlations", s, scenario_path);
  manifest["outputs"] = {"g1.csv", "g2.csv"};
  json derived;
  derived["transit_time_s"] = model.tau();
  derived["t_output_s"] = t_out;
  derived["conversion_prob"] = model.conversion_prob();
  derived["background0_per_s"] = model.background0();
  derived["g1_normalizer_per_s"] = tr_g1.normalizer;
  derived["g2_normalizer_per_s2"] = tr_g2.normalizer;
  manifest["derived"] = derived;
  write_json_file(out_dir / "manifest.json", manifest);

  std::cout << "wrote " << g1_path.string() << " and " << g2_path.string() << " ("
            << grid.n_samples << " rows)\n";
}

bool run_validity(const Scenario& s, const std::string& scenario_path,
                  const std::filesystem::path& out_dir, const RunOptions&) {
  ensure_out_dir(out_dir);
  const ValidityReport rep =
      check_validity(s.physical, s.validity.order_n, s.validity.threshold);

  struct Row {
    const char* name;
    const ValidityItem* item;
    bool wants_large;
  };
  const Row rows[] = {{"dispersion_p", &rep.dispersion_p, false},
                      {"dispersion_i", &rep.dispersion_i, false},
                      {"gv_mismatch", &rep.gv_mismatch, false},
                      {"coherence", &rep.coherence, true},
                      {"sdc", &rep.sdc, false}};

  std::cout << "validity order_n=" << rep.order_n << " threshold=" << format_g17(rep.threshold)
            << '\n';
  json checks = json::array();
  for (const Row& r : rows) {
    json item;
    item["name"] = r.name;
    item["pass_when"] = r.wants_large ? "above_inverse_threshold" : "below_threshold";
    std::cout << "  " << r.name;
    for (std::size_t pad = std::string(r.name).size(); pad < 14; ++pad) std::cout << ' ';
    if (r.item->value) {
      item["value"] = *r.item->value;
      item["verdict"] = verdict_name(r.item->verdict);
      const std::string bound = r.wants_large ? "> " + format_g17(1.0 / rep.threshold)
                                              : "< " + format_g17(rep.threshold);
      std::cout << format_g17(*r.item->value) << "  "
                << (r.item->verdict == CheckVerdict::pass ? "pass" : "FAIL") << " (needs "
                << bound << ")\n";
    } else {
      item["value"] = nullptr;
      item["verdict"] = verdict_name(CheckVerdict::not_evaluated);
      std::cout << "not evaluated\n";
    }
    checks.push_back(item);
  }
  const bool ok = rep.all_evaluated_pass();
  std::cout << "result: " << (ok ? "PASS" : "FAIL") << '\n';

  json report;
  report["order_n"] = rep.order_n;
  report["threshold"] = rep.threshold;
  report["checks"] = checks;
  report["all_evaluated_pass"] = ok;
  write_json_file(out_dir / "validity.json", report);

  json manifest = manifest_skeleton("validity", s, scenario_path);
  manifest["outputs"] = {"validity.json"};
  manifest["derived"] = {{"all_evaluated_pass", ok}};
  write_json_file(out_dir / "manifest.json", manifest);
  return ok;
}

}  // namespace qfc
