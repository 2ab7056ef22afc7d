#include "qfc/core.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qfc {

void PhysicalConfig::validate() const {
  if (!(crystal_length > 0.0)) throw std::invalid_argument("crystal_length must be > 0");
  if (!(group_velocity_p > 0.0)) throw std::invalid_argument("group_velocity_p must be > 0");
  if (!(group_velocity_i > 0.0)) throw std::invalid_argument("group_velocity_i must be > 0");
  if (!(coupling_omega0 >= 0.0)) throw std::invalid_argument("coupling_omega0 must be >= 0");
  if (!std::isfinite(pump_phase_phi_s)) throw std::invalid_argument("pump_phase_phi_s must be finite");
  if (gvd_p && !std::isfinite(*gvd_p)) throw std::invalid_argument("gvd_p must be finite");
  if (gvd_i && !std::isfinite(*gvd_i)) throw std::invalid_argument("gvd_i must be finite");
  if (sdc_rate_gamma && !(*sdc_rate_gamma >= 0.0))
    throw std::invalid_argument("sdc_rate_gamma must be >= 0");
  if (!(photon_bandwidth_delta_k >= 0.0))
    throw std::invalid_argument("photon_bandwidth_delta_k must be >= 0");
}

void NoiseChannel::validate() const {
  if (!(loss_rate_plus >= 0.0) || !std::isfinite(loss_rate_plus))
    throw std::invalid_argument("noise channel '" + label + "': loss rate must be >= 0");
  if (!(gain_rate_minus >= 0.0) || !std::isfinite(gain_rate_minus))
    throw std::invalid_argument("noise channel '" + label + "': gain rate must be >= 0");
}

void NoiseModel::validate() const {
  for (const auto& c : channels_p) c.validate();
  for (const auto& c : channels_i) c.validate();
  if (has_gain() && !(noise_bandwidth > 0.0))
    throw std::invalid_argument("noise_bandwidth must be > 0 when any gain rate is present");
  if (!(noise_bandwidth >= 0.0)) throw std::invalid_argument("noise_bandwidth must be >= 0");
}

bool NoiseModel::has_gain() const {
  for (const auto& c : channels_p)
    if (c.gain_rate_minus > 0.0) return true;
  for (const auto& c : channels_i)
    if (c.gain_rate_minus > 0.0) return true;
  return false;
}

NoiseModel NoiseModel::losses_only() const {
  NoiseModel out = *this;
  for (auto& c : out.channels_p) c.gain_rate_minus = 0.0;
  for (auto& c : out.channels_i) c.gain_rate_minus = 0.0;
  return out;
}

void TimeGrid::validate() const {
  if (n_samples < 2) throw std::invalid_argument("time grid needs at least 2 samples");
  if (!(t_end > t_start)) throw std::invalid_argument("time grid must have t_end > t_start");
}

namespace {

double net_rate(const std::vector<NoiseChannel>& channels) {
  double k = 0.0;
  for (const auto& c : channels) k += c.loss_rate_plus - c.gain_rate_minus;
  return k;
}

double gain_sum(const std::vector<NoiseChannel>& channels) {
  double g = 0.0;
  for (const auto& c : channels) g += c.gain_rate_minus;
  return g;
}

}  // namespace

EffectiveKappas effective_kappas(const NoiseModel& noise) {
  EffectiveKappas k;
  k.kappa_p = net_rate(noise.channels_p);
  k.kappa_i = net_rate(noise.channels_i);
  k.kappa_s = 0.5 * (k.kappa_i + k.kappa_p);
  k.kappa_D = 0.5 * (k.kappa_p - k.kappa_i);
  return k;
}

double gain_rate_sum_p(const NoiseModel& noise) { return gain_sum(noise.channels_p); }
double gain_rate_sum_i(const NoiseModel& noise) { return gain_sum(noise.channels_i); }

double minimal_length(const PhysicalConfig& cfg, int n) {
  cfg.validate();
  if (n < 0) throw std::invalid_argument("conversion order n must be >= 0");
  if (cfg.coupling_omega0 == 0.0) throw std::domain_error("undriven medium: coupling_omega0 is zero");
  return (2.0 * n + 1.0) * (std::numbers::pi / 2.0) * cfg.effective_group_velocity() /
         cfg.coupling_omega0;
}

bool ValidityReport::all_evaluated_pass() const {
  for (const ValidityItem* item : {&dispersion_p, &dispersion_i, &gv_mismatch, &coherence, &sdc})
    if (item->verdict == CheckVerdict::fail) return false;
  return true;
}

ValidityReport check_validity(const PhysicalConfig& cfg, int n, double threshold) {
  cfg.validate();
  if (n < 0) throw std::invalid_argument("conversion order n must be >= 0");
  if (!(threshold > 0.0)) throw std::invalid_argument("validity threshold must be > 0");

  const double vg = cfg.effective_group_velocity();
  const double order = 2.0 * n + 1.0;
  const double pi = std::numbers::pi;

  ValidityReport rep;
  rep.threshold = threshold;
  rep.order_n = n;

  auto small = [&](double v) {
    return ValidityItem{v, v < threshold ? CheckVerdict::pass : CheckVerdict::fail};
  };

  if (cfg.gvd_p) rep.dispersion_p = small(order * (pi * pi / 8.0) * std::abs(*cfg.gvd_p) / (vg * cfg.crystal_length));
  if (cfg.gvd_i) rep.dispersion_i = small(order * (pi * pi / 8.0) * std::abs(*cfg.gvd_i) / (vg * cfg.crystal_length));

  rep.gv_mismatch = small(order * (pi / 2.0) *
                          std::abs(cfg.group_velocity_p - cfg.group_velocity_i) / vg);

  const double coherence = cfg.crystal_length * cfg.photon_bandwidth_delta_k;
  rep.coherence = ValidityItem{coherence, coherence > 1.0 / threshold ? CheckVerdict::pass
                                                                      : CheckVerdict::fail};

  if (cfg.sdc_rate_gamma)
    rep.sdc = small(*cfg.sdc_rate_gamma * cfg.crystal_length / vg);

  return rep;
}

}  // namespace qfc
