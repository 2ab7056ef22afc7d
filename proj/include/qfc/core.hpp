#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qfc {

/// Crystal, drive and band parameters. SI units throughout (m, s, rad).
///
/// The propagation formulas use a single effective group velocity, taken
/// from the p band; the i/p mismatch enters only the validity checks.
struct PhysicalConfig {
  double crystal_length = 0.0;            ///< L (m), > 0
  double group_velocity_p = 0.0;          ///< v_g^p (m/s), > 0
  double group_velocity_i = 0.0;          ///< v_g^i (m/s), > 0
  double coupling_omega0 = 0.0;           ///< pump coupling Omega_0 (rad/s), >= 0
  double pump_phase_phi_s = 0.0;          ///< pump phase Phi_s (rad)
  std::optional<double> gvd_p;            ///< d^2 omega/dk^2, p band (m^2/s)
  std::optional<double> gvd_i;            ///< d^2 omega/dk^2, i band (m^2/s)
  std::optional<double> sdc_rate_gamma;   ///< spontaneous down-conversion rate (1/s)
  double photon_bandwidth_delta_k = 0.0;  ///< wavenumber half-width Delta_k (1/m)

  double effective_group_velocity() const { return group_velocity_p; }
  double transit_time() const { return crystal_length / group_velocity_p; }

  /// Throws std::invalid_argument on non-positive lengths/velocities or
  /// negative rates.
  void validate() const;
};

/// One Markovian reservoir coupling: a loss rate kappa^(+) and a gain rate
/// kappa^(-), both non-negative.
struct NoiseChannel {
  std::string label;
  double loss_rate_plus = 0.0;   // 1/s
  double gain_rate_minus = 0.0;  // 1/s

  void validate() const;
};

/// Per-band channel lists plus the bandwidth used to regularize the
/// delta-correlated Langevin noise. Net band rates may be negative (gain).
struct NoiseModel {
  std::vector<NoiseChannel> channels_p;
  std::vector<NoiseChannel> channels_i;
  double noise_bandwidth = 0.0;  ///< Hz; must be > 0 whenever any gain rate is > 0

  void validate() const;
  bool has_gain() const;
  bool empty() const { return channels_p.empty() && channels_i.empty(); }
  /// Copy with all gain rates stripped (loss channels kept).
  NoiseModel losses_only() const;
};

/// Uniform sampling grid, t_k = t_start + k*dt.
struct TimeGrid {
  double t_start = 0.0;
  double t_end = 0.0;
  int n_samples = 0;  // >= 2

  void validate() const;
  double dt() const { return (t_end - t_start) / (n_samples - 1); }
  double at(int k) const { return t_start + k * dt(); }
};

/// Net band rates kappa_j = sum_r (kappa_r^(+) - kappa_r^(-)) and the
/// derived sum/difference rates entering the propagator coefficients.
struct EffectiveKappas {
  double kappa_p = 0.0;
  double kappa_i = 0.0;
  double kappa_s = 0.0;  ///< (kappa_i + kappa_p)/2
  double kappa_D = 0.0;  ///< (kappa_p - kappa_i)/2
};

EffectiveKappas effective_kappas(const NoiseModel& noise);

/// Band gain-rate sums sum_r kappa_r^(-): the Langevin source strengths.
double gain_rate_sum_p(const NoiseModel& noise);
double gain_rate_sum_i(const NoiseModel& noise);

/// Shortest crystal length with complete conversion at the output facet,
/// L_n = (2n+1)(pi/2) v_g / Omega_0. Throws for an undriven medium
/// (coupling_omega0 == 0) or n < 0.
double minimal_length(const PhysicalConfig& cfg, int n);

enum class CheckVerdict { pass, fail, not_evaluated };

struct ValidityItem {
  std::optional<double> value;
  CheckVerdict verdict = CheckVerdict::not_evaluated;
};

/// Dimensionless regime numbers behind the model assumptions. "Small"
/// numbers pass below `threshold`; the coherence number L*Delta_k must
/// instead exceed 1/threshold.
struct ValidityReport {
  ValidityItem dispersion_p;  ///< (2n+1)(pi^2/8) gvd_p/(v_g L)
  ValidityItem dispersion_i;
  ValidityItem gv_mismatch;   ///< (2n+1)(pi/2) |v_g^p - v_g^i|/v_g
  ValidityItem coherence;     ///< L*Delta_k, pass if > 1/threshold
  ValidityItem sdc;           ///< gamma L / v_g
  double threshold = 0.1;
  int order_n = 0;

  bool all_evaluated_pass() const;
};

/// Evaluates the regime checks at conversion order n. Optional inputs
/// (GVD, gamma) that are absent yield not_evaluated entries rather than
/// assumed zeros.
ValidityReport check_validity(const PhysicalConfig& cfg, int n, double threshold = 0.1);

}  // namespace qfc
