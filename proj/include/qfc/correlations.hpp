#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qfc/core.hpp"
#include "qfc/noise.hpp"
#include "qfc/propagator.hpp"
#include "qfc/source.hpp"

namespace qfc {

enum class TraceKind { photon_rate, g1, g2 };

enum class Normalization {
  raw,                        ///< physical units
  rescaled_to_ideal_max,      ///< divide by the lossless, noiseless peak
  rescaled_to_noiseless_max,  ///< divide by the same-loss, gain-free peak
};

/// Additive pieces of the output G2 at (t, t+dt); total() is their sum.
struct G2Terms {
  double converted = 0.0;           ///< p_i^2 * g2_p
  double interference = 0.0;        ///< 2 p_i Re{g1_p} * I(dt)
  double signal_background = 0.0;   ///< p_i (n_p(t') + n_p(t'+dt)) * B0
  double background_profile = 0.0;  ///< I(dt)^2
  double background_sq = 0.0;       ///< B0^2
  double total() const {
    return converted + interference + signal_background + background_profile + background_sq;
  }
};

/// Output-facet observables for one crystal length: the retarded input
/// correlators scaled by the conversion probability plus the stationary
/// gain background. All times are lab times at the output; inputs enter
/// retarded by the transit time tau.
class ConversionModel {
 public:
  ConversionModel(PhysicalConfig cfg, PulseTrainSpec pulses, NoiseModel noise);

  double tau() const { return tau_; }
  const PropagatorCoefficients& coefficients() const { return coeffs_; }
  double conversion_prob() const { return p_i_; }
  double background0() const { return background_.b0(); }
  double background_at(double dt) const { return background_.at(dt); }

  /// Converted-band flux with the gain background, p_i n_p(t - tau) + B0.
  double rate(double t) const;
  /// Same without the background term (shape reference).
  double signal_rate(double t) const;
  /// Re G1(t, t+dt) = p_i Re{g1_p(t - tau, dt)} + I(dt).
  double g1(double t, double dt) const;
  double g2(double t, double dt) const;
  G2Terms g2_terms(double t, double dt) const;

  const PhysicalConfig& config() const { return cfg_; }
  const PulseTrainSpec& pulses() const { return pulses_; }
  const NoiseModel& noise() const { return noise_; }

 private:
  double retarded(double t) const;  // throws before the transit time

  PhysicalConfig cfg_;
  PulseTrainSpec pulses_;
  NoiseModel noise_;
  double tau_ = 0.0;
  PropagatorCoefficients coeffs_;
  double p_i_ = 0.0;
  NoiseBackground background_;
};

/// Free-function forms of the model observables.
double photon_rate(const PhysicalConfig& cfg, const PulseTrainSpec& pulses,
                   const NoiseModel& noise, double t);
double ideal_photon_rate(const PhysicalConfig& cfg, const PulseTrainSpec& pulses, double t);
double g1(const PhysicalConfig& cfg, const PulseTrainSpec& pulses, const NoiseModel& noise,
          double t, double dt);
double g2(const PhysicalConfig& cfg, const PulseTrainSpec& pulses, const NoiseModel& noise,
          double t, double dt);

struct SweepOptions {
  int samples_per_sigma = 64;  ///< peak-search grid density
  int threads = 1;
};

/// One crystal length in a rate sweep. Peaks are the maxima over output
/// time of the converted rate under three noise treatments; `background`
/// is the flat B0 of the full model. Values are divided by the sweep
/// normalizer (1 for raw output).
struct SweepPoint {
  double L_over_L0 = 0.0;
  double peak_ideal = 0.0;
  double peak_lossy = 0.0;
  double peak_total = 0.0;
  double background = 0.0;
  double conversion_prob = 0.0;  ///< p_i of the full model (not rescaled, not clamped)
};

struct SweepResult {
  std::vector<SweepPoint> points;
  double normalizer = 1.0;  ///< divisor applied to raw rates
  Normalization norm = Normalization::raw;
  double reference_length = 0.0;  ///< L0 (m)
};

/// Sweeps crystal length over the given multiples of L0 =
/// minimal_length(cfg, 0). Per length: `ideal` drops the noise model
/// entirely, `lossy` keeps channels with gains stripped, `total` is the
/// full model. Peak times are located per length on a dense grid around
/// the retarded pulse centres with parabolic refinement.
SweepResult sweep_length(const PhysicalConfig& cfg, const PulseTrainSpec& pulses,
                         const NoiseModel& noise, const std::vector<double>& lengths_over_L0,
                         Normalization norm, const SweepOptions& opts = {});

/// Peak signal rate against flat background, snr = p_i n_p_peak / B0.
/// B0 = 0 (no gain channels) yields +infinity.
struct SnrReport {
  double snr = 0.0;
  double signal_peak = 0.0;  // 1/s
  double background = 0.0;   // 1/s
};

SnrReport compute_snr(const PhysicalConfig& cfg, const PulseTrainSpec& pulses,
                      const NoiseModel& noise);

/// Sampled correlation trace. For g1/g2 the axis is the delay dt at fixed
/// output time t; for photon_rate it is absolute output time (t ignored).
struct CorrelationTrace {
  TimeGrid axis;  ///< seconds
  TraceKind kind = TraceKind::g1;
  Normalization norm = Normalization::raw;
  double normalizer = 1.0;
  double t_output = 0.0;
  std::vector<double> raw;
  std::vector<double> rescaled;
  std::vector<G2Terms> terms;  ///< populated for g2 traces only
};

CorrelationTrace correlation_trace(const ConversionModel& model, TraceKind kind,
                                   const TimeGrid& dt_grid, double t, Normalization norm,
                                   int threads = 1);

/// Maximum over output time of the ideal (lossless, noiseless) converted
/// rate at length L0; the divisor behind rescaled_to_ideal_max.
double ideal_peak_rate(const PhysicalConfig& cfg, const PulseTrainSpec& pulses,
                       const SweepOptions& opts = {});

}  // namespace qfc
