#pragma once

#include <complex>
#include <vector>

#include "qfc/core.hpp"

namespace qfc {

/// Train of N identical single-photon Gaussian modes centred at
/// t_j = j*rep_period, j = 1..N, with amplitude width sigma_t:
///   u_j(t) = (pi sigma_t^2)^{-1/4} exp(-(t - t_j)^2 / (2 sigma_t^2)).
/// Each mode carries exactly one photon.
struct PulseTrainSpec {
  int n_pulses = 1;
  double rep_period = 0.0;  // s
  double sigma_t = 0.0;     // s

  /// sigma_t from an intensity FWHM: sigma_t = fwhm / (2 sqrt(ln 2)).
  static PulseTrainSpec from_intensity_fwhm(int n_pulses, double rep_period, double fwhm);

  double center(int j) const { return j * rep_period; }
  /// Overlap between neighbours is negligible when this holds; correlators
  /// are exact either way, but the well-separated identities (pulse
  /// distinguishability, periodicity) degrade below it.
  bool well_separated() const { return rep_period >= 10.0 * sigma_t; }
  void validate() const;
};

/// u_j(t) for j in 1..n_pulses. Real-valued in the rotating frame but typed
/// complex to match the correlator algebra.
std::complex<double> pulse_envelope(const PulseTrainSpec& spec, int j, double t);

/// Photon flux of the input train, n_p(t) = sum_j |u_j(t)|^2 (1/s).
double input_rate(const PulseTrainSpec& spec, double t);

/// First-order coherence of the train at delay dt:
///   g1_p(t, dt) = sum_j u_j*(t) u_j(t + dt).
/// Orthogonal single-photon modes carry no cross-mode coherence.
std::complex<double> input_g1(const PulseTrainSpec& spec, double t, double dt);

/// Second-order correlation, direct plus exchange contributions over
/// distinct mode pairs:
///   g2_p(t, dt) = sum_{j != k} [ |u_j(t)|^2 |u_k(t+dt)|^2
///                              + u_j*(t) u_j(t+dt) u_k*(t+dt) u_k(t) ].
/// A single pulse gives exactly zero (one photon cannot coincide with
/// itself).
double input_g2(const PulseTrainSpec& spec, double t, double dt);

/// Direct term only; the difference from input_g2 bounds the exchange
/// contribution, which is exponentially small for separated pulses.
double input_g2_direct_only(const PulseTrainSpec& spec, double t, double dt);

struct Envelope {
  TimeGrid grid;
  std::vector<std::complex<double>> samples;
};

Envelope sample_envelope(const PulseTrainSpec& spec, int j, const TimeGrid& grid);

}  // namespace qfc
