#pragma once

#include <complex>

namespace qfc {

/// Branch of the closed-form propagator, selected by the sign of
/// theta^2 = Omega_0^2 - kappa_D^2.
enum class CouplingRegime { trig, degenerate, hyper };

struct ThetaResult {
  double theta_sq = 0.0;
  CouplingRegime regime = CouplingRegime::trig;
};

/// Classifies theta^2 with a relative dead band around zero,
/// eps = 1e-6 * max(Omega_0, |kappa_D|): |theta^2| <= eps^2 is degenerate.
ThetaResult compute_theta(double omega0, double kappa_D);

/// Entries of the comoving-frame fundamental matrix after a dwell time tau:
///   M(tau) = [[ f1p, -f2 ], [ conj(f2), f1i ]]
/// mapping (psi_p, psi_i)(0) -> (psi_p, psi_i)(tau). f1p and f1i are real;
/// the pump phase sits entirely in f2.
struct PropagatorCoefficients {
  double f1p = 1.0;
  double f1i = 1.0;
  std::complex<double> f2{0.0, 0.0};
  double theta_sq = 0.0;
  double kappa_s = 0.0;
  double kappa_D = 0.0;
  double tau = 0.0;
};

/// Evaluates the closed-form coefficients
///   f1p = e^{-ks t}(C(t) - kD S(t)),  f1i = e^{-ks t}(C(t) + kD S(t)),
///   f2  = Omega0 e^{i Phi_s} e^{-ks t} S(t)
/// where C, S are cos/cosh and sin/sinh profiles of theta t (S carries the
/// 1/theta), continued through theta^2 -> 0 as C = 1, S = t. All three
/// regimes are handled; tau must be >= 0.
PropagatorCoefficients propagator_coeffs(double omega0, double phi_s, double kappa_p,
                                         double kappa_i, double tau);

/// Single-photon conversion probability p_i = |f2|^2. Can exceed 1 under
/// net gain; never clamped here.
double conversion_probability(const PropagatorCoefficients& c);

/// First interior maximum of p_i(tau) in the oscillatory regime:
/// theta tau* = atan2(theta, kappa_s). Throws std::domain_error outside the
/// trig regime (no interior optimum exists there).
double optimal_tau(double omega0, double kappa_s, double kappa_D);

}  // namespace qfc
