#pragma once

#include <functional>

#include "qfc/core.hpp"
#include "qfc/propagator.hpp"

namespace qfc {

/// Unit-area Gaussian regularization of the delta-correlated reservoirs,
/// D(dt) = exp(-dt^2/(2 sigma_n^2)) / (sqrt(2 pi) sigma_n) with
/// sigma_n = 1/(2 pi bandwidth).
struct NoiseKernel {
  double bandwidth = 0.0;  // Hz
  double sigma_n = 0.0;    // s

  double density(double dt) const;
};

NoiseKernel make_noise_kernel(double bandwidth_hz);

/// Convenience: D(dt) for a given bandwidth.
double noise_kernel(double bandwidth_hz, double dt);

/// Propagator coefficients as a function of dwell time, M(tau1).
using CoefficientFn = std::function<PropagatorCoefficients(double)>;

/// Stationary background added by the gain reservoirs at the output facet.
/// `flux` is the dwell-time integral
///   J = int_0^{tau_L} [ |f1i(t1)|^2 K_i + |f2(t1)|^2 K_p ] dt1
/// with K_j = sum_r kappa_r^(-) over band j, so that
///   I(L; t, t + dt) = D(dt) * J   for every t (time independent).
struct NoiseBackground {
  double flux = 0.0;  // dimensionless (rate integrated over dwell time)
  NoiseKernel kernel;

  /// Flat background rate B0 = I(L; t, t) = D(0) * flux (1/s).
  double b0() const;
  /// I(L; t, t + dt) = b0 * D(dt)/D(0); exact b0 at dt = 0.
  double at(double dt) const;
};

struct QuadratureOptions {
  int min_nodes = 1001;
  double rel_tol = 1e-8;
  int max_nodes = (1 << 21) + 1;
};

/// Integrates the gain flux for a propagator given as coeffs_at and the
/// gain sums of `noise`. Throws if gains are present without a positive
/// noise bandwidth, or if tau_L < 0.
NoiseBackground make_noise_background(const CoefficientFn& coeffs_at, const NoiseModel& noise,
                                      double tau_L, const QuadratureOptions& opts = {});

/// One-shot I(L; t, t+dt); prefer make_noise_background when evaluating
/// many delays (the integral is reused).
double noise_background(const CoefficientFn& coeffs_at, const NoiseModel& noise, double tau_L,
                        double dt, const QuadratureOptions& opts = {});

}  // namespace qfc
