#include "qfc/noise.hpp"

#include "qfc/numerics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qfc {

double NoiseKernel::density(double dt) const {
  const double x = dt / sigma_n;
  return std::exp(-0.5 * x * x) / (std::sqrt(2.0 * std::numbers::pi) * sigma_n);
}

NoiseKernel make_noise_kernel(double bandwidth_hz) {
  if (!(bandwidth_hz > 0.0)) throw std::invalid_argument("noise bandwidth must be > 0");
  NoiseKernel k;
  k.bandwidth = bandwidth_hz;
  k.sigma_n = 1.0 / (2.0 * std::numbers::pi * bandwidth_hz);
  return k;
}

double noise_kernel(double bandwidth_hz, double dt) {
  return make_noise_kernel(bandwidth_hz).density(dt);
}

double NoiseBackground::b0() const {
  if (flux == 0.0) return 0.0;
  return kernel.density(0.0) * flux;
}

double NoiseBackground::at(double dt) const {
  if (flux == 0.0) return 0.0;
  if (dt == 0.0) return b0();
  return kernel.density(dt) * flux;
}

NoiseBackground make_noise_background(const CoefficientFn& coeffs_at, const NoiseModel& noise,
                                      double tau_L, const QuadratureOptions& opts) {
  noise.validate();
  if (!(tau_L >= 0.0)) throw std::invalid_argument("dwell time tau_L must be >= 0");

  const double gain_p = gain_rate_sum_p(noise);
  const double gain_i = gain_rate_sum_i(noise);

  NoiseBackground bg;
  if (gain_p == 0.0 && gain_i == 0.0) return bg;  // loss-only: no Langevin sources

  bg.kernel = make_noise_kernel(noise.noise_bandwidth);
  if (tau_L == 0.0) return bg;

  // Reservoir photons created at dwell time t1 reach the facet through the
  // remaining medium: those entering the i band propagate with |f1i|^2 of
  // the residual interval, those entering p convert with |f2|^2 of it.
  auto integrand = [&](double t1) {
    const PropagatorCoefficients c = coeffs_at(tau_L - t1);
    return c.f1i * c.f1i * gain_i + std::norm(c.f2) * gain_p;
  };
  bg.flux = converged_simpson(integrand, 0.0, tau_L, opts.min_nodes, opts.rel_tol,
                              opts.max_nodes);
  return bg;
}

double noise_background(const CoefficientFn& coeffs_at, const NoiseModel& noise, double tau_L,
                        double dt, const QuadratureOptions& opts) {
  return make_noise_background(coeffs_at, noise, tau_L, opts).at(dt);
}

}  // namespace qfc
