#include "qfc/propagator.hpp"

#include <cmath>
#include <stdexcept>

namespace qfc {

ThetaResult compute_theta(double omega0, double kappa_D) {
  const double theta_sq = omega0 * omega0 - kappa_D * kappa_D;
  const double eps = 1e-6 * std::max(omega0, std::abs(kappa_D));
  ThetaResult r;
  r.theta_sq = theta_sq;
  if (std::abs(theta_sq) <= eps * eps)
    r.regime = CouplingRegime::degenerate;
  else if (theta_sq > 0.0)
    r.regime = CouplingRegime::trig;
  else
    r.regime = CouplingRegime::hyper;
  return r;
}

PropagatorCoefficients propagator_coeffs(double omega0, double phi_s, double kappa_p,
                                         double kappa_i, double tau) {
  if (!(omega0 >= 0.0)) throw std::invalid_argument("coupling_omega0 must be >= 0");
  if (!(tau >= 0.0)) throw std::invalid_argument("dwell time tau must be >= 0");

  const double kappa_s = 0.5 * (kappa_i + kappa_p);
  const double kappa_D = 0.5 * (kappa_p - kappa_i);
  const ThetaResult th = compute_theta(omega0, kappa_D);

  // C ~ cos(theta tau), S ~ sin(theta tau)/theta, analytically continued.
  double C, S;
  switch (th.regime) {
    case CouplingRegime::trig: {
      const double theta = std::sqrt(th.theta_sq);
      C = std::cos(theta * tau);
      S = std::sin(theta * tau) / theta;
      break;
    }
    case CouplingRegime::hyper: {
      const double theta = std::sqrt(-th.theta_sq);
      C = std::cosh(theta * tau);
      S = std::sinh(theta * tau) / theta;
      break;
    }
    case CouplingRegime::degenerate:
    default:
      C = 1.0;
      S = tau;
      break;
  }

  const double damp = std::exp(-kappa_s * tau);
  PropagatorCoefficients c;
  c.f1p = damp * (C - kappa_D * S);
  c.f1i = damp * (C + kappa_D * S);
  c.f2 = std::polar(omega0 * damp * S, phi_s);
  c.theta_sq = th.theta_sq;
  c.kappa_s = kappa_s;
  c.kappa_D = kappa_D;
  c.tau = tau;
  return c;
}

double conversion_probability(const PropagatorCoefficients& c) { return std::norm(c.f2); }

double optimal_tau(double omega0, double kappa_s, double kappa_D) {
  if (!(omega0 >= 0.0)) throw std::invalid_argument("coupling_omega0 must be >= 0");
  const ThetaResult th = compute_theta(omega0, kappa_D);
  if (th.regime != CouplingRegime::trig)
    throw std::domain_error("no interior optimum: coupling does not oscillate");
  const double theta = std::sqrt(th.theta_sq);
  double phase = std::atan2(theta, kappa_s);  // in (0, pi): first maximum for any kappa_s sign
  return phase / theta;
}

}  // namespace qfc
