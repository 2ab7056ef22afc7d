#include "qfc/source.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qfc {

PulseTrainSpec PulseTrainSpec::from_intensity_fwhm(int n_pulses, double rep_period, double fwhm) {
  if (!(fwhm > 0.0)) throw std::invalid_argument("pulse fwhm must be > 0");
  PulseTrainSpec spec;
  spec.n_pulses = n_pulses;
  spec.rep_period = rep_period;
  spec.sigma_t = fwhm / (2.0 * std::sqrt(std::numbers::ln2));
  spec.validate();
  return spec;
}

void PulseTrainSpec::validate() const {
  if (n_pulses < 1) throw std::invalid_argument("pulse train needs n_pulses >= 1");
  if (!(sigma_t > 0.0)) throw std::invalid_argument("sigma_t must be > 0");
  if (n_pulses > 1 && !(rep_period > 0.0))
    throw std::invalid_argument("rep_period must be > 0 for more than one pulse");
  if (!(rep_period >= 0.0)) throw std::invalid_argument("rep_period must be >= 0");
}

namespace {

// Real amplitude of mode j; callers hold j in range.
inline double amp(const PulseTrainSpec& s, int j, double t) {
  const double x = (t - s.center(j)) / s.sigma_t;
  return std::pow(std::numbers::pi * s.sigma_t * s.sigma_t, -0.25) * std::exp(-0.5 * x * x);
}

inline void check_index(const PulseTrainSpec& s, int j) {
  if (j < 1 || j > s.n_pulses) throw std::out_of_range("pulse index out of range");
}

}  // namespace

std::complex<double> pulse_envelope(const PulseTrainSpec& spec, int j, double t) {
  spec.validate();
  check_index(spec, j);
  return {amp(spec, j, t), 0.0};
}

double input_rate(const PulseTrainSpec& spec, double t) {
  spec.validate();
  double n = 0.0;
  for (int j = 1; j <= spec.n_pulses; ++j) {
    const double a = amp(spec, j, t);
    n += a * a;
  }
  return n;
}

std::complex<double> input_g1(const PulseTrainSpec& spec, double t, double dt) {
  spec.validate();
  double g = 0.0;
  for (int j = 1; j <= spec.n_pulses; ++j) g += amp(spec, j, t) * amp(spec, j, t + dt);
  return {g, 0.0};
}

double input_g2(const PulseTrainSpec& spec, double t, double dt) {
  spec.validate();
  // One pass per mode, then assemble the j != k sums from totals:
  //   sum_{j!=k} a_j b_k   = (sum a)(sum b) - sum a_j b_j  with a = |u(t)|^2,
  // and likewise for the exchange product c_j = u_j(t) u_j(t+dt).
  double sum_a = 0.0, sum_b = 0.0, sum_c = 0.0, sum_ab = 0.0, sum_cc = 0.0;
  for (int j = 1; j <= spec.n_pulses; ++j) {
    const double uj = amp(spec, j, t);
    const double vj = amp(spec, j, t + dt);
    const double a = uj * uj, b = vj * vj, c = uj * vj;
    sum_a += a;
    sum_b += b;
    sum_c += c;
    sum_ab += a * b;
    sum_cc += c * c;
  }
  const double direct = sum_a * sum_b - sum_ab;
  const double exchange = sum_c * sum_c - sum_cc;
  return direct + exchange;
}

double input_g2_direct_only(const PulseTrainSpec& spec, double t, double dt) {
  spec.validate();
  double sum_a = 0.0, sum_b = 0.0, sum_ab = 0.0;
  for (int j = 1; j <= spec.n_pulses; ++j) {
    const double uj = amp(spec, j, t);
    const double vj = amp(spec, j, t + dt);
    sum_a += uj * uj;
    sum_b += vj * vj;
    sum_ab += uj * uj * vj * vj;
  }
  return sum_a * sum_b - sum_ab;
}

Envelope sample_envelope(const PulseTrainSpec& spec, int j, const TimeGrid& grid) {
  spec.validate();
  check_index(spec, j);
  grid.validate();
  Envelope e;
  e.grid = grid;
  e.samples.resize(grid.n_samples);
  for (int k = 0; k < grid.n_samples; ++k) e.samples[k] = pulse_envelope(spec, j, grid.at(k));
  return e;
}

}  // namespace qfc
