#pragma once

#include <complex>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "qfc/core.hpp"
#include "qfc/source.hpp"

namespace qfc::oracle {

/// Closed-form-free reference values for the propagator entries, obtained
/// by integrating the comoving two-mode system
///   d/dt (psi_p, psi_i) = [[-kp, -Omega], [conj(Omega), -ki]] (psi_p, psi_i)
/// with classic fixed-step RK4 from both unit initial columns.
struct CoefficientTriple {
  std::complex<double> f1p{1.0, 0.0};
  std::complex<double> f1i{1.0, 0.0};
  std::complex<double> f2{0.0, 0.0};
};

/// Requires h <= tau/100 and h <= 0.01 / max(Omega_0, |kp|, |ki|); the step
/// is snapped down so tau is an integer number of steps. tau == 0 returns
/// the identity triple.
CoefficientTriple rk4_propagator(double omega0, double phi_s, double kappa_p, double kappa_i,
                                 double tau, double h);

/// Reference correlators of the input train from first principles: modes
/// are sampled on a time grid (b_g = psi(t_g) sqrt(dt)), the N-photon state
/// is expanded in the occupation basis, and n/g1/g2 are read off by
/// applying annihilation operators. Exponential in N; limited to N <= 3.
class BruteForceFock {
 public:
  BruteForceFock(const PulseTrainSpec& spec, const TimeGrid& grid);

  const TimeGrid& grid() const { return grid_; }

  /// Flux at grid point g, <b_g' b_g>/dt (1/s).
  double rate(int g) const;
  /// <b_g' b_h>/dt between grid points (1/s).
  double g1(int g, int h) const;
  /// <b_g' b_h' b_h b_g>/dt^2 (1/s^2).
  double g2(int g, int h) const;
  /// Sum of occupations over the grid; approaches n_pulses as the grid
  /// covers the train.
  double total_photon_number() const;

 private:
  using Key = std::uint64_t;  // up to three 16-bit grid indices, sorted
  using State = std::unordered_map<Key, double>;

  State annihilate(const State& s, int g) const;
  static double norm_sq(const State& s);

  TimeGrid grid_;
  double dt_ = 0.0;
  State state_;
  double state_norm_sq_ = 0.0;
};

/// Grid-sampled input-flux reference, matching input_rate pointwise.
struct FockCorrelatorSamples {
  TimeGrid grid;
  std::vector<double> rate;
};

FockCorrelatorSamples brute_force_fock_correlators(const PulseTrainSpec& spec,
                                                   const TimeGrid& grid);

}  // namespace qfc::oracle
