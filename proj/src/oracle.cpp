#include "qfc/oracle.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace qfc::oracle {

namespace {

using cplx = std::complex<double>;
using Mat = std::array<cplx, 4>;  // row-major 2x2

Mat apply_generator(const cplx& omega, double kp, double ki, const Mat& m) {
  const cplx oc = std::conj(omega);
  return {-kp * m[0] - omega * m[2], -kp * m[1] - omega * m[3],
          oc * m[0] - ki * m[2], oc * m[1] - ki * m[3]};
}

Mat axpy(const Mat& a, double s, const Mat& b) {
  return {a[0] + s * b[0], a[1] + s * b[1], a[2] + s * b[2], a[3] + s * b[3]};
}

}  // namespace

CoefficientTriple rk4_propagator(double omega0, double phi_s, double kappa_p, double kappa_i,
                                 double tau, double h) {
  if (!(omega0 >= 0.0)) throw std::invalid_argument("coupling_omega0 must be >= 0");
  if (!(tau >= 0.0)) throw std::invalid_argument("dwell time tau must be >= 0");
  if (tau == 0.0) return {};

  const double scale = std::max({omega0, std::abs(kappa_p), std::abs(kappa_i)});
  if (!(h > 0.0) || h > tau / 100.0 || (scale > 0.0 && h > 0.01 / scale))
    throw std::invalid_argument("rk4 step too large for the requested accuracy");

  const auto steps = static_cast<long long>(std::ceil(tau / h - 1e-12));
  const double dt = tau / static_cast<double>(steps);
  const cplx omega = std::polar(omega0, phi_s);

  Mat m{1.0, 0.0, 0.0, 1.0};
  for (long long s = 0; s < steps; ++s) {
    const Mat k1 = apply_generator(omega, kappa_p, kappa_i, m);
    const Mat k2 = apply_generator(omega, kappa_p, kappa_i, axpy(m, dt / 2.0, k1));
    const Mat k3 = apply_generator(omega, kappa_p, kappa_i, axpy(m, dt / 2.0, k2));
    const Mat k4 = apply_generator(omega, kappa_p, kappa_i, axpy(m, dt, k3));
    for (int e = 0; e < 4; ++e)
      m[e] += dt / 6.0 * (k1[e] + 2.0 * k2[e] + 2.0 * k3[e] + k4[e]);
  }

  CoefficientTriple out;
  out.f1p = m[0];
  out.f1i = m[3];
  out.f2 = -m[1];
  return out;
}

namespace {

constexpr int kSlotBits = 16;
constexpr std::uint64_t kEmptySlot = 0xFFFFu;

std::uint64_t encode(std::array<int, 3> slots, int count) {
  // occupied slots sorted ascending, empties pushed to the top
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j)
      if (slots[j] < slots[i]) std::swap(slots[i], slots[j]);
  std::uint64_t key = 0;
  for (int i = 2; i >= 0; --i) {
    const std::uint64_t v = i < count ? static_cast<std::uint64_t>(slots[i]) : kEmptySlot;
    key = (key << kSlotBits) | v;
  }
  return key;
}

int decode(std::uint64_t key, std::array<int, 3>& slots) {
  int count = 0;
  for (int i = 0; i < 3; ++i) {
    const std::uint64_t v = (key >> (kSlotBits * i)) & 0xFFFFu;
    if (v != kEmptySlot) slots[count++] = static_cast<int>(v);
  }
  return count;
}

}  // namespace

BruteForceFock::BruteForceFock(const PulseTrainSpec& spec, const TimeGrid& grid) : grid_(grid) {
  spec.validate();
  grid.validate();
  if (spec.n_pulses > 3)
    throw std::invalid_argument("brute-force correlators are limited to 3 pulses");
  if (grid.n_samples > 0xFFFF)
    throw std::invalid_argument("brute-force grid is limited to 65535 samples");
  dt_ = grid.dt();
  const double root_dt = std::sqrt(dt_);

  // b'_j = sum_g v_j[g] b'_g with v_j[g] = u_j(t_g) sqrt(dt)
  std::vector<std::vector<double>> v(spec.n_pulses);
  for (int j = 0; j < spec.n_pulses; ++j) {
    v[j].resize(grid.n_samples);
    for (int g = 0; g < grid.n_samples; ++g)
      v[j][g] = pulse_envelope(spec, j + 1, grid.at(g)).real() * root_dt;
  }

  state_[encode({}, 0)] = 1.0;  // vacuum
  std::array<int, 3> slots{};
  for (int j = 0; j < spec.n_pulses; ++j) {
    State next;
    next.reserve(state_.size() * grid.n_samples);
    for (const auto& [key, amp] : state_) {
      const int count = decode(key, slots);
      for (int g = 0; g < grid.n_samples; ++g) {
        if (v[j][g] == 0.0) continue;
        int mult = 0;
        for (int i = 0; i < count; ++i)
          if (slots[i] == g) ++mult;
        std::array<int, 3> grown = slots;
        grown[count] = g;
        next[encode(grown, count + 1)] += amp * v[j][g] * std::sqrt(mult + 1.0);
      }
    }
    state_ = std::move(next);
  }
  state_norm_sq_ = norm_sq(state_);
  if (!(state_norm_sq_ > 0.0))
    throw std::domain_error("sampled train state has zero norm; grid misses the pulses");
}

BruteForceFock::State BruteForceFock::annihilate(const State& s, int g) const {
  State out;
  std::array<int, 3> slots{};
  for (const auto& [key, amp] : s) {
    const int count = decode(key, slots);
    int mult = 0;
    for (int i = 0; i < count; ++i)
      if (slots[i] == g) ++mult;
    if (mult == 0) continue;
    std::array<int, 3> reduced{};
    int rcount = 0;
    bool removed = false;
    for (int i = 0; i < count; ++i) {
      if (!removed && slots[i] == g) {
        removed = true;
        continue;
      }
      reduced[rcount++] = slots[i];
    }
    out[encode(reduced, rcount)] += amp * std::sqrt(static_cast<double>(mult));
  }
  return out;
}

double BruteForceFock::norm_sq(const State& s) {
  double n = 0.0;
  for (const auto& [key, amp] : s) n += amp * amp;
  return n;
}

double BruteForceFock::rate(int g) const {
  return norm_sq(annihilate(state_, g)) / state_norm_sq_ / dt_;
}

double BruteForceFock::g1(int g, int h) const {
  const State bg = annihilate(state_, g);
  const State bh = annihilate(state_, h);
  double inner = 0.0;
  for (const auto& [key, amp] : bg) {
    auto it = bh.find(key);
    if (it != bh.end()) inner += amp * it->second;
  }
  return inner / state_norm_sq_ / dt_;
}

double BruteForceFock::g2(int g, int h) const {
  return norm_sq(annihilate(annihilate(state_, g), h)) / state_norm_sq_ / (dt_ * dt_);
}

double BruteForceFock::total_photon_number() const {
  double n = 0.0;
  for (int g = 0; g < grid_.n_samples; ++g) n += rate(g) * dt_;
  return n;
}

FockCorrelatorSamples brute_force_fock_correlators(const PulseTrainSpec& spec,
                                                   const TimeGrid& grid) {
  BruteForceFock fock(spec, grid);
  FockCorrelatorSamples out;
  out.grid = grid;
  out.rate.resize(grid.n_samples);
  for (int g = 0; g < grid.n_samples; ++g) out.rate[g] = fock.rate(g);
  return out;
}

}  // namespace qfc::oracle
