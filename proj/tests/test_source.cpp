#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "qfc/numerics.hpp"
#include "qfc/source.hpp"
#include "test_params.hpp"

using namespace qfc;

namespace {

const double kSigma = 6.00561204393225e-10;  // 1 ns intensity FWHM

double peak_rate(const PulseTrainSpec& s) {
  return 1.0 / std::sqrt(std::numbers::pi * s.sigma_t * s.sigma_t);
}

}  // namespace

TEST_CASE("intensity FWHM converts to the amplitude sigma") {
  const PulseTrainSpec spec = PulseTrainSpec::from_intensity_fwhm(1, 0.0, bench::fwhm);
  CHECK(spec.sigma_t == doctest::Approx(kSigma).epsilon(1e-12));
  // |u|^2 at half the FWHM from the centre is half the peak
  const double half = input_rate(spec, spec.center(1) + bench::fwhm / 2.0);
  CHECK(half == doctest::Approx(0.5 * input_rate(spec, spec.center(1))).epsilon(1e-12));
}

TEST_CASE("envelope peak and normalization") {
  const PulseTrainSpec spec = PulseTrainSpec::from_intensity_fwhm(1, 0.0, bench::fwhm);
  const double a0 = pulse_envelope(spec, 1, spec.center(1)).real();
  CHECK(a0 == doctest::Approx(std::pow(std::numbers::pi * kSigma * kSigma, -0.25)).epsilon(1e-12));
  const double area = composite_simpson(
      [&](double t) { return input_rate(spec, t); }, spec.center(1) - 8.0 * kSigma,
      spec.center(1) + 8.0 * kSigma, 4001);
  CHECK(area == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("train flux integrates to the photon count") {
  const PulseTrainSpec spec = bench::train(3);
  const double area = composite_simpson(
      [&](double t) { return input_rate(spec, t); }, spec.center(1) - 8.0 * kSigma,
      spec.center(3) + 8.0 * kSigma, 40001);
  CHECK(area == doctest::Approx(3.0).epsilon(1e-6));
  CHECK(input_rate(spec, spec.center(2)) == doctest::Approx(peak_rate(spec)).epsilon(1e-12));
  // halfway between pulses the train is dark
  CHECK(input_rate(spec, spec.center(1) + spec.rep_period / 2.0) <
        1e-300 * peak_rate(spec));
}

TEST_CASE("zero-delay coherence equals the flux exactly") {
  const PulseTrainSpec spec = bench::train(4);
  for (double t : {0.0, 0.5e-7, 1e-7, 1.37e-7, 3.3e-7})
    CHECK(input_g1(spec, t, 0.0).real() == input_rate(spec, t));
}

TEST_CASE("single-pulse coherence decays as a Gaussian in the delay") {
  const PulseTrainSpec spec = PulseTrainSpec::from_intensity_fwhm(1, 0.0, bench::fwhm);
  const double t = spec.center(1);
  for (double dt : {0.1 * kSigma, kSigma, 2.5 * kSigma}) {
    const double expected = peak_rate(spec) * std::exp(-dt * dt / (2.0 * kSigma * kSigma));
    CHECK(input_g1(spec, t, dt).real() == doctest::Approx(expected).epsilon(1e-12));
  }
  // one repetition period away there is no coherence left
  const PulseTrainSpec train2 = bench::train(2);
  CHECK(std::abs(input_g1(train2, train2.center(1), train2.rep_period).real()) <
        1e-300 * peak_rate(train2));
}

TEST_CASE("a single photon never coincides with itself") {
  const PulseTrainSpec spec = PulseTrainSpec::from_intensity_fwhm(1, 0.0, bench::fwhm);
  for (double dt : {0.0, 0.3 * kSigma, 2.0 * kSigma, 1e-7})
    CHECK(input_g2(spec, spec.center(1), dt) == 0.0);
}

TEST_CASE("two pulses coincide only at the repetition period") {
  const PulseTrainSpec spec = bench::train(2);
  const double t1 = spec.center(1);
  const double expected = input_rate(spec, t1) * input_rate(spec, t1 + spec.rep_period);
  const double g2 = input_g2(spec, t1, spec.rep_period);
  CHECK(g2 == doctest::Approx(expected).epsilon(1e-9));
  CHECK(input_g2(spec, t1, 0.0) < 1e-12 * expected);
  // the exchange term is exponentially small for separated pulses
  const double direct = input_g2_direct_only(spec, t1, spec.rep_period);
  CHECK(std::abs(g2 - direct) <= std::exp(-25.0) * expected);
}

TEST_CASE("pair correlation is symmetric under (t, dt) -> (t+dt, -dt)") {
  const PulseTrainSpec spec = bench::train(5);
  const double peak = input_g2(spec, spec.center(1), spec.rep_period);
  std::mt19937 gen(7125);
  std::uniform_real_distribution<double> pick_t(0.0, 6e-7);
  std::uniform_real_distribution<double> pick_dt(-3e-7, 3e-7);
  for (int it = 0; it < 200; ++it) {
    const double t = pick_t(gen);
    const double dt = pick_dt(gen);
    const double a = input_g2(spec, t, dt);
    const double b = input_g2(spec, t + dt, -dt);
    // deep in the Gaussian tails both sides underflow; floor the comparison scale
    CHECK(std::abs(a - b) <= 1e-13 * std::max(std::abs(a), std::abs(b)) + 1e-40 * peak);
  }
}

TEST_CASE("pulse index bounds are enforced") {
  const PulseTrainSpec spec = bench::train(3);
  CHECK_THROWS_AS(pulse_envelope(spec, 0, 0.0), std::out_of_range);
  CHECK_THROWS_AS(pulse_envelope(spec, 4, 0.0), std::out_of_range);
  PulseTrainSpec bad = spec;
  bad.sigma_t = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = spec;
  bad.n_pulses = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("separation flag reflects the ten-sigma rule") {
  CHECK(bench::train(10).well_separated());
  PulseTrainSpec crowded = bench::train(2);
  crowded.rep_period = 5.0 * crowded.sigma_t;
  CHECK_FALSE(crowded.well_separated());
}

TEST_CASE("sampled envelope matches pointwise evaluation") {
  const PulseTrainSpec spec = bench::train(2);
  const TimeGrid grid{spec.center(1) - 2e-9, spec.center(1) + 2e-9, 33};
  const Envelope env = sample_envelope(spec, 1, grid);
  REQUIRE(env.samples.size() == 33);
  for (int k = 0; k < grid.n_samples; ++k)
    CHECK(env.samples[k] == pulse_envelope(spec, 1, grid.at(k)));
}
