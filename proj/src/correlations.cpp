#include "qfc/correlations.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qfc/numerics.hpp"

namespace qfc {

namespace {

// Peak of the input flux, searched around the centre of the middle pulse
// (the most symmetric environment in the train).
PeakEstimate input_peak(const PulseTrainSpec& pulses, int samples_per_sigma) {
  const int mid = (pulses.n_pulses + 1) / 2;
  const double c = pulses.center(mid);
  const double half = 5.0 * pulses.sigma_t;
  const int n = 10 * samples_per_sigma + 1;
  return find_peak([&](double t) { return input_rate(pulses, t); }, c - half, c + half, n);
}

}  // namespace

ConversionModel::ConversionModel(PhysicalConfig cfg, PulseTrainSpec pulses, NoiseModel noise)
    : cfg_(std::move(cfg)), pulses_(std::move(pulses)), noise_(std::move(noise)) {
  cfg_.validate();
  pulses_.validate();
  noise_.validate();
  tau_ = cfg_.transit_time();
  const EffectiveKappas k = effective_kappas(noise_);
  coeffs_ = propagator_coeffs(cfg_.coupling_omega0, cfg_.pump_phase_phi_s, k.kappa_p,
                              k.kappa_i, tau_);
  p_i_ = conversion_probability(coeffs_);
  background_ = make_noise_background(
      [&](double t1) {
        return propagator_coeffs(cfg_.coupling_omega0, cfg_.pump_phase_phi_s, k.kappa_p,
                                 k.kappa_i, t1);
      },
      noise_, tau_);
}

double ConversionModel::retarded(double t) const {
  if (t < tau_)
    throw std::domain_error("output time precedes the crystal transit time");
  return t - tau_;
}

double ConversionModel::rate(double t) const {
  return p_i_ * input_rate(pulses_, retarded(t)) + background_.b0();
}

double ConversionModel::signal_rate(double t) const {
  return p_i_ * input_rate(pulses_, retarded(t));
}

double ConversionModel::g1(double t, double dt) const {
  const double tp = retarded(t);
  retarded(t + dt);
  return p_i_ * input_g1(pulses_, tp, dt).real() + background_.at(dt);
}

G2Terms ConversionModel::g2_terms(double t, double dt) const {
  const double tp = retarded(t);
  retarded(t + dt);
  const double g1p = input_g1(pulses_, tp, dt).real();
  const double idt = background_.at(dt);
  const double b0 = background_.b0();
  G2Terms terms;
  terms.converted = p_i_ * p_i_ * input_g2(pulses_, tp, dt);
  terms.interference = 2.0 * p_i_ * g1p * idt;
  terms.signal_background = p_i_ * (input_rate(pulses_, tp) + input_rate(pulses_, tp + dt)) * b0;
  terms.background_profile = idt * idt;
  terms.background_sq = b0 * b0;
  return terms;
}

double ConversionModel::g2(double t, double dt) const { return g2_terms(t, dt).total(); }

double photon_rate(const PhysicalConfig& cfg, const PulseTrainSpec& pulses,
                   const NoiseModel& noise, double t) {
  return ConversionModel(cfg, pulses, noise).rate(t);
}

double ideal_photon_rate(const PhysicalConfig& cfg, const PulseTrainSpec& pulses, double t) {
  return ConversionModel(cfg, pulses, NoiseModel{}).rate(t);
}

double g1(const PhysicalConfig& cfg, const PulseTrainSpec& pulses, const NoiseModel& noise,
          double t, double dt) {
  return ConversionModel(cfg, pulses, noise).g1(t, dt);
}

double g2(const PhysicalConfig& cfg, const PulseTrainSpec& pulses, const NoiseModel& noise,
          double t, double dt) {
  return ConversionModel(cfg, pulses, noise).g2(t, dt);
}

double ideal_peak_rate(const PhysicalConfig& cfg, const PulseTrainSpec& pulses,
                       const SweepOptions& opts) {
  PhysicalConfig ref = cfg;
  ref.crystal_length = minimal_length(cfg, 0);
  ConversionModel ideal(ref, pulses, NoiseModel{});
  const PeakEstimate pk = input_peak(pulses, opts.samples_per_sigma);
  return ideal.rate(ideal.tau() + pk.x);
}

SweepResult sweep_length(const PhysicalConfig& cfg, const PulseTrainSpec& pulses,
                         const NoiseModel& noise, const std::vector<double>& lengths_over_L0,
                         Normalization norm, const SweepOptions& opts) {
  cfg.validate();
  pulses.validate();
  noise.validate();
  if (lengths_over_L0.empty()) throw std::invalid_argument("length grid is empty");
  for (double l : lengths_over_L0)
    if (!(l > 0.0)) throw std::invalid_argument("length multiples must be > 0");

  const double L0 = minimal_length(cfg, 0);
  const PeakEstimate pk = input_peak(pulses, opts.samples_per_sigma);

  SweepResult result;
  result.norm = norm;
  result.reference_length = L0;
  switch (norm) {
    case Normalization::raw:
      result.normalizer = 1.0;
      break;
    case Normalization::rescaled_to_ideal_max:
      result.normalizer = ideal_peak_rate(cfg, pulses, opts);
      break;
    case Normalization::rescaled_to_noiseless_max: {
      PhysicalConfig ref = cfg;
      ref.crystal_length = L0;
      ConversionModel lossy(ref, pulses, noise.losses_only());
      result.normalizer = lossy.rate(lossy.tau() + pk.x);
      break;
    }
  }
  if (!(result.normalizer > 0.0))
    throw std::domain_error("sweep normalization reference vanishes");

  result.points.resize(lengths_over_L0.size());
  parallel_for(static_cast<int>(lengths_over_L0.size()), opts.threads, [&](int i) {
    PhysicalConfig c = cfg;
    c.crystal_length = lengths_over_L0[i] * L0;
    ConversionModel total(c, pulses, noise);
    ConversionModel lossy(c, pulses, noise.losses_only());
    ConversionModel ideal(c, pulses, NoiseModel{});
    const double t_star = total.tau() + pk.x;  // background is flat: one argmax serves all three
    SweepPoint& p = result.points[i];
    p.L_over_L0 = lengths_over_L0[i];
    p.peak_ideal = ideal.rate(t_star) / result.normalizer;
    p.peak_lossy = lossy.rate(t_star) / result.normalizer;
    p.peak_total = total.rate(t_star) / result.normalizer;
    p.background = total.background0() / result.normalizer;
    p.conversion_prob = total.conversion_prob();
  });
  return result;
}

SnrReport compute_snr(const PhysicalConfig& cfg, const PulseTrainSpec& pulses,
                      const NoiseModel& noise) {
  ConversionModel model(cfg, pulses, noise);
  const PeakEstimate pk = input_peak(pulses, 64);
  SnrReport rep;
  rep.signal_peak = model.signal_rate(model.tau() + pk.x);
  rep.background = model.background0();
  rep.snr = rep.background > 0.0 ? rep.signal_peak / rep.background
                                 : std::numeric_limits<double>::infinity();
  return rep;
}

CorrelationTrace correlation_trace(const ConversionModel& model, TraceKind kind,
                                   const TimeGrid& dt_grid, double t, Normalization norm,
                                   int threads) {
  dt_grid.validate();

  CorrelationTrace trace;
  trace.axis = dt_grid;
  trace.kind = kind;
  trace.norm = norm;
  trace.t_output = t;
  trace.raw.resize(dt_grid.n_samples);
  if (kind == TraceKind::g2) trace.terms.resize(dt_grid.n_samples);

  auto eval = [&](const ConversionModel& m, int k) {
    const double x = dt_grid.at(k);
    switch (kind) {
      case TraceKind::photon_rate:
        return m.rate(x);
      case TraceKind::g1:
        return m.g1(t, x);
      case TraceKind::g2:
      default:
        return m.g2(t, x);
    }
  };

  parallel_for(dt_grid.n_samples, threads, [&](int k) {
    trace.raw[k] = eval(model, k);
    if (kind == TraceKind::g2) trace.terms[k] = model.g2_terms(t, dt_grid.at(k));
  });

  switch (norm) {
    case Normalization::raw:
      trace.normalizer = 1.0;
      break;
    case Normalization::rescaled_to_ideal_max:
    case Normalization::rescaled_to_noiseless_max: {
      const NoiseModel ref_noise = norm == Normalization::rescaled_to_ideal_max
                                       ? NoiseModel{}
                                       : model.noise().losses_only();
      ConversionModel ref(model.config(), model.pulses(), ref_noise);
      double peak = 0.0;
      std::vector<double> ref_vals(dt_grid.n_samples);
      parallel_for(dt_grid.n_samples, threads,
                   [&](int k) { ref_vals[k] = eval(ref, k); });
      for (double v : ref_vals) peak = std::max(peak, std::abs(v));
      if (!(peak > 0.0)) throw std::domain_error("trace normalization reference vanishes");
      trace.normalizer = peak;
      break;
    }
  }

  trace.rescaled.resize(dt_grid.n_samples);
  for (int k = 0; k < dt_grid.n_samples; ++k) trace.rescaled[k] = trace.raw[k] / trace.normalizer;
  return trace;
}

}  // namespace qfc
