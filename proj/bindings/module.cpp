#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qfc/core.hpp"
#include "qfc/correlations.hpp"
#include "qfc/noise.hpp"
#include "qfc/oracle.hpp"
#include "qfc/propagator.hpp"
#include "qfc/source.hpp"
#include "qfc/version.hpp"

namespace py = pybind11;
using namespace qfc;

PYBIND11_MODULE(_qfc, m) {
  m.doc() = "Single-photon frequency conversion model: closed-form propagator, "
            "Langevin noise background, pulse-train correlation functions";
  m.attr("__version__") = kVersion;

  py::class_<PhysicalConfig>(m, "PhysicalConfig")
      .def(py::init<>())
      .def_readwrite("crystal_length", &PhysicalConfig::crystal_length)
      .def_readwrite("group_velocity_p", &PhysicalConfig::group_velocity_p)
      .def_readwrite("group_velocity_i", &PhysicalConfig::group_velocity_i)
      .def_readwrite("coupling_omega0", &PhysicalConfig::coupling_omega0)
      .def_readwrite("pump_phase_phi_s", &PhysicalConfig::pump_phase_phi_s)
      .def_readwrite("gvd_p", &PhysicalConfig::gvd_p)
      .def_readwrite("gvd_i", &PhysicalConfig::gvd_i)
      .def_readwrite("sdc_rate_gamma", &PhysicalConfig::sdc_rate_gamma)
      .def_readwrite("photon_bandwidth_delta_k", &PhysicalConfig::photon_bandwidth_delta_k)
      .def("transit_time", &PhysicalConfig::transit_time)
      .def("validate", &PhysicalConfig::validate);

  py::class_<NoiseChannel>(m, "NoiseChannel")
      .def(py::init<>())
      .def(py::init([](std::string label, double loss, double gain) {
             NoiseChannel c;
             c.label = std::move(label);
             c.loss_rate_plus = loss;
             c.gain_rate_minus = gain;
             return c;
           }),
           py::arg("label"), py::arg("loss_rate_plus") = 0.0, py::arg("gain_rate_minus") = 0.0)
      .def_readwrite("label", &NoiseChannel::label)
      .def_readwrite("loss_rate_plus", &NoiseChannel::loss_rate_plus)
      .def_readwrite("gain_rate_minus", &NoiseChannel::gain_rate_minus);

  py::class_<NoiseModel>(m, "NoiseModel")
      .def(py::init<>())
      .def_readwrite("channels_p", &NoiseModel::channels_p)
      .def_readwrite("channels_i", &NoiseModel::channels_i)
      .def_readwrite("noise_bandwidth", &NoiseModel::noise_bandwidth)
      .def("has_gain", &NoiseModel::has_gain)
      .def("losses_only", &NoiseModel::losses_only);

  py::class_<EffectiveKappas>(m, "EffectiveKappas")
      .def_readonly("kappa_p", &EffectiveKappas::kappa_p)
      .def_readonly("kappa_i", &EffectiveKappas::kappa_i)
      .def_readonly("kappa_s", &EffectiveKappas::kappa_s)
      .def_readonly("kappa_D", &EffectiveKappas::kappa_D);
  m.def("effective_kappas", &effective_kappas, py::arg("noise"));

  py::class_<TimeGrid>(m, "TimeGrid")
      .def(py::init<>())
      .def(py::init([](double t_start, double t_end, int n_samples) {
             return TimeGrid{t_start, t_end, n_samples};
           }),
           py::arg("t_start"), py::arg("t_end"), py::arg("n_samples"))
      .def_readwrite("t_start", &TimeGrid::t_start)
      .def_readwrite("t_end", &TimeGrid::t_end)
      .def_readwrite("n_samples", &TimeGrid::n_samples)
      .def("dt", &TimeGrid::dt)
      .def("at", &TimeGrid::at);

  m.def("minimal_length", &minimal_length, py::arg("cfg"), py::arg("n"));

  py::enum_<CheckVerdict>(m, "CheckVerdict")
      .value("pass_", CheckVerdict::pass)
      .value("fail", CheckVerdict::fail)
      .value("not_evaluated", CheckVerdict::not_evaluated);

  py::class_<ValidityItem>(m, "ValidityItem")
      .def_readonly("value", &ValidityItem::value)
      .def_readonly("verdict", &ValidityItem::verdict);

  py::class_<ValidityReport>(m, "ValidityReport")
      .def_readonly("dispersion_p", &ValidityReport::dispersion_p)
      .def_readonly("dispersion_i", &ValidityReport::dispersion_i)
      .def_readonly("gv_mismatch", &ValidityReport::gv_mismatch)
      .def_readonly("coherence", &ValidityReport::coherence)
      .def_readonly("sdc", &ValidityReport::sdc)
      .def_readonly("threshold", &ValidityReport::threshold)
      .def_readonly("order_n", &ValidityReport::order_n)
      .def("all_evaluated_pass", &ValidityReport::all_evaluated_pass);
  m.def("check_validity", &check_validity, py::arg("cfg"), py::arg("n"),
        py::arg("threshold") = 0.1);

  py::enum_<CouplingRegime>(m, "CouplingRegime")
      .value("trig", CouplingRegime::trig)
      .value("degenerate", CouplingRegime::degenerate)
      .value("hyper", CouplingRegime::hyper);

  py::class_<PropagatorCoefficients>(m, "PropagatorCoefficients")
      .def_readonly("f1p", &PropagatorCoefficients::f1p)
      .def_readonly("f1i", &PropagatorCoefficients::f1i)
      .def_readonly("f2", &PropagatorCoefficients::f2)
      .def_readonly("theta_sq", &PropagatorCoefficients::theta_sq)
      .def_readonly("kappa_s", &PropagatorCoefficients::kappa_s)
      .def_readonly("kappa_D", &PropagatorCoefficients::kappa_D)
      .def_readonly("tau", &PropagatorCoefficients::tau);

  m.def("propagator_coeffs", &propagator_coeffs, py::arg("omega0"), py::arg("phi_s"),
        py::arg("kappa_p"), py::arg("kappa_i"), py::arg("tau"));
  m.def("conversion_probability", &conversion_probability, py::arg("coeffs"));
  m.def("optimal_tau", &optimal_tau, py::arg("omega0"), py::arg("kappa_s"),
        py::arg("kappa_D"));

  py::class_<PulseTrainSpec>(m, "PulseTrainSpec")
      .def(py::init<>())
      .def_static("from_intensity_fwhm", &PulseTrainSpec::from_intensity_fwhm,
                  py::arg("n_pulses"), py::arg("rep_period"), py::arg("fwhm"))
      .def_readwrite("n_pulses", &PulseTrainSpec::n_pulses)
      .def_readwrite("rep_period", &PulseTrainSpec::rep_period)
      .def_readwrite("sigma_t", &PulseTrainSpec::sigma_t)
      .def("center", &PulseTrainSpec::center)
      .def("well_separated", &PulseTrainSpec::well_separated);

  m.def("pulse_envelope", &pulse_envelope, py::arg("spec"), py::arg("j"), py::arg("t"));
  m.def("input_rate", &input_rate, py::arg("spec"), py::arg("t"));
  m.def("input_g1", &input_g1, py::arg("spec"), py::arg("t"), py::arg("dt"));
  m.def("input_g2", &input_g2, py::arg("spec"), py::arg("t"), py::arg("dt"));

  m.def("noise_kernel", &noise_kernel, py::arg("bandwidth_hz"), py::arg("dt"));

  py::class_<G2Terms>(m, "G2Terms")
      .def_readonly("converted", &G2Terms::converted)
      .def_readonly("interference", &G2Terms::interference)
      .def_readonly("signal_background", &G2Terms::signal_background)
      .def_readonly("background_profile", &G2Terms::background_profile)
      .def_readonly("background_sq", &G2Terms::background_sq)
      .def("total", &G2Terms::total);

  py::class_<ConversionModel>(m, "ConversionModel")
      .def(py::init<PhysicalConfig, PulseTrainSpec, NoiseModel>(), py::arg("cfg"),
           py::arg("pulses"), py::arg("noise"))
      .def("tau", &ConversionModel::tau)
      .def("coefficients", &ConversionModel::coefficients)
      .def("conversion_prob", &ConversionModel::conversion_prob)
      .def("background0", &ConversionModel::background0)
      .def("background_at", &ConversionModel::background_at)
      .def("rate", &ConversionModel::rate, py::arg("t"))
      .def("signal_rate", &ConversionModel::signal_rate, py::arg("t"))
      .def("g1", &ConversionModel::g1, py::arg("t"), py::arg("dt"))
      .def("g2", &ConversionModel::g2, py::arg("t"), py::arg("dt"))
      .def("g2_terms", &ConversionModel::g2_terms, py::arg("t"), py::arg("dt"));

  py::enum_<Normalization>(m, "Normalization")
      .value("raw", Normalization::raw)
      .value("rescaled_to_ideal_max", Normalization::rescaled_to_ideal_max)
      .value("rescaled_to_noiseless_max", Normalization::rescaled_to_noiseless_max);

  py::class_<SweepPoint>(m, "SweepPoint")
      .def_readonly("L_over_L0", &SweepPoint::L_over_L0)
      .def_readonly("peak_ideal", &SweepPoint::peak_ideal)
      .def_readonly("peak_lossy", &SweepPoint::peak_lossy)
      .def_readonly("peak_total", &SweepPoint::peak_total)
      .def_readonly("background", &SweepPoint::background)
      .def_readonly("conversion_prob", &SweepPoint::conversion_prob);

  py::class_<SweepResult>(m, "SweepResult")
      .def_readonly("points", &SweepResult::points)
      .def_readonly("normalizer", &SweepResult::normalizer)
      .def_readonly("reference_length", &SweepResult::reference_length);

  m.def(
      "sweep_length",
      [](const PhysicalConfig& cfg, const PulseTrainSpec& pulses, const NoiseModel& noise,
         const std::vector<double>& lengths, Normalization norm, int threads) {
        SweepOptions opts;
        opts.threads = threads;
        return sweep_length(cfg, pulses, noise, lengths, norm, opts);
      },
      py::arg("cfg"), py::arg("pulses"), py::arg("noise"), py::arg("lengths_over_L0"),
      py::arg("normalization") = Normalization::raw, py::arg("threads") = 1);

  py::class_<SnrReport>(m, "SnrReport")
      .def_readonly("snr", &SnrReport::snr)
      .def_readonly("signal_peak", &SnrReport::signal_peak)
      .def_readonly("background", &SnrReport::background);
  m.def("compute_snr", &compute_snr, py::arg("cfg"), py::arg("pulses"), py::arg("noise"));

  m.def(
      "rk4_propagator",
      [](double omega0, double phi_s, double kappa_p, double kappa_i, double tau, double h) {
        const auto t = oracle::rk4_propagator(omega0, phi_s, kappa_p, kappa_i, tau, h);
        return py::make_tuple(t.f1p, t.f1i, t.f2);
      },
      py::arg("omega0"), py::arg("phi_s"), py::arg("kappa_p"), py::arg("kappa_i"),
      py::arg("tau"), py::arg("h"));
}
