#include "qfc/scenario.hpp"

#include <fstream>
#include <set>

namespace qfc {

namespace {

using nlohmann::json;

// Accessor that records which keys were consumed and rejects leftovers,
// so every scenario key is either understood or an error.
class StrictObject {
 public:
  StrictObject(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ScenarioError(path_ + ": expected an object");
  }

  const json* find(const std::string& key) const {
    seen_.insert(key);
    auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  const json& require(const std::string& key) const {
    const json* v = find(key);
    if (!v) throw ScenarioError(path_ + ": missing required key '" + key + "'");
    return *v;
  }

  double number(const std::string& key) const { return as_number(require(key), key); }

  std::optional<double> opt_number(const std::string& key) const {
    const json* v = find(key);
    if (!v) return std::nullopt;
    return as_number(*v, key);
  }

  int integer(const std::string& key) const { return as_integer(require(key), key); }

  int integer_or(const std::string& key, int fallback) const {
    const json* v = find(key);
    return v ? as_integer(*v, key) : fallback;
  }

  double number_or(const std::string& key, double fallback) const {
    const json* v = find(key);
    return v ? as_number(*v, key) : fallback;
  }

  std::string text_or(const std::string& key, const std::string& fallback) const {
    const json* v = find(key);
    if (!v) return fallback;
    if (!v->is_string()) throw ScenarioError(path_ + "." + key + ": expected a string");
    return v->get<std::string>();
  }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it)
      if (!seen_.count(it.key()))
        throw ScenarioError(path_ + ": unknown key '" + it.key() + "'");
  }

  std::string path_of(const std::string& key) const { return path_ + "." + key; }

 private:
  double as_number(const json& v, const std::string& key) const {
    if (!v.is_number()) throw ScenarioError(path_ + "." + key + ": expected a number");
    return v.get<double>();
  }

  int as_integer(const json& v, const std::string& key) const {
    if (!v.is_number_integer()) throw ScenarioError(path_ + "." + key + ": expected an integer");
    return v.get<int>();
  }

  const json& j_;
  std::string path_;
  mutable std::set<std::string> seen_;
};

std::vector<NoiseChannel> parse_channels(const json& arr, const std::string& path) {
  if (!arr.is_array()) throw ScenarioError(path + ": expected an array");
  std::vector<NoiseChannel> channels;
  channels.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    StrictObject o(arr[i], path + "[" + std::to_string(i) + "]");
    NoiseChannel c;
    c.label = o.text_or("label", "channel_" + std::to_string(i));
    c.loss_rate_plus = o.number_or("loss_per_s", 0.0);
    c.gain_rate_minus = o.number_or("gain_per_s", 0.0);
    o.finish();
    channels.push_back(std::move(c));
  }
  return channels;
}

}  // namespace

std::vector<double> SweepGrid::values() const {
  validate();
  std::vector<double> v(n_lengths);
  for (int i = 0; i < n_lengths; ++i)
    v[i] = n_lengths == 1 ? start : start + (end - start) * i / (n_lengths - 1);
  return v;
}

void SweepGrid::validate() const {
  if (n_lengths < 1) throw ScenarioError("sweep: n_lengths must be >= 1");
  if (!(start > 0.0)) throw ScenarioError("sweep: l_over_l0_start must be > 0");
  if (n_lengths > 1 && !(end > start))
    throw ScenarioError("sweep: l_over_l0_end must exceed l_over_l0_start");
}

void TraceGrid::validate() const {
  if (n_delays < 2) throw ScenarioError("trace: n_delays must be >= 2");
  if (!(dt_end > dt_start)) throw ScenarioError("trace: dt_end_s must exceed dt_start_s");
  if (pulse_index < 0) throw ScenarioError("trace: pulse_index must be >= 0");
}

int Scenario::resolved_pulse_index() const {
  const int idx = trace ? trace->pulse_index : 0;
  if (idx == 0) return (pulses.n_pulses + 1) / 2;
  return idx;
}

Scenario parse_scenario(const json& j) {
  StrictObject root(j, "scenario");
  Scenario s;

  s.schema_version = root.integer("schema_version");
  if (s.schema_version != 1)
    throw ScenarioError("scenario.schema_version: unsupported version " +
                        std::to_string(s.schema_version));

  {
    StrictObject phys(root.require("physical"), "scenario.physical");
    s.physical.crystal_length = phys.number("crystal_length_m");
    s.physical.group_velocity_p = phys.number("group_velocity_p_m_s");
    s.physical.group_velocity_i = phys.number("group_velocity_i_m_s");
    s.physical.coupling_omega0 = phys.number("coupling_omega0_rad_s");
    s.physical.pump_phase_phi_s = phys.number_or("pump_phase_phi_s_rad", 0.0);
    s.physical.gvd_p = phys.opt_number("gvd_p_m2_s");
    s.physical.gvd_i = phys.opt_number("gvd_i_m2_s");
    s.physical.sdc_rate_gamma = phys.opt_number("sdc_rate_gamma_per_s");
    s.physical.photon_bandwidth_delta_k = phys.number_or("photon_bandwidth_delta_k_per_m", 0.0);
    phys.finish();
  }

  {
    StrictObject noise(root.require("noise"), "scenario.noise");
    s.noise.noise_bandwidth = noise.number_or("bandwidth_hz", 0.0);
    if (const json* arr = noise.find("channels_p"))
      s.noise.channels_p = parse_channels(*arr, noise.path_of("channels_p"));
    if (const json* arr = noise.find("channels_i"))
      s.noise.channels_i = parse_channels(*arr, noise.path_of("channels_i"));
    noise.finish();
  }

  {
    StrictObject pulses(root.require("pulses"), "scenario.pulses");
    const int count = pulses.integer("count");
    const double rep = pulses.number_or("rep_period_s", 0.0);
    s.width_value = pulses.number("width_s");
    s.width_convention = pulses.text_or("width_convention", "intensity_fwhm");
    pulses.finish();
    if (count < 1) throw ScenarioError("scenario.pulses.count: must be >= 1");
    if (!(s.width_value > 0.0)) throw ScenarioError("scenario.pulses.width_s: must be > 0");
    if (s.width_convention == "intensity_fwhm") {
      s.pulses = PulseTrainSpec::from_intensity_fwhm(count, rep, s.width_value);
    } else if (s.width_convention == "sigma") {
      s.pulses.n_pulses = count;
      s.pulses.rep_period = rep;
      s.pulses.sigma_t = s.width_value;
    } else {
      throw ScenarioError("scenario.pulses.width_convention: expected 'intensity_fwhm' or 'sigma'");
    }
  }

  if (const json* sweep = root.find("sweep")) {
    StrictObject o(*sweep, "scenario.sweep");
    SweepGrid g;
    g.start = o.number("l_over_l0_start");
    g.end = o.number("l_over_l0_end");
    g.n_lengths = o.integer("n_lengths");
    o.finish();
    g.validate();
    s.sweep = g;
  }

  if (const json* trace = root.find("trace")) {
    StrictObject o(*trace, "scenario.trace");
    TraceGrid g;
    g.dt_start = o.number("dt_start_s");
    g.dt_end = o.number("dt_end_s");
    g.n_delays = o.integer("n_delays");
    g.pulse_index = o.integer_or("pulse_index", 0);
    o.finish();
    g.validate();
    s.trace = g;
  }

  s.normalization = normalization_from_string(root.text_or("normalization", "raw"));

  if (const json* validity = root.find("validity")) {
    StrictObject o(*validity, "scenario.validity");
    s.validity.order_n = o.integer_or("order_n", 0);
    s.validity.threshold = o.number_or("threshold", 0.1);
    o.finish();
    if (s.validity.order_n < 0) throw ScenarioError("scenario.validity.order_n: must be >= 0");
    if (!(s.validity.threshold > 0.0))
      throw ScenarioError("scenario.validity.threshold: must be > 0");
  }

  s.samples_per_sigma = root.integer_or("samples_per_sigma", 64);
  if (s.samples_per_sigma < 4)
    throw ScenarioError("scenario.samples_per_sigma: must be >= 4");

  root.finish();

  try {
    s.physical.validate();
    s.noise.validate();
    s.pulses.validate();
    if (s.trace && s.trace->pulse_index > s.pulses.n_pulses)
      throw std::invalid_argument("trace.pulse_index exceeds the pulse count");
  } catch (const std::exception& e) {
    throw ScenarioError(std::string("scenario: ") + e.what());
  }
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open scenario file: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ScenarioError("scenario JSON is malformed: " + std::string(e.what()));
  }
  return parse_scenario(j);
}

json scenario_to_json(const Scenario& s) {
  json j;
  j["schema_version"] = s.schema_version;

  json phys;
  phys["crystal_length_m"] = s.physical.crystal_length;
  phys["group_velocity_p_m_s"] = s.physical.group_velocity_p;
  phys["group_velocity_i_m_s"] = s.physical.group_velocity_i;
  phys["coupling_omega0_rad_s"] = s.physical.coupling_omega0;
  phys["pump_phase_phi_s_rad"] = s.physical.pump_phase_phi_s;
  if (s.physical.gvd_p) phys["gvd_p_m2_s"] = *s.physical.gvd_p;
  if (s.physical.gvd_i) phys["gvd_i_m2_s"] = *s.physical.gvd_i;
  if (s.physical.sdc_rate_gamma) phys["sdc_rate_gamma_per_s"] = *s.physical.sdc_rate_gamma;
  phys["photon_bandwidth_delta_k_per_m"] = s.physical.photon_bandwidth_delta_k;
  j["physical"] = phys;

  json noise;
  noise["bandwidth_hz"] = s.noise.noise_bandwidth;
  auto channels = [](const std::vector<NoiseChannel>& cs) {
    json arr = json::array();
    for (const auto& c : cs)
      arr.push_back({{"label", c.label},
                     {"loss_per_s", c.loss_rate_plus},
                     {"gain_per_s", c.gain_rate_minus}});
    return arr;
  };
  noise["channels_p"] = channels(s.noise.channels_p);
  noise["channels_i"] = channels(s.noise.channels_i);
  j["noise"] = noise;

  json pulses;
  pulses["count"] = s.pulses.n_pulses;
  pulses["rep_period_s"] = s.pulses.rep_period;
  pulses["width_s"] = s.width_value;
  pulses["width_convention"] = s.width_convention;
  pulses["sigma_t_s"] = s.pulses.sigma_t;  // resolved value
  j["pulses"] = pulses;

  if (s.sweep)
    j["sweep"] = {{"l_over_l0_start", s.sweep->start},
                  {"l_over_l0_end", s.sweep->end},
                  {"n_lengths", s.sweep->n_lengths}};
  if (s.trace)
    j["trace"] = {{"dt_start_s", s.trace->dt_start},
                  {"dt_end_s", s.trace->dt_end},
                  {"n_delays", s.trace->n_delays},
                  {"pulse_index", s.trace->pulse_index},
                  {"resolved_pulse_index", s.resolved_pulse_index()}};
  j["normalization"] = to_string(s.normalization);
  j["validity"] = {{"order_n", s.validity.order_n}, {"threshold", s.validity.threshold}};
  j["samples_per_sigma"] = s.samples_per_sigma;
  return j;
}

std::string to_string(Normalization n) {
  switch (n) {
    case Normalization::raw: return "raw";
    case Normalization::rescaled_to_ideal_max: return "rescaled_to_ideal_max";
    case Normalization::rescaled_to_noiseless_max: return "rescaled_to_noiseless_max";
  }
  return "raw";
}

Normalization normalization_from_string(const std::string& name) {
  if (name == "raw") return Normalization::raw;
  if (name == "rescaled_to_ideal_max") return Normalization::rescaled_to_ideal_max;
  if (name == "rescaled_to_noiseless_max") return Normalization::rescaled_to_noiseless_max;
  throw ScenarioError("scenario.normalization: unknown mode '" + name + "'");
}

}  // namespace qfc
