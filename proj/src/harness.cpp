// Copyright 2026 The tqdirac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tqdirac/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "tqdirac/errors.hpp"
#include "tqdirac/operator_algebra.hpp"
#include "tqdirac/rwa_analytic.hpp"

namespace tqd {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr double kDefaultPointsPerPeriod = 2000.0;
constexpr double kDefaultSigmaPeriods = 20.0;  // carrier * sigma_t
constexpr double kWindowSigmas = 6.0;

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys{
      "comment",         "unit_mode",     "calibrate_to_theta", "initial_state",
      "circuit.L1",      "circuit.L2",    "circuit.C_J",        "circuit.C_d",
      "circuit.C_g",     "pulse.V_s",     "pulse.sigma_t",      "pulse.phi_d",
      "pulse.mode",      "pulse.carrier_override", "pulse.t_center",
      "grid.t_start",    "grid.t_end",    "grid.dt"};
  return keys;
}

class Document {
 public:
  explicit Document(const json& doc) : doc_(doc) {}

  std::optional<double> number(const std::string& key) const {
    if (!doc_.contains(key)) return std::nullopt;
    const json& v = doc_.at(key);
    if (!v.is_number()) throw ConfigError("config key \"" + key + "\" must be a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw ConfigError("config key \"" + key + "\" must be finite");
    return x;
  }

  double positive(const std::string& key, double fallback) const {
    const double x = number(key).value_or(fallback);
    if (!(x > 0.0)) {
      throw ConfigError("config key \"" + key + "\" must be strictly positive, got " +
                        format_csv_number(x));
    }
    return x;
  }

  std::optional<std::string> string(const std::string& key) const {
    if (!doc_.contains(key)) return std::nullopt;
    const json& v = doc_.at(key);
    if (!v.is_string()) throw ConfigError("config key \"" + key + "\" must be a string");
    return v.get<std::string>();
  }

  const json& raw() const { return doc_; }

 private:
  const json& doc_;
};

StateVector4 parse_initial_state(const json& v) {
  const char* form = "config key \"initial_state\" must be an array of 4 numbers or [re, im] pairs";
  if (!v.is_array() || v.size() != 4) throw ConfigError(form);
  Eigen::Vector4cd c;
  for (int i = 0; i < 4; ++i) {
    const json& e = v.at(static_cast<std::size_t>(i));
    if (e.is_number()) {
      c(i) = e.get<double>();
    } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
      c(i) = Complex(e[0].get<double>(), e[1].get<double>());
    } else {
      throw ConfigError(form);
    }
  }
  try {
    return StateVector4(c);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("config key \"initial_state\": ") + e.what());
  }
}

json parse_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  return doc;
}

ordered_json magnitudes_json(const Magnitudes& m) { return ordered_json::array({m[0], m[1], m[2], m[3]}); }

template <class T>
ordered_json optional_json(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

}  // namespace

RunConfig parse_config(std::string_view text) {
  const json doc = parse_document(text);
  for (const auto& item : doc.items()) {
    if (!known_keys().count(item.key())) {
      throw ConfigError("unknown config key \"" + item.key() + "\"");
    }
  }
  const Document in(doc);

  RunConfig cfg;
  cfg.source = std::string(text);
  cfg.comment = in.string("comment").value_or("");

  const std::string units = in.string("unit_mode").value_or("si");
  if (units == "si") {
    cfg.unit_mode = UnitMode::si;
  } else if (units == "dimensionless") {
    cfg.unit_mode = UnitMode::dimensionless;
  } else {
    throw ConfigError("config key \"unit_mode\" must be \"si\" or \"dimensionless\"");
  }

  const CircuitParams defaults = CircuitParams::representative();
  cfg.circuit.L1 = in.positive("circuit.L1", defaults.L1);
  cfg.circuit.L2 = in.positive("circuit.L2", defaults.L2);
  cfg.circuit.C_J = in.positive("circuit.C_J", defaults.C_J);
  cfg.circuit.C_d = in.positive("circuit.C_d", defaults.C_d);
  cfg.circuit.C_g = in.positive("circuit.C_g", defaults.C_g);
  try {
    cfg.derived = derive_params(cfg.circuit, cfg.unit_mode);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("circuit: ") + e.what());
  }
  const DerivedParams& d = cfg.derived;

  PulseConfig& pulse = cfg.pulse;
  try {
    pulse.mode = drive_mode_from_string(in.string("pulse.mode").value_or("even"));
  } catch (const DomainError& e) {
    throw ConfigError(std::string("config key \"pulse.mode\": ") + e.what());
  }
  cfg.carrier_overridden = doc.contains("pulse.carrier_override");
  pulse.carrier = in.positive("pulse.carrier_override", d.sum_frequency());
  pulse.sigma_t = in.positive("pulse.sigma_t", kDefaultSigmaPeriods / pulse.carrier);
  pulse.phi_d = in.number("pulse.phi_d").value_or(0.0);

  const auto v_s = in.number("pulse.V_s");
  cfg.calibrate_to_theta = in.number("calibrate_to_theta");
  if (v_s && cfg.calibrate_to_theta) {
    throw ConfigError("config keys \"pulse.V_s\" and \"calibrate_to_theta\" are mutually exclusive");
  }
  if (!v_s && !cfg.calibrate_to_theta) cfg.calibrate_to_theta = std::numbers::pi;
  if (cfg.calibrate_to_theta) {
    if (!(*cfg.calibrate_to_theta >= 0.0)) {
      throw ConfigError("config key \"calibrate_to_theta\" must be non-negative");
    }
    if (!d.symmetric()) {
      throw ConfigError(
          "calibration needs identical qubits (circuit.L1 == circuit.L2); give pulse.V_s instead");
    }
  }
  pulse.V_s = v_s.value_or(0.0);

  const auto t_center = in.number("pulse.t_center");
  const double half = kWindowSigmas * pulse.sigma_t;
  TimeGrid& grid = cfg.grid;
  grid.t_start = in.number("grid.t_start").value_or(t_center ? *t_center - half : 0.0);
  grid.t_end = in.number("grid.t_end").value_or(grid.t_start + 2.0 * half);
  grid.dt = in.positive("grid.dt", (2.0 * std::numbers::pi / pulse.carrier) / kDefaultPointsPerPeriod);
  pulse.t_center = t_center.value_or(0.5 * (grid.t_start + grid.t_end));

  try {
    pulse.validate();
    grid.validate();
    grid.check_resolution(pulse.carrier);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }

  if (doc.contains("initial_state")) cfg.initial_state = parse_initial_state(doc.at("initial_state"));
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

SimulationRun simulate(const RunConfig& cfg, const PropagationOptions& opts) {
  SimulationRun run;
  run.config = cfg;
  const DerivedParams& d = cfg.derived;
  RunReport& report = run.report;
  report.mode = cfg.pulse.mode;

  if (cfg.calibrate_to_theta) {
    run.config.pulse.V_s = calibrate_voltage(*cfg.calibrate_to_theta, cfg.pulse.mode, d, cfg.pulse.sigma_t);
    report.calibrated = true;
  }
  const PulseConfig pulse = run.config.pulse;
  report.V_s = pulse.V_s;

  if (!pulse.rwa_window_ok()) {
    report.warnings.push_back("carrier * sigma_t = " + format_csv_number(pulse.carrier * pulse.sigma_t) +
                              " < 10; rotating-wave comparison is not meaningful");
  }
  if (cfg.carrier_overridden) {
    report.warnings.push_back("carrier overridden; closed forms assume the lambda_Sigma carrier");
  }
  const double half = kWindowSigmas * pulse.sigma_t;
  if (cfg.grid.t_start > pulse.t_center - half || cfg.grid.t_end < pulse.t_center + half) {
    report.warnings.push_back("grid does not cover t_center +- 6 sigma_t; pulse is truncated");
  }

  const ComplexMatrix4 h0 = build_h0(d);
  const DriveFunction drive = [&pulse, &d](double t) { return build_hd(qubit_drive(pulse, d, t)); };
  run.result = propagate(h0, drive, cfg.grid, cfg.initial_state, opts);

  const std::size_t points = run.result.magnitudes.size();
  run.envelope.reserve(points);
  for (std::size_t k = 0; k < points; ++k) {
    run.envelope.push_back(qubit_drive(pulse, d, cfg.grid.time(k)).qubit1);
  }

  report.final_magnitudes = run.result.final_state.magnitudes();
  report.rms_vs_balanced = rms_difference(report.final_magnitudes, kBalancedMagnitudes);
  report.dt = cfg.grid.dt;
  report.steps = cfg.grid.steps();
  report.norm_drift = run.result.max_norm_drift;
  report.unitarity_defect = run.result.max_unitarity_defect;
  report.theta_quadrature = shift_angle_quadrature(pulse, d);

  if (d.symmetric()) {
    const SpectralParams sp = spectral_params(d);
    const double theta = shift_angle(pulse.mode, d, sp, pulse.V_s, pulse.sigma_t);
    const Eigen::Vector4cd psi_a = evolution_matrix(pulse.mode, sp, theta) * cfg.initial_state.coefficients();
    const Magnitudes mags = magnitudes_of(psi_a);
    report.theta_used = theta;
    report.analytic_magnitudes = mags;
    report.rms_vs_analytic = rms_difference(report.final_magnitudes, mags);
    double worst = 0.0;
    for (std::size_t i = 0; i < 4; ++i) worst = std::max(worst, std::abs(report.final_magnitudes[i] - mags[i]));
    report.max_abs_deviation_vs_analytic = worst;
    report.max_complex_deviation_vs_analytic =
        (run.result.final_state.coefficients() - psi_a).cwiseAbs().maxCoeff();
  } else {
    report.warnings.push_back("non-identical qubits; no closed-form comparison");
  }
  return run;
}

namespace {

void prepare_out_dir(const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec || !std::filesystem::is_directory(out_dir)) {
    throw ConfigError("cannot create output directory " + out_dir.string());
  }
}

}  // namespace

RunReport run_simulate(const RunConfig& cfg, const std::filesystem::path& out_dir) {
  prepare_out_dir(out_dir);
  PropagationOptions opts;
  opts.record_steps = false;
  const SimulationRun run = simulate(cfg, opts);
  write_text_file(out_dir / "series.csv", series_csv(run));
  write_text_file(out_dir / "summary.json", summary_json(run.report));
  return run.report;
}

AnalyticReport run_analytic(const RunConfig& cfg) {
  const DerivedParams& d = cfg.derived;
  AnalyticReport r;
  r.mode = cfg.pulse.mode;
  PulseConfig pulse = cfg.pulse;
  if (cfg.calibrate_to_theta) pulse.V_s = calibrate_voltage(*cfg.calibrate_to_theta, pulse.mode, d, pulse.sigma_t);
  r.V_s = pulse.V_s;
  const SpectralParams sp = spectral_params(d);
  r.theta = shift_angle(pulse.mode, d, sp, pulse.V_s, pulse.sigma_t);
  r.theta_quadrature = shift_angle_quadrature(pulse, d);
  r.U = evolution_matrix(pulse.mode, sp, r.theta);
  r.psi = StateVector4(r.U * cfg.initial_state.coefficients());
  r.magnitudes = r.psi.magnitudes();
  r.rms_vs_balanced = rms_difference(r.magnitudes, kBalancedMagnitudes);
  return r;
}

std::string format_csv_number(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::string series_csv(const SimulationRun& run) {
  std::string out = "t,mag00,mag01,mag10,mag11,envelope\n";
  const auto& mags = run.result.magnitudes;
  out.reserve(mags.size() * 120);
  for (std::size_t k = 0; k < mags.size(); ++k) {
    out += format_csv_number(run.config.grid.time(k));
    for (double m : mags[k]) {
      out += ',';
      out += format_csv_number(m);
    }
    out += ',';
    out += format_csv_number(run.envelope[k]);
    out += '\n';
  }
  return out;
}

std::string summary_json(const RunReport& r) {
  ordered_json j;
  j["mode"] = to_string(r.mode);
  j["final_magnitudes"] = magnitudes_json(r.final_magnitudes);
  j["analytic_magnitudes"] = r.analytic_magnitudes ? magnitudes_json(*r.analytic_magnitudes) : ordered_json(nullptr);
  j["rms_vs_analytic"] = optional_json(r.rms_vs_analytic);
  j["rms_vs_balanced"] = r.rms_vs_balanced;
  j["max_abs_deviation_vs_analytic"] = optional_json(r.max_abs_deviation_vs_analytic);
  j["max_complex_deviation_vs_analytic"] = optional_json(r.max_complex_deviation_vs_analytic);
  j["theta_used"] = optional_json(r.theta_used);
  j["theta_quadrature"] = r.theta_quadrature;
  j["calibrated_V_s"] = r.calibrated ? ordered_json(r.V_s) : ordered_json(nullptr);
  j["V_s"] = r.V_s;
  j["dt"] = r.dt;
  j["steps"] = r.steps;
  j["norm_drift"] = r.norm_drift;
  j["unitarity_defect"] = r.unitarity_defect;
  j["warnings"] = r.warnings;
  return j.dump(2) + "\n";
}

std::string analytic_json(const AnalyticReport& r) {
  ordered_json j;
  j["mode"] = to_string(r.mode);
  j["V_s"] = r.V_s;
  j["theta"] = r.theta;
  j["theta_quadrature"] = r.theta_quadrature;
  j["magnitudes"] = magnitudes_json(r.magnitudes);
  ordered_json psi = ordered_json::array();
  for (int i = 0; i < 4; ++i) psi.push_back({r.psi[i].real(), r.psi[i].imag()});
  j["end_state"] = psi;
  j["rms_vs_balanced"] = r.rms_vs_balanced;
  return j.dump(2) + "\n";
}

std::vector<SweepRow> run_sweep(const RunConfig& tmpl, const std::string& axis,
                                const std::vector<double>& values, unsigned workers) {
  const auto& axes = sweep_axes();
  if (std::find(axes.begin(), axes.end(), axis) == axes.end()) {
    throw ConfigError("unknown sweep axis \"" + axis + "\"");
  }
  const json base = parse_document(tmpl.source);

  std::vector<RunConfig> configs;
  configs.reserve(values.size());
  for (double v : values) {
    json doc = base;
    if (axis == "V_s") {
      doc["pulse.V_s"] = v;
      doc.erase("calibrate_to_theta");
    } else if (axis == "sigma_t") {
      doc["pulse.sigma_t"] = v;
    } else if (axis == "gamma") {
      if (!(v > 0.0 && v < 1.0)) throw ConfigError("sweep value for gamma must lie in (0, 1)");
      doc["circuit.C_g"] = v * (tmpl.circuit.C_J + tmpl.circuit.C_d) / (1.0 - v);
    } else if (axis == "C_g") {
      doc["circuit.C_g"] = v;
    } else if (axis == "dt") {
      doc["grid.dt"] = v;
    } else {
      doc["pulse.phi_d"] = v;
    }
    try {
      configs.push_back(parse_config(doc.dump()));
    } catch (const ConfigError& e) {
      throw ConfigError("sweep " + axis + " = " + format_csv_number(v) + ": " + e.what());
    }
  }

  const std::size_t n = configs.size();
  std::vector<SweepRow> rows(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    PropagationOptions opts;
    opts.record_steps = false;
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        rows[i] = SweepRow{values[i], simulate(configs[i], opts).report};
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    if (n > 0) work();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

std::string sweep_csv(const std::string& axis, const std::vector<SweepRow>& rows) {
  std::string out = axis +
                    ",mag00,mag01,mag10,mag11,analytic00,analytic01,analytic10,analytic11,"
                    "rms_vs_analytic,rms_vs_balanced,theta_used,V_s_applied,dt,steps,norm_drift\n";
  const auto opt = [](const std::optional<double>& v) { return v ? format_csv_number(*v) : std::string(); };
  for (const SweepRow& row : rows) {
    const RunReport& r = row.report;
    out += format_csv_number(row.value);
    for (double m : r.final_magnitudes) out += ',' + format_csv_number(m);
    for (std::size_t i = 0; i < 4; ++i) {
      out += ',';
      if (r.analytic_magnitudes) out += format_csv_number((*r.analytic_magnitudes)[i]);
    }
    out += ',' + opt(r.rms_vs_analytic);
    out += ',' + format_csv_number(r.rms_vs_balanced);
    out += ',' + opt(r.theta_used);
    out += ',' + format_csv_number(r.V_s);
    out += ',' + format_csv_number(r.dt);
    out += ',' + std::to_string(r.steps);
    out += ',' + format_csv_number(r.norm_drift);
    out += '\n';
  }
  return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << text;
  if (!out) throw ConfigError("failed writing " + path.string());
}

}  // namespace tqd
