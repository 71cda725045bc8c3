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

#include "tqdirac/tqdirac.h"

#include <cmath>
#include <filesystem>
#include <limits>
#include <new>
#include <string>

#include "json.hpp"
#include "tqdirac/errors.hpp"
#include "tqdirac/harness.hpp"
#include "tqdirac/pulse_synthesis.hpp"
#include "tqdirac/rwa_analytic.hpp"
#include "tqdirac/verification.hpp"

struct tqd_config {
  tqd::RunConfig cfg;
};

struct tqd_report {
  tqd::RunReport report;
};

namespace {

thread_local std::string g_last_error;

tqd_status fail(tqd_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <class F>
tqd_status guard(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const tqd::NumericalError& e) {
    return fail(TQD_ERR_NUMERICAL, e.what());
  } catch (const tqd::ConfigError& e) {
    return fail(TQD_ERR_CONFIG, e.what());
  } catch (const tqd::DomainError& e) {
    return fail(TQD_ERR_CONFIG, e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    return fail(TQD_ERR_CONFIG, e.what());
  } catch (const std::bad_alloc&) {
    return fail(TQD_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TQD_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(TQD_ERR_INTERNAL, "unknown error");
  }
}

tqd_status null_argument(const char* what) {
  return fail(TQD_ERR_INVALID_ARGUMENT, std::string(what) + " must not be null");
}

nlohmann::ordered_json derived_json(const tqd::DerivedParams& d) {
  nlohmann::ordered_json j;
  j["unit_mode"] = d.units == tqd::UnitMode::si ? "si" : "dimensionless";
  j["C_s"] = d.C_s;
  j["gamma"] = d.gamma;
  j["C_M"] = d.C_M;
  j["C_G"] = std::isinf(d.C_G) ? nlohmann::ordered_json("inf") : nlohmann::ordered_json(d.C_G);
  j["mu_d"] = d.mu_d;
  j["mu_g"] = d.mu_g;
  j["omega_1"] = d.omega_1;
  j["omega_2"] = d.omega_2;
  j["omega_g"] = d.omega_g;
  j["sigma_phi1"] = d.sigma_phi1;
  j["sigma_phi2"] = d.sigma_phi2;
  j["symmetric"] = d.symmetric();
  if (d.symmetric()) {
    const tqd::SpectralParams sp = tqd::spectral_params(d);
    j["lambda_delta"] = sp.lambda_delta;
    j["lambda_sigma"] = sp.lambda_sigma;
    j["beta_sigma"] = sp.beta_sigma;
    j["rho_c"] = sp.rho_c;
    j["rho_s"] = sp.rho_s;
  }
  return j;
}

}  // namespace

extern "C" {

const char* tqd_version(void) { return "1.0.0"; }

const char* tqd_last_error(void) { return g_last_error.c_str(); }

tqd_status tqd_config_parse(const char* text, tqd_config** out) {
  if (!text) return null_argument("text");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guard([&] {
    *out = new tqd_config{tqd::parse_config(text)};
    return TQD_OK;
  });
}

tqd_status tqd_config_load(const char* path, tqd_config** out) {
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guard([&] {
    *out = new tqd_config{tqd::load_config(path)};
    return TQD_OK;
  });
}

void tqd_config_free(tqd_config* cfg) { delete cfg; }

tqd_status tqd_derive(const tqd_config* cfg, tqd_derived* out) {
  if (!cfg) return null_argument("cfg");
  if (!out) return null_argument("out");
  return guard([&] {
    const tqd::DerivedParams& d = cfg->cfg.derived;
    tqd_derived r{};
    r.C_s = d.C_s;
    r.gamma = d.gamma;
    r.C_M = d.C_M;
    r.C_G = d.C_G;
    r.mu_d = d.mu_d;
    r.mu_g = d.mu_g;
    r.omega_1 = d.omega_1;
    r.omega_2 = d.omega_2;
    r.omega_g = d.omega_g;
    r.sigma_phi1 = d.sigma_phi1;
    r.sigma_phi2 = d.sigma_phi2;
    r.symmetric = d.symmetric() ? 1 : 0;
    if (r.symmetric) {
      const tqd::SpectralParams sp = tqd::spectral_params(d);
      r.lambda_delta = sp.lambda_delta;
      r.lambda_sigma = sp.lambda_sigma;
      r.beta_sigma = sp.beta_sigma;
      r.rho_c = sp.rho_c;
      r.rho_s = sp.rho_s;
    }
    *out = r;
    return TQD_OK;
  });
}

tqd_status tqd_derive_write(const tqd_config* cfg, const char* out_dir) {
  if (!cfg) return null_argument("cfg");
  if (!out_dir) return null_argument("out_dir");
  return guard([&] {
    std::filesystem::create_directories(out_dir);
    tqd::write_text_file(std::filesystem::path(out_dir) / "summary.json",
                         derived_json(cfg->cfg.derived).dump(2) + "\n");
    return TQD_OK;
  });
}

tqd_status tqd_simulate(const tqd_config* cfg, const char* out_dir, tqd_report** out) {
  if (!cfg) return null_argument("cfg");
  if (!out_dir) return null_argument("out_dir");
  if (out) *out = nullptr;
  return guard([&] {
    tqd::RunReport report = tqd::run_simulate(cfg->cfg, out_dir);
    if (out) *out = new tqd_report{std::move(report)};
    return TQD_OK;
  });
}

tqd_status tqd_analytic(const tqd_config* cfg, const char* out_dir, double magnitudes[4],
                        double* theta) {
  if (!cfg) return null_argument("cfg");
  return guard([&] {
    const tqd::AnalyticReport r = tqd::run_analytic(cfg->cfg);
    if (magnitudes)
      for (int i = 0; i < 4; ++i) magnitudes[i] = r.magnitudes[static_cast<std::size_t>(i)];
    if (theta) *theta = r.theta;
    if (out_dir) {
      std::filesystem::create_directories(out_dir);
      tqd::write_text_file(std::filesystem::path(out_dir) / "summary.json", tqd::analytic_json(r));
    }
    return TQD_OK;
  });
}

tqd_status tqd_calibrate(const tqd_config* cfg, double target_theta, const char* out_dir,
                         double* v_s) {
  if (!cfg) return null_argument("cfg");
  return guard([&] {
    const tqd::RunConfig& c = cfg->cfg;
    const double volts = tqd::calibrate_voltage(target_theta, c.pulse.mode, c.derived, c.pulse.sigma_t);
    if (v_s) *v_s = volts;
    if (out_dir) {
      tqd::PulseConfig pulse = c.pulse;
      pulse.V_s = volts;
      const tqd::SpectralParams sp = tqd::spectral_params(c.derived);
      nlohmann::ordered_json j;
      j["mode"] = tqd::to_string(c.pulse.mode);
      j["target_theta"] = target_theta;
      j["sigma_t"] = c.pulse.sigma_t;
      j["V_s"] = volts;
      j["peak_drive_amplitude"] = tqd::peak_drive_amplitude(c.pulse.mode, c.derived, volts);
      j["theta_closed_form"] = tqd::shift_angle(c.pulse.mode, c.derived, sp, volts, c.pulse.sigma_t);
      j["theta_quadrature"] = tqd::shift_angle_quadrature(pulse, c.derived);
      std::filesystem::create_directories(out_dir);
      tqd::write_text_file(std::filesystem::path(out_dir) / "summary.json", j.dump(2) + "\n");
    }
    return TQD_OK;
  });
}

tqd_status tqd_sweep(const tqd_config* cfg, const char* axis, const double* values, size_t count,
                     const char* out_dir) {
  if (!cfg) return null_argument("cfg");
  if (!axis) return null_argument("axis");
  if (!out_dir) return null_argument("out_dir");
  if (count > 0 && !values) return null_argument("values");
  return guard([&] {
    const std::vector<double> vals(values, values + count);
    const auto rows = tqd::run_sweep(cfg->cfg, axis, vals);
    std::filesystem::create_directories(out_dir);
    const std::filesystem::path dir(out_dir);
    tqd::write_text_file(dir / "sweep.csv", tqd::sweep_csv(axis, rows));
    nlohmann::ordered_json j;
    j["axis"] = axis;
    j["runs"] = rows.size();
    tqd::write_text_file(dir / "summary.json", j.dump(2) + "\n");
    return TQD_OK;
  });
}

tqd_status tqd_verify(const char* out_dir, tqd_line_callback line_cb, void* user, int* failed_count) {
  if (!out_dir) return null_argument("out_dir");
  return guard([&] {
    std::filesystem::create_directories(out_dir);
    const auto results = tqd::run_acceptance_suite(out_dir, [&](const tqd::CriterionResult& r) {
      if (line_cb) line_cb(tqd::format_criterion_line(r).c_str(), user);
    });
    int failed = 0;
    for (const auto& r : results) failed += r.passed ? 0 : 1;
    if (failed_count) *failed_count = failed;
    tqd::write_text_file(std::filesystem::path(out_dir) / "verify.json", tqd::acceptance_json(results));
    if (failed > 0) return fail(TQD_ERR_CHECK_FAILED, std::to_string(failed) + " acceptance criteria failed");
    return TQD_OK;
  });
}

void tqd_report_free(tqd_report* report) { delete report; }

tqd_mode tqd_report_mode(const tqd_report* report) {
  return report && report->report.mode == tqd::DriveMode::odd ? TQD_MODE_ODD : TQD_MODE_EVEN;
}

void tqd_report_final_magnitudes(const tqd_report* report, double out[4]) {
  if (!report || !out) return;
  for (std::size_t i = 0; i < 4; ++i) out[i] = report->report.final_magnitudes[i];
}

int tqd_report_analytic_magnitudes(const tqd_report* report, double out[4]) {
  if (!report || !report->report.analytic_magnitudes) return 0;
  if (out)
    for (std::size_t i = 0; i < 4; ++i) out[i] = (*report->report.analytic_magnitudes)[i];
  return 1;
}

double tqd_report_rms_vs_analytic(const tqd_report* report) {
  if (!report || !report->report.rms_vs_analytic) return std::numeric_limits<double>::quiet_NaN();
  return *report->report.rms_vs_analytic;
}

double tqd_report_rms_vs_balanced(const tqd_report* report) {
  return report ? report->report.rms_vs_balanced : std::numeric_limits<double>::quiet_NaN();
}

double tqd_report_theta(const tqd_report* report) {
  if (!report || !report->report.theta_used) return std::numeric_limits<double>::quiet_NaN();
  return *report->report.theta_used;
}

double tqd_report_v_s(const tqd_report* report) {
  return report ? report->report.V_s : std::numeric_limits<double>::quiet_NaN();
}

size_t tqd_report_steps(const tqd_report* report) { return report ? report->report.steps : 0; }

double tqd_report_norm_drift(const tqd_report* report) {
  return report ? report->report.norm_drift : std::numeric_limits<double>::quiet_NaN();
}

size_t tqd_report_warning_count(const tqd_report* report) {
  return report ? report->report.warnings.size() : 0;
}

const char* tqd_report_warning(const tqd_report* report, size_t index) {
  if (!report || index >= report->report.warnings.size()) return nullptr;
  return report->report.warnings[index].c_str();
}

}  // extern "C"
