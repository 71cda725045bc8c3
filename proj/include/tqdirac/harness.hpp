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

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tqdirac/circuit_model.hpp"
#include "tqdirac/dirac_propagator.hpp"
#include "tqdirac/pulse_synthesis.hpp"
#include "tqdirac/types.hpp"

namespace tqd {

/// A fully validated run. Built only by `parse_config`; `source` keeps the
/// original document so sweeps can re-derive dependent defaults per value.
struct RunConfig {
  CircuitParams circuit;
  UnitMode unit_mode = UnitMode::si;
  DerivedParams derived;
  PulseConfig pulse;
  TimeGrid grid;
  StateVector4 initial_state;
  std::optional<double> calibrate_to_theta;
  bool carrier_overridden = false;
  std::string comment;
  std::string source;
};

/// Flat JSON object with dotted keys:
///   circuit.{L1,L2,C_J,C_d,C_g}, unit_mode ("si" | "dimensionless"),
///   pulse.{V_s,sigma_t,phi_d,mode,carrier_override,t_center},
///   grid.{t_start,t_end,dt}, calibrate_to_theta, initial_state, comment.
/// Every key is optional; unknown keys are rejected. Throws ConfigError.
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::filesystem::path& path);

struct RunReport {
  DriveMode mode = DriveMode::even;
  Magnitudes final_magnitudes{};
  std::optional<Magnitudes> analytic_magnitudes;
  std::optional<double> rms_vs_analytic;
  double rms_vs_balanced = 0.0;
  std::optional<double> max_abs_deviation_vs_analytic;
  std::optional<double> max_complex_deviation_vs_analytic;  // phase-sensitive, informational
  std::optional<double> theta_used;                         // closed form
  double theta_quadrature = 0.0;
  double V_s = 0.0;
  bool calibrated = false;
  double dt = 0.0;
  std::size_t steps = 0;
  double norm_drift = 0.0;
  double unitarity_defect = 0.0;
  std::vector<std::string> warnings;
};

struct SimulationRun {
  RunConfig config;  // with pulse.V_s resolved
  RunReport report;
  SimulationResult result;
  std::vector<double> envelope;  // qubit-1 drive amplitude at each grid point
};

/// Calibrate (if requested), propagate and compare with the closed forms.
SimulationRun simulate(const RunConfig& cfg, const PropagationOptions& opts = {});

/// `simulate` plus <out_dir>/series.csv and <out_dir>/summary.json.
RunReport run_simulate(const RunConfig& cfg, const std::filesystem::path& out_dir);

/// Closed-form end state for the config's pulse (identical qubits only).
struct AnalyticReport {
  DriveMode mode = DriveMode::even;
  double V_s = 0.0;
  double theta = 0.0;
  double theta_quadrature = 0.0;
  Magnitudes magnitudes{};
  double rms_vs_balanced = 0.0;
  ComplexMatrix4 U;
  StateVector4 psi;
};
AnalyticReport run_analytic(const RunConfig& cfg);

std::string format_csv_number(double value);
std::string series_csv(const SimulationRun& run);
std::string summary_json(const RunReport& report);
std::string analytic_json(const AnalyticReport& report);

inline const std::vector<std::string>& sweep_axes() {
  static const std::vector<std::string> axes{"V_s", "sigma_t", "gamma", "C_g", "dt", "phi_d"};
  return axes;
}

struct SweepRow {
  double value = 0.0;
  RunReport report;
};

/// One independent run per value, in parallel; rows keep input order.
std::vector<SweepRow> run_sweep(const RunConfig& tmpl, const std::string& axis,
                                const std::vector<double>& values, unsigned workers = 0);
std::string sweep_csv(const std::string& axis, const std::vector<SweepRow>& rows);

void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace tqd
