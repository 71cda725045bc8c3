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

#include "tqdirac/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iterator>
#include <numbers>
#include <sstream>

#include "json.hpp"
#include "tqdirac/circuit_model.hpp"
#include "tqdirac/dirac_propagator.hpp"
#include "tqdirac/errors.hpp"
#include "tqdirac/harness.hpp"
#include "tqdirac/operator_algebra.hpp"
#include "tqdirac/pulse_synthesis.hpp"
#include "tqdirac/rwa_analytic.hpp"

namespace tqd {

namespace {

constexpr double kPi = std::numbers::pi;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string num(double x) {
  std::ostringstream os;
  os.precision(4);
  os << x;
  return os.str();
}

CriterionResult at_most(int id, std::string name, double measured, double threshold,
                        double seconds, double runtime_limit, std::string detail = {}) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  r.measured = measured;
  r.threshold = threshold;
  r.comparison = "<=";
  r.seconds = seconds;
  r.passed = measured <= threshold && seconds < runtime_limit;
  r.detail = std::move(detail);
  if (!r.detail.empty()) r.detail += "; ";
  r.detail += "runtime limit " + num(runtime_limit) + " s";
  return r;
}

DriveFunction pulse_drive(const PulseConfig& pulse, const DerivedParams& d) {
  return [pulse, d](double t) { return build_hd(qubit_drive(pulse, d, t)); };
}

// Representative run with V_s resolved by calibration.
struct PreparedRun {
  RunConfig cfg;
  ComplexMatrix4 h0;
};

PreparedRun prepare(DriveMode mode) {
  PreparedRun p{parse_config(representative_config_text(mode)), {}};
  p.cfg.pulse.V_s = calibrate_voltage(*p.cfg.calibrate_to_theta, mode, p.cfg.derived, p.cfg.pulse.sigma_t);
  p.h0 = build_h0(p.cfg.derived);
  return p;
}

CriterionResult rotating_frame_oracle() {
  Stopwatch sw;
  double worst = 0.0;
  for (double gamma : {0.01, 0.05, 0.1}) {
    const DerivedParams d = derive_params(CircuitParams::with_gamma(gamma), UnitMode::dimensionless);
    const ComplexMatrix4 h0 = build_h0(d);
    const SpectralParams sp = spectral_params(d);
    const double span = 3.0 * 2.0 * kPi / sp.lambda_delta;
    for (int j = 0; j < 100; ++j) {
      const double t = span * j / 99.0;
      const double err =
          (rotating_frame_unitary(h0, t) - rotating_frame_closed_form(sp, t)).cwiseAbs().maxCoeff();
      worst = std::max(worst, err);
    }
  }
  return at_most(1, "rotating-frame unitary vs closed form (max entry error)", worst, 1e-9,
                 sw.seconds(), 1.0, "gamma in {0.01,0.05,0.1}, 100 points over 3 lambda_Delta periods");
}

CriterionResult shift_angle_oracle() {
  Stopwatch sw;
  double worst = 0.0;
  for (double gamma : {0.01, 0.05, 0.1}) {
    const DerivedParams d = derive_params(CircuitParams::with_gamma(gamma), UnitMode::dimensionless);
    const SpectralParams sp = spectral_params(d);
    for (double detuning_width : {0.25, 1.0, 2.0}) {
      for (DriveMode mode : {DriveMode::even, DriveMode::odd}) {
        PulseConfig pulse;
        pulse.mode = mode;
        pulse.V_s = 0.01;
        pulse.sigma_t = detuning_width / sp.lambda_delta;
        pulse.carrier = sp.lambda_sigma;
        const double closed = shift_angle(mode, d, sp, pulse.V_s, pulse.sigma_t);
        const double quad = shift_angle_quadrature(pulse, d);
        worst = std::max(worst, std::abs(closed - quad) / closed);
      }
    }
  }
  return at_most(2, "shift angle closed form vs Simpson quadrature (relative)", worst, 1e-3,
                 sw.seconds(), 1.0, "3x3 grid of (gamma, lambda_Delta sigma_t), both modes");
}

CriterionResult unitarity_suite() {
  Stopwatch sw;
  const PreparedRun run = prepare(DriveMode::even);
  const SimulationResult sim =
      propagate(run.h0, pulse_drive(run.cfg.pulse, run.cfg.derived), run.cfg.grid, run.cfg.initial_state);
  const double numeric = std::max(sim.max_unitarity_defect, unitarity_defect(sim.bundle.U_d));

  double analytic = 0.0;
  double rho_identity = 0.0;
  for (double gamma : {0.0, 0.05, 0.1}) {
    DerivedParams d;
    d.gamma = gamma;
    d.omega_1 = d.omega_2 = 1.0;
    const SpectralParams sp = spectral_params(d);
    rho_identity = std::max(rho_identity, std::abs(sp.rho_c * sp.rho_c + sp.rho_s * sp.rho_s - 0.5));
    for (double theta : {0.1, 1.0, 2.5, kPi}) {
      for (DriveMode mode : {DriveMode::even, DriveMode::odd}) {
        analytic = std::max(analytic, unitarity_defect(evolution_matrix(mode, sp, theta)));
      }
    }
  }
  CriterionResult r;
  r.id = 3;
  r.name = "unitarity of accumulated U_d and closed-form U_de/U_do";
  r.measured = numeric;
  r.threshold = 1e-10;
  r.comparison = "<=";
  r.seconds = sw.seconds();
  const bool enough_steps = run.cfg.grid.steps() >= 10000;
  r.passed = enough_steps && numeric <= 1e-10 && analytic <= 1e-12 && rho_identity <= 4e-16;
  r.detail = "steps=" + std::to_string(run.cfg.grid.steps()) + ", closed-form defect=" + num(analytic) +
             " (<= 1e-12), |rho_C^2+rho_S^2-1/2|=" + num(rho_identity);
  return r;
}

CriterionResult frame_identity() {
  Stopwatch sw;
  double worst = 0.0;
  for (DriveMode mode : {DriveMode::even, DriveMode::odd}) {
    const PreparedRun run = prepare(mode);
    const DriveFunction drive = pulse_drive(run.cfg.pulse, run.cfg.derived);
    PropagationOptions opts;
    opts.record_steps = false;
    const SimulationResult sim = propagate(run.h0, drive, run.cfg.grid, run.cfg.initial_state, opts);
    const StateVector4 lab = lab_frame_reference(run.h0, drive, run.cfg.grid, run.cfg.initial_state);
    const Eigen::Vector4cd mapped = sim.bundle.U_rf.adjoint() * sim.final_state.coefficients();
    worst = std::max(worst, (lab.coefficients() - mapped).norm());
  }
  return at_most(4, "lab frame vs U_rf^dagger * interaction frame (state 2-norm)", worst, 1e-6,
                 sw.seconds(), 10.0, "even and odd calibrated pulses");
}

CriterionResult convergence_order() {
  Stopwatch sw;
  const PreparedRun run = prepare(DriveMode::even);
  const DriveFunction drive = pulse_drive(run.cfg.pulse, run.cfg.derived);
  const TimeGrid base = run.cfg.grid;
  const double span = base.t_end - base.t_start;
  const double period = 2.0 * kPi / run.cfg.pulse.carrier;
  const auto coarsest = static_cast<std::size_t>(std::ceil(span / (period / kMinPointsPerCarrierPeriod)));

  PropagationOptions opts;
  opts.record_steps = false;
  const auto final_mags = [&](std::size_t steps) {
    TimeGrid g = base;
    g.dt = span / static_cast<double>(steps);
    return propagate(run.h0, drive, g, run.cfg.initial_state, opts).final_state.magnitudes();
  };

  const Magnitudes reference = final_mags(coarsest * 100);
  std::vector<double> log_dt, log_err;
  for (int k = 0; k < 5; ++k) {
    const auto steps =
        static_cast<std::size_t>(std::llround(static_cast<double>(coarsest) * std::pow(10.0, k / 4.0)));
    const Magnitudes m = final_mags(steps);
    double err = 0.0;
    for (std::size_t i = 0; i < 4; ++i) err = std::max(err, std::abs(m[i] - reference[i]));
    log_dt.push_back(std::log(span / static_cast<double>(steps)));
    log_err.push_back(std::log(err));
  }
  const double n = static_cast<double>(log_dt.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < log_dt.size(); ++i) {
    sx += log_dt[i];
    sy += log_err[i];
    sxx += log_dt[i] * log_dt[i];
    sxy += log_dt[i] * log_err[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);

  CriterionResult r;
  r.id = 5;
  r.name = "convergence order of final magnitudes (log-log slope)";
  r.measured = slope;
  r.threshold = 2.0;
  r.comparison = "within 0.2 of";
  r.seconds = sw.seconds();
  r.passed = std::abs(slope - 2.0) <= 0.2;
  r.detail = "5 dt values over one decade from 1/50 carrier period, error at coarsest=" +
             num(std::exp(log_err.front())) + ", finest=" + num(std::exp(log_err.back()));
  return r;
}

CriterionResult balanced_reproduction(int id, DriveMode mode, double* max_deviation) {
  Stopwatch sw;
  const RunConfig cfg = parse_config(representative_config_text(mode));
  PropagationOptions opts;
  opts.record_steps = false;
  const SimulationRun run = simulate(cfg, opts);
  const RunReport& rep = run.report;
  if (max_deviation) *max_deviation = rep.max_abs_deviation_vs_analytic.value_or(1.0);
  std::string detail = "final |c| = [" + num(rep.final_magnitudes[0]) + ", " + num(rep.final_magnitudes[1]) +
                       ", " + num(rep.final_magnitudes[2]) + ", " + num(rep.final_magnitudes[3]) +
                       "], gamma=" + num(cfg.derived.gamma) +
                       ", lambda_Sigma sigma_t=" + num(cfg.pulse.carrier * cfg.pulse.sigma_t);
  return at_most(id, to_string(mode) + "-mode calibrated run RMS vs balanced magnitudes",
                 rep.rms_vs_balanced, 0.07, sw.seconds(), 30.0, detail);
}

CriterionResult simulation_vs_theory(double max_deviation, double seconds) {
  return at_most(8, "simulation vs closed-form end state (max |c| deviation)", max_deviation, 0.01,
                 seconds, 30.0,
                 "relative to 0.5: " + num(100.0 * max_deviation / 0.5) + "% of the balanced amplitude");
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

CriterionResult determinism(const std::filesystem::path& scratch) {
  Stopwatch sw;
  const RunConfig cfg = parse_config(representative_config_text(DriveMode::even));
  const auto a = scratch / "determinism_a";
  const auto b = scratch / "determinism_b";
  run_simulate(cfg, a);
  run_simulate(cfg, b);
  const std::string csv_a = slurp(a / "series.csv");
  const bool same = !csv_a.empty() && csv_a == slurp(b / "series.csv") &&
                    slurp(a / "summary.json") == slurp(b / "summary.json");
  CriterionResult r;
  r.id = 9;
  r.name = "determinism of simulate outputs (bit-identical CSV and summary)";
  r.measured = same ? 0.0 : 1.0;
  r.threshold = 0.0;
  r.comparison = "mismatches ==";
  r.seconds = sw.seconds();
  r.passed = same;
  r.detail = "series.csv " + std::to_string(csv_a.size()) + " bytes";
  return r;
}

CriterionResult guarded(int id, const std::string& name, const std::function<CriterionResult()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    CriterionResult r;
    r.id = id;
    r.name = name;
    r.passed = false;
    r.detail = std::string("threw: ") + e.what();
    return r;
  }
}

}  // namespace

std::string representative_config_text(DriveMode mode) {
  nlohmann::ordered_json j;
  j["comment"] = "Representative grAl-like values chosen for this tool; not measured device data.";
  j["unit_mode"] = "si";
  j["circuit.L1"] = 20e-9;
  j["circuit.L2"] = 20e-9;
  j["circuit.C_J"] = 50e-15;
  j["circuit.C_d"] = 5e-15;
  j["circuit.C_g"] = 0.5e-15;
  j["pulse.mode"] = to_string(mode);
  j["pulse.sigma_t"] = 0.7e-9;
  j["pulse.phi_d"] = 0.0;
  j["calibrate_to_theta"] = kPi;
  return j.dump(2);
}

std::vector<CriterionResult> run_acceptance_suite(
    const std::filesystem::path& scratch_dir,
    const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> results;
  const auto record = [&](CriterionResult r) {
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  };

  record(guarded(1, "rotating-frame oracle", rotating_frame_oracle));
  record(guarded(2, "shift-angle oracle", shift_angle_oracle));
  record(guarded(3, "unitarity suite", unitarity_suite));
  record(guarded(4, "frame identity", frame_identity));
  record(guarded(5, "convergence order", convergence_order));

  double even_deviation = 1.0;
  Stopwatch even_clock;
  record(guarded(6, "even reproduction",
                 [&] { return balanced_reproduction(6, DriveMode::even, &even_deviation); }));
  const double even_seconds = even_clock.seconds();
  record(guarded(7, "odd reproduction", [] { return balanced_reproduction(7, DriveMode::odd, nullptr); }));
  record(guarded(8, "simulation vs theory", [&] { return simulation_vs_theory(even_deviation, even_seconds); }));
  record(guarded(9, "determinism", [&] { return determinism(scratch_dir); }));
  return results;
}

std::string format_criterion_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << "  criterion " << r.id << ": " << r.name << " | measured "
     << num(r.measured) << ' ' << r.comparison << ' ' << num(r.threshold) << " | " << num(r.seconds) << " s";
  if (!r.detail.empty()) os << " | " << r.detail;
  return os.str();
}

std::string acceptance_json(const std::vector<CriterionResult>& results) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["name"] = r.name;
    j["passed"] = r.passed;
    j["measured"] = r.measured;
    j["comparison"] = r.comparison;
    j["threshold"] = r.threshold;
    j["detail"] = r.detail;
    arr.push_back(j);
  }
  return arr.dump(2) + "\n";
}

}  // namespace tqd
