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

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "tqdirac/errors.hpp"
#include "tqdirac/harness.hpp"

using namespace tqd;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;

// Dimensionless, weakly coupled, coarse-ish grid: fast but inside the rotating-wave regime.
std::string base_config(const std::string& extra = "") {
  std::string text = R"({
    "unit_mode": "dimensionless",
    "circuit.L1": 2e-08, "circuit.L2": 2e-08,
    "circuit.C_J": 5e-14, "circuit.C_d": 5e-15, "circuit.C_g": 5e-16,
    "pulse.sigma_t": 20.0,
    "grid.dt": 0.02)";
  text += extra;
  text += "}";
  return text;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("tqdirac_test_harness_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string error_of(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("parse_config defaults") {
  const RunConfig cfg = parse_config("{}");
  const CircuitParams rep = CircuitParams::representative();
  CHECK(cfg.circuit.C_g == rep.C_g);
  CHECK(cfg.unit_mode == UnitMode::si);
  CHECK(cfg.pulse.mode == DriveMode::even);
  CHECK(cfg.pulse.carrier == doctest::Approx(cfg.derived.sum_frequency()));
  CHECK(cfg.pulse.carrier * cfg.pulse.sigma_t == doctest::Approx(20.0));
  REQUIRE(cfg.calibrate_to_theta.has_value());
  CHECK(*cfg.calibrate_to_theta == doctest::Approx(kPi));
  CHECK(cfg.grid.t_start == 0.0);
  CHECK(cfg.grid.t_end == doctest::Approx(12.0 * cfg.pulse.sigma_t));
  CHECK(cfg.pulse.t_center == doctest::Approx(6.0 * cfg.pulse.sigma_t));
  CHECK(cfg.grid.dt == doctest::Approx(2.0 * kPi / cfg.pulse.carrier / 2000.0));
  CHECK(cfg.initial_state.magnitudes() == Magnitudes{1.0, 0.0, 0.0, 0.0});
  CHECK_FALSE(cfg.carrier_overridden);
}

TEST_CASE("parse_config explicit values") {
  const RunConfig cfg = parse_config(base_config(R"(,
    "pulse.mode": "odd", "pulse.V_s": 0.004, "pulse.phi_d": 0.3, "pulse.t_center": 10.0,
    "initial_state": [[0, 0], [0.6, 0], [0, 0.8], [0, 0]], "comment": "x")"));
  CHECK(cfg.pulse.mode == DriveMode::odd);
  CHECK(cfg.pulse.V_s == 0.004);
  CHECK_FALSE(cfg.calibrate_to_theta.has_value());
  CHECK(cfg.grid.t_start == doctest::Approx(10.0 - 120.0));
  CHECK(cfg.grid.t_end == doctest::Approx(10.0 + 120.0));
  CHECK(cfg.initial_state[2] == Complex(0.0, 0.8));
  CHECK(cfg.comment == "x");
  CHECK(cfg.derived.C_M == doctest::Approx(1.0));
}

TEST_CASE("parse_config errors name the key") {
  CHECK(error_of(R"({"circuit.C_x": 1})").find("circuit.C_x") != std::string::npos);
  CHECK(error_of(R"({"circuit.C_g": 0})").find("C_g") != std::string::npos);
  CHECK(error_of(R"({"circuit.C_g": -1e-15})").find("C_g") != std::string::npos);
  CHECK(error_of(R"({"circuit.L1": "big"})").find("circuit.L1") != std::string::npos);
  CHECK(error_of(R"({"pulse.mode": "sideways"})").find("pulse.mode") != std::string::npos);
  CHECK(error_of(R"({"pulse.V_s": 1, "calibrate_to_theta": 1})").find("mutually exclusive") !=
        std::string::npos);
  CHECK(error_of(base_config(R"(, "grid.dt": 1.0)")).find("1/50") != std::string::npos);
  CHECK(error_of(R"({"initial_state": [1, 1, 0, 0]})").find("initial_state") != std::string::npos);
  CHECK(error_of(R"({"circuit.L2": 3e-8})").find("identical") != std::string::npos);
  CHECK_FALSE(error_of("[1, 2]").empty());
  CHECK_FALSE(error_of("{not json").empty());
  CHECK_NOTHROW(parse_config(R"({"circuit.L2": 3e-8, "pulse.V_s": 1e-6})"));
}

TEST_CASE("the shipped configuration parses") {
  const RunConfig cfg = load_config(fs::path(TQD_SOURCE_DIR) / "configs" / "gral-like.json");
  CHECK(cfg.derived.gamma == doctest::Approx(0.5 / 55.5));
  CHECK(cfg.pulse.rwa_window_ok());
  CHECK_THROWS_AS(load_config(fs::path(TQD_SOURCE_DIR) / "configs" / "missing.json"), ConfigError);
}

TEST_CASE("rms arithmetic") {
  CHECK(rms_difference({0.52, 0.48, 0.47, 0.55}, kBalancedMagnitudes) ==
        doctest::Approx(std::sqrt((0.0004 + 0.0004 + 0.0009 + 0.0025) / 4.0)));
  CHECK(rms_difference(kBalancedMagnitudes, kBalancedMagnitudes) == 0.0);
}

TEST_CASE("zero amplitude pulse leaves the ground state") {
  const SimulationRun run = simulate(parse_config(base_config(R"(, "pulse.V_s": 0.0)")));
  CHECK(run.report.final_magnitudes == Magnitudes{1.0, 0.0, 0.0, 0.0});
  REQUIRE(run.report.rms_vs_analytic.has_value());
  CHECK(*run.report.rms_vs_analytic == 0.0);
  CHECK(run.report.rms_vs_balanced == doctest::Approx(0.5));
}

TEST_CASE("calibrated simulation reaches the balanced state in both modes") {
  for (const char* mode : {"even", "odd"}) {
    const SimulationRun run =
        simulate(parse_config(base_config(std::string(R"(, "pulse.mode": ")") + mode + "\"")));
    const RunReport& r = run.report;
    CHECK(r.calibrated);
    CHECK(r.V_s > 0.0);
    CHECK(r.theta_quadrature == doctest::Approx(kPi).epsilon(1e-6));
    CHECK(r.rms_vs_balanced <= 0.07);
    REQUIRE(r.max_abs_deviation_vs_analytic.has_value());
    CHECK(*r.max_abs_deviation_vs_analytic <= 0.01);
    CHECK(r.unitarity_defect <= 1e-10);
    CHECK(r.warnings.empty());
    CHECK(run.envelope.size() == run.result.grid.points());
    CHECK(r.steps == run.result.grid.steps());
  }
}

TEST_CASE("odd drive has opposite qubit signs") {
  const SimulationRun even = simulate(parse_config(base_config(R"(, "pulse.V_s": 0.001)")));
  const RunConfig odd_cfg = parse_config(base_config(R"(, "pulse.V_s": 0.001, "pulse.mode": "odd")"));
  for (double t : {50.0, 123.4}) {
    const QubitDrive q = qubit_drive(odd_cfg.pulse, odd_cfg.derived, t);
    CHECK(q.qubit1 * q.qubit2 < 0.0);
    const QubitDrive e = qubit_drive(even.config.pulse, even.config.derived, t);
    CHECK(e.qubit1 * e.qubit2 > 0.0);
  }
}

TEST_CASE("warnings") {
  const RunReport r =
      simulate(parse_config(base_config(R"(, "pulse.sigma_t": 5.0, "pulse.V_s": 0.001)"))).report;
  CHECK_FALSE(r.warnings.empty());
  const RunReport o = simulate(parse_config(base_config(
      R"(, "pulse.V_s": 0.001, "pulse.carrier_override": 1.01)"))).report;
  CHECK(o.warnings.size() >= 1);
  const RunReport asym = simulate(parse_config(base_config(
      R"(, "pulse.V_s": 0.001, "circuit.L2": 2.1e-08)"))).report;
  CHECK_FALSE(asym.rms_vs_analytic.has_value());
  CHECK_FALSE(asym.warnings.empty());
}

TEST_CASE("run_simulate writes series and summary") {
  const fs::path dir = scratch("simulate");
  const RunConfig cfg = parse_config(base_config());
  const RunReport r = run_simulate(cfg, dir);
  const std::string csv = slurp(dir / "series.csv");
  CHECK(csv.rfind("t,mag00,mag01,mag10,mag11,envelope\n", 0) == 0);
  const auto lines = static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n'));
  CHECK(lines == cfg.grid.points() + 1);
  const auto summary = nlohmann::json::parse(slurp(dir / "summary.json"));
  CHECK(summary.at("mode") == "even");
  CHECK(summary.at("steps") == r.steps);
  CHECK(summary.at("rms_vs_balanced").get<double>() == r.rms_vs_balanced);
  CHECK(summary.at("final_magnitudes").size() == 4);

  // Identical inputs give identical bytes.
  const fs::path again = scratch("simulate_again");
  run_simulate(cfg, again);
  CHECK(slurp(again / "series.csv") == csv);
  CHECK(slurp(again / "summary.json") == slurp(dir / "summary.json"));
  fs::remove_all(dir);
  fs::remove_all(again);
}

TEST_CASE("run_simulate fails cleanly on an unusable output directory") {
  const fs::path file = scratch("blocker");
  std::ofstream(file) << "x";
  CHECK_THROWS_AS(run_simulate(parse_config(base_config(R"(, "pulse.V_s": 0.0)")), file / "sub"),
                  ConfigError);
  fs::remove_all(file);
}

TEST_CASE("csv numbers round-trip") {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-17, 6.02214076e23, 0.0}) {
    CHECK(std::stod(format_csv_number(v)) == v);
  }
  CHECK(format_csv_number(0.5) == "0.5");
}

TEST_CASE("analytic report") {
  const AnalyticReport a = run_analytic(parse_config(base_config()));
  CHECK(a.theta == doctest::Approx(kPi).epsilon(1e-12));
  CHECK(a.theta_quadrature == doctest::Approx(kPi).epsilon(1e-6));
  CHECK(a.rms_vs_balanced <= 0.01);
  const auto j = nlohmann::json::parse(analytic_json(a));
  CHECK(j.contains("magnitudes"));
  CHECK_THROWS_AS(run_analytic(parse_config(base_config(R"(, "pulse.V_s": 1e-3, "circuit.L2": 3e-8)"))),
                  DomainError);
}

TEST_CASE("sweep error handling") {
  const RunConfig cfg = parse_config(base_config());
  CHECK_THROWS_AS(run_sweep(cfg, "temperature", {1.0}), ConfigError);
  CHECK(run_sweep(cfg, "V_s", {}).empty());
  CHECK_THROWS_AS(run_sweep(cfg, "gamma", {1.5}), ConfigError);
  CHECK_THROWS_AS(run_sweep(cfg, "dt", {0.02, 5.0}), ConfigError);
}

TEST_CASE("V_s sweep is closest to balanced near the calibrated voltage") {
  const RunConfig cfg = parse_config(base_config());
  const double v_cal = simulate(cfg).report.V_s;
  std::vector<double> values;
  for (double f : {0.5, 0.75, 1.0, 1.25, 1.5}) values.push_back(f * v_cal);
  const auto rows = run_sweep(cfg, "V_s", values, 3);
  REQUIRE(rows.size() == values.size());
  std::size_t best = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].value == values[i]);
    CHECK_FALSE(rows[i].report.calibrated);
    if (rows[i].report.rms_vs_balanced < rows[best].report.rms_vs_balanced) best = i;
  }
  CHECK(best == 2);
  const std::string csv = sweep_csv("V_s", rows);
  CHECK(csv.rfind("V_s,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
}

TEST_CASE("sweep results do not depend on worker count") {
  const RunConfig cfg = parse_config(base_config());
  const std::vector<double> values{0.005, 0.01, 0.02};
  CHECK(sweep_csv("gamma", run_sweep(cfg, "gamma", values, 1)) ==
        sweep_csv("gamma", run_sweep(cfg, "gamma", values, 3)));
}

TEST_CASE("dt sweep converges at second order") {
  const RunConfig cfg = parse_config(base_config());
  const auto ref = simulate(parse_config(base_config(R"(, "grid.dt": 0.004)")));
  const std::vector<double> dts{0.12, 0.06};
  const auto rows = run_sweep(cfg, "dt", dts, 2);
  double err[2];
  for (int i = 0; i < 2; ++i) {
    err[i] = 0.0;
    for (int k = 0; k < 4; ++k) {
      err[i] = std::max(err[i], std::abs(rows[i].report.final_magnitudes[k] -
                                         ref.report.final_magnitudes[k]));
    }
  }
  CHECK(std::log2(err[0] / err[1]) == doctest::Approx(2.0).epsilon(0.15));
}
