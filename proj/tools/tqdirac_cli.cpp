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

// tqdirac command-line front end. Talks to the library only through the C
// interface in tqdirac/tqdirac.h.

#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tqdirac/tqdirac.h"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

bool g_quiet = false;

void note(const std::string& line) {
  if (!g_quiet) std::fprintf(stderr, "%s\n", line.c_str());
}

int exit_code(tqd_status status) {
  switch (status) {
    case TQD_OK:
      return 0;
    case TQD_ERR_NUMERICAL:
    case TQD_ERR_CHECK_FAILED:
      return kExitNumerical;
    case TQD_ERR_CONFIG:
    case TQD_ERR_INVALID_ARGUMENT:
      return kExitConfig;
    default:
      return kExitNumerical;
  }
}

int report_failure(tqd_status status) {
  std::fprintf(stderr, "tqdirac: %s\n", tqd_last_error());
  return exit_code(status);
}

struct ConfigHandle {
  tqd_config* ptr = nullptr;
  ~ConfigHandle() { tqd_config_free(ptr); }
};

struct ReportHandle {
  tqd_report* ptr = nullptr;
  ~ReportHandle() { tqd_report_free(ptr); }
};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-qubit Dirac-picture pulse simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = "tqdirac_out";
  std::string axis;
  std::vector<double> values;
  double target_theta = std::numbers::pi;

  app.add_flag("--quiet", g_quiet, "Suppress progress output on stderr");

  auto with_config = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "Run configuration (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_option("--out-dir", out_dir, "Output directory");
    sub->add_flag("--quiet", g_quiet, "Suppress progress output on stderr");
  };

  CLI::App* derive = app.add_subcommand("derive", "Derived circuit quantities -> summary.json");
  with_config(derive);
  CLI::App* simulate = app.add_subcommand("simulate", "Propagate -> series.csv + summary.json");
  with_config(simulate);
  CLI::App* analytic = app.add_subcommand("analytic", "Closed-form end state -> summary.json");
  with_config(analytic);
  CLI::App* calibrate = app.add_subcommand("calibrate", "Peak voltage for a target shift angle");
  with_config(calibrate);
  calibrate->add_option("--target-theta", target_theta, "Target shift angle in radians (default pi)");
  CLI::App* sweep = app.add_subcommand("sweep", "One run per value -> sweep.csv");
  with_config(sweep);
  sweep->add_option("--axis", axis, "V_s | sigma_t | gamma | C_g | dt | phi_d")->required();
  sweep->add_option("--values", values, "Comma-separated values")->delimiter(',');
  CLI::App* verify = app.add_subcommand("verify", "Run the acceptance suite");
  verify->add_option("--out-dir", out_dir, "Scratch/output directory");
  verify->add_flag("--quiet", g_quiet, "Suppress per-criterion lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  if (verify->parsed()) {
    int failed = 0;
    const tqd_status status = tqd_verify(
        out_dir.c_str(), [](const char* line, void*) { note(line); }, nullptr, &failed);
    if (status != TQD_OK) return report_failure(status);
    note("all acceptance criteria passed");
    return 0;
  }

  ConfigHandle cfg;
  if (tqd_status s = tqd_config_load(config_path.c_str(), &cfg.ptr); s != TQD_OK) return report_failure(s);

  tqd_status status = TQD_OK;
  if (derive->parsed()) {
    status = tqd_derive_write(cfg.ptr, out_dir.c_str());
  } else if (simulate->parsed()) {
    ReportHandle report;
    status = tqd_simulate(cfg.ptr, out_dir.c_str(), &report.ptr);
    if (status == TQD_OK) {
      note("rms vs balanced " + fmt(tqd_report_rms_vs_balanced(report.ptr)) + ", rms vs analytic " +
           fmt(tqd_report_rms_vs_analytic(report.ptr)) + ", steps " +
           std::to_string(tqd_report_steps(report.ptr)));
      for (size_t i = 0; i < tqd_report_warning_count(report.ptr); ++i) {
        note(std::string("warning: ") + tqd_report_warning(report.ptr, i));
      }
    }
  } else if (analytic->parsed()) {
    double mags[4] = {0, 0, 0, 0};
    double theta = 0.0;
    status = tqd_analytic(cfg.ptr, out_dir.c_str(), mags, &theta);
    if (status == TQD_OK) note("theta " + fmt(theta));
  } else if (calibrate->parsed()) {
    double v_s = 0.0;
    status = tqd_calibrate(cfg.ptr, target_theta, out_dir.c_str(), &v_s);
    if (status == TQD_OK) note("V_s " + fmt(v_s));
  } else if (sweep->parsed()) {
    status = tqd_sweep(cfg.ptr, axis.c_str(), values.data(), values.size(), out_dir.c_str());
  }
  if (status != TQD_OK) return report_failure(status);
  return 0;
}
