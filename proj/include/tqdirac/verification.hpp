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
#include <functional>
#include <string>
#include <vector>

#include "tqdirac/types.hpp"

namespace tqd {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double threshold = 0.0;
  std::string comparison;  // how `measured` is compared with `threshold`
  std::string detail;
  double seconds = 0.0;
};

/// Representative run used by the end-to-end criteria: identical qubits,
/// C_J = 50 fF, C_d = 5 fF, C_g = 0.5 fF (gamma ~ 0.009), L = 20 nH,
/// sigma_t = 0.7 ns (lambda_Sigma sigma_t ~ 21), calibrated to theta = pi.
std::string representative_config_text(DriveMode mode);

/// Runs every acceptance criterion in order. `scratch_dir` receives the
/// determinism-check outputs. `on_result` is called as each one finishes.
std::vector<CriterionResult> run_acceptance_suite(
    const std::filesystem::path& scratch_dir,
    const std::function<void(const CriterionResult&)>& on_result = {});

std::string format_criterion_line(const CriterionResult& r);
std::string acceptance_json(const std::vector<CriterionResult>& results);

}  // namespace tqd
