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

#include <cstdio>
#include <exception>
#include <filesystem>

#include "tqdirac/verification.hpp"

int main(int argc, char** argv) {
  const std::filesystem::path scratch =
      argc > 1 ? std::filesystem::path(argv[1]) : std::filesystem::temp_directory_path() / "tqdirac_acceptance";
  try {
    std::filesystem::create_directories(scratch);
    int failed = 0;
    tqd::run_acceptance_suite(scratch, [&](const tqd::CriterionResult& r) {
      std::printf("%s\n", tqd::format_criterion_line(r).c_str());
      std::fflush(stdout);
      if (!r.passed) ++failed;
    });
    std::printf("%d criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "acceptance: %s\n", e.what());
    return 1;
  }
}
