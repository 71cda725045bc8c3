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

#include "tqdirac/types.hpp"

#include <cmath>

#include "tqdirac/errors.hpp"

namespace tqd {

std::string to_string(DriveMode mode) {
  return mode == DriveMode::even ? "even" : "odd";
}

DriveMode drive_mode_from_string(const std::string& name) {
  if (name == "even") return DriveMode::even;
  if (name == "odd") return DriveMode::odd;
  throw DomainError("drive mode must be \"even\" or \"odd\", got \"" + name + "\"");
}

StateVector4::StateVector4() : c_(Eigen::Vector4cd::Zero()) { c_(0) = 1.0; }

StateVector4::StateVector4(const Eigen::Vector4cd& coefficients, double tolerance)
    : c_(coefficients) {
  const double n = c_.norm();
  if (!std::isfinite(n) || std::abs(n - 1.0) > tolerance) {
    throw DomainError("state vector is not normalized: |psi| = " + std::to_string(n));
  }
}

StateVector4 StateVector4::basis(int index) {
  if (index < 0 || index > 3) throw DomainError("basis index must be in [0, 3]");
  Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
  v(index) = 1.0;
  return StateVector4(v);
}

StateVector4 StateVector4::renormalized(const Eigen::Vector4cd& raw, double* norm_before) {
  const double n = raw.norm();
  if (norm_before) *norm_before = n;
  if (!(n > 0.0) || !std::isfinite(n)) throw DomainError("cannot renormalize a zero state");
  return StateVector4(raw / n);
}

Magnitudes StateVector4::magnitudes() const { return magnitudes_of(c_); }

Magnitudes magnitudes_of(const Eigen::Vector4cd& v) {
  return {std::abs(v(0)), std::abs(v(1)), std::abs(v(2)), std::abs(v(3))};
}

double rms_difference(const Magnitudes& a, const Magnitudes& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(acc / static_cast<double>(a.size()));
}

}  // namespace tqd
