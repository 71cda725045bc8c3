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

#include <array>
#include <complex>
#include <string>

#include <Eigen/Dense>

namespace tqd {

using Complex = std::complex<double>;

// Basis order is [|00>, |01>, |10>, |11>] with qubit 1 the left Kronecker
// factor, so index = 2*n1 + n2.
using ComplexMatrix2 = Eigen::Matrix2cd;
using ComplexMatrix4 = Eigen::Matrix4cd;

using Magnitudes = std::array<double, 4>;

enum class DriveMode { even, odd };

std::string to_string(DriveMode mode);
DriveMode drive_mode_from_string(const std::string& name);

/// Normalized two-qubit state c00|00> + c01|01> + c10|10> + c11|11>.
///
/// Construction checks the norm; renormalizing is a separate, explicit call.
class StateVector4 {
 public:
  static constexpr double kNormTolerance = 1e-9;

  /// |00>, the circuit ground state used as the default initial state.
  StateVector4();

  /// Throws DomainError if |norm - 1| > tolerance.
  explicit StateVector4(const Eigen::Vector4cd& coefficients,
                        double tolerance = kNormTolerance);

  static StateVector4 basis(int index);

  /// Returns `raw / |raw|`. `norm_before`, when given, receives |raw| so the
  /// caller can log the correction.
  static StateVector4 renormalized(const Eigen::Vector4cd& raw,
                                   double* norm_before = nullptr);

  const Eigen::Vector4cd& coefficients() const { return c_; }
  Complex operator[](int i) const { return c_(i); }
  double norm() const { return c_.norm(); }
  Magnitudes magnitudes() const;

 private:
  Eigen::Vector4cd c_;
};

Magnitudes magnitudes_of(const Eigen::Vector4cd& v);

/// sqrt(mean_i (a_i - b_i)^2).
double rms_difference(const Magnitudes& a, const Magnitudes& b);

inline constexpr Magnitudes kBalancedMagnitudes{0.5, 0.5, 0.5, 0.5};

}  // namespace tqd
