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

#include "tqdirac/circuit_model.hpp"
#include "tqdirac/types.hpp"

namespace tqd {

/// sigma_z = diag(+1, -1) with |0> first; sigma_y = [[0, -i], [i, 0]].
struct PauliPair {
  ComplexMatrix2 sigma_y;
  ComplexMatrix2 sigma_z;
};

PauliPair pauli_conventions();

/// op (x) I and I (x) op.
ComplexMatrix4 on_qubit1(const ComplexMatrix2& op);
ComplexMatrix4 on_qubit2(const ComplexMatrix2& op);

/// -(w1/2) sz1 - (w2/2) sz2 + w_g sy1 sy2.
ComplexMatrix4 build_h0(const DerivedParams& d);

/// omega_q1 sy1 + omega_q2 sy2.
ComplexMatrix4 build_hd(double omega_q1, double omega_q2);
inline ComplexMatrix4 build_hd(const QubitDrive& drive) {
  return build_hd(drive.qubit1, drive.qubit2);
}

inline constexpr double kHermitianTolerance = 1e-12;

/// ||H - H^dagger||_F / ||H||_F (0 for the zero matrix).
double hermiticity_defect(const ComplexMatrix4& h);

/// ||U^dagger U - I||_F.
double unitarity_defect(const ComplexMatrix4& u);

/// Eigendecomposition of a Hermitian 4x4 matrix, kept so exp(i s H) can be
/// evaluated for many s without re-solving.
class HermitianSpectrum {
 public:
  /// Throws DomainError if `h` is not Hermitian within kHermitianTolerance.
  explicit HermitianSpectrum(const ComplexMatrix4& h);

  const Eigen::Vector4d& eigenvalues() const { return values_; }
  const ComplexMatrix4& eigenvectors() const { return vectors_; }

  /// exp(i s H) = V diag(exp(i s lambda)) V^dagger.
  ComplexMatrix4 exp_i(double s) const;

 private:
  Eigen::Vector4d values_;
  ComplexMatrix4 vectors_;
};

/// exp(i s H) for Hermitian H.
ComplexMatrix4 hermitian_expm(const ComplexMatrix4& h, double s);

}  // namespace tqd
