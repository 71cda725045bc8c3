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

#include "tqdirac/operator_algebra.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "tqdirac/errors.hpp"

namespace tqd {

PauliPair pauli_conventions() {
  const Complex i(0.0, 1.0);
  PauliPair p;
  p.sigma_y << 0.0, -i, i, 0.0;
  p.sigma_z << 1.0, 0.0, 0.0, -1.0;
  return p;
}

ComplexMatrix4 on_qubit1(const ComplexMatrix2& op) {
  ComplexMatrix4 out = ComplexMatrix4::Zero();
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out.block<2, 2>(2 * r, 2 * c) = op(r, c) * ComplexMatrix2::Identity();
  return out;
}

ComplexMatrix4 on_qubit2(const ComplexMatrix2& op) {
  ComplexMatrix4 out = ComplexMatrix4::Zero();
  out.block<2, 2>(0, 0) = op;
  out.block<2, 2>(2, 2) = op;
  return out;
}

ComplexMatrix4 build_h0(const DerivedParams& d) {
  const PauliPair p = pauli_conventions();
  return -0.5 * d.omega_1 * on_qubit1(p.sigma_z) - 0.5 * d.omega_2 * on_qubit2(p.sigma_z) +
         d.omega_g * on_qubit1(p.sigma_y) * on_qubit2(p.sigma_y);
}

ComplexMatrix4 build_hd(double omega_q1, double omega_q2) {
  const PauliPair p = pauli_conventions();
  return omega_q1 * on_qubit1(p.sigma_y) + omega_q2 * on_qubit2(p.sigma_y);
}

double hermiticity_defect(const ComplexMatrix4& h) {
  const double scale = h.norm();
  if (scale == 0.0) return 0.0;
  return (h - h.adjoint()).norm() / scale;
}

double unitarity_defect(const ComplexMatrix4& u) {
  return (u.adjoint() * u - ComplexMatrix4::Identity()).norm();
}

HermitianSpectrum::HermitianSpectrum(const ComplexMatrix4& h) {
  const double defect = hermiticity_defect(h);
  if (!(defect <= kHermitianTolerance)) {
    throw DomainError("matrix is not Hermitian: relative defect " + std::to_string(defect));
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix4> solver(h);
  if (solver.info() != Eigen::Success) {
    throw DomainError("Hermitian eigensolver did not converge");
  }
  values_ = solver.eigenvalues();
  vectors_ = solver.eigenvectors();
}

ComplexMatrix4 HermitianSpectrum::exp_i(double s) const {
  Eigen::Vector4cd phases;
  for (int k = 0; k < 4; ++k) phases(k) = std::polar(1.0, s * values_(k));
  return vectors_ * phases.asDiagonal() * vectors_.adjoint();
}

ComplexMatrix4 hermitian_expm(const ComplexMatrix4& h, double s) {
  return HermitianSpectrum(h).exp_i(s);
}

}  // namespace tqd
