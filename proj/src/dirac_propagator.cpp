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

#include "tqdirac/dirac_propagator.hpp"

#include <algorithm>
#include <cmath>

#include "tqdirac/errors.hpp"

namespace tqd {

ComplexMatrix4 rotating_frame_unitary(const ComplexMatrix4& h0, double t) {
  return hermitian_expm(h0, t);
}

ComplexMatrix4 rotate_drive(const ComplexMatrix4& hd, const ComplexMatrix4& urf) {
  return urf * hd * urf.adjoint();
}

namespace {

void check_norm(double norm, double tolerance, std::size_t step, double& max_drift) {
  const double drift = std::abs(norm - 1.0);
  max_drift = std::max(max_drift, drift);
  if (!(drift <= tolerance)) {
    throw NumericalError("state norm drifted by " + std::to_string(drift), step);
  }
}

}  // namespace

SimulationResult propagate(const ComplexMatrix4& h0, const DriveFunction& drive,
                           const TimeGrid& grid, const StateVector4& psi0,
                           const PropagationOptions& opts) {
  grid.validate();
  const HermitianSpectrum frame(h0);
  const std::size_t n = grid.steps();
  const double dt = grid.dt;

  SimulationResult out;
  out.grid = grid;
  out.magnitudes.reserve(n + 1);
  out.magnitudes.push_back(psi0.magnitudes());
  if (opts.record_steps) out.bundle.steps.reserve(n);

  ComplexMatrix4 u = ComplexMatrix4::Identity();
  Eigen::Vector4cd psi = psi0.coefficients();
  for (std::size_t k = 0; k < n; ++k) {
    const double t_mid = grid.time(k) + 0.5 * dt;
    const ComplexMatrix4 rotated =
        rotate_drive(drive(t_mid), frame.exp_i(t_mid - grid.t_start));
    const HermitianSpectrum step(rotated);
    u = step.exp_i(-dt) * u;

    psi = u * psi0.coefficients();
    check_norm(psi.norm(), opts.norm_tolerance, k + 1, out.max_norm_drift);
    const double defect = unitarity_defect(u);
    out.max_unitarity_defect = std::max(out.max_unitarity_defect, defect);
    if (!(defect <= opts.unitarity_tolerance)) {
      throw NumericalError("drive evolution lost unitarity: " + std::to_string(defect), k + 1);
    }
    out.magnitudes.push_back(magnitudes_of(psi));

    if (opts.record_steps) {
      StepRecord rec;
      rec.t = t_mid;
      const Eigen::Vector4d& ev = step.eigenvalues();
      rec.eigenvalues = {ev(0), ev(1), ev(2), ev(3)};
      if (opts.record_snapshots) rec.rotated_drive = rotated;
      out.bundle.steps.push_back(std::move(rec));
    }
  }

  out.final_time = grid.time(n);
  out.bundle.U_d = u;
  out.bundle.U_rf = frame.exp_i(out.final_time - grid.t_start);
  out.final_state = StateVector4(psi, opts.norm_tolerance);
  return out;
}

StateVector4 lab_frame_reference(const ComplexMatrix4& h0, const DriveFunction& drive,
                                 const TimeGrid& grid, const StateVector4& psi0,
                                 const PropagationOptions& opts) {
  grid.validate();
  const std::size_t n = grid.steps();
  const double dt = grid.dt;

  Eigen::Vector4cd psi = psi0.coefficients();
  double max_drift = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double t_mid = grid.time(k) + 0.5 * dt;
    const HermitianSpectrum step(h0 + drive(t_mid));
    psi = step.exp_i(-dt) * psi;
    check_norm(psi.norm(), opts.norm_tolerance, k + 1, max_drift);
  }
  return StateVector4(psi, opts.norm_tolerance);
}

}  // namespace tqd
