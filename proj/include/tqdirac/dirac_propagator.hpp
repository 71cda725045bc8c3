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
#include <functional>
#include <optional>
#include <vector>

#include "tqdirac/operator_algebra.hpp"
#include "tqdirac/pulse_synthesis.hpp"
#include "tqdirac/types.hpp"

namespace tqd {

/// Lab-frame drive Hamiltonian H_d(t).
using DriveFunction = std::function<ComplexMatrix4(double t)>;

struct StepRecord {
  double t = 0.0;                        // step midpoint
  std::array<double, 4> eigenvalues{};   // spectrum of the rotated drive, ascending
  std::optional<ComplexMatrix4> rotated_drive;
};

struct PropagatorBundle {
  ComplexMatrix4 U_rf = ComplexMatrix4::Identity();  // exp(i H0 (t_final - t_start))
  ComplexMatrix4 U_d = ComplexMatrix4::Identity();   // time-ordered rotated-frame evolution
  std::vector<StepRecord> steps;
};

struct PropagationOptions {
  bool record_steps = true;
  bool record_snapshots = false;
  double norm_tolerance = 1e-8;
  double unitarity_tolerance = 1e-10;
};

struct SimulationResult {
  TimeGrid grid;
  std::vector<Magnitudes> magnitudes;  // |c_ij| at every grid point, interaction frame
  StateVector4 final_state;            // U_d psi0
  PropagatorBundle bundle;
  double final_time = 0.0;
  double max_norm_drift = 0.0;
  double max_unitarity_defect = 0.0;
};

/// exp(i H0 t).
ComplexMatrix4 rotating_frame_unitary(const ComplexMatrix4& h0, double t);

/// U_rf H_d U_rf^dagger.
ComplexMatrix4 rotate_drive(const ComplexMatrix4& hd, const ComplexMatrix4& urf);

/// Interaction-picture propagation over `grid`.
///
/// The frame is anchored at the grid start, U_rf(t) = exp(i H0 (t - t_start)),
/// so psi_lab(t) = U_rf(t)^dagger psi_I(t) with psi_I(t_start) = psi0. Each
/// step diagonalizes the rotated drive at the step midpoint and applies
/// exp(-i H~_d dt); the product over steps is time ordered.
///
/// Throws NumericalError if the state norm drifts by more than
/// `norm_tolerance` or U_d loses unitarity beyond `unitarity_tolerance`.
SimulationResult propagate(const ComplexMatrix4& h0, const DriveFunction& drive,
                           const TimeGrid& grid, const StateVector4& psi0,
                           const PropagationOptions& opts = {});

/// Full Schroedinger evolution under H0 + H_d(t) with the same midpoint
/// step exponentials. Returns the lab-frame state at the last grid point.
StateVector4 lab_frame_reference(const ComplexMatrix4& h0, const DriveFunction& drive,
                                 const TimeGrid& grid, const StateVector4& psi0,
                                 const PropagationOptions& opts = {});

}  // namespace tqd
