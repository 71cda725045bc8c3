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

// Closed-form rotating-wave results for identical qubits.

namespace tqd {

struct SpectralParams {
  double omega_r = 0.0;
  double gamma = 0.0;
  double lambda_delta = 0.0;  // (gamma / 2) omega_r
  double lambda_sigma = 0.0;  // sqrt(1 + gamma^2 / 4) omega_r
  double beta_sigma = 0.0;    // pi - atan(gamma / 2), in (pi/2, pi]
  double rho_c = 0.0;         // cos(pi/4 - beta) / sqrt(2)
  double rho_s = 0.0;         // sin(pi/4 - beta) / sqrt(2)
};

/// Throws UnsupportedCase unless L1 == L2.
SpectralParams spectral_params(const DerivedParams& d);

/// exp(i H0 t) written out from the 2x2 block structure of H0:
///   f_S+ = cos(lS t) + i sin(lS t) cos(beta),  g_S = sin(lS t) sin(beta),
///   f_D = cos(lD t),  g_D = sin(lD t).
ComplexMatrix4 rotating_frame_closed_form(const SpectralParams& sp, double t);

struct RwaEnvelopes {
  Complex h_a;
  Complex h_b;
  bool rwa_valid = true;  // lambda_Sigma sigma_t >= 10
};

/// Slow parts of the rotated drive for a Gaussian pulse at the lambda_Sigma
/// carrier, centred at t = 0:
///   h_a = -Omega_e rho_C g(t) exp(-i lD t),  h_b = -Omega_e rho_S g(t) exp(+i lD t).
RwaEnvelopes rwa_envelopes(const SpectralParams& sp, double omega_e, double sigma_t, double t);

/// Entries (|01>,|00>) and (|11>,|01>) of exp(iH0 t) H_d exp(-iH0 t) for
/// the even drive omega_de (sy1 + sy2), before any averaging.
struct RotatedDriveEntries {
  Complex h_a;
  Complex h_b;
};
RotatedDriveEntries rotated_even_drive_entries(const SpectralParams& sp, double omega_de,
                                               double t);

/// theta/2 = sqrt(2 pi) C_d / (C_s (1 -+ gamma)) sigma_t exp(-lD^2 sigma_t^2 / 2) V_s / sigma_phi.
double shift_angle(DriveMode mode, const DerivedParams& d, const SpectralParams& sp, double V_s,
                   double sigma_t);

/// Rotated-frame evolution operator after a pulse of shift angle theta.
///
/// The odd-mode matrix is symmetric: entries (|01>,|11>) and (|10>,|11>)
/// carry rho_C, mirroring the bottom row. With rho_S there (the form in
/// `printed_odd_evolution_matrix`) the matrix is not unitary once gamma > 0.
ComplexMatrix4 evolution_matrix(DriveMode mode, const SpectralParams& sp, double theta);

/// Odd-mode matrix with rho_S in the last column, as commonly typeset.
/// Kept to quantify its unitarity defect; not used by the simulator.
ComplexMatrix4 printed_odd_evolution_matrix(const SpectralParams& sp, double theta);

/// evolution_matrix(...) applied to |00>.
StateVector4 end_state(DriveMode mode, const SpectralParams& sp, double theta);

struct RwaEndState {
  DriveMode mode = DriveMode::even;
  double theta = 0.0;
  ComplexMatrix4 U;
  StateVector4 psi;
};

RwaEndState rwa_end_state(DriveMode mode, const SpectralParams& sp, double theta);

}  // namespace tqd
