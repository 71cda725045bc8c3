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

// Lumped-element description of two LC qubits, each driven through C_d and
// coupled to each other through C_g, and the derived quantities of the
// normalized two-level Hamiltonian.

namespace tqd {

inline constexpr double kHbarSI = 1.054571817e-34;  // J s

enum class UnitMode { si, dimensionless };

struct CircuitParams {
  double L1 = 0.0;   // H
  double L2 = 0.0;   // H
  double C_J = 0.0;  // F
  double C_d = 0.0;  // F
  double C_g = 0.0;  // F

  /// Representative grAl-like values (not measured data): C_J = 50 fF,
  /// C_d = C_g = 5 fF, L = 20 nH.
  static CircuitParams representative();

  /// Identical qubits with coupling ratio gamma = C_g / C_s, in
  /// dimensionless units (C_J + C_d = 1, L = 1).
  static CircuitParams with_gamma(double gamma, double drive_fraction = 0.1);

  /// Throws DomainError naming the first non-positive field.
  void validate() const;
};

struct DerivedParams {
  UnitMode units = UnitMode::si;
  double hbar = kHbarSI;

  double C_d = 0.0;  // drive capacitance in the same units as C_s
  double C_s = 0.0;
  double gamma = 0.0;
  double C_M = 0.0;
  double C_G = 0.0;  // +inf when gamma == 0
  double mu_d = 0.0;
  double mu_g = 0.0;
  double omega_1 = 0.0;
  double omega_2 = 0.0;
  double omega_g = 0.0;
  double sigma_phi1 = 0.0;
  double sigma_phi2 = 0.0;

  /// L1 == L2 to within 1e-12 relative; the closed forms need this.
  bool symmetric() const;

  /// Upper eigenfrequency of the |00>,|11> block of H0,
  /// sqrt(((w1 + w2)/2)^2 + w_g^2). Equals lambda_Sigma for identical qubits.
  double sum_frequency() const;
};

/// Per-source cross terms plus the even/odd totals and the Gaussian peak
/// amplitude. The even/odd and peak values use V_d = V_d1 and sigma_phi1.
struct DriveCoefficients {
  double omega_d1d = 0.0;
  double omega_d2g = 0.0;
  double omega_d1g = 0.0;
  double omega_d2d = 0.0;
  double omega_de = 0.0;
  double omega_do = 0.0;
  double omega_e_peak = 0.0;

  double qubit1_total() const { return omega_d1d + omega_d2g; }
  double qubit2_total() const { return omega_d1g + omega_d2d; }
};

/// Per-qubit coefficients of sigma_y1 and sigma_y2 in H_d.
struct QubitDrive {
  double qubit1 = 0.0;
  double qubit2 = 0.0;
};

DerivedParams derive_params(const CircuitParams& p, UnitMode units = UnitMode::si);

DriveCoefficients drive_coefficients(const DerivedParams& d, double v_d1, double v_d2);

/// Voltage-to-drive map used by the simulator. It carries the Gaussian-peak
/// normalization Omega_e = C_d/(C_s(1-gamma)) V/sigma_phi, which is sqrt(2)
/// times the cross-term totals of `drive_coefficients`, so that simulated
/// pulses and the shift-angle formula use the same amplitude.
QubitDrive qubit_drive_amplitudes(const DerivedParams& d, double v_d1, double v_d2);

}  // namespace tqd
