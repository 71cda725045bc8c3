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

#include "tqdirac/circuit_model.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "tqdirac/errors.hpp"

namespace tqd {

namespace {

void require_positive(double value, const char* field) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError(std::string("circuit parameter ") + field +
                      " must be strictly positive, got " + std::to_string(value));
  }
}

}  // namespace

CircuitParams CircuitParams::representative() {
  return CircuitParams{20e-9, 20e-9, 50e-15, 5e-15, 5e-15};
}

CircuitParams CircuitParams::with_gamma(double gamma, double drive_fraction) {
  if (!(gamma > 0.0 && gamma < 1.0)) throw DomainError("gamma must lie in (0, 1)");
  if (!(drive_fraction > 0.0 && drive_fraction < 1.0))
    throw DomainError("drive_fraction must lie in (0, 1)");
  CircuitParams p;
  p.L1 = p.L2 = 1.0;
  p.C_d = drive_fraction;
  p.C_J = 1.0 - drive_fraction;
  // gamma = C_g / (C_J + C_d + C_g)
  p.C_g = gamma / (1.0 - gamma);
  return p;
}

void CircuitParams::validate() const {
  require_positive(L1, "L1");
  require_positive(L2, "L2");
  require_positive(C_J, "C_J");
  require_positive(C_d, "C_d");
  require_positive(C_g, "C_g");
}

bool DerivedParams::symmetric() const {
  return std::abs(omega_1 - omega_2) <= 1e-12 * std::max(omega_1, omega_2);
}

double DerivedParams::sum_frequency() const {
  const double mean = 0.5 * (omega_1 + omega_2);
  return std::sqrt(mean * mean + omega_g * omega_g);
}

DerivedParams derive_params(const CircuitParams& p, UnitMode units) {
  p.validate();

  DerivedParams d;
  d.units = units;

  double C_J = p.C_J, C_d = p.C_d, C_g = p.C_g, L1 = p.L1, L2 = p.L2;
  if (units == UnitMode::dimensionless) {
    // Rescale so that C_M = 1, L1 = 1 (hence omega_1 = 1) and hbar = 1.
    const double C_s = C_J + C_d + C_g;
    const double g = C_g / C_s;
    const double C_M = C_s * (1.0 - g * g);
    C_J /= C_M;
    C_d /= C_M;
    C_g /= C_M;
    L2 /= L1;
    L1 = 1.0;
    d.hbar = 1.0;
  }

  d.C_d = C_d;
  d.C_s = C_J + C_d + C_g;
  d.gamma = C_g / d.C_s;
  if (!(d.gamma >= 0.0 && d.gamma < 1.0)) {
    throw DomainError("coupling ratio gamma = C_g/C_s left [0, 1)");
  }
  const double one_minus_g2 = 1.0 - d.gamma * d.gamma;
  d.C_M = d.C_s * one_minus_g2;
  d.C_G = d.gamma > 0.0 ? d.C_s * (1.0 / d.gamma - d.gamma)
                        : std::numeric_limits<double>::infinity();
  d.mu_d = (C_d / d.C_s) / one_minus_g2;
  d.mu_g = d.gamma * d.mu_d;
  d.omega_1 = 1.0 / std::sqrt(L1 * d.C_M);
  d.omega_2 = 1.0 / std::sqrt(L2 * d.C_M);
  d.omega_g = 0.5 * d.gamma * std::sqrt(d.omega_1 * d.omega_2);
  d.sigma_phi1 = std::sqrt(d.hbar * std::sqrt(L1 / d.C_M));
  d.sigma_phi2 = std::sqrt(d.hbar * std::sqrt(L2 / d.C_M));
  return d;
}

DriveCoefficients drive_coefficients(const DerivedParams& d, double v_d1, double v_d2) {
  if (!std::isfinite(v_d1) || !std::isfinite(v_d2)) {
    throw DomainError("drive voltages must be finite");
  }
  if (!(d.sigma_phi1 > 0.0) || !(d.sigma_phi2 > 0.0)) {
    throw DomainError("derived parameters have a degenerate flux scale");
  }
  const double s1 = std::sqrt(2.0) * d.sigma_phi1;
  const double s2 = std::sqrt(2.0) * d.sigma_phi2;

  DriveCoefficients c;
  c.omega_d1d = d.mu_d * v_d1 / s1;
  c.omega_d2g = d.mu_g * v_d2 / s1;
  c.omega_d1g = d.mu_g * v_d1 / s2;
  c.omega_d2d = d.mu_d * v_d2 / s2;
  c.omega_de = (d.mu_d + d.mu_g) * v_d1 / s1;
  // Divides by sigma_phi like the even case; multiplying would not be a
  // frequency.
  c.omega_do = (d.mu_d - d.mu_g) * v_d1 / s1;
  c.omega_e_peak = d.C_d / (d.C_s * (1.0 - d.gamma)) * v_d1 / d.sigma_phi1;
  return c;
}

QubitDrive qubit_drive_amplitudes(const DerivedParams& d, double v_d1, double v_d2) {
  if (!std::isfinite(v_d1) || !std::isfinite(v_d2)) {
    throw DomainError("drive voltages must be finite");
  }
  return {(d.mu_d * v_d1 + d.mu_g * v_d2) / d.sigma_phi1,
          (d.mu_g * v_d1 + d.mu_d * v_d2) / d.sigma_phi2};
}

}  // namespace tqd
