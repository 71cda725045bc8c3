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

#include <cmath>
#include <cstddef>

#include "tqdirac/circuit_model.hpp"
#include "tqdirac/types.hpp"

namespace tqd {

/// Gaussian-windowed sinusoidal drive:
///   Omega(t) = Omega_e exp(-((t - t_center)/sigma_t)^2 / 2)
///              * sin(carrier (t - t_center) - phi_d)
struct PulseConfig {
  double V_s = 0.0;       // peak source voltage
  double sigma_t = 0.0;   // Gaussian standard deviation
  double carrier = 0.0;   // rad per unit time; lambda_Sigma by default
  double phi_d = 0.0;     // rad
  double t_center = 0.0;
  DriveMode mode = DriveMode::even;

  void validate() const;

  /// carrier * sigma_t >= 10. Comparisons against the rotating-wave closed
  /// forms are only meaningful when this holds.
  bool rwa_window_ok() const { return carrier * sigma_t >= 10.0; }
};

struct TimeGrid {
  double t_start = 0.0;
  double t_end = 0.0;
  double dt = 0.0;

  void validate() const;

  /// Throws DomainError unless dt <= (2 pi / carrier) / 50.
  void check_resolution(double carrier) const;

  /// Number of whole steps, floor((t_end - t_start) / dt).
  std::size_t steps() const;
  std::size_t points() const { return steps() + 1; }
  double time(std::size_t k) const { return t_start + static_cast<double>(k) * dt; }
};

inline constexpr double kMinPointsPerCarrierPeriod = 50.0;

/// Omega_e = C_d / (C_s (1 -+ gamma)) * V_s / sigma_phi (- even, + odd).
double peak_drive_amplitude(DriveMode mode, const DerivedParams& d, double V_s);

double drive_envelope(const PulseConfig& cfg, const DerivedParams& d, double t);

/// The per-qubit drive at time t: source voltages V(t) and +-V(t) mapped
/// through `qubit_drive_amplitudes`.
QubitDrive qubit_drive(const PulseConfig& cfg, const DerivedParams& d, double t);

/// Composite Simpson rule on [a, b] with `intervals` (rounded up to even).
template <class F>
auto simpson(F&& f, double a, double b, std::size_t intervals) {
  if (intervals < 2) intervals = 2;
  if (intervals % 2) ++intervals;
  const double h = (b - a) / static_cast<double>(intervals);
  auto acc = f(a) + f(b);
  for (std::size_t k = 1; k < intervals; ++k) {
    acc += (k % 2 ? 4.0 : 2.0) * f(a + static_cast<double>(k) * h);
  }
  return acc * (h / 3.0);
}

struct QuadratureOptions {
  double half_width_sigmas = 6.0;  // must be >= 6
  double points_per_sigma = 64.0;
};

/// theta = 2 |integral Omega_e exp(-tau^2 / (2 sigma_t^2)) exp(-i lambda_Delta tau) dtau|
/// over t_center +- half_width sigma_t, by Simpson's rule. lambda_Delta is
/// the coupling frequency omega_g. Independent of the closed form.
double shift_angle_quadrature(const PulseConfig& cfg, const DerivedParams& d,
                              const QuadratureOptions& opts = {});

/// Peak source voltage whose closed-form shift angle equals `target_theta`.
/// Needs identical qubits.
double calibrate_voltage(double target_theta, DriveMode mode, const DerivedParams& d,
                         double sigma_t);

}  // namespace tqd
