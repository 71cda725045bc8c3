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

#include "tqdirac/pulse_synthesis.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "tqdirac/errors.hpp"
#include "tqdirac/rwa_analytic.hpp"

namespace tqd {

void PulseConfig::validate() const {
  if (!std::isfinite(V_s)) throw DomainError("pulse.V_s must be finite");
  if (!(sigma_t > 0.0) || !std::isfinite(sigma_t))
    throw DomainError("pulse.sigma_t must be strictly positive");
  if (!(carrier > 0.0) || !std::isfinite(carrier))
    throw DomainError("pulse carrier must be strictly positive");
  if (!std::isfinite(phi_d)) throw DomainError("pulse.phi_d must be finite");
  if (!std::isfinite(t_center)) throw DomainError("pulse.t_center must be finite");
}

void TimeGrid::validate() const {
  if (!std::isfinite(t_start) || !std::isfinite(t_end))
    throw DomainError("grid bounds must be finite");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("grid.dt must be strictly positive");
  if (!(t_end > t_start)) throw DomainError("grid.t_end must exceed grid.t_start");
}

void TimeGrid::check_resolution(double carrier) const {
  const double floor_dt = (2.0 * std::numbers::pi / carrier) / kMinPointsPerCarrierPeriod;
  if (dt > floor_dt * (1.0 + 1e-12)) {
    throw DomainError("grid.dt = " + std::to_string(dt) +
                      " is coarser than 1/50 of the carrier period (" +
                      std::to_string(floor_dt) + ")");
  }
}

std::size_t TimeGrid::steps() const {
  // The small slack keeps exact multiples like 12 / 0.001 from losing a step.
  return static_cast<std::size_t>(std::floor((t_end - t_start) / dt + 1e-9));
}

double peak_drive_amplitude(DriveMode mode, const DerivedParams& d, double V_s) {
  const double denom = mode == DriveMode::even ? 1.0 - d.gamma : 1.0 + d.gamma;
  return d.C_d / (d.C_s * denom) * V_s / d.sigma_phi1;
}

namespace {

double source_waveform(const PulseConfig& cfg, double t) {
  const double tau = t - cfg.t_center;
  const double x = tau / cfg.sigma_t;
  return std::exp(-0.5 * x * x) * std::sin(cfg.carrier * tau - cfg.phi_d);
}

}  // namespace

double drive_envelope(const PulseConfig& cfg, const DerivedParams& d, double t) {
  return peak_drive_amplitude(cfg.mode, d, cfg.V_s) * source_waveform(cfg, t);
}

QubitDrive qubit_drive(const PulseConfig& cfg, const DerivedParams& d, double t) {
  const double v = cfg.V_s * source_waveform(cfg, t);
  return qubit_drive_amplitudes(d, v, cfg.mode == DriveMode::even ? v : -v);
}

double shift_angle_quadrature(const PulseConfig& cfg, const DerivedParams& d,
                              const QuadratureOptions& opts) {
  if (!(opts.half_width_sigmas >= 6.0)) {
    throw DomainError("quadrature window must span at least +-6 sigma_t around t_center");
  }
  if (!(opts.points_per_sigma >= 1.0)) throw DomainError("points_per_sigma must be >= 1");
  if (!(cfg.sigma_t > 0.0)) throw DomainError("pulse.sigma_t must be strictly positive");

  const double omega_e = peak_drive_amplitude(cfg.mode, d, cfg.V_s);
  const double lambda_delta = d.omega_g;
  const double sigma = cfg.sigma_t;
  const double half = opts.half_width_sigmas * sigma;
  const auto intervals =
      static_cast<std::size_t>(std::ceil(2.0 * opts.half_width_sigmas * opts.points_per_sigma));

  const auto integrand = [&](double tau) {
    const double x = tau / sigma;
    return omega_e * std::exp(-0.5 * x * x) * std::polar(1.0, -lambda_delta * tau);
  };
  return 2.0 * std::abs(simpson(integrand, -half, half, intervals));
}

double calibrate_voltage(double target_theta, DriveMode mode, const DerivedParams& d,
                         double sigma_t) {
  if (!(target_theta >= 0.0) || !std::isfinite(target_theta))
    throw DomainError("target shift angle must be non-negative");
  if (!(sigma_t > 0.0) || !std::isfinite(sigma_t))
    throw DomainError("sigma_t must be strictly positive for calibration");
  if (!(d.sigma_phi1 > 0.0) || !std::isfinite(d.sigma_phi1))
    throw DomainError("degenerate flux scale sigma_phi");

  const SpectralParams sp = spectral_params(d);
  const double per_volt = shift_angle(mode, d, sp, 1.0, sigma_t);
  if (!(per_volt > 0.0)) {
    throw DomainError("shift angle per volt underflows; pulse is too far detuned");
  }
  return target_theta / per_volt;
}

}  // namespace tqd
