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

#include "tqdirac/rwa_analytic.hpp"

#include <cmath>
#include <numbers>

#include "tqdirac/errors.hpp"

namespace tqd {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

}  // namespace

SpectralParams spectral_params(const DerivedParams& d) {
  if (!d.symmetric()) {
    throw UnsupportedCase("closed-form results need identical qubits (L1 == L2)");
  }
  SpectralParams sp;
  sp.omega_r = d.omega_1;
  sp.gamma = d.gamma;
  sp.lambda_delta = 0.5 * d.gamma * sp.omega_r;
  sp.lambda_sigma = std::sqrt(1.0 + 0.25 * d.gamma * d.gamma) * sp.omega_r;
  sp.beta_sigma = kPi - std::atan(0.5 * d.gamma);
  sp.rho_c = std::cos(0.25 * kPi - sp.beta_sigma) / std::sqrt(2.0);
  sp.rho_s = std::sin(0.25 * kPi - sp.beta_sigma) / std::sqrt(2.0);
  return sp;
}

ComplexMatrix4 rotating_frame_closed_form(const SpectralParams& sp, double t) {
  const double cs = std::cos(sp.lambda_sigma * t);
  const double ss = std::sin(sp.lambda_sigma * t);
  const Complex f_plus(cs, ss * std::cos(sp.beta_sigma));
  const Complex f_minus(cs, -ss * std::cos(sp.beta_sigma));
  const double g_sigma = ss * std::sin(sp.beta_sigma);
  const double f_delta = std::cos(sp.lambda_delta * t);
  const double g_delta = std::sin(sp.lambda_delta * t);

  ComplexMatrix4 u = ComplexMatrix4::Zero();
  u(0, 0) = f_plus;
  u(0, 3) = -kI * g_sigma;
  u(1, 1) = f_delta;
  u(1, 2) = kI * g_delta;
  u(2, 1) = kI * g_delta;
  u(2, 2) = f_delta;
  u(3, 0) = -kI * g_sigma;
  u(3, 3) = f_minus;
  return u;
}

RwaEnvelopes rwa_envelopes(const SpectralParams& sp, double omega_e, double sigma_t, double t) {
  const double x = t / sigma_t;
  const double g = omega_e * std::exp(-0.5 * x * x);
  RwaEnvelopes e;
  e.h_a = -sp.rho_c * g * std::polar(1.0, -sp.lambda_delta * t);
  e.h_b = -sp.rho_s * g * std::polar(1.0, sp.lambda_delta * t);
  e.rwa_valid = sp.lambda_sigma * sigma_t >= 10.0;
  return e;
}

RotatedDriveEntries rotated_even_drive_entries(const SpectralParams& sp, double omega_de,
                                               double t) {
  const double s = std::sin(sp.lambda_sigma * t);
  const double c = std::cos(sp.lambda_sigma * t);
  const double phase = 0.25 * kPi - sp.beta_sigma;
  RotatedDriveEntries r;
  r.h_a = omega_de * std::polar(1.0, sp.lambda_delta * t) *
          Complex(std::sqrt(2.0) * std::cos(phase) * s, c);
  r.h_b = omega_de * std::polar(1.0, -sp.lambda_delta * t) *
          Complex(std::sqrt(2.0) * std::sin(phase) * s, c);
  return r;
}

double shift_angle(DriveMode mode, const DerivedParams& d, const SpectralParams& sp, double V_s,
                   double sigma_t) {
  const double denom = mode == DriveMode::even ? 1.0 - d.gamma : 1.0 + d.gamma;
  const double x = sp.lambda_delta * sigma_t;
  const double half = std::sqrt(2.0 * kPi) * d.C_d / (d.C_s * denom) * sigma_t *
                      std::exp(-0.5 * x * x) * V_s / d.sigma_phi1;
  return 2.0 * half;
}

ComplexMatrix4 evolution_matrix(DriveMode mode, const SpectralParams& sp, double theta) {
  const double s2 = std::sin(0.5 * theta);
  const double s4 = std::sin(0.25 * theta);
  const double sq = s4 * s4;
  const double cq = 1.0 - sq;
  const double rc = sp.rho_c;
  const double rs = sp.rho_s;

  ComplexMatrix4 u;
  if (mode == DriveMode::even) {
    u << 1.0 - 4.0 * rc * rc * sq, kI * rc * s2, kI * rc * s2, -4.0 * rc * rs * sq,
         kI * rc * s2, cq, -sq, kI * rs * s2,
         kI * rc * s2, -sq, cq, kI * rs * s2,
         -4.0 * rc * rs * sq, kI * rs * s2, kI * rs * s2, 1.0 - 4.0 * rs * rs * sq;
  } else {
    u << 1.0 - 4.0 * rs * rs * sq, kI * rs * s2, -kI * rs * s2, 4.0 * rc * rs * sq,
         kI * rs * s2, cq, sq, -kI * rc * s2,
         -kI * rs * s2, sq, cq, kI * rc * s2,
         4.0 * rc * rs * sq, -kI * rc * s2, kI * rc * s2, 1.0 - 4.0 * rc * rc * sq;
  }
  return u;
}

ComplexMatrix4 printed_odd_evolution_matrix(const SpectralParams& sp, double theta) {
  ComplexMatrix4 u = evolution_matrix(DriveMode::odd, sp, theta);
  const double s2 = std::sin(0.5 * theta);
  u(1, 3) = -kI * sp.rho_s * s2;
  u(2, 3) = kI * sp.rho_s * s2;
  return u;
}

StateVector4 end_state(DriveMode mode, const SpectralParams& sp, double theta) {
  return StateVector4(evolution_matrix(mode, sp, theta).col(0));
}

RwaEndState rwa_end_state(DriveMode mode, const SpectralParams& sp, double theta) {
  ComplexMatrix4 u = evolution_matrix(mode, sp, theta);
  StateVector4 psi(u.col(0));
  return RwaEndState{mode, theta, u, psi};
}

}  // namespace tqd
