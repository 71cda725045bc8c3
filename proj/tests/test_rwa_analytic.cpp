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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "tqdirac/dirac_propagator.hpp"
#include "tqdirac/errors.hpp"
#include "tqdirac/operator_algebra.hpp"
#include "tqdirac/pulse_synthesis.hpp"
#include "tqdirac/rwa_analytic.hpp"

using namespace tqd;

namespace {

constexpr double kPi = std::numbers::pi;
const Complex I(0.0, 1.0);

DerivedParams dimless(double gamma) {
  return derive_params(CircuitParams::with_gamma(gamma), UnitMode::dimensionless);
}

double max_abs(const ComplexMatrix4& m) { return m.cwiseAbs().maxCoeff(); }

ComplexMatrix4 taylor_expm(const ComplexMatrix4& a) {
  int squarings = 0;
  double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  while (norm > 0.25) {
    norm /= 2.0;
    ++squarings;
  }
  const ComplexMatrix4 scaled = a / std::pow(2.0, squarings);
  ComplexMatrix4 term = ComplexMatrix4::Identity();
  ComplexMatrix4 sum = ComplexMatrix4::Identity();
  for (int k = 1; k < 30; ++k) {
    term = term * scaled / static_cast<double>(k);
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

// Real symmetric coupling generated by the rotating-wave drive.
ComplexMatrix4 coupling(DriveMode mode, const SpectralParams& sp) {
  Eigen::Vector4d b, c;
  if (mode == DriveMode::even) {
    b << 0, 1, 1, 0;
    c << sp.rho_c, 0, 0, sp.rho_s;
  } else {
    b << 0, 1, -1, 0;
    c << sp.rho_s, 0, 0, -sp.rho_c;
  }
  const Eigen::Matrix4d k = c * b.transpose() + b * c.transpose();
  return k.cast<Complex>();
}

}  // namespace

TEST_CASE("spectral parameters") {
  for (double gamma : {0.001, 0.05, 0.1, 0.5}) {
    const SpectralParams sp = spectral_params(dimless(gamma));
    CHECK(sp.omega_r == doctest::Approx(1.0));
    CHECK(sp.lambda_delta == doctest::Approx(0.5 * gamma));
    CHECK(sp.lambda_sigma * sp.lambda_sigma == doctest::Approx(1.0 + 0.25 * gamma * gamma));
    CHECK(sp.beta_sigma > 0.5 * kPi);
    CHECK(sp.beta_sigma <= kPi);
    CHECK(std::tan(sp.beta_sigma) == doctest::Approx(-0.5 * gamma));
    CHECK(sp.rho_c * sp.rho_c + sp.rho_s * sp.rho_s == doctest::Approx(0.5).epsilon(1e-15));
  }
  const SpectralParams tiny = spectral_params(dimless(1e-9));
  CHECK(tiny.rho_c == doctest::Approx(-0.5));
  CHECK(tiny.rho_s == doctest::Approx(-0.5));
}

TEST_CASE("spectral parameters need identical qubits") {
  CircuitParams p = CircuitParams::with_gamma(0.05);
  p.L2 *= 1.01;
  CHECK_THROWS_AS(spectral_params(derive_params(p, UnitMode::dimensionless)), UnsupportedCase);
}

TEST_CASE("rotating-frame closed form equals the matrix exponential") {
  for (double gamma : {0.01, 0.05, 0.1}) {
    const DerivedParams d = dimless(gamma);
    const SpectralParams sp = spectral_params(d);
    const ComplexMatrix4 h0 = build_h0(d);
    const double span = 3.0 * 2.0 * kPi / sp.lambda_delta;
    for (int k = 0; k <= 40; ++k) {
      const double t = span * k / 40.0;
      CHECK(max_abs(rotating_frame_closed_form(sp, t) - hermitian_expm(h0, t)) <= 1e-9);
    }
    CHECK(max_abs(rotating_frame_closed_form(sp, 0.0) - ComplexMatrix4::Identity()) == 0.0);
  }
}

TEST_CASE("rotated even-drive entries match the numerically rotated drive") {
  for (double gamma : {0.01, 0.1}) {
    const DerivedParams d = dimless(gamma);
    const SpectralParams sp = spectral_params(d);
    const ComplexMatrix4 hd = build_hd(0.7, 0.7);
    for (double t : {0.0, 0.31, 4.0, 77.7}) {
      const ComplexMatrix4 r = rotate_drive(hd, rotating_frame_unitary(build_h0(d), t));
      const RotatedDriveEntries e = rotated_even_drive_entries(sp, 0.7, t);
      CHECK(std::abs(r(1, 0) - e.h_a) <= 1e-9);
      CHECK(std::abs(r(2, 0) - e.h_a) <= 1e-9);
      CHECK(std::abs(r(3, 1) - e.h_b) <= 1e-9);
      CHECK(std::abs(r(3, 2) - e.h_b) <= 1e-9);
      CHECK(std::abs(r(0, 3)) <= 1e-12);
      CHECK(std::abs(r(1, 2)) <= 1e-12);
    }
  }
}

TEST_CASE("period-averaged rotated drive against the rwa envelopes") {
  const DerivedParams d = dimless(0.01);
  const SpectralParams sp = spectral_params(d);
  const double period = 2.0 * kPi / sp.lambda_sigma;
  for (double t0 : {-30.0, 0.0, 12.5}) {
    // Carrier sin(lambda_Sigma t) times the rotated coupling, averaged over one period.
    const auto f = [&](double t) {
      return std::sin(sp.lambda_sigma * t) * rotated_even_drive_entries(sp, 1.0, t).h_a;
    };
    const Complex avg = simpson(f, t0, t0 + period, 400) / period;
    const Complex rwa = rwa_envelopes(sp, 1.0, 1e12, t0 + 0.5 * period).h_a;
    CHECK(std::abs(avg) == doctest::Approx(std::abs(rwa)).epsilon(0.01));
    // Residual is of order lambda_Delta / lambda_Sigma. The averaged entry
    // carries the opposite sign and detuning phase.
    CHECK(std::abs(avg + std::conj(rwa)) <= 0.01 * std::abs(rwa));
  }
}

TEST_CASE("rwa envelopes validity flag") {
  const SpectralParams sp = spectral_params(dimless(0.05));
  CHECK(rwa_envelopes(sp, 1.0, 20.0, 0.0).rwa_valid);
  CHECK_FALSE(rwa_envelopes(sp, 1.0, 5.0, 0.0).rwa_valid);
  const RwaEnvelopes e = rwa_envelopes(sp, 2.0, 10.0, 0.0);
  CHECK(e.h_a == Complex(-2.0 * sp.rho_c, 0.0));
  CHECK(e.h_b == Complex(-2.0 * sp.rho_s, 0.0));
}

TEST_CASE("closed-form shift angle") {
  const DerivedParams d = dimless(0.05);
  const SpectralParams sp = spectral_params(d);
  const double even = shift_angle(DriveMode::even, d, sp, 0.01, 20.0);
  const double odd = shift_angle(DriveMode::odd, d, sp, 0.01, 20.0);
  CHECK(even / odd == doctest::Approx(1.05 / 0.95).epsilon(1e-14));
  CHECK(shift_angle(DriveMode::even, d, sp, 0.0, 20.0) == 0.0);
  CHECK(shift_angle(DriveMode::even, d, sp, 0.02, 20.0) == doctest::Approx(2.0 * even));
  // Detuning suppression at lambda_Delta sigma = 1.
  const double s1 = 1.0 / sp.lambda_delta;
  const double ratio = shift_angle(DriveMode::even, d, sp, 1.0, s1) /
                       (2.0 * std::sqrt(2.0 * kPi) * s1 * peak_drive_amplitude(DriveMode::even, d, 1.0));
  CHECK(ratio == doctest::Approx(std::exp(-0.5)).epsilon(1e-14));
}

TEST_CASE("evolution matrices are exponentials of the coupling") {
  for (double gamma : {0.0001, 0.05, 0.1}) {
    const SpectralParams sp = spectral_params(dimless(gamma));
    for (DriveMode mode : {DriveMode::even, DriveMode::odd}) {
      for (double theta : {0.0, 0.4, kPi, 2.0 * kPi, 5.0}) {
        const ComplexMatrix4 u = evolution_matrix(mode, sp, theta);
        const ComplexMatrix4 ref = taylor_expm(I * (0.5 * theta) * coupling(mode, sp));
        CHECK(max_abs(u - ref) <= 1e-13);
        CHECK(unitarity_defect(u) <= 1e-12);
        CHECK(max_abs(u - u.transpose()) == 0.0);
      }
    }
  }
}

TEST_CASE("printed odd matrix is not unitary once gamma > 0") {
  for (double gamma : {0.01, 0.05, 0.1}) {
    const SpectralParams sp = spectral_params(dimless(gamma));
    CHECK(unitarity_defect(printed_odd_evolution_matrix(sp, kPi)) > 1e-3);
  }
  const SpectralParams sp = spectral_params(dimless(1e-9));
  CHECK(unitarity_defect(printed_odd_evolution_matrix(sp, kPi)) <= 1e-8);
}

TEST_CASE("end state at theta = pi in the weak-coupling limit") {
  const SpectralParams sp = spectral_params(dimless(1e-9));
  const RwaEndState even = rwa_end_state(DriveMode::even, sp, kPi);
  CHECK(std::abs(even.psi[0] - Complex(0.5, 0.0)) <= 1e-8);
  CHECK(std::abs(even.psi[1] - Complex(0.0, -0.5)) <= 1e-8);
  CHECK(std::abs(even.psi[2] - Complex(0.0, -0.5)) <= 1e-8);
  CHECK(std::abs(even.psi[3] - Complex(-0.5, 0.0)) <= 1e-8);
  const StateVector4 odd = end_state(DriveMode::odd, sp, kPi);
  for (double m : odd.magnitudes()) CHECK(m == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(end_state(DriveMode::even, sp, 0.0).magnitudes() == Magnitudes{1.0, 0.0, 0.0, 0.0});
}

TEST_CASE("end states are balanced at pi for moderate coupling") {
  const SpectralParams sp = spectral_params(dimless(0.05));
  for (DriveMode mode : {DriveMode::even, DriveMode::odd}) {
    const Magnitudes m = end_state(mode, sp, kPi).magnitudes();
    CHECK(rms_difference(m, kBalancedMagnitudes) <= 0.03);
    CHECK(rms_difference(m, kBalancedMagnitudes) > 0.0);
  }
}
