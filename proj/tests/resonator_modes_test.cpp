// Copyright 2026 The qcs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcs/resonator_modes.hpp"

#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles/scalar.hpp"
#include "qcs/errors.hpp"

namespace {

using fixture::kPi;

TEST(DispersionTest, BranchesMatchBruteForceScan) {
  for (double weight : {1.0, 0.6, 0.2, 0.05}) {
    const double r_c = 0.1, r_l = 0.02;
    // Same roots as kl cos kl + (r_C kl^2 - w/r_L) cos kl = 0 away from the poles.
    auto f = [&](double x) { return x * std::sin(x) + (r_c * x * x - weight / r_l) * std::cos(x); };
    const auto roots = oracle::scan_roots(f, 1e-9, 4.0 * kPi, 40000);
    ASSERT_GE(roots.size(), 4u);
    for (int n = 1; n <= 4; ++n) {
      const double kl = qcs::solve_branch(n, r_c, r_l, weight);
      EXPECT_NEAR(kl, roots[n - 1], 1e-10) << "weight " << weight << " n " << n;
      EXPECT_GT(kl, std::max(0.0, (n - 1.5) * kPi));
      EXPECT_LT(kl, (n - 0.5) * kPi);
    }
  }
}

TEST(DispersionTest, ResidualVanishesAtRoot) {
  const double kl = qcs::solve_branch(1, 0.1, 0.02, 1.0);
  EXPECT_NEAR(qcs::dispersion_residual(kl, 0.1, 0.02, 1.0), 0.0, 1e-9);
  EXPECT_NEAR(kl, 1.5398622063285157, 1e-12);
}

TEST(DispersionTest, ReferenceModeFrequency) {
  const auto dev = fixture::resonator_device();
  const auto modes = qcs::solve_dispersion(dev, {0.0, 0.0}, 3);
  ASSERT_EQ(modes.size(), 3u);
  EXPECT_NEAR(fixture::to_ghz(modes[0].omega), 5.9977270946997825, 1e-9);
  const double v = 1.0 / std::sqrt(0.16e-9 * 0.44e-6);
  for (const auto& m : modes) {
    EXPECT_NEAR(m.omega, m.kl * v / 4.87e-3 * 1e-9, 1e-9 * m.omega);
    ASSERT_EQ(m.shifts.size(), static_cast<std::size_t>(qcs::kDefaultMaxPhotons) + 1);
  }
  EXPECT_LT(modes[0].omega, modes[1].omega);
  EXPECT_LT(modes[1].omega, modes[2].omega);
}

TEST(DispersionTest, FrequencyFallsWithFlux) {
  const auto dev = fixture::resonator_device();
  double prev = INFINITY;
  for (int i = 0; i <= 45; ++i) {
    const double w = qcs::fundamental_frequency(dev, {0.01 * i, 0.0});
    EXPECT_LT(w, prev);
    prev = w;
  }
}

TEST(KerrTest, CoefficientAndShiftLadder) {
  const double kl = 1.2;
  const double expected = std::cos(kl) * std::cos(kl) / (4.0 * (1.0 + 2.0 * kl / std::sin(2.0 * kl)));
  EXPECT_NEAR(qcs::kerr_coefficient(kl), expected, 1e-15);
  const double e = 479.0;
  for (int m = 0; m <= 4; ++m) {
    EXPECT_NEAR(qcs::kerr_level_shift(m, 1e-5, e), -(6.0 * m * m + 6.0 * m + 3.0) * 1e-5 * e, 1e-12);
  }
  EXPECT_THROW(qcs::kerr_coefficient(0.0), qcs::ModelError);
}

TEST(KerrTest, AnharmonicityIsSecondDifferenceOfShifts) {
  const auto dev = fixture::resonator_device();
  const auto modes = qcs::solve_dispersion(dev, {0.0, 0.0}, 1);
  const auto& m = modes[0];
  const double e = fixture::line_energy(0.44, 4.87);
  const double eta = qcs::mode_anharmonicity(m, e);
  // Anharmonicity of the two lowest levels is delta_2 - delta_1.
  EXPECT_NEAR(eta, m.shifts[2] - m.shifts[1], 1e-12);
  EXPECT_NEAR(eta, -24.0 * m.lambda * e, 1e-12);
  EXPECT_LT(eta, 0.0);
  // Near 6 GHz the fundamental has a few-MHz negative anharmonicity.
  EXPECT_NEAR(fixture::to_mhz(eta), -8.6, 0.1);
}

TEST(ApproxTest, AnalyticEstimateTracksSolver) {
  const auto dev = fixture::resonator_device();
  for (int i = 0; i <= 40; ++i) {
    const qcs::SquidState s{0.01 * i, 0.0};
    const double exact = qcs::fundamental_frequency(dev, s);
    const double approx = qcs::fundamental_approx(dev, s);
    EXPECT_LT(std::abs(approx - exact) / exact, 0.02) << s.flux;
  }
  const double w0 = qcs::fundamental_frequency(dev, {0.0, 0.0});
  EXPECT_NEAR(qcs::fundamental_approx(dev, {0.0, 0.0}), w0 / 1.01, 1e-12);
}

TEST(TuningTest, FluxForFrequencyRoundTrip) {
  const auto dev = fixture::resonator_device();
  const auto band = qcs::tuning_band(dev);
  EXPECT_LT(band.omega_min, band.omega_max);
  for (double flux : {0.0, 0.1, 0.3, 0.45, 0.49}) {
    const double w = qcs::fundamental_frequency(dev, {flux, 0.0});
    EXPECT_NEAR(qcs::flux_for_frequency(dev, w), flux, 1e-6);
  }
  EXPECT_THROW(qcs::flux_for_frequency(dev, band.omega_max * 1.01), qcs::ModelError);
  EXPECT_THROW(qcs::flux_for_frequency(dev, band.omega_min * 0.99), qcs::ModelError);
}

}  // namespace
