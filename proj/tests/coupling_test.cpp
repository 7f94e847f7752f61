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

#include "qcs/coupling.hpp"

#include <array>
#include <cmath>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles/linalg.hpp"
#include "qcs/errors.hpp"
#include "qcs/resonator_modes.hpp"

namespace {

using fixture::ghz;
using fixture::to_mhz;

// Inverse of the nodal capacitance matrix (q1, c, q2) by cofactors.
std::array<std::array<double, 3>, 3> inverse_capacitance(const qcs::CouplingCaps& k, double c1,
                                                        double c2) {
  const double m[3][3] = {{c1, -k.c1c, -k.c12}, {-k.c1c, k.cc, -k.c2c}, {-k.c12, -k.c2c, c2}};
  const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                     m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                     m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  std::array<std::array<double, 3>, 3> inv{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1i = (i + 2) % 3;
      inv[i][j] = (m[r0][c0] * m[r1][c1i] - m[r0][c1i] * m[r1][c0]) / det;
    }
  return inv;
}

double charge_coupling(const std::array<std::array<double, 3>, 3>& inv, int a, int b, double wa,
                       double wb) {
  return inv[a][b] / (2.0 * std::sqrt(inv[a][a] * inv[b][b])) * std::sqrt(wa * wb);
}

TEST(CouplingTest, DirectCouplingGolden) {
  const auto dev = fixture::coupler_device();
  EXPECT_NEAR(to_mhz(qcs::direct_coupling(dev)), 1.3079886262790177, 1e-9);
}

TEST(CouplingTest, MatchesCapacitanceMatrixInversion) {
  const auto dev = fixture::coupler_device();
  const auto inv = inverse_capacitance(dev.caps, 100.0, 90.0);
  const double w1 = ghz(4.0), w2 = ghz(4.1), wc = ghz(4.5);
  EXPECT_NEAR(qcs::direct_coupling(dev) / charge_coupling(inv, 0, 2, w1, w2), 1.0, 0.02);
  EXPECT_NEAR(qcs::qubit_coupler_coupling(dev, qcs::Qubit::kFirst, wc) /
                  charge_coupling(inv, 0, 1, w1, wc),
              1.0, 0.02);
  EXPECT_NEAR(qcs::qubit_coupler_coupling(dev, qcs::Qubit::kSecond, wc) /
                  charge_coupling(inv, 2, 1, w2, wc),
              1.0, 0.02);
}

TEST(CouplingTest, QubitCouplerScaling) {
  const auto dev = fixture::coupler_device();
  const double g = qcs::qubit_coupler_coupling(dev, qcs::Qubit::kFirst, ghz(4.5));
  EXPECT_NEAR(to_mhz(g), 7.5955452531275, 1e-9);
  EXPECT_NEAR(qcs::qubit_coupler_coupling(dev, qcs::Qubit::kFirst, ghz(18.0)), 2.0 * g, 1e-12);
  const double g2 = qcs::qubit_coupler_coupling(dev, qcs::Qubit::kSecond, ghz(4.5));
  EXPECT_NEAR(g2 / g, std::sqrt(100.0 / 90.0) * std::sqrt(4.1 / 4.0), 1e-12);
  auto zero = dev;
  zero.caps.c1c = 0.0;
  EXPECT_EQ(qcs::qubit_coupler_coupling(zero, qcs::Qubit::kFirst, ghz(4.5)), 0.0);
}

TEST(CouplingTest, EffectiveCouplingFormula) {
  const auto dev = fixture::coupler_device();
  const double w1 = ghz(4.0), w2 = ghz(4.1);
  for (double f : {3.0, 4.3, 4.5, 5.2, 6.0}) {
    const double wc = ghz(f);
    const auto r = qcs::effective_coupling(dev, wc);
    const double ratio = 1.0 * 1.0 / (780.0 * std::sqrt(100.0 * 90.0));
    const double inv = 1.0 / (w1 - wc) + 1.0 / (w2 - wc) - 1.0 / (w1 + wc) - 1.0 / (w2 + wc);
    const double expected = qcs::direct_coupling(dev) + wc / 8.0 * inv * ratio * std::sqrt(w1 * w2);
    EXPECT_NEAR(r.g_eff, expected, 1e-12) << f;
    EXPECT_NEAR(r.direct_term + r.mediated_term, r.g_eff, 1e-15);
    EXPECT_NEAR(r.g1c, qcs::qubit_coupler_coupling(dev, qcs::Qubit::kFirst, wc), 1e-15);
    EXPECT_NEAR(r.dressed1, w1 + r.g1c * r.g1c * (1.0 / (w1 - wc) - 1.0 / (w1 + wc)), 1e-12);
    EXPECT_NEAR(r.dressed2, w2 + r.g2c * r.g2c * (1.0 / (w2 - wc) - 1.0 / (w2 + wc)), 1e-12);
  }
}

TEST(CouplingTest, SignStructureAroundQubits) {
  const auto dev = fixture::coupler_device();
  const auto above = qcs::effective_coupling(dev, ghz(5.5));
  EXPECT_LT(above.mediated_term, 0.0);
  EXPECT_LT(above.dressed1, above.omega1);
  const auto below = qcs::effective_coupling(dev, ghz(3.0));
  EXPECT_GT(below.mediated_term, 0.0);
  EXPECT_GT(below.dressed1, below.omega1);
}

TEST(CouplingTest, ResonantCouplerThrows) {
  const auto dev = fixture::coupler_device();
  const double w1 = qcs::qubit_spectrum(dev.qubit1).omega;
  EXPECT_THROW(qcs::effective_coupling(dev, w1), qcs::ModelError);
}

TEST(CouplingTest, DivergentGuardWarns) {
  const auto dev = fixture::coupler_device();
  const auto r = qcs::effective_coupling(dev, ghz(4.01));
  EXPECT_GT(r.dispersive_guard(), qcs::kDispersiveGuard);
  EXPECT_FALSE(r.warnings.empty());
}

TEST(MultimodeTest, SingleModeWithCounterRotatingEqualsEffectiveCoupling) {
  const auto dev = fixture::coupler_device();
  const auto modes = qcs::solve_dispersion(dev, {0.3, 0.0}, 1);
  const auto mm = qcs::multimode_effective_coupling(dev, modes, true);
  const auto single = qcs::effective_coupling(dev, modes[0].omega);
  EXPECT_NEAR(mm.g_eff, single.g_eff, 1e-12);
}

TEST(MultimodeTest, RwaCouplingMatchesExactSplitting) {
  // Degenerate qubits: the qubit-like pair splits by 2 |g_eff| when the
  // coupler is far detuned.
  auto dev = fixture::coupler_device();
  dev.qubit2 = {100.0, fixture::transmon_ej(100.0, ghz(4.0))};
  const auto modes = qcs::solve_dispersion(dev, {0.0, 0.0}, 1);
  const double wc = modes[0].omega;
  const auto mm = qcs::multimode_effective_coupling(dev, modes, false);
  const double w = qcs::qubit_spectrum(dev.qubit1).omega;
  const auto& m = mm.modes[0];
  oracle::RealMatrix h = {{w, m.g1c, mm.g12}, {m.g1c, wc, m.g2c}, {mm.g12, m.g2c, w}};
  const auto es = oracle::jacobi_eigen(h);
  EXPECT_NEAR(es.values[1] - es.values[0], 2.0 * std::abs(mm.g_eff), 2e-3 * std::abs(mm.g_eff));
}

TEST(MultimodeTest, HigherModeContributionIsReported) {
  const auto dev = fixture::coupler_device();
  const auto modes = qcs::solve_dispersion(dev, {0.0, 0.0}, 3);
  const auto mm = qcs::multimode_effective_coupling(dev, modes);
  ASSERT_EQ(mm.modes.size(), 3u);
  const double ratio = std::abs(mm.modes[1].contribution / mm.modes[0].contribution);
  // g_n grows like sqrt(omega_n) while 1/Delta_n falls, so the second mode
  // is suppressed but far from negligible.
  EXPECT_GT(ratio, 0.3);
  EXPECT_LT(ratio, 0.5);
  double sum = mm.g12;
  for (const auto& c : mm.modes) sum += c.contribution;
  EXPECT_NEAR(sum, mm.g_eff, 1e-15);
}

TEST(SwitchOffTest, RootGoldenAndResidual) {
  const auto dev = fixture::coupler_device();
  const auto r = qcs::switch_off(dev);
  EXPECT_NEAR(fixture::to_ghz(r.omega_off), 4.126198976268137, 1e-7);
  EXPECT_LT(fixture::to_khz(r.residual), 1.0);
  EXPECT_NEAR(std::abs(qcs::effective_coupling(dev, r.omega_off).g_eff), r.residual, 1e-15);
  EXPECT_TRUE(r.reachable);
  ASSERT_TRUE(r.flux_off.has_value());
  EXPECT_NEAR(qcs::fundamental_frequency(dev, {*r.flux_off, 0.0}), r.omega_off, 1e-6);
  EXPECT_GE(r.roots.size(), 2u);
  for (const auto& root : r.roots) {
    if (root.reachable) EXPECT_LE(r.dispersive_guard, root.guard + 1e-15);
  }
}

TEST(SwitchOffTest, RelabelingSymmetry) {
  const auto dev = fixture::coupler_device();
  auto swapped = dev;
  std::swap(swapped.qubit1, swapped.qubit2);
  std::swap(swapped.caps.c1c, swapped.caps.c2c);
  EXPECT_NEAR(qcs::switch_off(swapped).omega_off / qcs::switch_off(dev).omega_off, 1.0, 1e-9);
}

TEST(SwitchOffTest, NoRootWithoutMediatedPath) {
  auto dev = fixture::coupler_device();
  dev.caps.c1c = 0.0;
  EXPECT_THROW(qcs::switch_off(dev), qcs::ModelError);
}

}  // namespace
