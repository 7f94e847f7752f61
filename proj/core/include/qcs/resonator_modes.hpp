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

#pragma once

#include <cstddef>
#include <vector>

#include "qcs/circuit_model.hpp"

namespace qcs {

/// One solved standing-wave mode of the SQUID-terminated quarter-wave line.
struct ModeSolution {
  int index = 1;               // n >= 1
  double kl = 0.0;             // dimensionless wavenumber k_n * l
  double omega = 0.0;          // rad/ns
  double lambda = 0.0;         // Kerr coefficient
  std::vector<double> shifts;  // level shifts delta_m, m = 0..m_max, rad/ns
};

inline constexpr int kDefaultMaxPhotons = 4;
inline constexpr double kMaxTuningFlux = 0.499;

/// kl tan(kl) + r_C kl^2 - weight / r_L.
double dispersion_residual(double kl, double r_c, double r_l, double inductive_weight);

/// Bisection root of the dispersion residual on the n-th branch of tan,
/// ((n-1)pi - pi/2, (n-1)pi + pi/2) clipped at zero. Throws ModelError if the
/// first branch carries no sign change (non-positive inductive weight).
double solve_branch(int n, double r_c, double r_l, double inductive_weight);

/// Lowest `n_modes` modes at the given bias, with Kerr shifts to `m_max`.
std::vector<ModeSolution> solve_dispersion(const DeviceConfig& device, const SquidState& state,
                                           std::size_t n_modes, int m_max = kDefaultMaxPhotons);

/// Frequency of mode 1 only; the workhorse of every flux sweep.
double fundamental_frequency(const DeviceConfig& device, const SquidState& state);

/// Closed-form small-r_L estimate of the fundamental mode,
/// omega_b / (1 + r_L / (2 w)) with w the SQUID inductive weight and omega_b
/// the solved mode-1 frequency at zero flux.
double fundamental_approx(const DeviceConfig& device, const SquidState& state);

/// Populates `lambda` and `shifts` (m = 0..m_max).
ModeSolution mode_nonlinearity(ModeSolution mode, double e_lcav, int m_max = kDefaultMaxPhotons);

double kerr_coefficient(double kl);

/// delta_m = -(6 m^2 + 6 m + 3) lambda E_Lcav.
double kerr_level_shift(int m, double lambda, double e_lcav);

/// delta_2 - delta_1 = -24 lambda E_Lcav.
double mode_anharmonicity(const ModeSolution& mode, double e_lcav);

struct TuningBand {
  double omega_min = 0.0;  // mode 1 at the flux cap
  double omega_max = 0.0;  // mode 1 at zero flux
};

TuningBand tuning_band(const DeviceConfig& device, double phi_s = 0.0);

/// Inverts the mode-1 frequency over flux in [0, 0.499].
double flux_for_frequency(const DeviceConfig& device, double target_omega, double phi_s = 0.0);

}  // namespace qcs
