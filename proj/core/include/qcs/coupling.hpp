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

#include <optional>
#include <string>
#include <vector>

#include "qcs/circuit_model.hpp"
#include "qcs/resonator_modes.hpp"

namespace qcs {

enum class Qubit { kFirst = 1, kSecond = 2 };

inline constexpr double kDispersiveGuard = 0.3;

/// Effective coupling at one coupler frequency. All values in rad/ns.
struct CouplingReport {
  double omega_c = 0.0;
  double omega1 = 0.0;
  double omega2 = 0.0;
  double g12 = 0.0;
  double g1c = 0.0;
  double g2c = 0.0;
  double direct_term = 0.0;
  double mediated_term = 0.0;
  double g_eff = 0.0;
  double dressed1 = 0.0;
  double dressed2 = 0.0;
  double delta1 = 0.0;   // omega_1 - omega_c
  double delta2 = 0.0;   // omega_2 - omega_c
  double lambda1 = 0.0;  // omega_1 + omega_c
  double lambda2 = 0.0;  // omega_2 + omega_c
  double guard1 = 0.0;   // |g1c / delta1|
  double guard2 = 0.0;   // |g2c / delta2|
  std::vector<std::string> warnings;

  double dispersive_guard() const { return guard1 > guard2 ? guard1 : guard2; }
};

double direct_coupling(const DeviceConfig& device);

/// C_jc / (2 sqrt(C_j C_c)) * sqrt(omega_j omega_c).
double qubit_coupler_coupling(const DeviceConfig& device, Qubit which, double omega_c);

/// Two-line closed form with the counter-rotating 1/Lambda terms, plus
/// second-order dressed qubit frequencies. Throws ModelError on exact
/// resonance.
CouplingReport effective_coupling(const DeviceConfig& device, double omega_c);

struct ModeContribution {
  int index = 0;
  double omega = 0.0;
  double g1c = 0.0;
  double g2c = 0.0;
  double contribution = 0.0;
};

struct MultimodeCoupling {
  double g12 = 0.0;
  double g_eff = 0.0;
  std::vector<ModeContribution> modes;
};

/// g12 + sum_n g1c g2c (1/D1 + 1/D2) / 2. Higher modes reuse the mode-1
/// capacitive coupling with their own frequency. With
/// `include_counter_rotating` the -1/L1 - 1/L2 terms are kept as well, which
/// makes a single-mode call identical to effective_coupling().
MultimodeCoupling multimode_effective_coupling(const DeviceConfig& device,
                                               const std::vector<ModeSolution>& modes,
                                               bool include_counter_rotating = false);

struct SwitchOffRoot {
  double omega = 0.0;
  double residual = 0.0;
  double guard = 0.0;
  bool reachable = false;
};

struct SwitchOffResult {
  double omega_off = 0.0;
  std::optional<double> flux_off;  // empty when outside the tunable band
  double residual = 0.0;           // |g_eff(omega_off)|
  double dispersive_guard = 0.0;
  bool reachable = false;
  TuningBand band;
  std::vector<SwitchOffRoot> roots;
};

/// Locates the coupler frequency where g_eff vanishes. Every branch
/// separated by the qubit resonances is searched; a flux-reachable root with
/// the smallest dispersive guard is preferred.
SwitchOffResult switch_off(const DeviceConfig& device, double phi_s = 0.0);

}  // namespace qcs
