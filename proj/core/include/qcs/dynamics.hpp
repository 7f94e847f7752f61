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

#include <array>
#include <complex>
#include <vector>

#include "qcs/circuit_model.hpp"
#include "qcs/sweep_result.hpp"

namespace qcs {

using Amplitudes = std::array<std::complex<double>, 2>;
using Unitary2 = std::array<std::array<std::complex<double>, 2>, 2>;

inline constexpr double kDefaultGateDuration = 40.0;  // ns

/// Square flux pulse: the coupler sits at `amplitude` (rad/ns) for
/// `duration` ns, repeated `n_cz` times.
struct PulseSpec {
  double amplitude = 0.0;
  double duration = kDefaultGateDuration;
  int n_cz = 1;
};

/// Two-level Hamiltonian [[e1, g], [g, e2]] (rad/ns) and initial state.
struct TwoLevelProblem {
  double e1 = 0.0;
  double e2 = 0.0;
  double g = 0.0;
  Amplitudes psi0{std::complex<double>{1.0, 0.0}, std::complex<double>{0.0, 0.0}};
};

struct Populations {
  double p1 = 0.0;
  double p2 = 0.0;
};

struct BrightDark {
  double theta = 0.0;             // tan(theta) = sqrt(2) g12 / g1c
  double reduced_coupling = 0.0;  // g1c / cos(theta)
};

/// Bright/dark rotation of the |011>, |200> pair seen from |101>.
BrightDark bright_dark(double g12, double g1c);

/// Closed-form exp(-i H t).
Unitary2 two_level_propagator(double e1, double e2, double g, double t);

Amplitudes apply_unitary(const Unitary2& u, const Amplitudes& psi);
Unitary2 multiply(const Unitary2& a, const Unitary2& b);

/// 4 g^2 / Omega^2 sin^2(Omega t / 2) with Omega = sqrt(4 g^2 + Delta^2).
double rabi_transfer_probability(double g, double detuning, double t);

/// Populations after time t. Throws InvariantError if psi0 is not normalized.
Populations evolve_two_level(const TwoLevelProblem& problem, double t);

enum class LeakageChannel {
  kSingle,  // |100> <-> |010>
  kDouble,  // |101> <-> |B_CZ>, reduced to |011>
};

const char* channel_name(LeakageChannel channel);
LeakageChannel parse_channel(const std::string& name);

/// Reduced two-level problem of a leakage channel with the coupler held at
/// `omega_c`, starting in the computational state.
TwoLevelProblem leakage_problem(const DeviceConfig& device, double omega_c,
                                LeakageChannel channel);

struct LeakageOptions {
  double duration = kDefaultGateDuration;  // ns per gate
  double idle_gap = 0.0;                   // ns at idle_omega_c between gates
};

/// Final populations for every (amplitude, n_cz) pair, amplitude-major.
/// Columns: amp_ghz, n_cz, p_comp, p_leak, channel.
SweepResult leakage_sweep(const DeviceConfig& device, double idle_omega_c,
                          const std::vector<double>& amplitudes,
                          const std::vector<int>& ncz_grid, LeakageChannel channel,
                          const LeakageOptions& options = {});

/// Populations after the pulse train described by `pulse`.
Populations run_pulse_train(const DeviceConfig& device, double idle_omega_c,
                            const PulseSpec& pulse, LeakageChannel channel,
                            double idle_gap = 0.0);

}  // namespace qcs
