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
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "qcs/circuit_model.hpp"

namespace qcs {

/// Levels kept per subsystem in the |n1, n_c, n2> product basis.
struct TruncationSpec {
  int levels_q1 = 4;
  int levels_c = 4;
  int levels_q2 = 4;

  std::size_t dimension() const {
    return static_cast<std::size_t>(levels_q1) * static_cast<std::size_t>(levels_c) *
           static_cast<std::size_t>(levels_q2);
  }
};

inline constexpr int kMinLevelsForZZ = 3;

struct BareState {
  int n1 = 0;
  int nc = 0;
  int n2 = 0;

  int excitations() const { return n1 + nc + n2; }
  friend bool operator==(const BareState&, const BareState&) = default;
};

std::size_t basis_index(const TruncationSpec& trunc, const BareState& state);
BareState basis_state(const TruncationSpec& trunc, std::size_t index);

/// Parameters of the rotating-wave three-body Hamiltonian, all rad/ns.
/// `coupler_shifts[m]` is added to m * omega_c on the coupler diagonal.
struct ThreeBodyModel {
  double omega1 = 0.0;
  double alpha1 = 0.0;
  double omega2 = 0.0;
  double alpha2 = 0.0;
  double omega_c = 0.0;
  std::vector<double> coupler_shifts;
  double g1c = 0.0;
  double g2c = 0.0;
  double g12 = 0.0;
};

/// Shift ladder eta * m (m - 1) / 2 with eta the coupler anharmonicity
/// (energy of |2> minus twice that of |1>).
std::vector<double> coupler_kerr_ladder(double anharmonicity, int levels);

ThreeBodyModel three_body_model(const DeviceConfig& device, double omega_c,
                                std::vector<double> coupler_shifts);

/// Real symmetric matrix in the product basis; missing shifts count as 0.
Eigen::MatrixXd build_hamiltonian(const ThreeBodyModel& model, const TruncationSpec& trunc);
Eigen::MatrixXd build_hamiltonian(const DeviceConfig& device, double omega_c,
                                  const std::vector<double>& coupler_shifts,
                                  const TruncationSpec& trunc);

struct LabeledLevel {
  BareState label;
  double energy = 0.0;
  double overlap = 0.0;  // |<bare|dressed>|^2
  std::size_t eigen_index = 0;
};

struct LabeledSpectrum {
  std::vector<double> eigenvalues;  // ascending
  std::vector<LabeledLevel> levels;

  /// Dressed energy carrying the given bare label. Throws if unlabeled.
  double energy(const BareState& state) const;
};

/// Assigns a bare label to every dressed state of the bare states with at
/// most `max_excitations` quanta, by maximum overlap. Throws LabelingError if
/// any overlap falls below 1/2.
LabeledSpectrum label_spectrum(const Eigen::MatrixXd& hamiltonian, const TruncationSpec& trunc,
                               int max_excitations = 2);

/// Perturbative and exact residual ZZ, rad/ns.
struct ZZReport {
  double xi2 = 0.0;
  double xi3 = 0.0;
  double xi4 = 0.0;
  double xi_pert = 0.0;
  std::optional<double> xi_exact;
  double delta_qubit = 0.0;  // omega1 - omega2
  double delta1c = 0.0;
  double delta2c = 0.0;
};

inline constexpr double kMinPoleDistanceMhz = 5.0;

/// Second, third and fourth order ZZ of the dispersive three-body system.
/// The formulas are evaluated as published, including the asymmetric
/// detunings of the third- and fourth-order terms.
ZZReport zz_perturbative(const ThreeBodyModel& model, double coupler_anharmonicity);
ZZReport zz_perturbative(const DeviceConfig& device, double omega_c,
                         double coupler_anharmonicity);

/// E(101) - E(100) - E(001) + E(000) from exact diagonalization.
double zz_exact(const ThreeBodyModel& model, const TruncationSpec& trunc);
double zz_exact(const DeviceConfig& device, double omega_c, double coupler_anharmonicity,
                const TruncationSpec& trunc = {});

/// Both routes at one coupler frequency.
ZZReport zz_report(const DeviceConfig& device, double omega_c, double coupler_anharmonicity,
                   const TruncationSpec& trunc = {});

}  // namespace qcs
