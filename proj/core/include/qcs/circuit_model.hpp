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

#include <string>
#include <vector>

namespace qcs {

/// DC SQUID terminating the resonator. Josephson energies are stored as
/// positive magnitudes in rad/ns.
struct SquidParams {
  double ej1 = 0.0;
  double ej2 = 0.0;
  double cs = 0.0;  // total SQUID capacitance, fF

  double total_ej() const { return ej1 + ej2; }
  double asymmetry() const { return (ej1 - ej2) / (ej1 + ej2); }
};

struct TransmissionLineParams {
  double length = 0.0;  // mm
  double c0 = 0.0;      // nF/m
  double l0 = 0.0;      // uH/m

  /// C0 * length in fF.
  double total_capacitance() const;
  /// 1/sqrt(L0 C0) in m/s.
  double phase_velocity() const;
};

struct QubitParams {
  double c_total = 0.0;  // shunt capacitance, fF
  double ej = 0.0;       // rad/ns
};

/// All capacitances in fF.
struct CouplingCaps {
  double c12 = 0.0;
  double c1c = 0.0;
  double c2c = 0.0;
  double cc = 0.0;
};

struct DeviceConfig {
  QubitParams qubit1;
  QubitParams qubit2;
  TransmissionLineParams line;
  SquidParams squid;
  CouplingCaps caps;
};

struct SquidState {
  double flux = 0.0;   // external flux in flux quanta
  double phi_s = 0.0;  // boundary phase at the SQUID, rad
};

struct SquidDerived {
  double e_js = 0.0;  // effective Josephson energy, rad/ns
  double phi0 = 0.0;  // phase offset, rad
  double l_sq = 0.0;  // SQUID inductance, nH
};

struct QubitSpectrum {
  double omega = 0.0;  // 0-1 transition, rad/ns
  double alpha = 0.0;  // anharmonicity, rad/ns (negative)
};

struct DerivedRatios {
  double e_lcav = 0.0;  // (hbar/2e)^2 / (L0 l) as rad/ns
  double v = 0.0;       // phase velocity, m/s
  double r_l = 0.0;     // e_lcav / (ej1 + ej2)
  double r_c = 0.0;     // cs / (C0 l)
};

inline constexpr double kMaxRatioL = 0.1;
inline constexpr double kMaxRatioC = 0.5;
inline constexpr double kMaxBoundaryPhase = 0.3;
inline constexpr double kMinTransmonRatio = 30.0;
inline constexpr double kWarnTransmonRatio = 50.0;

/// sqrt(cos^2(pi F) + d^2 sin^2(pi F)).
double squid_flux_factor(double asymmetry, double flux);

/// Phase offset with tan(phi0) = d tan(pi F), continuous through F = 1/2.
double squid_phase_offset(double asymmetry, double flux);

/// Dimensionless inductive weight sqrt(cos^2 + d^2 sin^2) * cos(phi_s - phi0)
/// entering the dispersion relation. Throws ModelError when it is not
/// strictly positive.
double squid_inductive_factor(const SquidParams& squid, const SquidState& state);

SquidDerived derive_squid(const SquidParams& squid, const SquidState& state);

/// Total critical current 2 pi E_Jt / Phi0 in uA.
double squid_critical_current(const SquidParams& squid);

QubitSpectrum qubit_spectrum(const QubitParams& qubit);

/// E_J that puts the 0-1 transition of a transmon with capacitance
/// `c_total` (fF) at `omega` (rad/ns).
double qubit_ej_for_frequency(double c_total, double omega);

/// Qubit critical current Phi0 * 2 pi E_J / Phi0^2 in nA.
double qubit_critical_current(const QubitParams& qubit);

/// Inductive energy of the bare line, rad/ns.
double line_inductive_energy(const TransmissionLineParams& line);

DerivedRatios derive_ratios(const DeviceConfig& device);

void validate(const SquidParams& squid);
void validate(const TransmissionLineParams& line);
void validate(const QubitParams& qubit, const std::string& field = "qubit");
void validate(const CouplingCaps& caps);
void validate(const SquidState& state);

/// Checks every hard invariant of the device, including the r_L/r_C regime
/// bounds. Throws InvariantError naming the offending field.
void validate(const DeviceConfig& device);

/// Soft-limit diagnostics (transmon ratio below 50, weak capacitance
/// hierarchy). Empty when the device sits comfortably in regime.
std::vector<std::string> regime_warnings(const DeviceConfig& device);

}  // namespace qcs
