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

#include <numbers>

// Internal unit conventions:
//   energies and frequencies  angular frequency in rad/ns (= 2*pi * GHz)
//   capacitance               fF
//   length                    mm
//   per-unit-length C and L   nF/m and uH/m
//   time                      ns
//   external flux             units of the flux quantum
namespace qcs::units {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// CODATA-2018.
inline constexpr double kElementaryCharge = 1.602176634e-19;  // C
inline constexpr double kHbar = 1.054571817e-34;              // J s
inline constexpr double kPlanck = 6.62607015e-34;             // J s
inline constexpr double kFluxQuantum = 2.067833848e-15;       // Wb

inline constexpr double kFemtofarad = 1e-15;
inline constexpr double kMillimetre = 1e-3;
inline constexpr double kNanofaradPerMetre = 1e-9;
inline constexpr double kMicrohenryPerMetre = 1e-6;

constexpr double ghz_to_angular(double f_ghz) { return kTwoPi * f_ghz; }
constexpr double angular_to_ghz(double omega) { return omega / kTwoPi; }
constexpr double angular_to_mhz(double omega) { return omega / kTwoPi * 1e3; }
constexpr double angular_to_khz(double omega) { return omega / kTwoPi * 1e6; }
constexpr double mhz_to_angular(double f_mhz) { return kTwoPi * f_mhz * 1e-3; }

/// Energy in joules expressed as E/hbar in rad/ns.
constexpr double joules_to_angular(double energy) { return energy / kHbar * 1e-9; }
constexpr double angular_to_joules(double omega) { return omega * 1e9 * kHbar; }

/// e^2 / (2C) as an angular frequency, C in fF.
constexpr double charging_energy(double capacitance_ff) {
  return joules_to_angular(kElementaryCharge * kElementaryCharge /
                           (2.0 * capacitance_ff * kFemtofarad));
}

}  // namespace qcs::units
