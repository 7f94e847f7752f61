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

// Reference devices shared by the unit and acceptance tests. Unit
// conversions are spelled out here instead of borrowed from the library.

#ifndef QCS_TESTS_FIXTURES_HPP
#define QCS_TESTS_FIXTURES_HPP

#include <cmath>
#include <string>

#include "qcs/circuit_model.hpp"

namespace fixture {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kHbar = 1.054571817e-34;
inline constexpr double kCharge = 1.602176634e-19;

inline double ghz(double f) { return 2.0 * kPi * f; }
inline double to_ghz(double w) { return w / (2.0 * kPi); }
inline double to_mhz(double w) { return 1e3 * w / (2.0 * kPi); }
inline double to_khz(double w) { return 1e6 * w / (2.0 * kPi); }

/// (hbar/2e)^2 / (L0 l) / hbar in rad/ns for L0 in uH/m and l in mm.
inline double line_energy(double l0, double length) {
  const double phi = kHbar / (2.0 * kCharge);
  return phi * phi / (l0 * 1e-6 * length * 1e-3) / kHbar * 1e-9;
}

/// Transmon E_J (rad/ns) placing the 0-1 transition at omega: omega = sqrt(8 EJ EC) - EC.
inline double transmon_ej(double c_ff, double omega) {
  const double ec = kCharge * kCharge / (2.0 * c_ff * 1e-15) / kHbar * 1e-9;
  return (omega + ec) * (omega + ec) / (8.0 * ec);
}

/// Line of 4.87 mm, 0.16 nF/m, 0.44 uH/m with a SQUID fixed by r_L, r_C, d.
inline qcs::DeviceConfig resonator_device(double r_l = 0.02, double r_c = 0.1, double d = 0.1) {
  qcs::DeviceConfig dev;
  dev.line = {4.87, 0.16, 0.44};
  const double ejt = line_energy(0.44, 4.87) / r_l;
  dev.squid.ej1 = 0.5 * ejt * (1.0 + d);
  dev.squid.ej2 = 0.5 * ejt * (1.0 - d);
  dev.squid.cs = r_c * 0.16 * 4.87 * 1e3;
  dev.qubit1 = {100.0, transmon_ej(100.0, ghz(4.0))};
  dev.qubit2 = {90.0, transmon_ej(90.0, ghz(4.1))};
  dev.caps = {0.06, 1.0, 1.0, 780.0};
  return dev;
}

/// Two-qubit device: q1 100 fF at 4.0 GHz, q2 90 fF at 4.1 GHz, C12 = 0.06 fF,
/// C1c = C2c = 1 fF, Cc = 780 fF, coupler line as above.
inline qcs::DeviceConfig coupler_device(double c12 = 0.06) {
  qcs::DeviceConfig dev = resonator_device();
  dev.caps.c12 = c12;
  return dev;
}

inline std::string source_path(const std::string& rel) { return std::string(QCS_SOURCE_DIR) + "/" + rel; }

}  // namespace fixture

#endif  // QCS_TESTS_FIXTURES_HPP
