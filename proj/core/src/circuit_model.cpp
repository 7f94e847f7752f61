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

#include "qcs/circuit_model.hpp"

#include <cmath>
#include <sstream>

#include "qcs/errors.hpp"
#include "qcs/units.hpp"

namespace qcs {

using units::kPi;
using units::kTwoPi;

double TransmissionLineParams::total_capacitance() const {
  // nF/m * mm = 1e-12 F = 1e3 fF.
  return c0 * length * 1e3;
}

double TransmissionLineParams::phase_velocity() const {
  return 1.0 / std::sqrt(l0 * units::kMicrohenryPerMetre * c0 * units::kNanofaradPerMetre);
}

double squid_flux_factor(double asymmetry, double flux) {
  const double c = std::cos(kPi * flux);
  const double s = std::sin(kPi * flux);
  return std::sqrt(c * c + asymmetry * asymmetry * s * s);
}

double squid_phase_offset(double asymmetry, double flux) {
  return std::atan2(asymmetry * std::sin(kPi * flux), std::cos(kPi * flux));
}

double squid_inductive_factor(const SquidParams& squid, const SquidState& state) {
  const double d = squid.asymmetry();
  const double phase = std::cos(state.phi_s - squid_phase_offset(d, state.flux));
  if (!(phase > 0.0)) {
    std::ostringstream msg;
    msg << "cos(phi_s - phi0) = " << phase << " <= 0 at flux " << state.flux
        << "; SQUID inductance diverges outside the model's validity";
    throw ModelError(msg.str());
  }
  return squid_flux_factor(d, state.flux) * phase;
}

SquidDerived derive_squid(const SquidParams& squid, const SquidState& state) {
  validate(squid);
  validate(state);
  const double d = squid.asymmetry();
  SquidDerived out;
  out.e_js = squid.total_ej() * squid_flux_factor(d, state.flux);
  out.phi0 = squid_phase_offset(d, state.flux);
  const double weight = squid_inductive_factor(squid, state);
  // L = (Phi0 / 2pi)^2 / (E_Jt * weight), reported in nH.
  const double reduced_flux = units::kFluxQuantum / kTwoPi;
  const double energy = units::angular_to_joules(squid.total_ej() * weight);
  out.l_sq = reduced_flux * reduced_flux / energy * 1e9;
  return out;
}

double squid_critical_current(const SquidParams& squid) {
  return kTwoPi * units::angular_to_joules(squid.total_ej()) / units::kFluxQuantum * 1e6;
}

QubitSpectrum qubit_spectrum(const QubitParams& qubit) {
  validate(qubit);
  const double ec = units::charging_energy(qubit.c_total);
  QubitSpectrum out;
  out.omega = std::sqrt(8.0 * ec * qubit.ej) - ec;
  out.alpha = -ec;
  if (!(out.omega > 0.0)) {
    throw ModelError("qubit transition frequency is not positive");
  }
  return out;
}

double qubit_ej_for_frequency(double c_total, double omega) {
  if (!(c_total > 0.0)) throw InvariantError("c_total", "must be positive");
  if (!(omega > 0.0)) throw InvariantError("omega", "must be positive");
  const double ec = units::charging_energy(c_total);
  const double plasma = omega + ec;
  return plasma * plasma / (8.0 * ec);
}

double qubit_critical_current(const QubitParams& qubit) {
  return kTwoPi * units::angular_to_joules(qubit.ej) / units::kFluxQuantum * 1e9;
}

double line_inductive_energy(const TransmissionLineParams& line) {
  const double reduced = units::kHbar / (2.0 * units::kElementaryCharge);
  const double inductance =
      line.l0 * units::kMicrohenryPerMetre * line.length * units::kMillimetre;
  return units::joules_to_angular(reduced * reduced / inductance);
}

DerivedRatios derive_ratios(const DeviceConfig& device) {
  validate(device.line);
  validate(device.squid);
  DerivedRatios out;
  out.e_lcav = line_inductive_energy(device.line);
  out.v = device.line.phase_velocity();
  out.r_l = out.e_lcav / device.squid.total_ej();
  out.r_c = device.squid.cs / device.line.total_capacitance();
  if (out.r_l > kMaxRatioL) {
    std::ostringstream msg;
    msg << "r_L = " << out.r_l << " exceeds " << kMaxRatioL
        << "; the SQUID no longer dominates the inductive energy";
    throw InvariantError("squid", msg.str());
  }
  if (out.r_c > kMaxRatioC) {
    std::ostringstream msg;
    msg << "r_C = " << out.r_c << " exceeds " << kMaxRatioC;
    throw InvariantError("squid.cs", msg.str());
  }
  return out;
}

namespace {

void require_positive(double value, const std::string& field) {
  if (!std::isfinite(value) || !(value > 0.0)) {
    std::ostringstream msg;
    msg << "must be a finite positive number (got " << value << ")";
    throw InvariantError(field, msg.str());
  }
}

void require_non_negative(double value, const std::string& field) {
  if (!std::isfinite(value) || value < 0.0) {
    std::ostringstream msg;
    msg << "must be a finite non-negative number (got " << value << ")";
    throw InvariantError(field, msg.str());
  }
}

}  // namespace

void validate(const SquidParams& squid) {
  require_positive(squid.ej1, "squid.ej1");
  require_positive(squid.ej2, "squid.ej2");
  require_positive(squid.cs, "squid.cs");
}

void validate(const TransmissionLineParams& line) {
  require_positive(line.length, "line.length");
  require_positive(line.c0, "line.c0");
  require_positive(line.l0, "line.l0");
}

void validate(const QubitParams& qubit, const std::string& field) {
  require_positive(qubit.c_total, field + ".c_total");
  require_positive(qubit.ej, field + ".ej");
  const double ratio = qubit.ej / units::charging_energy(qubit.c_total);
  if (ratio < kMinTransmonRatio) {
    std::ostringstream msg;
    msg << "E_J/E_C = " << ratio << " is below the transmon bound " << kMinTransmonRatio;
    throw InvariantError(field + ".ej", msg.str());
  }
}

void validate(const CouplingCaps& caps) {
  // Zero is accepted for the three coupling capacitances so the direct or
  // mediated paths can be switched off individually.
  require_non_negative(caps.c12, "caps.c12");
  require_non_negative(caps.c1c, "caps.c1c");
  require_non_negative(caps.c2c, "caps.c2c");
  require_positive(caps.cc, "caps.cc");
}

void validate(const SquidState& state) {
  if (!std::isfinite(state.flux)) throw InvariantError("state.flux", "must be finite");
  if (!(std::abs(state.phi_s) < kMaxBoundaryPhase)) {
    throw InvariantError("state.phi_s", "|phi_s| must stay below 0.3 rad");
  }
}

void validate(const DeviceConfig& device) {
  validate(device.qubit1, "qubit1");
  validate(device.qubit2, "qubit2");
  validate(device.line);
  validate(device.squid);
  validate(device.caps);
  derive_ratios(device);
}

std::vector<std::string> regime_warnings(const DeviceConfig& device) {
  std::vector<std::string> out;
  auto check_qubit = [&](const QubitParams& q, const char* name) {
    const double ratio = q.ej / units::charging_energy(q.c_total);
    if (ratio < kWarnTransmonRatio) {
      std::ostringstream msg;
      msg << name << ": E_J/E_C = " << ratio << " is below " << kWarnTransmonRatio;
      out.push_back(msg.str());
    }
  };
  check_qubit(device.qubit1, "qubit1");
  check_qubit(device.qubit2, "qubit2");
  const auto& caps = device.caps;
  if (caps.cc < 50.0 * caps.c1c || caps.cc < 50.0 * caps.c2c) {
    out.push_back("caps: cc should exceed c1c and c2c by at least a factor of 50");
  }
  if (caps.c12 > 0.0 && caps.c1c < 5.0 * caps.c12) {
    out.push_back("caps: c1c/c12 is below 5");
  }
  return out;
}

}  // namespace qcs
