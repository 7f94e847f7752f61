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

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qcs/errors.hpp"
#include "qcs/units.hpp"

namespace qcs {

namespace {

struct QubitPair {
  double omega1;
  double omega2;
};

QubitPair qubit_frequencies(const DeviceConfig& device) {
  return {qubit_spectrum(device.qubit1).omega, qubit_spectrum(device.qubit2).omega};
}

double mediated_prefactor(const DeviceConfig& device, const QubitPair& q) {
  const auto& c = device.caps;
  return c.c1c * c.c2c / (c.cc * std::sqrt(device.qubit1.c_total * device.qubit2.c_total)) *
         std::sqrt(q.omega1 * q.omega2);
}

double coupler_coupling(double c_jc, double c_j, double c_c, double omega_j, double omega_c) {
  return c_jc / (2.0 * std::sqrt(c_j * c_c)) * std::sqrt(omega_j * omega_c);
}

void require_detuned(double delta, const char* name) {
  if (delta == 0.0 || std::abs(delta) < 1e-12) {
    throw ModelError(std::string("exact qubit-coupler resonance: ") + name + " = 0");
  }
}

}  // namespace

double direct_coupling(const DeviceConfig& device) {
  const QubitPair q = qubit_frequencies(device);
  const auto& c = device.caps;
  return (c.c12 + c.c1c * c.c2c / c.cc) /
         (2.0 * std::sqrt(device.qubit1.c_total * device.qubit2.c_total)) *
         std::sqrt(q.omega1 * q.omega2);
}

double qubit_coupler_coupling(const DeviceConfig& device, Qubit which, double omega_c) {
  if (!(omega_c > 0.0)) throw std::invalid_argument("coupler frequency must be positive");
  if (which == Qubit::kFirst) {
    return coupler_coupling(device.caps.c1c, device.qubit1.c_total, device.caps.cc,
                            qubit_spectrum(device.qubit1).omega, omega_c);
  }
  return coupler_coupling(device.caps.c2c, device.qubit2.c_total, device.caps.cc,
                          qubit_spectrum(device.qubit2).omega, omega_c);
}

CouplingReport effective_coupling(const DeviceConfig& device, double omega_c) {
  if (!(omega_c > 0.0)) throw std::invalid_argument("coupler frequency must be positive");
  const QubitPair q = qubit_frequencies(device);
  CouplingReport r;
  r.omega_c = omega_c;
  r.omega1 = q.omega1;
  r.omega2 = q.omega2;
  r.delta1 = q.omega1 - omega_c;
  r.delta2 = q.omega2 - omega_c;
  r.lambda1 = q.omega1 + omega_c;
  r.lambda2 = q.omega2 + omega_c;
  require_detuned(r.delta1, "Delta_1");
  require_detuned(r.delta2, "Delta_2");

  r.g12 = direct_coupling(device);
  r.g1c = qubit_coupler_coupling(device, Qubit::kFirst, omega_c);
  r.g2c = qubit_coupler_coupling(device, Qubit::kSecond, omega_c);

  r.direct_term = r.g12;
  r.mediated_term = omega_c / 8.0 *
                    (1.0 / r.delta1 + 1.0 / r.delta2 - 1.0 / r.lambda1 - 1.0 / r.lambda2) *
                    mediated_prefactor(device, q);
  r.g_eff = r.direct_term + r.mediated_term;

  r.dressed1 = q.omega1 + r.g1c * r.g1c * (1.0 / r.delta1 - 1.0 / r.lambda1);
  r.dressed2 = q.omega2 + r.g2c * r.g2c * (1.0 / r.delta2 - 1.0 / r.lambda2);

  r.guard1 = std::abs(r.g1c / r.delta1);
  r.guard2 = std::abs(r.g2c / r.delta2);
  for (auto [guard, name] : {std::pair{r.guard1, "qubit1"}, std::pair{r.guard2, "qubit2"}}) {
    if (guard > kDispersiveGuard) {
      std::ostringstream msg;
      msg << name << ": |g/Delta| = " << guard << " exceeds the dispersive guard "
          << kDispersiveGuard;
      r.warnings.push_back(msg.str());
    }
  }
  return r;
}

MultimodeCoupling multimode_effective_coupling(const DeviceConfig& device,
                                               const std::vector<ModeSolution>& modes,
                                               bool include_counter_rotating) {
  const QubitPair q = qubit_frequencies(device);
  MultimodeCoupling out;
  out.g12 = direct_coupling(device);
  out.g_eff = out.g12;
  for (const ModeSolution& mode : modes) {
    ModeContribution c;
    c.index = mode.index;
    c.omega = mode.omega;
    c.g1c = qubit_coupler_coupling(device, Qubit::kFirst, mode.omega);
    c.g2c = qubit_coupler_coupling(device, Qubit::kSecond, mode.omega);
    const double d1 = q.omega1 - mode.omega;
    const double d2 = q.omega2 - mode.omega;
    require_detuned(d1, "Delta_1^(n)");
    require_detuned(d2, "Delta_2^(n)");
    double inverse = 1.0 / d1 + 1.0 / d2;
    if (include_counter_rotating) {
      inverse -= 1.0 / (q.omega1 + mode.omega) + 1.0 / (q.omega2 + mode.omega);
    }
    c.contribution = 0.5 * c.g1c * c.g2c * inverse;
    out.g_eff += c.contribution;
    out.modes.push_back(c);
  }
  return out;
}

namespace {

constexpr double kRootTolerance = 1e-9;
constexpr int kScanCells = 64;

double g_eff_at(const DeviceConfig& device, double omega_c) {
  return effective_coupling(device, omega_c).g_eff;
}

// g_eff is continuous on [lo, hi]; collect every bracketed zero.
void find_roots(const DeviceConfig& device, double lo, double hi, std::vector<double>& roots) {
  if (!(hi > lo)) return;
  double a = lo;
  double fa = g_eff_at(device, a);
  for (int i = 1; i <= kScanCells; ++i) {
    const double b = i == kScanCells ? hi : lo + (hi - lo) * i / kScanCells;
    const double fb = g_eff_at(device, b);
    if (fa == 0.0) {
      roots.push_back(a);
    } else if (std::signbit(fa) != std::signbit(fb) && fb != 0.0) {
      double x0 = a;
      double x1 = b;
      double f0 = fa;
      while (x1 - x0 > kRootTolerance * 1e-3) {
        const double mid = 0.5 * (x0 + x1);
        if (mid <= x0 || mid >= x1) break;
        const double fm = g_eff_at(device, mid);
        if (fm == 0.0) {
          x0 = x1 = mid;
          break;
        }
        if (std::signbit(fm) == std::signbit(f0)) {
          x0 = mid;
          f0 = fm;
        } else {
          x1 = mid;
        }
      }
      roots.push_back(0.5 * (x0 + x1));
    }
    a = b;
    fa = fb;
  }
  if (fa == 0.0) roots.push_back(a);
}

}  // namespace

SwitchOffResult switch_off(const DeviceConfig& device, double phi_s) {
  const QubitPair q = qubit_frequencies(device);
  SwitchOffResult out;
  out.band = tuning_band(device, phi_s);

  const double q_lo = std::min(q.omega1, q.omega2);
  const double q_hi = std::max(q.omega1, q.omega2);
  // Stay clear of the resonance poles by a kilohertz.
  const double margin = units::mhz_to_angular(1e-3);
  const double span = units::ghz_to_angular(1.5);
  const double lo = std::max(std::min(out.band.omega_min, q_lo - span), margin);
  const double hi = std::max(out.band.omega_max, q_hi + span);

  std::vector<double> candidates;
  find_roots(device, lo, q_lo - margin, candidates);
  if (q_hi > q_lo) find_roots(device, q_lo + margin, q_hi - margin, candidates);
  find_roots(device, q_hi + margin, hi, candidates);

  if (candidates.empty()) {
    std::ostringstream msg;
    msg.precision(9);
    msg << "g_eff has no sign change on the searched coupler band; g_eff/2pi = "
        << units::angular_to_mhz(g_eff_at(device, lo)) << " MHz at "
        << units::angular_to_ghz(lo) << " GHz and "
        << units::angular_to_mhz(g_eff_at(device, hi)) << " MHz at "
        << units::angular_to_ghz(hi) << " GHz";
    throw ModelError(msg.str());
  }

  for (double omega : candidates) {
    const CouplingReport r = effective_coupling(device, omega);
    out.roots.push_back({omega, std::abs(r.g_eff), r.dispersive_guard(),
                         omega >= out.band.omega_min && omega <= out.band.omega_max});
  }
  const auto best = std::min_element(
      out.roots.begin(), out.roots.end(), [](const SwitchOffRoot& a, const SwitchOffRoot& b) {
        if (a.reachable != b.reachable) return a.reachable;
        return a.guard < b.guard;
      });
  out.omega_off = best->omega;
  out.residual = best->residual;
  out.dispersive_guard = best->guard;
  out.reachable = best->reachable;
  if (out.reachable) out.flux_off = flux_for_frequency(device, out.omega_off, phi_s);
  return out;
}

}  // namespace qcs
