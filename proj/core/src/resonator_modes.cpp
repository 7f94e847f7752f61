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

#include "qcs/resonator_modes.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qcs/errors.hpp"
#include "qcs/units.hpp"

namespace qcs {

using units::kPi;

double dispersion_residual(double kl, double r_c, double r_l, double inductive_weight) {
  return kl * std::tan(kl) + r_c * kl * kl - inductive_weight / r_l;
}

double solve_branch(int n, double r_c, double r_l, double inductive_weight) {
  if (n < 1) throw std::invalid_argument("mode index must be >= 1");
  // kl tan kl is increasing on each branch ((n-1)pi - pi/2, (n-1)pi + pi/2)
  // and the remaining terms decrease, so each branch holds exactly one root.
  // The residual diverges to +inf at the upper end.
  double lo = n == 1 ? 0.0 : (n - 1.5) * kPi;
  double hi = (n - 0.5) * kPi;
  const double f_lo = n == 1 ? dispersion_residual(lo, r_c, r_l, inductive_weight) : -1.0;
  if (!(f_lo < 0.0)) {
    std::ostringstream msg;
    msg << "dispersion branch " << n << " has no sign change (residual at kl = " << lo
        << " is " << f_lo << ")";
    throw ModelError(msg.str());
  }
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (dispersion_residual(mid, r_c, r_l, inductive_weight) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

namespace {

struct LineModel {
  double r_c;
  double r_l;
  double e_lcav;
  double omega_per_kl;  // v / l in rad/ns
};

LineModel line_model(const DeviceConfig& device) {
  const DerivedRatios ratios = derive_ratios(device);
  return {ratios.r_c, ratios.r_l, ratios.e_lcav,
          ratios.v / (device.line.length * units::kMillimetre) * 1e-9};
}

}  // namespace

std::vector<ModeSolution> solve_dispersion(const DeviceConfig& device, const SquidState& state,
                                           std::size_t n_modes, int m_max) {
  if (n_modes < 1) throw std::invalid_argument("n_modes must be >= 1");
  validate(state);
  const LineModel line = line_model(device);
  const double weight = squid_inductive_factor(device.squid, state);
  std::vector<ModeSolution> modes;
  modes.reserve(n_modes);
  for (std::size_t i = 0; i < n_modes; ++i) {
    ModeSolution mode;
    mode.index = static_cast<int>(i) + 1;
    mode.kl = solve_branch(mode.index, line.r_c, line.r_l, weight);
    mode.omega = mode.kl * line.omega_per_kl;
    modes.push_back(mode_nonlinearity(std::move(mode), line.e_lcav, m_max));
  }
  return modes;
}

double fundamental_frequency(const DeviceConfig& device, const SquidState& state) {
  validate(state);
  const LineModel line = line_model(device);
  const double weight = squid_inductive_factor(device.squid, state);
  return solve_branch(1, line.r_c, line.r_l, weight) * line.omega_per_kl;
}

double fundamental_approx(const DeviceConfig& device, const SquidState& state) {
  validate(state);
  const DerivedRatios ratios = derive_ratios(device);
  const double d = device.squid.asymmetry();
  const double weight = squid_flux_factor(d, state.flux) *
                        std::cos(state.phi_s - squid_phase_offset(d, state.flux));
  if (!(weight > ratios.r_l)) {
    std::ostringstream msg;
    msg << "analytic mode estimate collapses: SQUID weight " << weight << " <= r_L "
        << ratios.r_l;
    throw ModelError(msg.str());
  }
  const double omega_b = fundamental_frequency(device, SquidState{0.0, 0.0});
  return omega_b / (1.0 + ratios.r_l / (2.0 * weight));
}

double kerr_coefficient(double kl) {
  const double s = std::sin(2.0 * kl);
  if (s == 0.0) throw ModelError("sin(2 kl) vanishes; Kerr coefficient undefined");
  const double c = std::cos(kl);
  return c * c / (4.0 * (1.0 + 2.0 * kl / s));
}

double kerr_level_shift(int m, double lambda, double e_lcav) {
  return -(6.0 * m * m + 6.0 * m + 3.0) * lambda * e_lcav;
}

ModeSolution mode_nonlinearity(ModeSolution mode, double e_lcav, int m_max) {
  if (m_max < 2) throw std::invalid_argument("m_max must be >= 2");
  mode.lambda = kerr_coefficient(mode.kl);
  mode.shifts.resize(static_cast<std::size_t>(m_max) + 1);
  for (int m = 0; m <= m_max; ++m) {
    mode.shifts[static_cast<std::size_t>(m)] = kerr_level_shift(m, mode.lambda, e_lcav);
  }
  return mode;
}

double mode_anharmonicity(const ModeSolution& mode, double e_lcav) {
  return kerr_level_shift(2, mode.lambda, e_lcav) - kerr_level_shift(1, mode.lambda, e_lcav);
}

TuningBand tuning_band(const DeviceConfig& device, double phi_s) {
  return {fundamental_frequency(device, SquidState{kMaxTuningFlux, phi_s}),
          fundamental_frequency(device, SquidState{0.0, phi_s})};
}

double flux_for_frequency(const DeviceConfig& device, double target_omega, double phi_s) {
  constexpr double kFrequencyTolerance = 1e-6;
  const TuningBand band = tuning_band(device, phi_s);
  if (target_omega > band.omega_max + kFrequencyTolerance ||
      target_omega < band.omega_min - kFrequencyTolerance) {
    std::ostringstream msg;
    msg.precision(9);
    msg << "target " << units::angular_to_ghz(target_omega)
        << " GHz is outside the flux-tunable band [" << units::angular_to_ghz(band.omega_min)
        << ", " << units::angular_to_ghz(band.omega_max) << "] GHz";
    throw ModelError(msg.str());
  }
  if (target_omega >= band.omega_max) return 0.0;
  if (target_omega <= band.omega_min) return kMaxTuningFlux;

  double lo = 0.0;
  double hi = kMaxTuningFlux;
  double omega_lo = band.omega_max;
  double omega_hi = band.omega_min;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double omega_mid = fundamental_frequency(device, SquidState{mid, phi_s});
    if (omega_mid > omega_lo || omega_mid < omega_hi) {
      throw ModelError("mode-1 frequency is not monotone in flux on [0, 0.499]");
    }
    if (omega_mid > target_omega) {
      lo = mid;
      omega_lo = omega_mid;
    } else {
      hi = mid;
      omega_hi = omega_mid;
    }
  }
  const double flux = 0.5 * (lo + hi);
  const double omega = fundamental_frequency(device, SquidState{flux, phi_s});
  if (std::abs(omega - target_omega) > kFrequencyTolerance) {
    throw ModelError("flux inversion failed to reach the frequency tolerance");
  }
  return flux;
}

}  // namespace qcs
