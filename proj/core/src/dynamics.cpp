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

#include "qcs/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qcs/coupling.hpp"
#include "qcs/errors.hpp"
#include "qcs/units.hpp"

namespace qcs {

using cplx = std::complex<double>;

BrightDark bright_dark(double g12, double g1c) {
  if (!(g1c > 0.0)) throw std::invalid_argument("g1c must be positive");
  BrightDark out;
  out.theta = std::atan(std::numbers::sqrt2 * g12 / g1c);
  out.reduced_coupling = g1c / std::cos(out.theta);
  return out;
}

Unitary2 two_level_propagator(double e1, double e2, double g, double t) {
  const double mean = 0.5 * (e1 + e2);
  const double detuning = e1 - e2;
  const double omega = std::sqrt(detuning * detuning + 4.0 * g * g);
  const cplx phase = std::exp(cplx{0.0, -mean * t});
  if (omega == 0.0) {
    return {{{phase, cplx{}}, {cplx{}, phase}}};
  }
  const double c = std::cos(0.5 * omega * t);
  const double s = std::sin(0.5 * omega * t);
  const cplx off = phase * cplx{0.0, -2.0 * g / omega * s};
  return {{{phase * cplx{c, -detuning / omega * s}, off},
           {off, phase * cplx{c, detuning / omega * s}}}};
}

Amplitudes apply_unitary(const Unitary2& u, const Amplitudes& psi) {
  return {u[0][0] * psi[0] + u[0][1] * psi[1], u[1][0] * psi[0] + u[1][1] * psi[1]};
}

Unitary2 multiply(const Unitary2& a, const Unitary2& b) {
  Unitary2 out{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    }
  }
  return out;
}

double rabi_transfer_probability(double g, double detuning, double t) {
  const double omega_sq = 4.0 * g * g + detuning * detuning;
  if (omega_sq == 0.0) return 0.0;
  const double s = std::sin(0.5 * std::sqrt(omega_sq) * t);
  return 4.0 * g * g / omega_sq * s * s;
}

Populations evolve_two_level(const TwoLevelProblem& problem, double t) {
  const double norm = std::norm(problem.psi0[0]) + std::norm(problem.psi0[1]);
  if (std::abs(norm - 1.0) > 1e-12) {
    std::ostringstream msg;
    msg << "initial state norm " << norm << " differs from 1";
    throw InvariantError("psi0", msg.str());
  }
  const Amplitudes psi =
      apply_unitary(two_level_propagator(problem.e1, problem.e2, problem.g, t), problem.psi0);
  return {std::norm(psi[0]), std::norm(psi[1])};
}

const char* channel_name(LeakageChannel channel) {
  return channel == LeakageChannel::kSingle ? "single" : "double";
}

LeakageChannel parse_channel(const std::string& name) {
  if (name == "single") return LeakageChannel::kSingle;
  if (name == "double") return LeakageChannel::kDouble;
  throw std::invalid_argument("unknown leakage channel '" + name + "' (expected single|double)");
}

TwoLevelProblem leakage_problem(const DeviceConfig& device, double omega_c,
                                LeakageChannel channel) {
  const double omega1 = qubit_spectrum(device.qubit1).omega;
  const double omega2 = qubit_spectrum(device.qubit2).omega;
  TwoLevelProblem p;
  p.g = qubit_coupler_coupling(device, Qubit::kFirst, omega_c);
  if (channel == LeakageChannel::kSingle) {
    p.e1 = omega1;
    p.e2 = omega_c;
  } else {
    p.e1 = omega1 + omega2;
    p.e2 = omega_c + omega2;
  }
  return p;
}

namespace {

Unitary2 gate_step(const DeviceConfig& device, double idle_omega_c, double amplitude,
                   double duration, LeakageChannel channel, double idle_gap) {
  if (!(duration > 0.0)) throw std::invalid_argument("gate duration must be positive");
  if (idle_gap < 0.0) throw std::invalid_argument("idle gap must be non-negative");
  const TwoLevelProblem pulse = leakage_problem(device, amplitude, channel);
  Unitary2 step = two_level_propagator(pulse.e1, pulse.e2, pulse.g, duration);
  if (idle_gap > 0.0) {
    const TwoLevelProblem idle = leakage_problem(device, idle_omega_c, channel);
    step = multiply(two_level_propagator(idle.e1, idle.e2, idle.g, idle_gap), step);
  }
  return step;
}

}  // namespace

Populations run_pulse_train(const DeviceConfig& device, double idle_omega_c,
                            const PulseSpec& pulse, LeakageChannel channel, double idle_gap) {
  if (pulse.n_cz < 1) throw std::invalid_argument("n_cz must be >= 1");
  const Unitary2 step =
      gate_step(device, idle_omega_c, pulse.amplitude, pulse.duration, channel, idle_gap);
  Amplitudes psi{cplx{1.0, 0.0}, cplx{}};
  for (int i = 0; i < pulse.n_cz; ++i) psi = apply_unitary(step, psi);
  return {std::norm(psi[0]), std::norm(psi[1])};
}

SweepResult leakage_sweep(const DeviceConfig& device, double idle_omega_c,
                          const std::vector<double>& amplitudes,
                          const std::vector<int>& ncz_grid, LeakageChannel channel,
                          const LeakageOptions& options) {
  if (amplitudes.empty() || ncz_grid.empty()) {
    throw std::invalid_argument("leakage sweep grids must be nonempty");
  }
  for (int n : ncz_grid) {
    if (n < 1) throw std::invalid_argument("n_cz values must be >= 1");
  }
  const int max_n = *std::max_element(ncz_grid.begin(), ncz_grid.end());

  SweepResult out;
  out.axes.push_back({"amp_ghz", {}});
  out.axes.push_back({"n_cz", std::vector<double>(ncz_grid.begin(), ncz_grid.end())});
  Column amp{"amp_ghz", {}}, ncz{"n_cz", {}}, comp{"p_comp", {}}, leak{"p_leak", {}},
      chan{"channel", {}};

  for (double amplitude : amplitudes) {
    out.axes[0].values.push_back(units::angular_to_ghz(amplitude));
    const Unitary2 step = gate_step(device, idle_omega_c, amplitude, options.duration, channel,
                                    options.idle_gap);
    // Populations after 1..max_n gates, then pick the requested counts.
    std::vector<Populations> history(static_cast<std::size_t>(max_n) + 1);
    Amplitudes psi{cplx{1.0, 0.0}, cplx{}};
    history[0] = {1.0, 0.0};
    for (int n = 1; n <= max_n; ++n) {
      psi = apply_unitary(step, psi);
      history[static_cast<std::size_t>(n)] = {std::norm(psi[0]), std::norm(psi[1])};
    }
    for (int n : ncz_grid) {
      const Populations& p = history[static_cast<std::size_t>(n)];
      amp.cells.emplace_back(units::angular_to_ghz(amplitude));
      ncz.cells.emplace_back(static_cast<std::int64_t>(n));
      comp.cells.emplace_back(p.p1);
      leak.cells.emplace_back(p.p2);
      chan.cells.emplace_back(std::string(channel_name(channel)));
    }
  }
  out.columns = {std::move(amp), std::move(ncz), std::move(comp), std::move(leak),
                 std::move(chan)};
  out.check_shape();
  return out;
}

}  // namespace qcs
