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

#include "qcs/crosstalk.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qcs/coupling.hpp"
#include "qcs/errors.hpp"
#include "qcs/units.hpp"

namespace qcs {

namespace {

void validate_truncation(const TruncationSpec& trunc, int min_levels) {
  if (trunc.levels_q1 < min_levels || trunc.levels_c < min_levels ||
      trunc.levels_q2 < min_levels) {
    std::ostringstream msg;
    msg << "every subsystem needs at least " << min_levels << " levels";
    throw std::invalid_argument(msg.str());
  }
}

double duffing_level(double omega, double alpha, int n) {
  return omega * n + 0.5 * alpha * n * (n - 1);
}

}  // namespace

std::size_t basis_index(const TruncationSpec& trunc, const BareState& s) {
  return (static_cast<std::size_t>(s.n1) * static_cast<std::size_t>(trunc.levels_c) +
          static_cast<std::size_t>(s.nc)) *
             static_cast<std::size_t>(trunc.levels_q2) +
         static_cast<std::size_t>(s.n2);
}

BareState basis_state(const TruncationSpec& trunc, std::size_t index) {
  const auto n2 = static_cast<int>(index % static_cast<std::size_t>(trunc.levels_q2));
  index /= static_cast<std::size_t>(trunc.levels_q2);
  const auto nc = static_cast<int>(index % static_cast<std::size_t>(trunc.levels_c));
  const auto n1 = static_cast<int>(index / static_cast<std::size_t>(trunc.levels_c));
  return {n1, nc, n2};
}

std::vector<double> coupler_kerr_ladder(double anharmonicity, int levels) {
  std::vector<double> shifts(static_cast<std::size_t>(std::max(levels, 0)));
  for (int m = 0; m < levels; ++m) {
    shifts[static_cast<std::size_t>(m)] = 0.5 * anharmonicity * m * (m - 1);
  }
  return shifts;
}

ThreeBodyModel three_body_model(const DeviceConfig& device, double omega_c,
                                std::vector<double> coupler_shifts) {
  const QubitSpectrum q1 = qubit_spectrum(device.qubit1);
  const QubitSpectrum q2 = qubit_spectrum(device.qubit2);
  ThreeBodyModel m;
  m.omega1 = q1.omega;
  m.alpha1 = q1.alpha;
  m.omega2 = q2.omega;
  m.alpha2 = q2.alpha;
  m.omega_c = omega_c;
  m.coupler_shifts = std::move(coupler_shifts);
  m.g12 = direct_coupling(device);
  m.g1c = qubit_coupler_coupling(device, Qubit::kFirst, omega_c);
  m.g2c = qubit_coupler_coupling(device, Qubit::kSecond, omega_c);
  return m;
}

Eigen::MatrixXd build_hamiltonian(const ThreeBodyModel& model, const TruncationSpec& trunc) {
  validate_truncation(trunc, 2);
  const auto dim = static_cast<Eigen::Index>(trunc.dimension());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);

  auto coupler_level = [&](int m) {
    const auto k = static_cast<std::size_t>(m);
    const double shift = k < model.coupler_shifts.size() ? model.coupler_shifts[k] : 0.0;
    return model.omega_c * m + shift;
  };
  // Symmetric hopping: lowers `from` by one quantum and raises `to`.
  auto hop = [&](const BareState& s, double g, int BareState::*from, int BareState::*to,
                 int to_levels) {
    if (g == 0.0 || s.*from == 0 || s.*to + 1 >= to_levels) return;
    BareState t = s;
    t.*from -= 1;
    t.*to += 1;
    const double element = g * std::sqrt(static_cast<double>(s.*from) * (s.*to + 1));
    const auto i = static_cast<Eigen::Index>(basis_index(trunc, s));
    const auto j = static_cast<Eigen::Index>(basis_index(trunc, t));
    h(i, j) = element;
    h(j, i) = element;
  };

  for (std::size_t idx = 0; idx < trunc.dimension(); ++idx) {
    const BareState s = basis_state(trunc, idx);
    const auto i = static_cast<Eigen::Index>(idx);
    h(i, i) = duffing_level(model.omega1, model.alpha1, s.n1) +
              duffing_level(model.omega2, model.alpha2, s.n2) + coupler_level(s.nc);
    // c_j a^dag: qubit quantum into the coupler.
    hop(s, model.g1c, &BareState::n1, &BareState::nc, trunc.levels_c);
    hop(s, model.g2c, &BareState::n2, &BareState::nc, trunc.levels_c);
    // c_1 c_2^dag.
    hop(s, model.g12, &BareState::n1, &BareState::n2, trunc.levels_q2);
  }
  return h;
}

Eigen::MatrixXd build_hamiltonian(const DeviceConfig& device, double omega_c,
                                  const std::vector<double>& coupler_shifts,
                                  const TruncationSpec& trunc) {
  return build_hamiltonian(three_body_model(device, omega_c, coupler_shifts), trunc);
}

double LabeledSpectrum::energy(const BareState& state) const {
  for (const LabeledLevel& level : levels) {
    if (level.label == state) return level.energy;
  }
  std::ostringstream msg;
  msg << "no dressed level labeled |" << state.n1 << state.nc << state.n2 << ">";
  throw LabelingError(msg.str());
}

LabeledSpectrum label_spectrum(const Eigen::MatrixXd& hamiltonian, const TruncationSpec& trunc,
                               int max_excitations) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hamiltonian);
  if (solver.info() != Eigen::Success) throw ModelError("eigensolver did not converge");
  const Eigen::VectorXd& values = solver.eigenvalues();
  const Eigen::MatrixXd& vectors = solver.eigenvectors();

  LabeledSpectrum out;
  out.eigenvalues.assign(values.data(), values.data() + values.size());
  std::vector<bool> taken(static_cast<std::size_t>(values.size()), false);

  for (std::size_t idx = 0; idx < trunc.dimension(); ++idx) {
    const BareState s = basis_state(trunc, idx);
    if (s.excitations() > max_excitations) continue;
    const auto row = static_cast<Eigen::Index>(idx);
    const double bare_energy = hamiltonian(row, row);
    Eigen::Index best = 0;
    double best_overlap = -1.0;
    for (Eigen::Index k = 0; k < values.size(); ++k) {
      const double overlap = vectors(row, k) * vectors(row, k);
      const bool tie = std::abs(overlap - best_overlap) <= 1e-12;
      if ((overlap > best_overlap && !tie) ||
          (tie && std::abs(values(k) - bare_energy) < std::abs(values(best) - bare_energy))) {
        best = k;
        best_overlap = overlap;
      }
    }
    if (best_overlap < 0.5) {
      std::ostringstream msg;
      msg << "ambiguous dressed label for |" << s.n1 << s.nc << s.n2
          << ">: maximum overlap " << best_overlap << " < 0.5 (near an anticrossing)";
      throw LabelingError(msg.str());
    }
    const auto k = static_cast<std::size_t>(best);
    if (taken[k]) throw LabelingError("two bare states map to the same dressed state");
    taken[k] = true;
    out.levels.push_back({s, values(best), best_overlap, k});
  }
  return out;
}

ZZReport zz_perturbative(const ThreeBodyModel& m, double coupler_anharmonicity) {
  ZZReport r;
  const double d12 = m.omega1 - m.omega2;
  const double d1 = m.omega1 - m.omega_c;
  const double d2 = m.omega2 - m.omega_c;
  r.delta_qubit = d12;
  r.delta1c = d1;
  r.delta2c = d2;

  const double a1 = m.alpha1;
  const double a2 = m.alpha2;
  // delta_1 - delta_2 of the coupler ladder.
  const double kerr_gap = -coupler_anharmonicity;

  const double min_distance = units::mhz_to_angular(kMinPoleDistanceMhz);
  const std::pair<double, const char*> denominators[] = {
      {d12 + a1, "Delta_12 + alpha_1"},
      {d12 - a2, "Delta_12 - alpha_2"},
      {d12 + a2, "Delta_12 + alpha_2"},
      {d12, "Delta_12"},
      {d1, "Delta_1c"},
      {d2, "Delta_2c"},
      {d1 + d2 + kerr_gap, "Delta_1 + Delta_2 + delta_1 - delta_2"},
  };
  for (const auto& [value, name] : denominators) {
    if (std::abs(value) < min_distance) {
      std::ostringstream msg;
      msg << "perturbative ZZ pole: |" << name << "|/2pi = " << units::angular_to_mhz(value)
          << " MHz is within " << kMinPoleDistanceMhz << " MHz of zero";
      throw ModelError(msg.str());
    }
  }

  r.xi2 = 2.0 * m.g12 * m.g12 * (a1 + a2) / ((d12 + a1) * (d12 - a2));

  r.xi3 = 2.0 * m.g12 * m.g1c * m.g2c *
          ((1.0 / d1) * (2.0 / (d12 - a2) - 1.0 / d12) -
           (1.0 / d2) * (2.0 / (d12 + a2) - 1.0 / d12));

  const double gg = m.g1c * m.g2c;
  const double gg2 = gg * gg;
  const double inv_sum = 1.0 / d1 + 1.0 / d2;
  r.xi4 = 2.0 * gg2 / (d1 + d2 + kerr_gap) * inv_sum * inv_sum +
          gg2 / (d1 * d1) * (2.0 / (d12 - a2) - 1.0 / d12 - 1.0 / d2) -
          gg2 / (d2 * d2) * (2.0 / (d12 + a1) - 1.0 / d12 + 1.0 / d1);

  r.xi_pert = r.xi2 + r.xi3 + r.xi4;
  return r;
}

ZZReport zz_perturbative(const DeviceConfig& device, double omega_c,
                         double coupler_anharmonicity) {
  return zz_perturbative(three_body_model(device, omega_c, {}), coupler_anharmonicity);
}

double zz_exact(const ThreeBodyModel& model, const TruncationSpec& trunc) {
  validate_truncation(trunc, kMinLevelsForZZ);
  const LabeledSpectrum spectrum = label_spectrum(build_hamiltonian(model, trunc), trunc, 2);
  return spectrum.energy({1, 0, 1}) - spectrum.energy({1, 0, 0}) -
         spectrum.energy({0, 0, 1}) + spectrum.energy({0, 0, 0});
}

double zz_exact(const DeviceConfig& device, double omega_c, double coupler_anharmonicity,
                const TruncationSpec& trunc) {
  return zz_exact(
      three_body_model(device, omega_c, coupler_kerr_ladder(coupler_anharmonicity, trunc.levels_c)),
      trunc);
}

ZZReport zz_report(const DeviceConfig& device, double omega_c, double coupler_anharmonicity,
                   const TruncationSpec& trunc) {
  const ThreeBodyModel model =
      three_body_model(device, omega_c, coupler_kerr_ladder(coupler_anharmonicity, trunc.levels_c));
  ZZReport r = zz_perturbative(model, coupler_anharmonicity);
  r.xi_exact = zz_exact(model, trunc);
  return r;
}

}  // namespace qcs
