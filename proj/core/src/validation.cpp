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

#include "qcs/validation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "qcs/coupling.hpp"
#include "qcs/crosstalk.hpp"
#include "qcs/dynamics.hpp"
#include "qcs/resonator_modes.hpp"
#include "qcs/units.hpp"

namespace qcs {

namespace {

using units::ghz_to_angular;

std::vector<double> grid(double lo, double hi, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  return out;
}

std::string fmt(double value) {
  std::ostringstream out;
  out.precision(6);
  out << value;
  return out.str();
}

// Each body returns a detail string and signals failure by returning false.
using CheckBody = std::function<bool(std::string&)>;

void run_check(std::vector<ValidationCheck>& out, const std::string& name,
               const CheckBody& body) {
  ValidationCheck check{name, false, {}};
  try {
    check.passed = body(check.detail);
  } catch (const std::exception& e) {
    check.passed = false;
    check.detail = std::string("threw: ") + e.what();
  }
  out.push_back(std::move(check));
}

}  // namespace

bool all_passed(const std::vector<ValidationCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ValidationCheck& c) { return c.passed; });
}

std::vector<ValidationCheck> run_validation(const DeviceConfig& device) {
  std::vector<ValidationCheck> out;
  const double d = device.squid.asymmetry();
  const double ejt = device.squid.total_ej();

  run_check(out, "squid_parity", [&](std::string& detail) {
    double worst = 0.0;
    for (double f : grid(0.0, 0.49, 50)) {
      worst = std::max(worst, std::abs(squid_phase_offset(d, -f) + squid_phase_offset(d, f)));
      worst = std::max(worst, std::abs(squid_flux_factor(d, -f) - squid_flux_factor(d, f)));
    }
    detail = "max deviation " + fmt(worst);
    return worst <= 1e-14;
  });

  run_check(out, "squid_periodicity_and_extrema", [&](std::string& detail) {
    double worst = 0.0;
    for (double f : grid(-0.5, 0.5, 41)) {
      worst = std::max(worst, std::abs(squid_flux_factor(d, f + 1.0) - squid_flux_factor(d, f)));
    }
    const double at_half = ejt * squid_flux_factor(d, 0.5);
    const double at_zero = ejt * squid_flux_factor(d, 0.0);
    detail = "period deviation " + fmt(worst) + ", min/max factor " +
             fmt(at_half / ejt) + "/" + fmt(at_zero / ejt);
    return worst <= 1e-12 && std::abs(at_half - std::abs(d) * ejt) <= 1e-9 * ejt &&
           std::abs(at_zero - ejt) <= 1e-12 * ejt;
  });

  run_check(out, "squid_inductance_reciprocity", [&](std::string& detail) {
    const double flux_quantum = units::kFluxQuantum / units::kTwoPi;
    const double expected = flux_quantum * flux_quantum * 1e9;
    double worst = 0.0;
    for (double f : grid(0.0, 0.45, 10)) {
      const SquidState state{f, 0.0};
      const SquidDerived s = derive_squid(device.squid, state);
      const double product = s.l_sq * units::angular_to_joules(s.e_js * std::cos(-s.phi0));
      worst = std::max(worst, std::abs(product / expected - 1.0));
    }
    detail = "max relative deviation " + fmt(worst);
    return worst <= 1e-12;
  });

  run_check(out, "qubit_spectrum_monotone", [&](std::string& detail) {
    QubitParams q = device.qubit1;
    double previous = qubit_spectrum(q).omega;
    for (int i = 1; i <= 20; ++i) {
      q.ej *= 1.01;
      const double omega = qubit_spectrum(q).omega;
      if (!(omega > previous)) {
        detail = "non-increasing at step " + std::to_string(i);
        return false;
      }
      previous = omega;
    }
    return true;
  });

  run_check(out, "dispersion_root_bracketing", [&](std::string& detail) {
    const DerivedRatios ratios = derive_ratios(device);
    int checked = 0;
    for (double f : grid(0.0, 0.45, 10)) {
      const SquidState state{f, 0.0};
      const double weight = squid_inductive_factor(device.squid, state);
      for (const ModeSolution& mode : solve_dispersion(device, state, 3)) {
        const double centre = (mode.index - 1) * units::kPi;
        if (!(mode.kl > std::max(0.0, centre - 0.5 * units::kPi) &&
              mode.kl < centre + 0.5 * units::kPi)) {
          return false;
        }
        const double h = 1e-9;
        const double below = dispersion_residual(mode.kl - h, ratios.r_c, ratios.r_l, weight);
        const double above = dispersion_residual(mode.kl + h, ratios.r_c, ratios.r_l, weight);
        if (!(below < 0.0 && above > 0.0)) return false;
        ++checked;
      }
    }
    detail = std::to_string(checked) + " roots bracketed";
    return true;
  });

  run_check(out, "mode_flux_monotonicity", [&](std::string& detail) {
    double previous = fundamental_frequency(device, SquidState{0.0, 0.0});
    for (double f : grid(0.0, 0.45, 100)) {
      if (f == 0.0) continue;
      const double omega = fundamental_frequency(device, SquidState{f, 0.0});
      if (!(omega < previous)) {
        detail = "not decreasing at flux " + fmt(f);
        return false;
      }
      previous = omega;
    }
    return true;
  });

  run_check(out, "mode_ladder_non_equidistant", [&](std::string& detail) {
    const auto modes = solve_dispersion(device, SquidState{0.0, 0.0}, 3);
    const double gap1 = modes[1].omega - modes[0].omega;
    const double gap2 = modes[2].omega - modes[1].omega;
    detail = "gaps " + fmt(units::angular_to_ghz(gap1)) + ", " +
             fmt(units::angular_to_ghz(gap2)) + " GHz";
    return gap1 != gap2 && gap1 > ghz_to_angular(1.0) && gap2 > ghz_to_angular(1.0);
  });

  run_check(out, "analytic_mode_estimate", [&](std::string& detail) {
    double worst = 0.0;
    for (double f : grid(0.0, 0.4, 41)) {
      const SquidState state{f, 0.0};
      const double exact = fundamental_frequency(device, state);
      worst = std::max(worst, std::abs(fundamental_approx(device, state) / exact - 1.0));
    }
    detail = "max relative deviation " + fmt(worst);
    return worst <= 0.02;
  });

  const double q_lo = std::min(qubit_spectrum(device.qubit1).omega,
                               qubit_spectrum(device.qubit2).omega);
  const double q_hi = std::max(qubit_spectrum(device.qubit1).omega,
                               qubit_spectrum(device.qubit2).omega);

  run_check(out, "coupling_sign_structure", [&](std::string& detail) {
    const double margin = ghz_to_angular(0.05);
    for (double w : grid(q_lo - ghz_to_angular(1.5), q_lo - margin, 60)) {
      const CouplingReport r = effective_coupling(device, w);
      if (!(r.mediated_term > 0.0)) {
        detail = "mediated term not positive below the qubits";
        return false;
      }
    }
    double previous = -1e300;
    for (double w : grid(q_hi + margin, q_hi + ghz_to_angular(2.0), 60)) {
      const CouplingReport r = effective_coupling(device, w);
      if (!(r.mediated_term < 0.0)) {
        detail = "mediated term not negative above the qubits";
        return false;
      }
      if (!(r.g_eff > previous)) {
        detail = "g_eff not monotone above the qubits";
        return false;
      }
      previous = r.g_eff;
    }
    return true;
  });

  run_check(out, "dressing_direction", [&](std::string& detail) {
    int checked = 0;
    for (double w : grid(q_lo - ghz_to_angular(1.5), q_hi + ghz_to_angular(1.5), 121)) {
      const CouplingReport r = effective_coupling(device, w);
      if (r.guard1 < kDispersiveGuard) {
        if ((r.delta1 > 0.0) != (r.dressed1 > r.omega1)) return false;
        ++checked;
      }
      if (r.guard2 < kDispersiveGuard) {
        if ((r.delta2 > 0.0) != (r.dressed2 > r.omega2)) return false;
        ++checked;
      }
    }
    detail = std::to_string(checked) + " dispersive points";
    return true;
  });

  run_check(out, "switch_off_residual", [&](std::string& detail) {
    const SwitchOffResult r = switch_off(device);
    detail = "omega_off/2pi " + fmt(units::angular_to_ghz(r.omega_off)) + " GHz, residual " +
             fmt(units::angular_to_khz(r.residual)) + " kHz";
    return r.residual <= units::mhz_to_angular(1e-3);
  });

  const double omega_c = q_hi + ghz_to_angular(0.4);
  const double eta = units::mhz_to_angular(-50.0);

  run_check(out, "hamiltonian_structure", [&](std::string& detail) {
    const TruncationSpec trunc;
    const Eigen::MatrixXd h =
        build_hamiltonian(device, omega_c, coupler_kerr_ladder(eta, trunc.levels_c), trunc);
    if (h != h.transpose()) {
      detail = "not symmetric";
      return false;
    }
    for (Eigen::Index i = 0; i < h.rows(); ++i) {
      for (Eigen::Index j = 0; j < h.cols(); ++j) {
        if (h(i, j) != 0.0 &&
            basis_state(trunc, static_cast<std::size_t>(i)).excitations() !=
                basis_state(trunc, static_cast<std::size_t>(j)).excitations()) {
          detail = "element couples different excitation numbers";
          return false;
        }
      }
    }
    return true;
  });

  run_check(out, "zz_truncation_convergence", [&](std::string& detail) {
    const double xi4 = zz_exact(device, omega_c, eta, {4, 4, 4});
    const double xi5 = zz_exact(device, omega_c, eta, {5, 5, 5});
    detail = "|xi(4^3) - xi(5^3)|/2pi = " + fmt(units::angular_to_khz(std::abs(xi4 - xi5))) +
             " kHz";
    return std::abs(xi4 - xi5) <= units::mhz_to_angular(1e-4);
  });

  run_check(out, "zz_perturbative_vs_exact", [&](std::string& detail) {
    const ZZReport r = zz_report(device, omega_c, eta);
    const double diff = std::abs(*r.xi_exact - r.xi_pert);
    const double bound = std::max(0.25 * std::abs(*r.xi_exact), units::mhz_to_angular(1e-3));
    detail = "exact " + fmt(units::angular_to_khz(*r.xi_exact)) + " kHz, perturbative " +
             fmt(units::angular_to_khz(r.xi_pert)) + " kHz";
    return diff <= bound;
  });

  run_check(out, "rabi_closed_form", [&](std::string& detail) {
    std::mt19937_64 rng(20260101);
    std::uniform_real_distribution<double> coupling(0.0, ghz_to_angular(0.05));
    std::uniform_real_distribution<double> detuning(-ghz_to_angular(0.5), ghz_to_angular(0.5));
    std::uniform_real_distribution<double> time(0.0, 200.0);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const double g = coupling(rng);
      const double delta = detuning(rng);
      const double t = time(rng);
      const Populations p = evolve_two_level({delta, 0.0, g}, t);
      worst = std::max(worst, std::abs(p.p2 - rabi_transfer_probability(g, delta, t)));
      worst = std::max(worst, std::abs(p.p1 + p.p2 - 1.0));
    }
    detail = "max deviation " + fmt(worst);
    return worst <= 1e-9;
  });

  run_check(out, "leakage_unitarity", [&](std::string& detail) {
    std::vector<double> amps = grid(q_lo - ghz_to_angular(0.1), q_hi + ghz_to_angular(0.1), 21);
    std::vector<int> counts(20);
    for (int i = 0; i < 20; ++i) counts[static_cast<std::size_t>(i)] = i + 1;
    double worst = 0.0;
    for (LeakageChannel ch : {LeakageChannel::kSingle, LeakageChannel::kDouble}) {
      const SweepResult s = leakage_sweep(device, omega_c, amps, counts, ch);
      const Column& comp = s.column("p_comp");
      const Column& leak = s.column("p_leak");
      for (std::size_t r = 0; r < s.rows(); ++r) {
        worst = std::max(worst, std::abs(std::get<double>(comp.cells[r]) +
                                         std::get<double>(leak.cells[r]) - 1.0));
      }
    }
    detail = "max population drift " + fmt(worst);
    return worst <= 1e-9;
  });

  return out;
}

}  // namespace qcs
