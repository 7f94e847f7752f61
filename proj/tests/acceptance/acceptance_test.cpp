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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <sys/wait.h>

#include "fixtures.hpp"
#include "oracles/linalg.hpp"
#include "qcs/coupling.hpp"
#include "qcs/crosstalk.hpp"
#include "qcs/dynamics.hpp"
#include "qcs/resonator_modes.hpp"
#include "qcs/sweep.hpp"

namespace {

using fixture::ghz;
using fixture::to_ghz;
using fixture::to_khz;
using fixture::to_mhz;

struct Outcome {
  bool passed = true;
  std::string detail;
};

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

Outcome bare_resonator() {
  Timer timer;
  const auto dev = fixture::resonator_device(0.02, 0.1, 0.1);
  const auto modes = qcs::solve_dispersion(dev, {0.0, 0.0}, 3);
  const double f = to_ghz(modes[0].omega);
  const double t = timer.seconds();
  return {std::abs(f - 6.0) <= 0.06 && t < 1.0, fmt("f1 = %.6f GHz, %.3f s", f, t)};
}

Outcome direct_coupling() {
  const double g = to_mhz(qcs::direct_coupling(fixture::coupler_device()));
  return {std::abs(g - 1.3) <= 0.026, fmt("g12/2pi = %.6f MHz", g)};
}

Outcome flux_tuning() {
  Timer timer;
  const int points = 100;
  std::vector<std::vector<double>> curves;
  bool monotone = true;
  for (double d : {0.0, 0.1, 0.2}) {
    const auto dev = fixture::resonator_device(0.02, 0.1, d);
    std::vector<double> curve;
    for (int i = 0; i < points; ++i) {
      curve.push_back(qcs::fundamental_frequency(dev, {0.45 * i / (points - 1), 0.0}));
      if (i > 0 && !(curve[i] < curve[i - 1])) monotone = false;
    }
    curves.push_back(curve);
  }
  // Non-strict ordering; equal curves may differ by rounding only.
  bool ordered = true;
  double max_gap = 0.0;
  for (int i = 0; i < points; ++i) {
    const double tol = 1e-12 * curves[0][i];
    if (curves[1][i] > curves[0][i] + tol || curves[2][i] > curves[1][i] + tol) ordered = false;
    max_gap = std::max(max_gap, std::abs(curves[2][i] - curves[0][i]) / curves[0][i]);
  }
  const double t = timer.seconds();
  return {monotone && ordered && t < 5.0,
          fmt("monotone=%g ordered=%g max |f(d=0.2)-f(d=0)|/f = %.2e", monotone, ordered, max_gap) +
              fmt(", %.3f s", t)};
}

Outcome analytic_estimate() {
  const auto dev = fixture::resonator_device(0.02, 0.1, 0.1);
  double worst = 0.0, at = 0.0;
  for (int i = 0; i <= 400; ++i) {
    const qcs::SquidState s{0.001 * i, 0.0};
    const double exact = qcs::fundamental_frequency(dev, s);
    const double dev_rel = std::abs(qcs::fundamental_approx(dev, s) - exact) / exact;
    if (dev_rel > worst) {
      worst = dev_rel;
      at = s.flux;
    }
  }
  return {worst <= 0.02, fmt("max deviation %.4f%% at flux %.3f", 100.0 * worst, at)};
}

std::vector<double> zz_band() {
  std::vector<double> band;
  for (int i = 0; i <= 50; ++i) band.push_back(4.3 + 0.01 * i);
  return band;
}

Outcome zz_hierarchy() {
  Timer timer;
  const auto dev = fixture::coupler_device(0.06);
  const auto weak = fixture::coupler_device(0.03);
  const double eta = ghz(-0.05);
  bool hierarchy = true, bounded = true, suppressed = true;
  double worst = 0.0;
  for (double f : zz_band()) {
    const auto r = qcs::zz_report(dev, ghz(f), eta);
    const auto w = qcs::zz_report(weak, ghz(f), eta);
    if (!(std::abs(r.xi2) > std::abs(r.xi3) && std::abs(r.xi3) > std::abs(r.xi4))) hierarchy = false;
    for (double x : {r.xi_pert, *r.xi_exact}) {
      worst = std::max(worst, std::abs(to_khz(x)));
      if (std::abs(to_khz(x)) > 50.0) bounded = false;
    }
    if (!(std::abs(w.xi_pert) < std::abs(r.xi_pert) && std::abs(*w.xi_exact) < std::abs(*r.xi_exact)))
      suppressed = false;
  }
  const double t = timer.seconds();
  return {hierarchy && bounded && suppressed && t < 30.0,
          fmt("hierarchy=%g bounded=%g suppressed=%g", hierarchy, bounded, suppressed) +
              fmt(", max |xi| %.3f kHz, %.3f s", worst, t)};
}

Outcome zz_oracle() {
  const auto dev = fixture::coupler_device();
  const double eta = ghz(-0.05);
  bool agree = true, converged = true;
  double worst_gap = 0.0, worst_trunc = 0.0;
  for (double f : zz_band()) {
    const double pert = qcs::zz_perturbative(dev, ghz(f), eta).xi_pert;
    const double x4 = qcs::zz_exact(dev, ghz(f), eta, {4, 4, 4});
    const double x5 = qcs::zz_exact(dev, ghz(f), eta, {5, 5, 5});
    const double gap = std::abs(x4 - pert);
    if (gap > std::max(0.25 * std::abs(x4), ghz(1e-6))) agree = false;
    worst_gap = std::max(worst_gap, gap / std::abs(x4));
    worst_trunc = std::max(worst_trunc, std::abs(to_khz(x4 - x5)));
    if (std::abs(to_khz(x4 - x5)) > 0.1) converged = false;
  }
  return {agree && converged,
          fmt("max |exact-pert|/|exact| = %.3f, max |xi(4^3)-xi(5^3)| = %.2e kHz", worst_gap, worst_trunc)};
}

Outcome dynamics() {
  std::mt19937_64 rng(20261014);
  std::uniform_real_distribution<double> g_dist(0.001, 0.1), det_dist(-1.0, 1.0), t_dist(0.0, 400.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double g = g_dist(rng), det = det_dist(rng), t = t_dist(rng);
    const auto u = oracle::propagator({{det, g}, {g, 0.0}}, t);
    const double ref = std::norm(u[1][0]);
    worst = std::max(worst, std::abs(qcs::rabi_transfer_probability(g, det, t) - ref));
  }

  const auto dev = fixture::coupler_device();
  const double idle = qcs::switch_off(dev).omega_off;
  std::vector<double> amps;
  for (double f : qcs::AxisSpec{3.9, 4.1, 41}.values()) amps.push_back(ghz(f));
  std::vector<int> ncz;
  for (int n = 1; n <= 40; ++n) ncz.push_back(n);
  double drift = 0.0;
  for (auto channel : {qcs::LeakageChannel::kSingle, qcs::LeakageChannel::kDouble}) {
    for (double gap : {0.0, 5.0}) {
      const auto r = qcs::leakage_sweep(dev, idle, amps, ncz, channel, {40.0, gap});
      const auto& a = r.column("p_comp").cells;
      const auto& b = r.column("p_leak").cells;
      for (std::size_t k = 0; k < r.rows(); ++k)
        drift = std::max(drift, std::abs(std::get<double>(a[k]) + std::get<double>(b[k]) - 1.0));
    }
  }

  const double w1 = qcs::qubit_spectrum(dev.qubit1).omega;
  const double g = qcs::qubit_coupler_coupling(dev, qcs::Qubit::kFirst, w1);
  const double half_cycle = fixture::kPi / (2.0 * g);
  double revival = 0.0;
  for (int n : {2, 4, 8, 20, 40}) {
    const auto p = qcs::run_pulse_train(dev, w1, {w1, half_cycle, n}, qcs::LeakageChannel::kSingle);
    revival = std::max(revival, std::abs(p.p1 - 1.0));
  }
  return {worst <= 1e-9 && drift <= 1e-9 && revival <= 1e-9,
          fmt("rabi %.2e, conservation %.2e, revival %.2e", worst, drift, revival)};
}

Outcome switch_off() {
  const auto dev = fixture::coupler_device();
  const auto r = qcs::switch_off(dev);
  double round_trip = 0.0;
  for (double flux : {0.0, 0.05, 0.15, 0.25, 0.35, 0.45, 0.49}) {
    const double w = qcs::fundamental_frequency(dev, {flux, 0.0});
    round_trip = std::max(round_trip, std::abs(qcs::flux_for_frequency(dev, w) - flux));
  }
  if (r.flux_off) {
    const double w = qcs::fundamental_frequency(dev, {*r.flux_off, 0.0});
    round_trip = std::max(round_trip, std::abs(qcs::flux_for_frequency(dev, w) - *r.flux_off));
  }
  auto swapped = dev;
  std::swap(swapped.qubit1, swapped.qubit2);
  std::swap(swapped.caps.c1c, swapped.caps.c2c);
  const double sym = std::abs(qcs::switch_off(swapped).omega_off / r.omega_off - 1.0);
  const double residual = to_khz(r.residual);
  return {residual <= 1.0 && round_trip <= 1e-6 && sym <= 1e-9,
          fmt("omega_off/2pi %.6f GHz, residual %.2e kHz", to_ghz(r.omega_off), residual) +
              fmt(", round trip %.2e, relabel %.2e", round_trip, sym)};
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(QCS_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Sidecars carry a wall-clock timestamp; everything else must match.
std::string strip_timestamp(const std::string& text) {
  std::string out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (line.find("\"timestamp\"") == std::string::npos) out += line + "\n";
  }
  return out;
}

Outcome determinism() {
  const auto root = std::filesystem::temp_directory_path() / "qcs_acceptance_determinism";
  std::filesystem::remove_all(root);
  const std::string config = fixture::source_path("configs/reference_device.json");
  for (const char* run : {"a", "b"}) {
    if (run_cli("all --config " + config + " --out " + (root / run).string()) != 0)
      return {false, "CLI run failed"};
  }
  int compared = 0;
  std::string mismatch;
  for (const auto& entry : std::filesystem::directory_iterator(root / "a")) {
    const auto name = entry.path().filename();
    if (name.string().find(".manifest.") != std::string::npos) continue;
    std::string a = slurp(entry.path()), b = slurp(root / "b" / name);
    if (name.extension() == ".json") {
      a = strip_timestamp(a);
      b = strip_timestamp(b);
    }
    ++compared;
    if (a != b) mismatch += " " + name.string();
  }
  std::filesystem::remove_all(root);
  return {mismatch.empty() && compared >= 8,
          std::to_string(compared) + " files compared" + (mismatch.empty() ? "" : ", differ:" + mismatch)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"1 bare-resonator calibration", bare_resonator},
      {"2 direct-coupling reproduction", direct_coupling},
      {"3 flux-tuning property", flux_tuning},
      {"4 approximation consistency", analytic_estimate},
      {"5 ZZ hierarchy and magnitude", zz_hierarchy},
      {"6 perturbation vs oracle", zz_oracle},
      {"7 dynamics equivalence", dynamics},
      {"8 switch-off contract", switch_off},
      {"9 determinism", determinism},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s  %s  (%s)\n", o.passed ? "PASS" : "FAIL", name, o.detail.c_str());
    if (!o.passed) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
