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

#include <benchmark/benchmark.h>

#include <vector>

#include "qcs/coupling.hpp"
#include "qcs/crosstalk.hpp"
#include "qcs/dynamics.hpp"
#include "qcs/resonator_modes.hpp"
#include "qcs/units.hpp"

namespace {

qcs::DeviceConfig device() {
  using qcs::units::ghz_to_angular;
  qcs::DeviceConfig d;
  d.line = {4.87, 0.16, 0.44};
  const double ejt = qcs::line_inductive_energy(d.line) / 0.02;
  d.squid = {0.55 * ejt, 0.45 * ejt, 77.92};
  d.qubit1 = {100.0, qcs::qubit_ej_for_frequency(100.0, ghz_to_angular(4.0))};
  d.qubit2 = {90.0, qcs::qubit_ej_for_frequency(90.0, ghz_to_angular(4.1))};
  d.caps = {0.06, 1.0, 1.0, 780.0};
  return d;
}

void BM_SolveDispersion(benchmark::State& state) {
  const auto d = device();
  double flux = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcs::solve_dispersion(d, {flux, 0.0}, 3));
    flux = flux > 0.45 ? 0.0 : flux + 0.01;
  }
}
BENCHMARK(BM_SolveDispersion);

void BM_SwitchOff(benchmark::State& state) {
  const auto d = device();
  for (auto _ : state) benchmark::DoNotOptimize(qcs::switch_off(d));
}
BENCHMARK(BM_SwitchOff);

void BM_ZZExact(benchmark::State& state) {
  const auto d = device();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcs::zz_exact(d, qcs::units::ghz_to_angular(4.5),
                                           qcs::units::mhz_to_angular(-50.0), {n, n, n}));
  }
}
BENCHMARK(BM_ZZExact)->Arg(3)->Arg(4)->Arg(5);

void BM_LeakageSweep(benchmark::State& state) {
  const auto d = device();
  std::vector<double> amps;
  for (int i = 0; i < 41; ++i) amps.push_back(qcs::units::ghz_to_angular(3.9 + 0.005 * i));
  std::vector<int> ncz;
  for (int n = 1; n <= 40; ++n) ncz.push_back(n);
  const double idle = qcs::units::ghz_to_angular(4.126);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcs::leakage_sweep(d, idle, amps, ncz, qcs::LeakageChannel::kSingle));
  }
}
BENCHMARK(BM_LeakageSweep);

}  // namespace

BENCHMARK_MAIN();
