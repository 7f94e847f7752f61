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

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcs/circuit_model.hpp"
#include "qcs/crosstalk.hpp"
#include "qcs/dynamics.hpp"
#include "qcs/sweep_result.hpp"

namespace qcs {

/// Linear grid `start:stop:count`, count >= 2, endpoints included.
struct AxisSpec {
  double start = 0.0;
  double stop = 0.0;
  int count = 2;

  static AxisSpec parse(std::string_view text);
  std::vector<double> values() const;
};

/// Nine significant digits; lowercase scientific below 1e-4 or from 1e7 up.
std::string format_number(double value);

std::string to_csv(const SweepResult& result);
std::string to_json_sidecar(const SweepResult& result);

/// Writes through a temporary sibling and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

/// Worker count: QCS_THREADS if set and positive, else hardware concurrency.
std::size_t worker_count();

/// Runs body(i) for i in [0, n) on up to worker_count() threads. The first
/// exception thrown by any task is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

enum class SweepKind { kModes, kCoupling, kZZ, kLeakage };

const char* sweep_name(SweepKind kind);

struct ModesOptions {
  AxisSpec flux{0.0, 0.45, 46};
  int n_modes = 3;
  double phi_s = 0.0;
  /// Replaces the SQUID asymmetry at fixed E_J1 + E_J2.
  std::optional<double> asymmetry;
  /// Replaces the line capacitance per unit length (nF/m).
  std::optional<double> c0;
  /// With `c0`, rescale the SQUID capacitance so r_C stays fixed.
  bool hold_capacitance_ratio = false;
};

/// Device with the asymmetry / line-capacitance overrides of `options`.
DeviceConfig apply_overrides(DeviceConfig device, const ModesOptions& options);

struct CouplingOptions {
  AxisSpec omega_c_ghz{4.2, 6.0, 181};
};

inline constexpr double kDefaultCouplerAnharmonicityMhz = -50.0;

struct ZZOptions {
  AxisSpec omega_c_ghz{4.3, 4.8, 51};
  double coupler_anharmonicity_mhz = kDefaultCouplerAnharmonicityMhz;
  TruncationSpec truncation;
};

struct LeakageSweepOptions {
  AxisSpec amplitude_ghz{3.9, 4.1, 41};
  AxisSpec n_cz{1.0, 40.0, 40};
  LeakageChannel channel = LeakageChannel::kSingle;
  LeakageOptions pulse;
  /// Coupler frequency between gates in GHz; the switch-off point when unset.
  std::optional<double> idle_omega_c_ghz;
};

SweepResult sweep_modes(const DeviceConfig& device, const ModesOptions& options);
SweepResult sweep_coupling(const DeviceConfig& device, const CouplingOptions& options);
SweepResult sweep_zz(const DeviceConfig& device, const ZZOptions& options);
SweepResult sweep_leakage(const DeviceConfig& device, const LeakageSweepOptions& options);

struct SweepRequest {
  SweepKind kind = SweepKind::kModes;
  ModesOptions modes;
  CouplingOptions coupling;
  ZZOptions zz;
  LeakageSweepOptions leakage;
};

/// Dispatches to the matching sweep and fills the metadata block.
SweepResult run_sweep(const DeviceConfig& device, const SweepRequest& request);

/// Writes `<stem>.csv` and the `<stem>.json` sidecar; returns both paths.
std::vector<std::filesystem::path> write_sweep(const SweepResult& result,
                                               const std::filesystem::path& out_dir,
                                               const std::string& stem);

/// JSON object {omega_off_ghz, flux_off, residual_khz, dispersive_guard}.
std::string switch_off_json(const DeviceConfig& device, double phi_s = 0.0);

struct RunManifest {
  std::string config_path;
  std::string subcommand;
  std::vector<std::pair<std::string, std::string>> flags;
  std::vector<std::string> outputs;
  double wall_seconds = 0.0;
};

std::string manifest_json(const RunManifest& manifest);

std::string tool_version();

}  // namespace qcs
