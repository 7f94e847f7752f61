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

#include "qcs/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "qcs/config.hpp"
#include "qcs/coupling.hpp"
#include "qcs/resonator_modes.hpp"
#include "qcs/units.hpp"

#ifndef QCS_VERSION
#define QCS_VERSION "0.0.0"
#endif

namespace qcs {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// SweepResult

std::size_t SweepResult::rows() const {
  std::size_t n = 1;
  for (const Axis& axis : axes) n *= axis.values.size();
  return axes.empty() ? 0 : n;
}

void SweepResult::check_shape() const {
  const std::size_t n = rows();
  for (const Column& c : columns) {
    if (c.cells.size() != n) {
      throw std::logic_error("column '" + c.name + "' has " + std::to_string(c.cells.size()) +
                             " cells, expected " + std::to_string(n));
    }
  }
}

Column& SweepResult::column(const std::string& name) {
  for (Column& c : columns) {
    if (c.name == name) return c;
  }
  throw std::out_of_range("no column named '" + name + "'");
}

const Column& SweepResult::column(const std::string& name) const {
  return const_cast<SweepResult*>(this)->column(name);
}

// ---------------------------------------------------------------------------
// Axes and formatting

AxisSpec AxisSpec::parse(std::string_view text) {
  const std::string s(text);
  const auto first = s.find(':');
  const auto second = first == std::string::npos ? first : s.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos ||
      s.find(':', second + 1) != std::string::npos) {
    throw std::invalid_argument("axis '" + s + "' must have the form start:stop:count");
  }
  AxisSpec axis;
  try {
    std::size_t used = 0;
    const std::string a = s.substr(0, first);
    const std::string b = s.substr(first + 1, second - first - 1);
    const std::string c = s.substr(second + 1);
    axis.start = std::stod(a, &used);
    if (used != a.size()) throw std::invalid_argument(a);
    axis.stop = std::stod(b, &used);
    if (used != b.size()) throw std::invalid_argument(b);
    axis.count = std::stoi(c, &used);
    if (used != c.size()) throw std::invalid_argument(c);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("axis '" + s + "' has a malformed number");
  }
  if (!std::isfinite(axis.start) || !std::isfinite(axis.stop)) {
    throw std::invalid_argument("axis '" + s + "' endpoints must be finite");
  }
  if (axis.count < 2) {
    throw std::invalid_argument("axis '" + s + "' needs count >= 2");
  }
  return axis;
}

std::vector<double> AxisSpec::values() const {
  if (count < 2) throw std::invalid_argument("axis count must be >= 2");
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] =
        i == count - 1 ? stop : start + (stop - start) * static_cast<double>(i) / (count - 1);
  }
  return out;
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";
  char buffer[64];
  const double magnitude = std::abs(value);
  if (magnitude < 1e-4 || magnitude >= 1e7) {
    std::snprintf(buffer, sizeof buffer, "%.8e", value);
  } else {
    std::snprintf(buffer, sizeof buffer, "%.9g", value);
  }
  return buffer;
}

namespace {

std::string csv_escape(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

struct CellCsv {
  std::string operator()(std::monostate) const { return ""; }
  std::string operator()(double v) const { return format_number(v); }
  std::string operator()(std::int64_t v) const { return std::to_string(v); }
  std::string operator()(const std::string& v) const { return csv_escape(v); }
};

struct CellJson {
  ordered_json operator()(std::monostate) const { return nullptr; }
  ordered_json operator()(double v) const { return v; }
  ordered_json operator()(std::int64_t v) const { return v; }
  ordered_json operator()(const std::string& v) const { return v; }
};

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

}  // namespace

std::string to_csv(const SweepResult& result) {
  result.check_shape();
  std::string out;
  for (std::size_t i = 0; i < result.columns.size(); ++i) {
    if (i) out += ',';
    out += result.columns[i].name;
  }
  out += '\n';
  const std::size_t n = result.rows();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i < result.columns.size(); ++i) {
      if (i) out += ',';
      out += std::visit(CellCsv{}, result.columns[i].cells[r]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json_sidecar(const SweepResult& result) {
  result.check_shape();
  ordered_json doc;
  doc["metadata"] = {{"device_hash", result.metadata.device_hash},
                     {"tool_version", result.metadata.tool_version},
                     {"timestamp", result.metadata.timestamp}};
  ordered_json axes = ordered_json::array();
  for (const Axis& axis : result.axes) {
    axes.push_back({{"name", axis.name}, {"values", axis.values}});
  }
  doc["axes"] = axes;
  ordered_json columns = ordered_json::object();
  for (const Column& c : result.columns) {
    ordered_json cells = ordered_json::array();
    for (const Cell& cell : c.cells) cells.push_back(std::visit(CellJson{}, cell));
    columns[c.name] = cells;
  }
  doc["columns"] = columns;
  return doc.dump(2) + "\n";
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write to '" + tmp.string() + "' failed");
  }
  std::filesystem::rename(tmp, path);
}

// ---------------------------------------------------------------------------
// Worker pool

std::size_t worker_count() {
  if (const char* env = std::getenv("QCS_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<std::size_t>(n);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min(worker_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run);
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

// ---------------------------------------------------------------------------
// Sweeps

const char* sweep_name(SweepKind kind) {
  switch (kind) {
    case SweepKind::kModes: return "modes";
    case SweepKind::kCoupling: return "coupling";
    case SweepKind::kZZ: return "zz";
    case SweepKind::kLeakage: return "leakage";
  }
  return "unknown";
}

namespace {

// Per-point numeric rows; an error leaves the values empty.
struct PointRow {
  std::vector<double> values;
  std::string error;
};

SweepResult assemble(std::vector<Axis> axes, const std::vector<std::string>& coord_names,
                     const std::vector<std::vector<Cell>>& coords,
                     const std::vector<std::string>& value_names,
                     const std::vector<PointRow>& rows) {
  SweepResult out;
  out.axes = std::move(axes);
  bool any_error = false;
  for (const PointRow& row : rows) any_error = any_error || !row.error.empty();
  for (std::size_t c = 0; c < coord_names.size(); ++c) {
    out.columns.push_back({coord_names[c], coords[c]});
  }
  for (std::size_t v = 0; v < value_names.size(); ++v) {
    Column col{value_names[v], {}};
    col.cells.reserve(rows.size());
    for (const PointRow& row : rows) {
      if (row.error.empty()) {
        col.cells.emplace_back(row.values[v]);
      } else {
        col.cells.emplace_back(std::monostate{});
      }
    }
    out.columns.push_back(std::move(col));
  }
  if (any_error) {
    Column col{"error", {}};
    for (const PointRow& row : rows) col.cells.emplace_back(row.error);
    out.columns.push_back(std::move(col));
  }
  out.check_shape();
  return out;
}

}  // namespace

DeviceConfig apply_overrides(DeviceConfig device, const ModesOptions& options) {
  if (options.asymmetry) {
    const double d = *options.asymmetry;
    if (!(d > -1.0 && d < 1.0)) throw std::invalid_argument("asymmetry must lie in (-1, 1)");
    const double total = device.squid.total_ej();
    device.squid.ej1 = 0.5 * total * (1.0 + d);
    device.squid.ej2 = 0.5 * total * (1.0 - d);
  }
  if (options.c0) {
    const double ratio = device.squid.cs / device.line.total_capacitance();
    device.line.c0 = *options.c0;
    if (options.hold_capacitance_ratio) device.squid.cs = ratio * device.line.total_capacitance();
  }
  return device;
}

SweepResult sweep_modes(const DeviceConfig& base, const ModesOptions& options) {
  if (options.n_modes < 1) throw std::invalid_argument("n_modes must be >= 1");
  const DeviceConfig device = apply_overrides(base, options);
  const std::vector<double> flux = options.flux.values();
  const auto n_modes = static_cast<std::size_t>(options.n_modes);
  const double e_lcav = line_inductive_energy(device.line);

  std::vector<PointRow> rows(flux.size() * n_modes);
  parallel_for(flux.size(), [&](std::size_t i) {
    try {
      const auto modes = solve_dispersion(device, SquidState{flux[i], options.phi_s}, n_modes);
      for (std::size_t m = 0; m < n_modes; ++m) {
        const ModeSolution& mode = modes[m];
        rows[i * n_modes + m].values = {mode.kl, units::angular_to_ghz(mode.omega), mode.lambda,
                                        units::angular_to_mhz(mode_anharmonicity(mode, e_lcav))};
      }
    } catch (const std::exception& e) {
      for (std::size_t m = 0; m < n_modes; ++m) rows[i * n_modes + m].error = e.what();
    }
  });

  std::vector<std::vector<Cell>> coords(2);
  std::vector<double> mode_axis;
  for (std::size_t m = 0; m < n_modes; ++m) mode_axis.push_back(static_cast<double>(m + 1));
  for (double f : flux) {
    for (std::size_t m = 0; m < n_modes; ++m) {
      coords[0].emplace_back(f);
      coords[1].emplace_back(static_cast<std::int64_t>(m + 1));
    }
  }
  return assemble({{"flux", flux}, {"mode", mode_axis}}, {"flux", "mode"}, coords,
                  {"kl", "freq_ghz", "lambda", "anharm_mhz"}, rows);
}

SweepResult sweep_coupling(const DeviceConfig& device, const CouplingOptions& options) {
  const std::vector<double> grid = options.omega_c_ghz.values();
  std::vector<PointRow> rows(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    try {
      const CouplingReport r = effective_coupling(device, units::ghz_to_angular(grid[i]));
      rows[i].values = {units::angular_to_mhz(r.g12), units::angular_to_mhz(r.g1c),
                        units::angular_to_mhz(r.g2c), units::angular_to_mhz(r.g_eff)};
    } catch (const std::exception& e) {
      rows[i].error = e.what();
    }
  });
  std::vector<std::vector<Cell>> coords(1);
  for (double w : grid) coords[0].emplace_back(w);
  return assemble({{"omega_c_ghz", grid}}, {"omega_c_ghz"}, coords,
                  {"g12_mhz", "g1c_mhz", "g2c_mhz", "geff_mhz"}, rows);
}

SweepResult sweep_zz(const DeviceConfig& device, const ZZOptions& options) {
  const std::vector<double> grid = options.omega_c_ghz.values();
  const double eta = units::mhz_to_angular(options.coupler_anharmonicity_mhz);
  std::vector<PointRow> rows(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    try {
      const ZZReport r =
          zz_report(device, units::ghz_to_angular(grid[i]), eta, options.truncation);
      rows[i].values = {units::angular_to_khz(r.xi2), units::angular_to_khz(r.xi3),
                        units::angular_to_khz(r.xi4), units::angular_to_khz(r.xi_pert),
                        units::angular_to_khz(*r.xi_exact)};
    } catch (const std::exception& e) {
      rows[i].error = e.what();
    }
  });
  std::vector<std::vector<Cell>> coords(1);
  for (double w : grid) coords[0].emplace_back(w);
  return assemble({{"omega_c_ghz", grid}}, {"omega_c_ghz"}, coords,
                  {"xi2_khz", "xi3_khz", "xi4_khz", "xi_pert_khz", "xi_exact_khz"}, rows);
}

SweepResult sweep_leakage(const DeviceConfig& device, const LeakageSweepOptions& options) {
  std::vector<double> amplitudes;
  for (double a : options.amplitude_ghz.values()) amplitudes.push_back(units::ghz_to_angular(a));
  std::vector<int> counts;
  for (double n : options.n_cz.values()) {
    const double rounded = std::round(n);
    if (std::abs(n - rounded) > 1e-9 || rounded < 1.0) {
      throw std::invalid_argument("n_cz axis must contain positive integers only");
    }
    counts.push_back(static_cast<int>(rounded));
  }
  const double idle = options.idle_omega_c_ghz
                          ? units::ghz_to_angular(*options.idle_omega_c_ghz)
                          : switch_off(device).omega_off;
  return leakage_sweep(device, idle, amplitudes, counts, options.channel, options.pulse);
}

std::string tool_version() { return QCS_VERSION; }

SweepResult run_sweep(const DeviceConfig& device, const SweepRequest& request) {
  SweepResult result;
  switch (request.kind) {
    case SweepKind::kModes: result = sweep_modes(device, request.modes); break;
    case SweepKind::kCoupling: result = sweep_coupling(device, request.coupling); break;
    case SweepKind::kZZ: result = sweep_zz(device, request.zz); break;
    case SweepKind::kLeakage: result = sweep_leakage(device, request.leakage); break;
  }
  result.metadata = {device_hash(device), tool_version(), utc_timestamp()};
  return result;
}

std::vector<std::filesystem::path> write_sweep(const SweepResult& result,
                                               const std::filesystem::path& out_dir,
                                               const std::string& stem) {
  const std::filesystem::path csv = out_dir / (stem + ".csv");
  const std::filesystem::path sidecar = out_dir / (stem + ".json");
  write_file_atomic(csv, to_csv(result));
  write_file_atomic(sidecar, to_json_sidecar(result));
  return {csv, sidecar};
}

std::string switch_off_json(const DeviceConfig& device, double phi_s) {
  const SwitchOffResult r = switch_off(device, phi_s);
  ordered_json doc;
  doc["omega_off_ghz"] = units::angular_to_ghz(r.omega_off);
  doc["flux_off"] = r.flux_off ? ordered_json(*r.flux_off) : ordered_json(nullptr);
  doc["residual_khz"] = units::angular_to_khz(r.residual);
  doc["dispersive_guard"] = r.dispersive_guard;
  return doc.dump() + "\n";
}

std::string manifest_json(const RunManifest& m) {
  ordered_json flags = ordered_json::object();
  for (const auto& [key, value] : m.flags) flags[key] = value;
  ordered_json doc;
  doc["config_path"] = m.config_path;
  doc["subcommand"] = m.subcommand;
  doc["flags"] = flags;
  doc["outputs"] = m.outputs;
  doc["wall_seconds"] = m.wall_seconds;
  doc["tool_version"] = tool_version();
  return doc.dump(2) + "\n";
}

}  // namespace qcs
