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

// qcs: flux-tunable resonator coupler simulator.
//
//   qcs modes     --config dev.json [--flux 0:0.45:46] [--modes 3]
//   qcs coupling  --config dev.json [--omega-c 4.2:6.0:181]
//   qcs switchoff --config dev.json
//   qcs zz        --config dev.json [--omega-c 4.3:4.8:51] [--c12 0.03]
//   qcs leakage   --config dev.json [--amp 3.9:4.1:41] [--ncz 1:40:40]
//   qcs validate  --config dev.json
//   qcs all       --config dev.json
//
// Exit codes: 0 success, 1 usage error, 2 invalid configuration or failed
// validation.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qcs/config.hpp"
#include "qcs/errors.hpp"
#include "qcs/sweep.hpp"
#include "qcs/validation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalid = 2;

struct CommonArgs {
  std::string config;
  std::string out = "./out";
  double phi_s = 0.0;
};

struct Args {
  CommonArgs common;
  // modes
  std::string flux = "0:0.45:46";
  int n_modes = 3;
  std::optional<double> asymmetry;
  std::optional<double> c0;
  bool hold_rc = false;
  // coupling / zz
  std::string coupling_grid = "4.2:6.0:181";
  std::string zz_grid = "4.3:4.8:51";
  std::optional<double> c12;
  double coupler_anharm_mhz = qcs::kDefaultCouplerAnharmonicityMhz;
  int levels = 4;
  // leakage
  std::string amp = "3.9:4.1:41";
  std::string ncz = "1:40:40";
  std::string channel = "single";
  double duration = qcs::kDefaultGateDuration;
  double idle_gap = 0.0;
  std::optional<double> idle_ghz;
};

void add_common(CLI::App* cmd, CommonArgs& common) {
  cmd->add_option("--config", common.config, "Device configuration JSON")->required();
  cmd->add_option("--out", common.out, "Output directory")->capture_default_str();
  cmd->add_option("--phi-s", common.phi_s, "SQUID boundary phase (rad)")->capture_default_str();
}

class Runner {
 public:
  Runner(const Args& args, std::string subcommand)
      : args_(args), subcommand_(std::move(subcommand)), start_(std::chrono::steady_clock::now()) {
    device_ = qcs::load_config(args.common.config);
    for (const std::string& w : qcs::regime_warnings(device_)) {
      std::cerr << "warning: " << w << "\n";
    }
  }

  qcs::DeviceConfig& device() { return device_; }
  std::filesystem::path out_dir() const { return args_.common.out; }

  void flag(std::string key, std::string value) {
    flags_.emplace_back(std::move(key), std::move(value));
  }

  void write_sweep(const qcs::SweepResult& result, const std::string& stem) {
    for (const auto& path : qcs::write_sweep(result, out_dir(), stem)) {
      outputs_.push_back(path.string());
      std::cout << "wrote " << path.string() << "\n";
    }
  }

  void write_text(const std::string& name, const std::string& content) {
    const auto path = out_dir() / name;
    qcs::write_file_atomic(path, content);
    outputs_.push_back(path.string());
  }

  void finish() {
    qcs::RunManifest m;
    m.config_path = args_.common.config;
    m.subcommand = subcommand_;
    m.flags = flags_;
    m.outputs = outputs_;
    m.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    qcs::write_file_atomic(out_dir() / (subcommand_ + ".manifest.json"), qcs::manifest_json(m));
  }

 private:
  const Args& args_;
  std::string subcommand_;
  std::chrono::steady_clock::time_point start_;
  qcs::DeviceConfig device_;
  std::vector<std::pair<std::string, std::string>> flags_;
  std::vector<std::string> outputs_;
};

void run_modes(Runner& run, const Args& args) {
  qcs::ModesOptions options;
  options.flux = qcs::AxisSpec::parse(args.flux);
  options.n_modes = args.n_modes;
  options.phi_s = args.common.phi_s;
  options.asymmetry = args.asymmetry;
  options.c0 = args.c0;
  options.hold_capacitance_ratio = args.hold_rc;
  run.flag("flux", args.flux);
  run.flag("modes", std::to_string(args.n_modes));
  qcs::SweepRequest request;
  request.kind = qcs::SweepKind::kModes;
  request.modes = options;
  run.write_sweep(qcs::run_sweep(run.device(), request), "modes");
}

void run_coupling(Runner& run, const Args& args) {
  qcs::SweepRequest request;
  request.kind = qcs::SweepKind::kCoupling;
  request.coupling.omega_c_ghz = qcs::AxisSpec::parse(args.coupling_grid);
  run.flag("omega-c", args.coupling_grid);
  run.write_sweep(qcs::run_sweep(run.device(), request), "coupling");
}

void run_switchoff(Runner& run, const Args& args) {
  const std::string json = qcs::switch_off_json(run.device(), args.common.phi_s);
  std::cout << json;
  run.write_text("switchoff.json", json);
}

void run_zz(Runner& run, const Args& args) {
  if (args.c12) {
    run.device().caps.c12 = *args.c12;
    qcs::validate(run.device());
    run.flag("c12", std::to_string(*args.c12));
  }
  qcs::SweepRequest request;
  request.kind = qcs::SweepKind::kZZ;
  request.zz.omega_c_ghz = qcs::AxisSpec::parse(args.zz_grid);
  request.zz.coupler_anharmonicity_mhz = args.coupler_anharm_mhz;
  request.zz.truncation = {args.levels, args.levels, args.levels};
  run.flag("omega-c", args.zz_grid);
  run.write_sweep(qcs::run_sweep(run.device(), request), "zz");
}

void run_leakage(Runner& run, const Args& args, const std::string& stem = "leakage") {
  qcs::SweepRequest request;
  request.kind = qcs::SweepKind::kLeakage;
  auto& o = request.leakage;
  o.amplitude_ghz = qcs::AxisSpec::parse(args.amp);
  o.n_cz = qcs::AxisSpec::parse(args.ncz);
  o.channel = qcs::parse_channel(args.channel);
  o.pulse.duration = args.duration;
  o.pulse.idle_gap = args.idle_gap;
  o.idle_omega_c_ghz = args.idle_ghz;
  run.flag("amp", args.amp);
  run.flag("ncz", args.ncz);
  run.flag("channel", args.channel);
  run.write_sweep(qcs::run_sweep(run.device(), request), stem);
}

int run_validate(Runner& run) {
  const auto checks = qcs::run_validation(run.device());
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
    std::cout << "\n";
    doc.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  run.write_text("validate.json", doc.dump(2) + "\n");
  return qcs::all_passed(checks) ? kExitOk : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flux-tunable resonator coupler simulator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", qcs::tool_version());
  Args args;

  auto* modes = app.add_subcommand("modes", "Resonator mode ladder over flux");
  add_common(modes, args.common);
  modes->add_option("--flux", args.flux, "Flux axis start:stop:count (flux quanta)")
      ->capture_default_str();
  modes->add_option("--modes", args.n_modes, "Number of modes")->capture_default_str();
  modes->add_option("--asymmetry", args.asymmetry, "Override SQUID asymmetry d");
  modes->add_option("--c0", args.c0, "Override line capacitance per length (nF/m)");
  modes->add_flag("--hold-rc", args.hold_rc, "With --c0, rescale C_s to keep r_C fixed");

  auto* coupling = app.add_subcommand("coupling", "Couplings over coupler frequency");
  add_common(coupling, args.common);
  coupling->add_option("--omega-c", args.coupling_grid, "Coupler axis in GHz")
      ->capture_default_str();

  auto* switchoff = app.add_subcommand("switchoff", "Switch-off operating point");
  add_common(switchoff, args.common);

  auto* zz = app.add_subcommand("zz", "Residual ZZ crosstalk");
  add_common(zz, args.common);
  zz->add_option("--omega-c", args.zz_grid, "Coupler axis in GHz")->capture_default_str();
  zz->add_option("--c12", args.c12, "Override qubit-qubit capacitance (fF)");
  zz->add_option("--coupler-anharm-mhz", args.coupler_anharm_mhz, "Coupler anharmonicity (MHz)")
      ->capture_default_str();
  zz->add_option("--levels", args.levels, "Levels per subsystem")->capture_default_str();

  auto* leakage = app.add_subcommand("leakage", "CZ leakage populations");
  add_common(leakage, args.common);
  leakage->add_option("--amp", args.amp, "Pulse amplitude axis (in-pulse coupler GHz)")
      ->capture_default_str();
  leakage->add_option("--ncz", args.ncz, "Gate-count axis")->capture_default_str();
  leakage->add_option("--channel", args.channel, "single | double")->capture_default_str();
  leakage->add_option("--duration", args.duration, "Gate duration (ns)")->capture_default_str();
  leakage->add_option("--idle-gap", args.idle_gap, "Idle time between gates (ns)")
      ->capture_default_str();
  leakage->add_option("--idle-ghz", args.idle_ghz, "Idle coupler frequency (GHz); default switch-off");

  auto* validate = app.add_subcommand("validate", "Run the invariant suite");
  add_common(validate, args.common);

  auto* all = app.add_subcommand("all", "Every data product with default axes");
  add_common(all, args.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  try {
    Runner run(args, name);
    int code = kExitOk;
    if (name == "modes") {
      run_modes(run, args);
    } else if (name == "coupling") {
      run_coupling(run, args);
    } else if (name == "switchoff") {
      run_switchoff(run, args);
    } else if (name == "zz") {
      run_zz(run, args);
    } else if (name == "leakage") {
      run_leakage(run, args);
    } else if (name == "validate") {
      code = run_validate(run);
    } else if (name == "all") {
      run_modes(run, args);
      run_coupling(run, args);
      run_switchoff(run, args);
      run_zz(run, args);
      Args single = args;
      single.channel = "single";
      run_leakage(run, single, "leakage_single");
      Args dbl = args;
      dbl.channel = "double";
      run_leakage(run, dbl, "leakage_double");
    }
    run.finish();
    return code;
  } catch (const qcs::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const qcs::InvariantError& e) {
    std::cerr << "invalid parameter: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}
