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

#include <filesystem>
#include <stdexcept>
#include <string>

#include "qcs/circuit_model.hpp"

namespace qcs {

/// Malformed or invalid device configuration. `field()` is the dotted path
/// of the offending key when one applies; parse errors carry line/column.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& what, int line = 0, int column = 0);

  const std::string& field() const noexcept { return field_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  std::string field_;
  int line_;
  int column_;
};

/// Parses a device document. Frequencies and Josephson energies are given
/// as ordinary frequencies in GHz; a qubit carries either "ej" or "omega".
/// Unknown keys are rejected.
DeviceConfig parse_device_config(const std::string& text);

DeviceConfig load_config(const std::filesystem::path& path);

/// Canonical JSON (two-space indent, qubits written with "ej").
std::string device_to_json(const DeviceConfig& device);

/// 64-bit FNV-1a of the compact canonical JSON, as 16 hex digits.
std::string device_hash(const DeviceConfig& device);

}  // namespace qcs
