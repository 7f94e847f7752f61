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

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace qcs {

/// Empty cell, floating value, integer value or text.
using Cell = std::variant<std::monostate, double, std::int64_t, std::string>;

struct Axis {
  std::string name;
  std::vector<double> values;
};

struct Column {
  std::string name;
  std::vector<Cell> cells;
};

struct SweepMetadata {
  std::string device_hash;
  std::string tool_version;
  std::string timestamp;
};

/// Tabular sweep output. Rows enumerate the axes in row-major order (first
/// axis slowest); every column, including the coordinate columns, has one
/// cell per row.
struct SweepResult {
  std::vector<Axis> axes;
  std::vector<Column> columns;
  SweepMetadata metadata;

  std::size_t rows() const;
  /// Throws std::logic_error when a column length mismatches the axis grid.
  void check_shape() const;
  Column& column(const std::string& name);
  const Column& column(const std::string& name) const;
};

}  // namespace qcs
