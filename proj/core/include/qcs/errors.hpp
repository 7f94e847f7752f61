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

#include <stdexcept>
#include <string>
#include <utility>

namespace qcs {

/// Inputs outside the regime where the circuit model is valid
/// (diverging inductance, missing root bracket, pole proximity, ...).
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter violates a documented invariant. `field()` is a dotted path
/// such as "caps.c12".
class InvariantError : public std::invalid_argument {
 public:
  InvariantError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Dressed-state labeling failed (overlap below 1/2 or non-injective map).
class LabelingError : public ModelError {
 public:
  using ModelError::ModelError;
};

}  // namespace qcs
