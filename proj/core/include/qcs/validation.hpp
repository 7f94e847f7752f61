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

#include <string>
#include <vector>

#include "qcs/circuit_model.hpp"

namespace qcs {

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the model's invariant checks against `device` (parity and
/// periodicity of the SQUID closed forms, root bracketing, flux
/// monotonicity, coupling sign structure, Hamiltonian structure, truncation
/// convergence, propagator agreement). A check that throws is reported as
/// failed with the exception text.
std::vector<ValidationCheck> run_validation(const DeviceConfig& device);

bool all_passed(const std::vector<ValidationCheck>& checks);

}  // namespace qcs
