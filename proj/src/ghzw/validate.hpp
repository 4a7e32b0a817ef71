// Copyright 2026 The ghzw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GHZW_VALIDATE_HPP_
#define GHZW_VALIDATE_HPP_

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "ghzw/teleport.hpp"

namespace ghzw {

struct CheckResult {
  std::string name;
  bool passed;
  double measured;
  double tolerance;
  std::string detail;
};

struct ValidationOptions {
  /// Keyed by check-name prefix; the longest matching prefix wins.
  std::map<std::string, double> tolerance_overrides;
  GhzCircuitFault ghz_fault = GhzCircuitFault::None;
};

struct ValidationSummary {
  int passed = 0;
  int failed = 0;
  std::optional<std::string> first_failure;

  bool ok() const { return failed == 0; }
};

using CheckSink = std::function<void(const CheckResult&)>;

/// Runs the self-consistency suite: noiseless teleportation, integrator
/// against exact channel solutions, closed-form against simulated
/// fidelities, quadrature against closed-form averages, critical times,
/// monotonicity switches, crossovers and the property checks. Each result is
/// reported to `sink` as soon as it is known.
ValidationSummary run_validation(const ValidationOptions& options, const CheckSink& sink);

}  // namespace ghzw

#endif  // GHZW_VALIDATE_HPP_
