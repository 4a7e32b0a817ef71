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


#ifndef GHZW_TOOLS_COMMANDS_HPP_
#define GHZW_TOOLS_COMMANDS_HPP_

#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "csv.hpp"
#include "ghzw/ghzw.h"

namespace ghzw::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailed = 1;
inline constexpr int kExitUsage = 2;

// Bad or unsupported flag combination; maps to kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A library call failed.
class LibraryError : public std::runtime_error {
 public:
  LibraryError(ghzw_status status, const std::string& what)
      : std::runtime_error(what), status_(status) {}
  ghzw_status status() const { return status_; }

 private:
  ghzw_status status_;
};

enum class Method { Closed, Simulated, Both };

struct SweepSpec {
  ghzw_scenario scenario = GHZW_SCENARIO_CHANNEL;
  ghzw_environment env = GHZW_ENV_ZERO_TEMPERATURE;
  std::optional<ghzw_channel> channel;
  double gt_min = 0.0;
  double gt_max = 3.0;
  // Fixed time for theta sweeps.
  double gt = 0.5;
  // Fixed angle for gt sweeps; unset means average over the Bloch sphere.
  std::optional<double> theta_over_pi;
  int points = 61;
  Method method = Method::Closed;
  int quadrature_nodes = 32;
};

struct ValidateSpec {
  std::map<std::string, double> tolerance_overrides;
  bool inject_ghz_correction_fault = false;
};

// Columns gt, then f_av_closed and/or f_av_quadrature. With theta_over_pi
// set the columns are gt, f_closed and/or f_sim at that angle.
CsvTable sweep_time(const SweepSpec& spec, std::ostream& notices);

// Columns theta_over_pi, then f (input scenario) or f_ghz, f_w. Method both
// splits each into _closed and _sim columns.
CsvTable sweep_theta(const SweepSpec& spec, std::ostream& notices);

// One row per (scenario, channel, environment) with a closed-form oracle.
CsvTable critical_times();

// Writes one line per check and a summary. Returns the process exit code.
int validate(const ValidateSpec& spec, std::ostream& report);

// Parses "name=value" with a locale-independent number parser.
std::pair<std::string, double> parse_tolerance(const std::string& text);

}  // namespace ghzw::cli

#endif  // GHZW_TOOLS_COMMANDS_HPP_
