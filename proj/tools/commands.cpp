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


#include "commands.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <memory>
#include <numbers>
#include <vector>

namespace ghzw::cli {

namespace {

void call(ghzw_status status) {
  if (status != GHZW_OK) throw LibraryError(status, ghzw_last_error());
}

const char* name(ghzw_scenario s) {
  switch (s) {
    case GHZW_SCENARIO_INPUT:
      return "input";
    case GHZW_SCENARIO_CHANNEL:
      return "channel";
    case GHZW_SCENARIO_BOTH:
      return "both";
  }
  return "?";
}

const char* name(ghzw_environment e) {
  switch (e) {
    case GHZW_ENV_ZERO_TEMPERATURE:
      return "zero";
    case GHZW_ENV_INFINITE_TEMPERATURE:
      return "inf";
    case GHZW_ENV_DEPHASING:
      return "deph";
  }
  return "?";
}

const char* name(ghzw_channel c) {
  switch (c) {
    case GHZW_CHANNEL_GHZ:
      return "ghz";
    case GHZW_CHANNEL_W:
      return "w";
    case GHZW_CHANNEL_NONE:
      break;
  }
  return "-";
}

using SimulatorPtr = std::unique_ptr<ghzw_simulator, decltype(&ghzw_simulator_destroy)>;

SimulatorPtr make_simulator(const ghzw_config& config, double gt) {
  ghzw_simulator* sim = nullptr;
  call(ghzw_simulator_create(&config, gt, &sim));
  return {sim, &ghzw_simulator_destroy};
}

std::vector<double> grid(double lo, double hi, int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = lo + (hi - lo) * i / (n - 1);
  out.back() = hi;
  return out;
}

bool wants_closed(Method m) { return m != Method::Simulated; }
bool wants_sim(Method m) { return m != Method::Closed; }

void check_points(int points) {
  if (points < 2) throw UsageError("--points must be at least 2");
}

// Rejects combinations outside the modelled scope before any work is done.
void check_scope(const SweepSpec& spec, ghzw_channel channel, std::ostream& notices) {
  if (spec.scenario == GHZW_SCENARIO_BOTH) {
    if (wants_closed(spec.method)) {
      throw UsageError(std::string("scenario 'both' with channel '") + name(channel) +
                       "' and env '" + name(spec.env) +
                       "' has no closed-form oracle; use --method sim");
    }
    notices << "note: scenario 'both' has no closed-form oracle; values are simulation only\n";
  }
}

ghzw_channel required_channel(const SweepSpec& spec) {
  if (spec.scenario == GHZW_SCENARIO_INPUT) return GHZW_CHANNEL_NONE;
  if (!spec.channel) {
    throw UsageError(std::string("scenario '") + name(spec.scenario) + "' with env '" +
                     name(spec.env) + "' needs --channel ghz|w");
  }
  return *spec.channel;
}

}  // namespace

CsvTable sweep_time(const SweepSpec& spec, std::ostream& notices) {
  check_points(spec.points);
  if (!(spec.gt_min >= 0.0) || !(spec.gt_max > spec.gt_min) || !std::isfinite(spec.gt_max)) {
    throw UsageError("need 0 <= --gt-min < --gt-max");
  }
  if (spec.theta_over_pi && !(*spec.theta_over_pi >= 0.0 && *spec.theta_over_pi <= 1.0)) {
    throw UsageError("--theta-over-pi must lie in [0, 1]");
  }
  const ghzw_channel channel = required_channel(spec);
  check_scope(spec, channel, notices);
  const ghzw_config config{spec.scenario, spec.env, channel};

  std::vector<std::string> header = {"gt"};
  const bool pointwise = spec.theta_over_pi.has_value();
  if (wants_closed(spec.method)) header.push_back(pointwise ? "f_closed" : "f_av_closed");
  if (wants_sim(spec.method)) header.push_back(pointwise ? "f_sim" : "f_av_quadrature");
  CsvTable table(std::move(header));

  const double theta = pointwise ? std::min(std::numbers::pi, *spec.theta_over_pi * std::numbers::pi)
                                 : 0.0;
  for (double gt : grid(spec.gt_min, spec.gt_max, spec.points)) {
    std::vector<double> row = {gt};
    double v = 0.0;
    if (wants_closed(spec.method)) {
      call(pointwise ? ghzw_fidelity_closed(&config, theta, gt, &v)
                     : ghzw_average_fidelity_closed(&config, gt, &v));
      row.push_back(v);
    }
    if (wants_sim(spec.method)) {
      call(pointwise ? ghzw_fidelity_simulated(&config, theta, 0.0, gt, &v)
                     : ghzw_average_fidelity_simulated(&config, gt, spec.quadrature_nodes, &v));
      row.push_back(v);
    }
    table.add_row(row);
  }
  return table;
}

CsvTable sweep_theta(const SweepSpec& spec, std::ostream& notices) {
  check_points(spec.points);
  if (!(spec.gt >= 0.0) || !std::isfinite(spec.gt)) throw UsageError("--gt must be finite and >= 0");

  std::vector<ghzw_channel> channels;
  std::vector<std::string> labels;
  if (spec.scenario == GHZW_SCENARIO_INPUT) {
    channels = {GHZW_CHANNEL_NONE};
    labels = {"f"};
  } else {
    channels = {GHZW_CHANNEL_GHZ, GHZW_CHANNEL_W};
    labels = {"f_ghz", "f_w"};
  }
  check_scope(spec, spec.channel.value_or(GHZW_CHANNEL_GHZ), notices);

  const std::vector<double> fractions = grid(0.0, 1.0, spec.points);
  std::vector<std::string> header = {"theta_over_pi"};
  std::vector<std::vector<double>> columns;
  for (std::size_t c = 0; c < channels.size(); ++c) {
    const ghzw_config config{spec.scenario, spec.env, channels[c]};
    if (wants_closed(spec.method)) {
      header.push_back(labels[c] + (spec.method == Method::Both ? "_closed" : ""));
      std::vector<double>& col = columns.emplace_back();
      for (double x : fractions) {
        double v = 0.0;
        call(ghzw_fidelity_closed(&config, std::min(std::numbers::pi, x * std::numbers::pi),
                                  spec.gt, &v));
        col.push_back(v);
      }
    }
    if (wants_sim(spec.method)) {
      header.push_back(labels[c] + (spec.method == Method::Both ? "_sim" : ""));
      const SimulatorPtr sim = make_simulator(config, spec.gt);
      std::vector<double>& col = columns.emplace_back();
      for (double x : fractions) {
        double v = 0.0;
        call(ghzw_simulator_fidelity(sim.get(), std::min(std::numbers::pi, x * std::numbers::pi),
                                     0.0, &v));
        col.push_back(v);
      }
    }
  }

  CsvTable table(std::move(header));
  for (std::size_t i = 0; i < fractions.size(); ++i) {
    std::vector<double> row = {fractions[i]};
    for (const auto& col : columns) row.push_back(col[i]);
    table.add_row(row);
  }
  return table;
}

CsvTable critical_times() {
  struct Row {
    ghzw_scenario scenario;
    ghzw_channel channel;
    ghzw_environment env;
    const char* closed_form;
  };
  static constexpr Row kRows[] = {
      {GHZW_SCENARIO_INPUT, GHZW_CHANNEL_NONE, GHZW_ENV_ZERO_TEMPERATURE, "ln(3+2*sqrt(2))"},
      {GHZW_SCENARIO_INPUT, GHZW_CHANNEL_NONE, GHZW_ENV_INFINITE_TEMPERATURE, "ln(1+sqrt(2))"},
      {GHZW_SCENARIO_INPUT, GHZW_CHANNEL_NONE, GHZW_ENV_DEPHASING, ""},
      {GHZW_SCENARIO_CHANNEL, GHZW_CHANNEL_GHZ, GHZW_ENV_ZERO_TEMPERATURE, "ln((3+sqrt(5))/2)"},
      {GHZW_SCENARIO_CHANNEL, GHZW_CHANNEL_GHZ, GHZW_ENV_INFINITE_TEMPERATURE, ""},
      {GHZW_SCENARIO_CHANNEL, GHZW_CHANNEL_GHZ, GHZW_ENV_DEPHASING, ""},
      {GHZW_SCENARIO_CHANNEL, GHZW_CHANNEL_W, GHZW_ENV_ZERO_TEMPERATURE, "ln(5/3)"},
      {GHZW_SCENARIO_CHANNEL, GHZW_CHANNEL_W, GHZW_ENV_INFINITE_TEMPERATURE, ""},
      {GHZW_SCENARIO_CHANNEL, GHZW_CHANNEL_W, GHZW_ENV_DEPHASING, ""},
  };
  CsvTable table({"scenario", "channel", "env", "gt_c", "closed_form_label"});
  for (const Row& r : kRows) {
    const ghzw_config config{r.scenario, r.env, r.channel};
    ghzw_critical_time ct{};
    call(ghzw_critical_time_find(&config, &ct));
    table.add_text_row({name(r.scenario), name(r.channel), name(r.env),
                        ct.is_finite ? format_number(ct.gt_c) : "inf", r.closed_form});
  }
  return table;
}

int validate(const ValidateSpec& spec, std::ostream& report) {
  std::vector<ghzw_tolerance_override> overrides;
  for (const auto& [prefix, tol] : spec.tolerance_overrides) {
    overrides.push_back({prefix.c_str(), tol});
  }
  const ghzw_validate_options options{overrides.data(), overrides.size(),
                                      spec.inject_ghz_correction_fault ? 1 : 0};
  auto on_check = [](const ghzw_check_result* r, void* user) {
    std::ostream& out = *static_cast<std::ostream*>(user);
    out << (r->passed ? "PASS " : "FAIL ") << r->name << "  measured=" << format_number(r->measured)
        << "  tol=" << format_number(r->tolerance);
    if (r->detail && *r->detail) out << "  [" << r->detail << "]";
    out << '\n';
  };
  ghzw_validate_summary summary{};
  call(ghzw_validate(&options, on_check, &report, &summary));
  report << summary.passed << " passed, " << summary.failed << " failed\n";
  if (summary.failed > 0) {
    report << "first failing check: " << summary.first_failure << '\n';
    return kExitValidationFailed;
  }
  return kExitOk;
}

std::pair<std::string, double> parse_tolerance(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == text.size()) {
    throw UsageError("--tol expects name=value, got '" + text + "'");
  }
  double value = 0.0;
  const char* first = text.data() + eq + 1;
  const char* last = text.data() + text.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{} || res.ptr != last || !(value >= 0.0)) {
    throw UsageError("--tol value must be a non-negative number, got '" + text + "'");
  }
  return {text.substr(0, eq), value};
}

}  // namespace ghzw::cli
