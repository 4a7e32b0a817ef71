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


// ghzw: CSV sweeps, critical-time table and self-validation for GHZ- and
// W-channel teleportation under decoherence.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "commands.hpp"

namespace {

using ghzw::cli::Method;

const std::map<std::string, ghzw_scenario> kScenarios = {
    {"input", GHZW_SCENARIO_INPUT}, {"channel", GHZW_SCENARIO_CHANNEL}, {"both", GHZW_SCENARIO_BOTH}};
const std::map<std::string, ghzw_environment> kEnvs = {{"zero", GHZW_ENV_ZERO_TEMPERATURE},
                                                       {"inf", GHZW_ENV_INFINITE_TEMPERATURE},
                                                       {"deph", GHZW_ENV_DEPHASING}};
const std::map<std::string, ghzw_channel> kChannels = {{"ghz", GHZW_CHANNEL_GHZ},
                                                       {"w", GHZW_CHANNEL_W}};
const std::map<std::string, Method> kMethods = {
    {"closed", Method::Closed}, {"sim", Method::Simulated}, {"both", Method::Both}};

struct SweepFlags {
  std::string scenario = "channel";
  std::string env;
  std::string channel;
  std::string method = "closed";
  std::string out;
  ghzw::cli::SweepSpec spec;
  double theta_over_pi = 0.0;
};

template <typename T>
CLI::Option* add_choice(CLI::App* app, const std::string& flag, std::string& target,
                        const std::map<std::string, T>& choices, const std::string& help) {
  std::vector<std::string> names;
  for (const auto& entry : choices) names.push_back(entry.first);
  return app->add_option(flag, target, help)->check(CLI::IsMember(names));
}

void add_sweep_flags(CLI::App* cmd, SweepFlags& f) {
  add_choice(cmd, "--scenario", f.scenario, kScenarios, "Which subsystem decoheres")
      ->capture_default_str();
  add_choice(cmd, "--env", f.env, kEnvs, "Environment")->required();
  add_choice(cmd, "--channel", f.channel, kChannels, "Resource state");
  add_choice(cmd, "--method", f.method, kMethods,
             "closed: exact formulas; sim: integrate and run the circuit; both: one column each")
      ->capture_default_str();
  cmd->add_option("--points", f.spec.points, "Number of grid points")->capture_default_str();
  cmd->add_option("--out", f.out, "Output file (default: standard output)");
}

ghzw::cli::SweepSpec resolve(const SweepFlags& f, bool theta_given) {
  ghzw::cli::SweepSpec spec = f.spec;
  spec.scenario = kScenarios.at(f.scenario);
  spec.env = kEnvs.at(f.env);
  if (!f.channel.empty()) spec.channel = kChannels.at(f.channel);
  spec.method = kMethods.at(f.method);
  if (theta_given) spec.theta_over_pi = f.theta_over_pi;
  return spec;
}

int emit(const ghzw::cli::CsvTable& table, const std::string& path) {
  if (path.empty()) {
    table.write(std::cout);
    std::cout.flush();
    return std::cout ? ghzw::cli::kExitOk : ghzw::cli::kExitValidationFailed;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    return ghzw::cli::kExitUsage;
  }
  table.write(file);
  file.close();
  return file ? ghzw::cli::kExitOk : ghzw::cli::kExitValidationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Teleportation fidelity under decoherence for GHZ and W resource states"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ghzw_version()));

  SweepFlags time_flags;
  auto* sweep_time = app.add_subcommand("sweep-time", "Fidelity or average fidelity versus gt");
  add_sweep_flags(sweep_time, time_flags);
  sweep_time->add_option("--gt-min", time_flags.spec.gt_min, "First gt")->capture_default_str();
  sweep_time->add_option("--gt-max", time_flags.spec.gt_max, "Last gt")->capture_default_str();
  auto* time_theta = sweep_time->add_option("--theta-over-pi", time_flags.theta_over_pi,
                                            "Fixed input angle; omit for the Bloch-sphere average");

  SweepFlags theta_flags;
  theta_flags.spec.points = 101;
  auto* sweep_theta = app.add_subcommand("sweep-theta", "Fidelity versus theta/pi at fixed gt");
  add_sweep_flags(sweep_theta, theta_flags);
  sweep_theta->add_option("--gt", theta_flags.spec.gt, "Fixed gt")->capture_default_str();

  std::string critical_out;
  auto* critical = app.add_subcommand("critical-times", "Times at which F_av reaches 2/3");
  critical->add_option("--out", critical_out, "Output file (default: standard output)");

  std::vector<std::string> tolerances;
  std::string fault;
  auto* validate = app.add_subcommand("validate", "Run the self-consistency checks");
  validate->add_option("--tol", tolerances, "Override a tolerance: check-name-prefix=value");
  validate->add_option("--inject-fault", fault)
      ->check(CLI::IsMember({"ghz-correction"}))
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return ghzw::cli::kExitUsage;
  }

  try {
    if (*sweep_time) {
      const auto spec = resolve(time_flags, time_theta->count() > 0);
      return emit(ghzw::cli::sweep_time(spec, std::cerr), time_flags.out);
    }
    if (*sweep_theta) {
      const auto spec = resolve(theta_flags, false);
      return emit(ghzw::cli::sweep_theta(spec, std::cerr), theta_flags.out);
    }
    if (*critical) return emit(ghzw::cli::critical_times(), critical_out);
    ghzw::cli::ValidateSpec spec;
    for (const std::string& t : tolerances) spec.tolerance_overrides.insert(ghzw::cli::parse_tolerance(t));
    spec.inject_ghz_correction_fault = !fault.empty();
    return ghzw::cli::validate(spec, std::cout);
  } catch (const ghzw::cli::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return ghzw::cli::kExitUsage;
  } catch (const ghzw::cli::LibraryError& e) {
    std::cerr << "error: " << ghzw_status_string(e.status()) << ": " << e.what() << '\n';
    const bool usage = e.status() == GHZW_ERROR_INVALID_ARGUMENT ||
                       e.status() == GHZW_ERROR_UNSUPPORTED;
    return usage ? ghzw::cli::kExitUsage : ghzw::cli::kExitValidationFailed;
  }
}
