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

#include "ghzw/analysis.hpp"

#include <cmath>
#include <numbers>

#include "ghzw/quadrature.hpp"
#include "ghzw/roots.hpp"

namespace ghzw {

namespace {

constexpr double kRootTol = 1e-12;
constexpr double kScanStep = 0.01;
constexpr double kScanLimit = 50.0;

// Every closed form below is A(gt) + B(gt) sin^2(theta), except the
// zero-temperature input case which also carries a sin^2(theta/2) term.
double input_fidelity(Environment env, double theta, double gt) {
  const double e = std::exp(-gt);
  const double e_half = std::exp(-gt / 2.0);
  const double s = std::pow(std::sin(theta), 2);
  switch (env) {
    case Environment::ZeroTemperature:
      return e + 0.5 * (e_half - e) * s + (1.0 - e) * std::pow(std::sin(theta / 2.0), 2);
    case Environment::InfiniteTemperature:
      return 0.5 * (1.0 + e * e + (e - e * e) * s);
    case Environment::Dephasing:
      return 1.0 + 0.5 * (e_half - 1.0) * s;
  }
  throw std::invalid_argument("unknown environment");
}

double ghz_fidelity(Environment env, double theta, double gt) {
  const double e = std::exp(-gt);
  const double e32 = std::exp(-1.5 * gt);
  const double s = std::pow(std::sin(theta), 2);
  switch (env) {
    case Environment::ZeroTemperature:
      return 1.0 - e + e * e - 0.5 * (1.0 - e32 - 2.0 * e + 2.0 * e * e) * s;
    case Environment::InfiniteTemperature: {
      const double e3 = std::exp(-3.0 * gt);
      const double e4 = std::exp(-4.0 * gt);
      return 0.5 * (1.0 + e4 + (e3 - e4) * s);
    }
    case Environment::Dephasing:
      return 1.0 - 0.5 * (1.0 - e32) * s;
  }
  throw std::invalid_argument("unknown environment");
}

double w_fidelity(Environment env, double theta, double gt) {
  const double e = std::exp(-gt);
  const double s = std::pow(std::sin(theta), 2);
  switch (env) {
    case Environment::ZeroTemperature:
      return 1.0 - 1.5 * e + 1.5 * e * e - 0.5 * (1.0 - 3.0 * e + 2.0 * e * e) * s;
    case Environment::InfiniteTemperature: {
      const double e2 = std::exp(-2.0 * gt);
      const double e4 = std::exp(-4.0 * gt);
      const double e6 = std::exp(-6.0 * gt);
      return 0.25 * (2.0 + e4 + e6) + 0.5 * (e2 - e6) * s;
    }
    case Environment::Dephasing:
      return 0.25 * (3.0 + e) - (1.0 - e) * s / 16.0;
  }
  throw std::invalid_argument("unknown environment");
}

void check_gt(double gt) {
  if (!(gt >= 0.0) || !std::isfinite(gt)) {
    throw std::invalid_argument("gt must be finite and >= 0");
  }
}

void check_theta(double theta) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw std::out_of_range("theta must lie in [0, pi]");
  }
}

}  // namespace

void Configuration::check() const {
  if (scenario != Scenario::InputDecoheres && !channel) {
    throw UnsupportedError(std::string("scenario '") + to_string(scenario) +
                           "' needs a channel (ghz or w)");
  }
}

std::string Configuration::label() const {
  std::string out = std::string(to_string(scenario)) + "/";
  out += scenario == Scenario::InputDecoheres || !channel ? "-" : to_string(*channel);
  return out + "/" + to_string(env);
}

double fidelity_closed(const Configuration& config, double theta, double gt) {
  config.check();
  check_theta(theta);
  check_gt(gt);
  switch (config.scenario) {
    case Scenario::InputDecoheres:
      return input_fidelity(config.env, theta, gt);
    case Scenario::ChannelDecoheres:
      return *config.channel == ChannelKind::Ghz ? ghz_fidelity(config.env, theta, gt)
                                                 : w_fidelity(config.env, theta, gt);
    case Scenario::BothDecohere:
      break;
  }
  throw UnsupportedError("no closed-form fidelity for scenario 'both'");
}

double w_channel_fidelity_closed(Environment env, double theta, double gt) {
  return w_fidelity(env, theta, gt);
}

TeleportationSimulator::TeleportationSimulator(const Configuration& config, double gt)
    : config_(config), gt_(gt) {
  config_.check();
  check_gt(gt);
  const ChannelKind channel = config_.channel.value_or(ChannelKind::Ghz);
  protocol_ = &protocol_unitary(channel);
  DensityMatrix pristine = channel_state(channel);
  if (config_.scenario == Scenario::InputDecoheres) {
    channel_ = std::move(pristine);
  } else {
    channel_ = evolve_rk4(pristine, config_.env, gt_);
  }
}

FidelitySample TeleportationSimulator::sample(double theta, double phi) const {
  const StateVector psi = input_state(PureStateAngles(theta, phi));
  DensityMatrix rho_in = DensityMatrix::pure(psi);
  if (config_.scenario != Scenario::ChannelDecoheres) {
    rho_in = evolve_rk4(rho_in, config_.env, gt_);
  }
  const DensityMatrix out = teleport_output(rho_in, *channel_, *protocol_);
  return {theta, phi, gt_, fidelity_against_pure(psi, out)};
}

double fidelity_simulated(const Configuration& config, double theta, double phi, double gt) {
  return TeleportationSimulator(config, gt).fidelity(theta, phi);
}

double average_fidelity_closed(const Configuration& config, double gt) {
  config.check();
  check_gt(gt);
  const double e = std::exp(-gt);
  const Environment env = config.env;

  if (config.scenario == Scenario::InputDecoheres) {
    const double e_half = std::exp(-gt / 2.0);
    switch (env) {
      case Environment::ZeroTemperature:
        return 0.5 + e_half / 3.0 + e / 6.0;
      case Environment::InfiniteTemperature:
        return 0.5 + e / 3.0 + e * e / 6.0;
      case Environment::Dephasing:
        return 2.0 / 3.0 + e_half / 3.0;
    }
  }
  if (config.scenario == Scenario::ChannelDecoheres && *config.channel == ChannelKind::Ghz) {
    const double e32 = std::exp(-1.5 * gt);
    switch (env) {
      case Environment::ZeroTemperature:
        return 2.0 / 3.0 - e / 3.0 + e * e / 3.0 + e32 / 3.0;
      case Environment::InfiniteTemperature:
        return 0.5 + std::exp(-3.0 * gt) / 3.0 + std::exp(-4.0 * gt) / 6.0;
      case Environment::Dephasing:
        return 2.0 / 3.0 + e32 / 3.0;
    }
  }
  if (config.scenario == Scenario::ChannelDecoheres) {
    switch (env) {
      case Environment::ZeroTemperature:
        return 2.0 / 3.0 - e / 2.0 + 5.0 * e * e / 6.0;
      case Environment::InfiniteTemperature:
        return 0.5 + std::exp(-2.0 * gt) / 3.0 + std::exp(-4.0 * gt) / 4.0 -
               std::exp(-6.0 * gt) / 12.0;
      case Environment::Dephasing:
        return 17.0 / 24.0 + 7.0 * e / 24.0;
    }
  }
  throw UnsupportedError("no closed-form average fidelity for scenario 'both'");
}

double bloch_average(const std::function<double(double, double)>& f, int n_nodes,
                     int phi_points) {
  if (phi_points < 1) throw std::invalid_argument("bloch_average: phi_points must be >= 1");
  const QuadratureRule rule = gauss_legendre(n_nodes);
  double total = 0.0;
  for (int i = 0; i < n_nodes; ++i) {
    const double theta = std::acos(rule.nodes[i]);
    double ring = 0.0;
    for (int p = 0; p < phi_points; ++p) {
      ring += f(theta, 2.0 * std::numbers::pi * p / phi_points);
    }
    total += rule.weights[i] * ring / phi_points;
  }
  return total / 2.0;
}

double average_fidelity_quadrature(const Configuration& config, double gt, int n_nodes) {
  if (n_nodes < 8) throw std::invalid_argument("average_fidelity_quadrature: n_nodes must be >= 8");
  config.check();
  return bloch_average(
      [&](double theta, double) { return fidelity_closed(config, theta, gt); }, n_nodes);
}

double average_fidelity_simulated(const Configuration& config, double gt, int n_nodes) {
  if (n_nodes < 8) throw std::invalid_argument("average_fidelity_simulated: n_nodes must be >= 8");
  const TeleportationSimulator sim(config, gt);
  return bloch_average([&](double theta, double phi) { return sim.fidelity(theta, phi); },
                       n_nodes);
}

double CriticalTime::value() const {
  if (!gt_) throw std::logic_error("critical time is infinite");
  return *gt_;
}

CriticalTime critical_time(const Configuration& config) {
  auto excess = [&](double gt) { return average_fidelity_closed(config, gt) - kClassicalBound; };
  const auto bracket = first_downward_crossing(excess, 0.0, kScanLimit, kScanStep);
  if (!bracket) return CriticalTime::infinite();
  return CriticalTime::finite(bisect(excess, bracket->first, bracket->second, kRootTol));
}

double monotonicity_switch(ChannelKind channel) {
  const Configuration config{Scenario::ChannelDecoheres, Environment::ZeroTemperature, channel};
  // sin^2(theta) coefficient of F; vanishes identically at gt = 0.
  auto slope = [&](double gt) {
    return fidelity_closed(config, std::numbers::pi / 2.0, gt) - fidelity_closed(config, 0.0, gt);
  };
  const auto bracket = first_downward_crossing(slope, kScanStep, kScanLimit, kScanStep);
  if (!bracket) throw UnsupportedError("monotonicity_switch: coefficient never changes sign");
  return bisect(slope, bracket->first, bracket->second, kRootTol);
}

CrossoverInterval robustness_crossover(Environment env, double gt) {
  check_gt(gt);
  const Configuration ghz{Scenario::ChannelDecoheres, env, ChannelKind::Ghz};
  const Configuration w{Scenario::ChannelDecoheres, env, ChannelKind::W};
  auto advantage = [&](double theta) {
    return fidelity_closed(w, theta, gt) - fidelity_closed(ghz, theta, gt);
  };
  // Both fidelities are affine in sin^2(theta), so the advantage is
  // monotone on [0, pi/2] and mirrored on [pi/2, pi].
  const double at_pole = advantage(0.0);
  const double at_equator = advantage(std::numbers::pi / 2.0);
  CrossoverInterval out{env, gt, 0.0, 1.0, false, true};
  if (at_pole > 0.0 && at_equator > 0.0) return out;
  if (at_pole <= 0.0 && at_equator <= 0.0) {
    out.theta_low = out.theta_high = 0.5;
    out.empty = true;
    return out;
  }
  const double root = bisect(advantage, 0.0, std::numbers::pi / 2.0, kRootTol);
  out.theta_low = root / std::numbers::pi;
  out.theta_high = 1.0 - out.theta_low;
  out.w_wins_inside = at_equator > 0.0;
  return out;
}

}  // namespace ghzw
