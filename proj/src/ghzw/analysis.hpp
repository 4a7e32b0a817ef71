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

#ifndef GHZW_ANALYSIS_HPP_
#define GHZW_ANALYSIS_HPP_

#include <functional>
#include <optional>
#include <string>

#include "ghzw/core.hpp"
#include "ghzw/decoherence.hpp"
#include "ghzw/teleport.hpp"

namespace ghzw {

/// Classical measure-and-prepare bound on the average fidelity.
inline constexpr double kClassicalBound = 2.0 / 3.0;

/// Scenario, environment and (where the scenario needs one) resource state.
/// InputDecoheres ignores the channel: Bob receives the decohered input for
/// either resource.
struct Configuration {
  Scenario scenario;
  Environment env;
  std::optional<ChannelKind> channel;

  /// Throws UnsupportedError if a channel scenario has no channel.
  void check() const;
  std::string label() const;
};

enum class AverageMethod { ClosedForm, Quadrature, MonteCarlo };

struct FidelitySample {
  double theta;
  double phi;
  double gt;
  double f;
};

struct AverageFidelityResult {
  double gt;
  double f_av;
  AverageMethod method;
};

/// Exact F(theta) for the input- and channel-decoherence scenarios. The
/// fidelity is independent of phi. BothDecohere throws UnsupportedError.
double fidelity_closed(const Configuration& config, double theta, double gt);

/// Decoheres the relevant states with the RK4 integrator, runs the
/// teleportation circuit and takes <psi|rho_out|psi>.
double fidelity_simulated(const Configuration& config, double theta, double phi, double gt);

/// Caches the decohered channel and the protocol for one (config, gt) so a
/// sweep over input states only pays for the integration once.
class TeleportationSimulator {
 public:
  TeleportationSimulator(const Configuration& config, double gt);

  FidelitySample sample(double theta, double phi) const;
  double fidelity(double theta, double phi) const { return sample(theta, phi).f; }

 private:
  Configuration config_;
  double gt_;
  const ProtocolUnitary* protocol_;
  std::optional<DensityMatrix> channel_;
};

double average_fidelity_closed(const Configuration& config, double gt);

/// (1/4pi) int dphi int sin(theta) dtheta f(theta, phi), Gauss-Legendre in
/// cos(theta) with `phi_points` uniform azimuth samples.
double bloch_average(const std::function<double(double theta, double phi)>& f, int n_nodes,
                     int phi_points = 4);

/// Bloch average of fidelity_closed. n_nodes must be >= 8.
double average_fidelity_quadrature(const Configuration& config, double gt, int n_nodes = 32);

/// Bloch average of the simulated pipeline (one integration per call).
double average_fidelity_simulated(const Configuration& config, double gt, int n_nodes = 32);

/// Time at which the closed-form average fidelity first drops to 2/3, or
/// infinite when it stays above the bound on [0, 50].
class CriticalTime {
 public:
  static CriticalTime finite(double gt) { return CriticalTime(gt); }
  static CriticalTime infinite() { return CriticalTime(std::nullopt); }

  bool is_finite() const { return gt_.has_value(); }
  /// Throws std::logic_error for an infinite critical time.
  double value() const;

 private:
  explicit CriticalTime(std::optional<double> gt) : gt_(gt) {}
  std::optional<double> gt_;
};

CriticalTime critical_time(const Configuration& config);

/// Zero-temperature channel decoherence: the gt at which the sin^2(theta)
/// coefficient of F changes sign, so F switches from decreasing to
/// increasing in |theta - pi/2|.
double monotonicity_switch(ChannelKind channel);

/// Range of theta/pi in which the W channel beats GHZ (channel decoherence,
/// closed-form fidelities).
struct CrossoverInterval {
  Environment env;
  double gt;
  double theta_low;
  double theta_high;
  bool empty;
  /// False when W wins outside [theta_low, theta_high] instead of inside.
  bool w_wins_inside = true;
};

CrossoverInterval robustness_crossover(Environment env, double gt);

/// Fidelity target used to pick the W complement corrections.
double w_channel_fidelity_closed(Environment env, double theta, double gt);

}  // namespace ghzw

#endif  // GHZW_ANALYSIS_HPP_
