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

#ifndef GHZW_DECOHERENCE_HPP_
#define GHZW_DECOHERENCE_HPP_

#include <vector>

#include "ghzw/core.hpp"

namespace ghzw {

/// Markovian environment acting independently on every qubit.
///
///   ZeroTemperature      L = sigma^-
///   InfiniteTemperature  L1 = sigma^-, L2 = sigma^+
///   Dephasing            L = sigma^+ sigma^-  (= |0><0|)
enum class Environment { ZeroTemperature, InfiniteTemperature, Dephasing };

const char* to_string(Environment env);

/// Integrator step in units of 1/gamma used when no step count is given.
inline constexpr double kDefaultStep = 1e-3;
/// Largest pre-cleanup Hermiticity/trace drift evolve_rk4 accepts.
inline constexpr double kIntegratorDriftTol = 1e-8;

/// Jump operators for `qubit` embedded in an n-qubit register.
std::vector<Operator> lindblad_ops(Environment env, int qubit, int qubits);

/// Right-hand side of the master equation for a fixed environment and
/// register size. Jump operators and the anticommutator term are built once.
///
///   drho/dt = gamma/2 sum_k (2 L_k rho L_k^+ - L_k^+ L_k rho - rho L_k^+ L_k)
class LindbladGenerator {
 public:
  LindbladGenerator(Environment env, int qubits, double gamma);

  Matrix apply(const Matrix& rho) const;
  int qubits() const { return qubits_; }

 private:
  int qubits_;
  double gamma_;
  std::vector<Matrix> jumps_;
  std::vector<Matrix> jumps_adj_;
  Matrix decay_;  // sum_k L_k^+ L_k
};

Operator lindblad_rhs(const DensityMatrix& rho, Environment env, double gamma);

/// Number of steps that keeps gamma * dt at or below kDefaultStep.
int default_steps(double gamma_t);

/// Fixed-step classical Runge-Kutta integration from 0 to t. The result is
/// re-Hermitised and trace-normalised once at the end; drift larger than
/// kIntegratorDriftTol before that cleanup throws InvariantError.
DensityMatrix evolve_rk4(const DensityMatrix& rho0, Environment env, double gamma, double t,
                         int steps);
DensityMatrix evolve_rk4(const DensityMatrix& rho0, Environment env, double gamma_t);

// Exact solutions, all functions of gt = gamma * t only.
DensityMatrix closed_single_qubit(const DensityMatrix& rho0, Environment env, double gt);
DensityMatrix closed_ghz(Environment env, double gt);
DensityMatrix closed_w(Environment env, double gt);

/// Closed-form decohered channel state evaluated on demand.
struct ClosedFormChannel {
  ChannelKind channel;
  Environment env;

  DensityMatrix operator()(double gt) const;
};

}  // namespace ghzw

#endif  // GHZW_DECOHERENCE_HPP_
