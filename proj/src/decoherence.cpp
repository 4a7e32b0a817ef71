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

#include "ghzw/decoherence.hpp"

#include <cmath>
#include <numbers>

namespace ghzw {

const char* to_string(Environment env) {
  switch (env) {
    case Environment::ZeroTemperature:
      return "zero";
    case Environment::InfiniteTemperature:
      return "inf";
    case Environment::Dephasing:
      return "deph";
  }
  return "?";
}

std::vector<Operator> lindblad_ops(Environment env, int qubit, int qubits) {
  if (qubits < 1 || qubits > kMaxQubits || qubit < 0 || qubit >= qubits) {
    throw std::invalid_argument("lindblad_ops: qubit index out of range");
  }
  switch (env) {
    case Environment::ZeroTemperature:
      return {gates::embed(gates::lowering(), qubit, qubits)};
    case Environment::InfiniteTemperature:
      return {gates::embed(gates::lowering(), qubit, qubits),
              gates::embed(gates::raising(), qubit, qubits)};
    case Environment::Dephasing:
      return {gates::embed(gates::raising() * gates::lowering(), qubit, qubits)};
  }
  throw std::invalid_argument("lindblad_ops: unknown environment");
}

LindbladGenerator::LindbladGenerator(Environment env, int qubits, double gamma)
    : qubits_(qubits), gamma_(gamma) {
  const int dim = 1 << qubits;
  decay_ = Matrix::Zero(dim, dim);
  for (int q = 0; q < qubits; ++q) {
    for (const Operator& op : lindblad_ops(env, q, qubits)) {
      jumps_.push_back(op.matrix());
      jumps_adj_.push_back(op.matrix().adjoint());
      decay_ += jumps_adj_.back() * jumps_.back();
    }
  }
}

Matrix LindbladGenerator::apply(const Matrix& rho) const {
  Matrix out = -(decay_ * rho + rho * decay_);
  for (std::size_t k = 0; k < jumps_.size(); ++k) {
    out.noalias() += 2.0 * jumps_[k] * rho * jumps_adj_[k];
  }
  return (gamma_ / 2.0) * out;
}

Operator lindblad_rhs(const DensityMatrix& rho, Environment env, double gamma) {
  return Operator(LindbladGenerator(env, rho.qubits(), gamma).apply(rho.matrix()));
}

int default_steps(double gamma_t) {
  if (gamma_t <= 0.0) return 1;
  return std::max(1, static_cast<int>(std::ceil(gamma_t / kDefaultStep - 1e-9)));
}

DensityMatrix evolve_rk4(const DensityMatrix& rho0, Environment env, double gamma, double t,
                         int steps) {
  if (steps < 1) throw std::invalid_argument("evolve_rk4: steps must be >= 1");
  if (!(t >= 0.0) || !(gamma >= 0.0)) {
    throw std::invalid_argument("evolve_rk4: gamma and t must be non-negative");
  }
  if (t == 0.0 || gamma == 0.0) return rho0;

  const LindbladGenerator gen(env, rho0.qubits(), gamma);
  const double dt = t / steps;
  Matrix rho = rho0.matrix();
  for (int s = 0; s < steps; ++s) {
    const Matrix k1 = gen.apply(rho);
    const Matrix k2 = gen.apply(rho + (dt / 2.0) * k1);
    const Matrix k3 = gen.apply(rho + (dt / 2.0) * k2);
    const Matrix k4 = gen.apply(rho + dt * k3);
    rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }

  const double drift =
      std::max(hermiticity_defect(rho), std::abs(rho.trace() - Complex(1.0, 0.0)));
  if (drift > kIntegratorDriftTol) {
    throw InvariantError("evolve_rk4: integrator drift " + std::to_string(drift) +
                         " exceeds tolerance; step count too small?");
  }
  Matrix cleaned = (rho + rho.adjoint()) / 2.0;
  cleaned /= cleaned.trace().real();
  return DensityMatrix(std::move(cleaned));
}

DensityMatrix evolve_rk4(const DensityMatrix& rho0, Environment env, double gamma_t) {
  return evolve_rk4(rho0, env, 1.0, gamma_t, default_steps(gamma_t));
}

DensityMatrix closed_single_qubit(const DensityMatrix& rho0, Environment env, double gt) {
  if (rho0.dim() != 2) throw std::invalid_argument("closed_single_qubit: expected one qubit");
  if (!(gt >= 0.0)) throw std::invalid_argument("closed_single_qubit: gt must be >= 0");
  const double e1 = std::exp(-gt);
  const double p0 = rho0(0, 0).real();
  const double p1 = rho0(1, 1).real();
  const Complex c = rho0(0, 1);

  Matrix r(2, 2);
  switch (env) {
    case Environment::ZeroTemperature:
      r(0, 0) = p0 * e1;
      r(1, 1) = 1.0 - p0 * e1;
      r(0, 1) = c * std::exp(-gt / 2.0);
      break;
    case Environment::InfiniteTemperature:
      r(0, 0) = (1.0 + (p0 - p1) * std::exp(-2.0 * gt)) / 2.0;
      r(1, 1) = (1.0 - (p0 - p1) * std::exp(-2.0 * gt)) / 2.0;
      r(0, 1) = c * e1;
      break;
    case Environment::Dephasing:
      r(0, 0) = p0;
      r(1, 1) = p1;
      r(0, 1) = c * std::exp(-gt / 2.0);
      break;
  }
  r(1, 0) = std::conj(r(0, 1));
  return DensityMatrix(std::move(r));
}

namespace {

// Component lists use 1-based labels rho^{jk}; every entry is real.
class ComponentList {
 public:
  ComponentList() : m_(Matrix::Zero(8, 8)) {}

  void set(int j, int k, double v) {
    m_(j - 1, k - 1) = v;
    m_(k - 1, j - 1) = v;
  }
  Matrix take() { return std::move(m_); }

 private:
  Matrix m_;
};

}  // namespace

DensityMatrix closed_ghz(Environment env, double gt) {
  if (!(gt >= 0.0)) throw std::invalid_argument("closed_ghz: gt must be >= 0");
  const double e1 = std::exp(-gt);
  const double e2 = std::exp(-2.0 * gt);
  const double e3 = std::exp(-3.0 * gt);
  const double e4 = std::exp(-4.0 * gt);
  const double e32 = std::exp(-1.5 * gt);

  ComponentList r;
  switch (env) {
    case Environment::ZeroTemperature:
      r.set(1, 1, e3 / 2.0);
      r.set(1, 8, e32 / 2.0);
      for (int j : {2, 3, 5}) r.set(j, j, (e2 - e3) / 2.0);
      for (int j : {4, 6, 7}) r.set(j, j, e1 / 2.0 - e2 + e3 / 2.0);
      r.set(8, 8, 1.0 - 1.5 * e1 + 1.5 * e2 - e3 / 2.0);
      break;
    case Environment::InfiniteTemperature:
      r.set(1, 1, (1.0 + 3.0 * e4) / 8.0);
      r.set(8, 8, (1.0 + 3.0 * e4) / 8.0);
      r.set(1, 8, e3 / 2.0);
      for (int j = 2; j <= 7; ++j) r.set(j, j, (1.0 - e4) / 8.0);
      break;
    case Environment::Dephasing:
      r.set(1, 1, 0.5);
      r.set(8, 8, 0.5);
      r.set(1, 8, e32 / 2.0);
      break;
  }
  return DensityMatrix(r.take());
}

DensityMatrix closed_w(Environment env, double gt) {
  if (!(gt >= 0.0)) throw std::invalid_argument("closed_w: gt must be >= 0");
  constexpr double kSqrt2 = std::numbers::sqrt2;
  const double e1 = std::exp(-gt);
  const double e2 = std::exp(-2.0 * gt);

  ComponentList r;
  switch (env) {
    case Environment::ZeroTemperature: {
      const double u = e1 - e2;
      r.set(2, 2, e2 / 2.0);
      r.set(2, 3, e2 / (2.0 * kSqrt2));
      r.set(2, 5, e2 / (2.0 * kSqrt2));
      r.set(3, 3, e2 / 4.0);
      r.set(5, 5, e2 / 4.0);
      r.set(3, 5, e2 / 4.0);
      r.set(4, 4, 3.0 * u / 4.0);
      r.set(6, 6, 3.0 * u / 4.0);
      r.set(4, 6, u / 4.0);
      r.set(4, 7, kSqrt2 * u / 4.0);
      r.set(6, 7, kSqrt2 * u / 4.0);
      r.set(7, 7, u / 2.0);
      r.set(8, 8, 1.0 - 2.0 * e1 + e2);
      break;
    }
    case Environment::InfiniteTemperature: {
      const double e4 = std::exp(-4.0 * gt);
      const double e6 = std::exp(-6.0 * gt);
      const double v_plus = e2 + e4;
      const double v_minus = e2 - e4;
      const double w_plus = 1.0 + e6;
      const double w_minus = 1.0 - e6;
      // In "rho^{11,77} = (w_- +- v_-)/8" the first label takes the upper sign.
      r.set(1, 1, (w_minus + v_minus) / 8.0);
      r.set(7, 7, (w_minus - v_minus) / 8.0);
      r.set(2, 2, (w_plus + v_plus) / 8.0);
      r.set(8, 8, (w_plus - v_plus) / 8.0);
      r.set(2, 3, kSqrt2 * v_plus / 8.0);
      r.set(2, 5, kSqrt2 * v_plus / 8.0);
      r.set(4, 7, kSqrt2 * v_minus / 8.0);
      r.set(6, 7, kSqrt2 * v_minus / 8.0);
      r.set(3, 5, v_plus / 8.0);
      r.set(4, 6, v_minus / 8.0);
      r.set(3, 3, w_plus / 8.0);
      r.set(5, 5, w_plus / 8.0);
      r.set(4, 4, w_minus / 8.0);
      r.set(6, 6, w_minus / 8.0);
      break;
    }
    case Environment::Dephasing:
      r.set(2, 2, 0.5);
      r.set(3, 3, 0.25);
      r.set(5, 5, 0.25);
      r.set(2, 3, kSqrt2 * e1 / 4.0);
      r.set(2, 5, kSqrt2 * e1 / 4.0);
      r.set(3, 5, e1 / 4.0);
      break;
  }
  return DensityMatrix(r.take());
}

DensityMatrix ClosedFormChannel::operator()(double gt) const {
  return channel == ChannelKind::Ghz ? closed_ghz(env, gt) : closed_w(env, gt);
}

}  // namespace ghzw
