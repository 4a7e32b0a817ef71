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

#include "ghzw/teleport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace ghzw {

const char* to_string(Scenario scenario) {
  switch (scenario) {
    case Scenario::InputDecoheres:
      return "input";
    case Scenario::ChannelDecoheres:
      return "channel";
    case Scenario::BothDecohere:
      return "both";
  }
  return "?";
}

const char* to_string(Pauli p) {
  switch (p) {
    case Pauli::I:
      return "I";
    case Pauli::X:
      return "X";
    case Pauli::Z:
      return "Z";
    case Pauli::ZX:
      return "ZX";
  }
  return "?";
}

Operator pauli_matrix(Pauli p) {
  switch (p) {
    case Pauli::I:
      return Operator::identity(1);
    case Pauli::X:
      return gates::pauli_x();
    case Pauli::Z:
      return gates::pauli_z();
    case Pauli::ZX:
      return gates::pauli_z() * gates::pauli_x();
  }
  throw std::invalid_argument("unknown Pauli");
}

ProtocolUnitary ghz_protocol_unitary(GhzCircuitFault fault) {
  using gates::controlled;
  constexpr int n = 4;
  const Operator x = gates::pauli_x();
  const Operator z = gates::pauli_z();
  const Operator h = gates::hadamard();

  const Operator entangle = controlled(x, 0, 1, n);
  const Operator rotate = gates::embed(h, 0, n) * gates::embed(h, 2, n);
  Operator correct = controlled(z, 0, 3, n) * controlled(x, 1, 3, n);
  if (fault != GhzCircuitFault::DropConditionalZFromQubit3) {
    correct = controlled(z, 2, 3, n) * correct;
  }
  return {correct * rotate * entangle, ChannelKind::Ghz};
}

std::array<StateVector, 8> w_measurement_basis() {
  constexpr double r2 = std::numbers::sqrt2;
  auto ket = [](int index) {
    StateVector v = StateVector::Zero(8);
    v(index) = 1.0;
    return v;
  };
  return {
      (r2 * ket(0b000) + ket(0b110) + ket(0b101)) / 2.0,
      (r2 * ket(0b000) - ket(0b110) - ket(0b101)) / 2.0,
      (r2 * ket(0b100) + ket(0b010) + ket(0b001)) / 2.0,
      (r2 * ket(0b100) - ket(0b010) - ket(0b001)) / 2.0,
      ket(0b111),
      ket(0b011),
      (ket(0b110) - ket(0b101)) / r2,
      (ket(0b010) - ket(0b001)) / r2,
  };
}

Operator w_basis_change_adjoint() {
  const auto basis = w_measurement_basis();
  Matrix change(8, 8);
  for (int j = 0; j < 8; ++j) change.col(j) = basis[j];
  return Operator(change.adjoint());
}

ProtocolUnitary w_protocol_unitary(const ComplementAssignment& complement) {
  const std::array<Pauli, 8> corrections = {Pauli::X,      Pauli::ZX,     Pauli::I,
                                            Pauli::Z,      complement[0], complement[1],
                                            complement[2], complement[3]};
  Matrix controlled_fix = Matrix::Zero(16, 16);
  for (int j = 0; j < 8; ++j) {
    controlled_fix.block(2 * j, 2 * j, 2, 2) = pauli_matrix(corrections[j]).matrix();
  }
  const Operator rotate = kron(w_basis_change_adjoint(), Operator::identity(1));
  return {Operator(controlled_fix) * rotate, ChannelKind::W};
}

const ProtocolUnitary& protocol_unitary(ChannelKind channel) {
  static const ProtocolUnitary ghz = ghz_protocol_unitary();
  static const ProtocolUnitary w = w_protocol_unitary();
  return channel == ChannelKind::Ghz ? ghz : w;
}

DensityMatrix teleport_output(const DensityMatrix& rho_in, const DensityMatrix& rho_channel,
                              const ProtocolUnitary& protocol) {
  if (rho_in.dim() != 2 || rho_channel.dim() != 8) {
    throw std::invalid_argument("teleport_output: expects a 1-qubit input and a 3-qubit channel");
  }
  const Matrix joint = kron(rho_in.op(), rho_channel.op()).matrix();
  const Matrix& u = protocol.u.matrix();
  const Matrix evolved = u * joint * u.adjoint();

  // Bob's qubit is the least significant bit; sum over Alice's 8 outcomes.
  Matrix bob = Matrix::Zero(2, 2);
  for (int a = 0; a < 8; ++a) bob += evolved.block(2 * a, 2 * a, 2, 2);
  bob = (bob + bob.adjoint()) / 2.0;
  return DensityMatrix(std::move(bob));
}

DensityMatrix teleport_output(const DensityMatrix& rho_in, const DensityMatrix& rho_channel,
                              ChannelKind channel) {
  return teleport_output(rho_in, rho_channel, protocol_unitary(channel));
}

std::string describe(const ComplementAssignment& assignment) {
  static constexpr std::array<const char*, 4> labels = {"|111>", "|011>", "(|110>-|101>)/sqrt2",
                                                         "(|010>-|001>)/sqrt2"};
  std::ostringstream out;
  for (std::size_t k = 0; k < assignment.size(); ++k) {
    if (k) out << ", ";
    out << labels[k] << "->" << to_string(assignment[k]);
  }
  return out.str();
}

ComplementSearchResult search_complement_corrections(const WFidelityTarget& target, double tol) {
  constexpr std::array<Environment, 3> envs = {Environment::ZeroTemperature,
                                               Environment::InfiniteTemperature,
                                               Environment::Dephasing};
  constexpr std::array<double, 3> gts = {0.25, 0.5, 1.0};
  const std::array<double, 3> thetas = {0.0, std::numbers::pi / 4.0, std::numbers::pi / 2.0};

  // Decohered channels and targets do not depend on the assignment.
  std::array<std::array<DensityMatrix, 3>, 3> channels{
      {{closed_w(envs[0], gts[0]), closed_w(envs[0], gts[1]), closed_w(envs[0], gts[2])},
       {closed_w(envs[1], gts[0]), closed_w(envs[1], gts[1]), closed_w(envs[1], gts[2])},
       {closed_w(envs[2], gts[0]), closed_w(envs[2], gts[1]), closed_w(envs[2], gts[2])}}};

  ComplementSearchResult result;
  result.best_error.fill(std::numeric_limits<double>::infinity());
  bool have_selection = false;

  for (int code = 0; code < 256; ++code) {
    const ComplementAssignment a = {static_cast<Pauli>((code >> 6) & 3),
                                    static_cast<Pauli>((code >> 4) & 3),
                                    static_cast<Pauli>((code >> 2) & 3),
                                    static_cast<Pauli>(code & 3)};
    const ProtocolUnitary protocol = w_protocol_unitary(a);
    int matched = 0;
    for (std::size_t e = 0; e < envs.size(); ++e) {
      double err = 0.0;
      for (std::size_t g = 0; g < gts.size(); ++g) {
        for (double theta : thetas) {
          const StateVector psi = input_state(PureStateAngles(theta, 0.0));
          const DensityMatrix out =
              teleport_output(DensityMatrix::pure(psi), channels[e][g], protocol);
          err = std::max(err, std::abs(fidelity_against_pure(psi, out) -
                                       target(envs[e], theta, gts[g])));
        }
      }
      result.best_error[e] = std::min(result.best_error[e], err);
      if (err < tol) {
        result.env_matches[e].push_back(a);
        ++matched;
      }
    }
    if (matched == 3) result.full_matches.push_back(a);
    if (!have_selection || matched > result.environments_matched) {
      result.selected = a;
      result.environments_matched = matched;
      have_selection = true;
    }
  }
  return result;
}

}  // namespace ghzw
