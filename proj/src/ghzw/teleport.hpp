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

#ifndef GHZW_TELEPORT_HPP_
#define GHZW_TELEPORT_HPP_

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "ghzw/core.hpp"
#include "ghzw/decoherence.hpp"

namespace ghzw {

/// Which subsystem passes through the environment before the protocol runs.
enum class Scenario { InputDecoheres, ChannelDecoheres, BothDecohere };

const char* to_string(Scenario scenario);

/// Correction applied by Bob. ZX means X first, then Z.
enum class Pauli { I, X, Z, ZX };

const char* to_string(Pauli p);
Operator pauli_matrix(Pauli p);

/// Coherent four-qubit teleportation unitary. Register order is
/// (input, Alice's first channel qubit, Alice's second channel qubit, Bob).
struct ProtocolUnitary {
  Operator u;
  ChannelKind channel;
};

/// Test hook for the negative control in the validation suite.
enum class GhzCircuitFault { None, DropConditionalZFromQubit3 };

/// CZ(3->4) CZ(1->4) CNOT(2->4) . (H1 x H3) . CNOT(1->2), qubits numbered
/// from 1 in register order. Bob's correction is X^{m2} Z^{m1 xor m3}.
ProtocolUnitary ghz_protocol_unitary(GhzCircuitFault fault = GhzCircuitFault::None);

/// Corrections for the four measurement outcomes outside the span of the
/// W teleportation basis, ordered as
/// |111>, |011>, (|110> - |101>)/sqrt2, (|010> - |001>)/sqrt2.
using ComplementAssignment = std::array<Pauli, 4>;

/// Assignment used by w_protocol_unitary(); see search_complement_corrections.
inline constexpr ComplementAssignment kWComplementCorrections = {Pauli::I, Pauli::X, Pauli::I,
                                                                 Pauli::X};

/// Alice's eight measurement vectors on qubits (1, 2, 3): the four W
/// teleportation vectors followed by the complement basis.
std::array<StateVector, 8> w_measurement_basis();

/// Maps each measurement vector to a computational basis state, i.e. the
/// adjoint of the change of basis whose columns are w_measurement_basis().
Operator w_basis_change_adjoint();

/// U = C . (U~^+ x I) where C applies Bob's correction controlled on the
/// computational-basis outcome of Alice's three qubits.
ProtocolUnitary w_protocol_unitary(const ComplementAssignment& complement = kWComplementCorrections);

const ProtocolUnitary& protocol_unitary(ChannelKind channel);

/// rho_out = Tr_{1,2,3}[ U (rho_in x rho_channel) U^+ ].
DensityMatrix teleport_output(const DensityMatrix& rho_in, const DensityMatrix& rho_channel,
                              const ProtocolUnitary& protocol);
DensityMatrix teleport_output(const DensityMatrix& rho_in, const DensityMatrix& rho_channel,
                              ChannelKind channel);

/// Target fidelity F(env, theta, gt) for the W channel with the channel
/// decohering and the input left intact.
using WFidelityTarget = std::function<double(Environment, double theta, double gt)>;

struct ComplementSearchResult {
  /// Assignments matching the target in every environment.
  std::vector<ComplementAssignment> full_matches;
  /// Assignments matching the target per environment, lexicographic order.
  std::array<std::vector<ComplementAssignment>, 3> env_matches;
  /// Smallest max-abs deviation over the probe grid, per environment.
  std::array<double, 3> best_error{};
  /// The assignment the search selects: the lexicographically first full
  /// match, or failing that the first assignment matching the most
  /// environments.
  ComplementAssignment selected{};
  int environments_matched = 0;
};

/// Exhaustive search over all 256 complement assignments, probing
/// gt in {0.25, 0.5, 1.0} and theta in {0, pi/4, pi/2}.
ComplementSearchResult search_complement_corrections(const WFidelityTarget& target,
                                                     double tol = 1e-9);

std::string describe(const ComplementAssignment& assignment);

}  // namespace ghzw

#endif  // GHZW_TELEPORT_HPP_
