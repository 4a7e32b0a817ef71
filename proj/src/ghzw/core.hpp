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

#ifndef GHZW_CORE_HPP_
#define GHZW_CORE_HPP_

#include <complex>
#include <span>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace ghzw {

using Complex = std::complex<double>;
using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
using StateVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

inline constexpr int kMaxQubits = 4;
inline constexpr int kMaxDim = 1 << kMaxQubits;

// Tolerances carried by every DensityMatrix.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kEigenvalueFloor = -1e-9;

/// Raised when a value would break a documented invariant (dimension,
/// Hermiticity, trace, positivity).
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for a combination of inputs the library has no model for.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ChannelKind { Ghz, W };

const char* to_string(ChannelKind channel);

/// Square complex matrix on 1 to 4 qubits.
///
/// Basis convention: index j (0-based) is the bitstring of j with the most
/// significant bit belonging to qubit 0, and bit value 0 meaning |0>. So for
/// three qubits index 1 is |001> and index 7 is |111>.
class Operator {
 public:
  /// Throws std::invalid_argument unless the matrix is square with
  /// dimension 2, 4, 8 or 16, and InvariantError for non-finite entries.
  explicit Operator(Matrix entries);

  static Operator identity(int qubits);

  int dim() const { return static_cast<int>(entries_.rows()); }
  int qubits() const;
  const Matrix& matrix() const { return entries_; }
  Complex operator()(int row, int col) const { return entries_(row, col); }

  Operator adjoint() const { return Operator(entries_.adjoint()); }

 private:
  Matrix entries_;
};

Operator operator*(const Operator& a, const Operator& b);

/// Hermitian, unit-trace, positive-semidefinite operator.
class DensityMatrix {
 public:
  /// Validates all three invariants; throws InvariantError on violation.
  explicit DensityMatrix(Operator op);
  explicit DensityMatrix(Matrix entries) : DensityMatrix(Operator(std::move(entries))) {}

  /// |psi><psi| for a normalised state vector.
  static DensityMatrix pure(const StateVector& psi);

  int dim() const { return op_.dim(); }
  int qubits() const { return op_.qubits(); }
  const Operator& op() const { return op_; }
  const Matrix& matrix() const { return op_.matrix(); }
  Complex operator()(int row, int col) const { return op_(row, col); }

  double purity() const;

 private:
  Operator op_;
};

/// Polar angle theta in [0, pi] and azimuth phi in [0, 2 pi].
class PureStateAngles {
 public:
  /// Throws std::out_of_range when either angle leaves its range.
  PureStateAngles(double theta, double phi);

  double theta() const { return theta_; }
  double phi() const { return phi_; }

 private:
  double theta_;
  double phi_;
};

Operator kron(const Operator& a, const Operator& b);

/// Traces out every qubit not listed in `keep`. Kept qubits retain their
/// relative order. Throws std::invalid_argument for an empty or malformed
/// keep set.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);

/// cos(theta/2) e^{i phi/2} |0> + sin(theta/2) e^{-i phi/2} |1>
StateVector input_state(const PureStateAngles& angles);

/// (|000> + |111>) / sqrt(2)
DensityMatrix ghz_state();
/// (sqrt(2)|001> + |010> + |100>) / 2
DensityMatrix w_state();
DensityMatrix channel_state(ChannelKind channel);

/// <psi|rho|psi>, clamped to [0, 1].
double fidelity_against_pure(const StateVector& psi, const DensityMatrix& rho);

// Diagnostics shared by tests and the validation report.
double hermiticity_defect(const Matrix& m);
double max_abs_diff(const Matrix& a, const Matrix& b);
double min_eigenvalue(const Matrix& hermitian);

namespace gates {
Operator pauli_x();
Operator pauli_y();
Operator pauli_z();
Operator hadamard();
/// sigma^- = |1><0| (moves population from |0> to |1>).
Operator lowering();
/// sigma^+ = |0><1|
Operator raising();
Operator projector(int bit);

/// Single-qubit operator placed on `qubit` of an n-qubit register.
Operator embed(const Operator& single, int qubit, int qubits);
/// Controlled single-qubit gate; control and target are register positions.
Operator controlled(const Operator& single, int control, int target, int qubits);
}  // namespace gates

}  // namespace ghzw

#endif  // GHZW_CORE_HPP_
