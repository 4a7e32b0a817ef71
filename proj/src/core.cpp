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

#include "ghzw/core.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

namespace ghzw {

namespace {

bool is_supported_dim(Eigen::Index dim) {
  return dim >= 2 && dim <= kMaxDim && std::has_single_bit(static_cast<unsigned>(dim));
}

}  // namespace

const char* to_string(ChannelKind channel) {
  switch (channel) {
    case ChannelKind::Ghz:
      return "ghz";
    case ChannelKind::W:
      return "w";
  }
  return "?";
}

Operator::Operator(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || !is_supported_dim(entries_.rows())) {
    std::ostringstream msg;
    msg << "operator must be square with dimension 2, 4, 8 or 16 (got " << entries_.rows() << "x"
        << entries_.cols() << ")";
    throw std::invalid_argument(msg.str());
  }
  if (!entries_.allFinite()) {
    throw InvariantError("operator has non-finite entries");
  }
}

Operator Operator::identity(int qubits) {
  if (qubits < 1 || qubits > kMaxQubits) {
    throw std::invalid_argument("identity: qubit count must be in 1..4");
  }
  const int dim = 1 << qubits;
  return Operator(Matrix::Identity(dim, dim));
}

int Operator::qubits() const { return std::countr_zero(static_cast<unsigned>(dim())); }

Operator operator*(const Operator& a, const Operator& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("operator product: dimension mismatch");
  }
  return Operator(a.matrix() * b.matrix());
}

double hermiticity_defect(const Matrix& m) { return (m - m.adjoint()).cwiseAbs().maxCoeff(); }

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  }
  return (a - b).cwiseAbs().maxCoeff();
}

double min_eigenvalue(const Matrix& hermitian) {
  // Symmetrise first so the solver sees an exactly Hermitian input.
  const Matrix h = (hermitian + hermitian.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

DensityMatrix::DensityMatrix(Operator op) : op_(std::move(op)) {
  const Matrix& m = op_.matrix();
  const double herm = hermiticity_defect(m);
  if (herm > kHermitianTol) {
    throw InvariantError("density matrix is not Hermitian (defect " + std::to_string(herm) + ")");
  }
  const double trace_err = std::abs(m.trace() - Complex(1.0, 0.0));
  if (trace_err > kTraceTol) {
    throw InvariantError("density matrix trace differs from 1 by " + std::to_string(trace_err));
  }
  const double lowest = min_eigenvalue(m);
  if (lowest < kEigenvalueFloor) {
    throw InvariantError("density matrix has negative eigenvalue " + std::to_string(lowest));
  }
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  return DensityMatrix(Matrix(psi * psi.adjoint()));
}

double DensityMatrix::purity() const { return (matrix() * matrix()).trace().real(); }

PureStateAngles::PureStateAngles(double theta, double phi) : theta_(theta), phi_(phi) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw std::out_of_range("theta must lie in [0, pi]");
  }
  if (!(phi >= 0.0 && phi <= 2.0 * std::numbers::pi)) {
    throw std::out_of_range("phi must lie in [0, 2 pi]");
  }
}

Operator kron(const Operator& a, const Operator& b) {
  const int da = a.dim();
  const int db = b.dim();
  if (da * db > kMaxDim) {
    throw std::invalid_argument("kron: result would exceed 4 qubits");
  }
  Matrix out(da * db, da * db);
  for (int i = 0; i < da; ++i) {
    for (int j = 0; j < da; ++j) {
      out.block(i * db, j * db, db, db) = a(i, j) * b.matrix();
    }
  }
  return Operator(std::move(out));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  const int n = rho.qubits();
  if (keep.empty()) {
    throw std::invalid_argument("partial_trace: keep set is empty");
  }
  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
    throw std::invalid_argument("partial_trace: duplicate qubit in keep set");
  }
  if (kept.front() < 0 || kept.back() >= n) {
    throw std::invalid_argument("partial_trace: qubit index out of range");
  }
  std::vector<int> traced;
  for (int q = 0; q < n; ++q) {
    if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);
  }

  // Scatter the bits of a sub-register index onto the listed qubit positions.
  auto spread = [n](int value, const std::vector<int>& positions) {
    int index = 0;
    const int m = static_cast<int>(positions.size());
    for (int k = 0; k < m; ++k) {
      if ((value >> (m - 1 - k)) & 1) index |= 1 << (n - 1 - positions[k]);
    }
    return index;
  };

  const int dk = 1 << kept.size();
  const int dt = 1 << traced.size();
  Matrix out = Matrix::Zero(dk, dk);
  for (int r = 0; r < dk; ++r) {
    const int row_base = spread(r, kept);
    for (int c = 0; c < dk; ++c) {
      const int col_base = spread(c, kept);
      Complex sum{0.0, 0.0};
      for (int e = 0; e < dt; ++e) {
        const int env = spread(e, traced);
        sum += rho(row_base | env, col_base | env);
      }
      out(r, c) = sum;
    }
  }
  return DensityMatrix(std::move(out));
}

StateVector input_state(const PureStateAngles& angles) {
  using namespace std::complex_literals;
  StateVector psi(2);
  psi(0) = std::cos(angles.theta() / 2.0) * std::exp(1i * (angles.phi() / 2.0));
  psi(1) = std::sin(angles.theta() / 2.0) * std::exp(-1i * (angles.phi() / 2.0));
  return psi;
}

DensityMatrix ghz_state() {
  StateVector psi = StateVector::Zero(8);
  psi(0b000) = psi(0b111) = 1.0 / std::numbers::sqrt2;
  return DensityMatrix::pure(psi);
}

DensityMatrix w_state() {
  StateVector psi = StateVector::Zero(8);
  psi(0b001) = std::numbers::sqrt2 / 2.0;
  psi(0b010) = 0.5;
  psi(0b100) = 0.5;
  return DensityMatrix::pure(psi);
}

DensityMatrix channel_state(ChannelKind channel) {
  return channel == ChannelKind::Ghz ? ghz_state() : w_state();
}

double fidelity_against_pure(const StateVector& psi, const DensityMatrix& rho) {
  if (psi.size() != rho.dim()) {
    throw std::invalid_argument("fidelity: state and density matrix dimensions differ");
  }
  const double f = (psi.adjoint() * rho.matrix() * psi)(0, 0).real();
  return std::clamp(f, 0.0, 1.0);
}

namespace gates {

Operator pauli_x() {
  Matrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return Operator(std::move(m));
}

Operator pauli_y() {
  using namespace std::complex_literals;
  Matrix m(2, 2);
  m << 0.0, -1i, 1i, 0.0;
  return Operator(std::move(m));
}

Operator pauli_z() {
  Matrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return Operator(std::move(m));
}

Operator hadamard() {
  Matrix m(2, 2);
  m << 1.0, 1.0, 1.0, -1.0;
  return Operator(m / std::numbers::sqrt2);
}

Operator lowering() {
  Matrix m = Matrix::Zero(2, 2);
  m(1, 0) = 1.0;
  return Operator(std::move(m));
}

Operator raising() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  return Operator(std::move(m));
}

Operator projector(int bit) {
  if (bit != 0 && bit != 1) throw std::invalid_argument("projector: bit must be 0 or 1");
  Matrix m = Matrix::Zero(2, 2);
  m(bit, bit) = 1.0;
  return Operator(std::move(m));
}

Operator embed(const Operator& single, int qubit, int qubits) {
  if (single.dim() != 2) throw std::invalid_argument("embed: expected a single-qubit operator");
  if (qubits < 1 || qubits > kMaxQubits || qubit < 0 || qubit >= qubits) {
    throw std::invalid_argument("embed: qubit index out of range");
  }
  Operator out = qubit == 0 ? single : Operator::identity(1);
  for (int q = 1; q < qubits; ++q) {
    out = kron(out, q == qubit ? single : Operator::identity(1));
  }
  return out;
}

Operator controlled(const Operator& single, int control, int target, int qubits) {
  if (control == target) throw std::invalid_argument("controlled: control equals target");
  const Matrix off = embed(projector(0), control, qubits).matrix();
  const Matrix on = (embed(projector(1), control, qubits) * embed(single, target, qubits)).matrix();
  return Operator(off + on);
}

}  // namespace gates

}  // namespace ghzw
