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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

namespace ghzw {
namespace {

constexpr std::array<Environment, 3> kEnvs = {
    Environment::ZeroTemperature, Environment::InfiniteTemperature, Environment::Dephasing};

DensityMatrix random_density(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Matrix a(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) a(r, c) = {n(rng), n(rng)};
  Matrix rho = a * a.adjoint();
  rho /= rho.trace();
  return DensityMatrix(Matrix((rho + rho.adjoint()) / 2.0));
}

// Independent oracle: exp(gt * L) on the column-stacked density matrix, with
// the jump operators written out from scratch.
Matrix liouvillian_exact(const Matrix& rho0, Environment env, double gt) {
  const int dim = static_cast<int>(rho0.rows());
  const int n = static_cast<int>(std::lround(std::log2(dim)));
  Matrix down = Matrix::Zero(2, 2);
  down(1, 0) = 1.0;
  const Matrix up = down.adjoint();
  std::vector<Matrix> singles;
  if (env == Environment::ZeroTemperature) singles = {down};
  if (env == Environment::InfiniteTemperature) singles = {down, up};
  if (env == Environment::Dephasing) singles = {up * down};

  const Matrix id = Matrix::Identity(dim, dim);
  Matrix super = Matrix::Zero(dim * dim, dim * dim);
  for (int q = 0; q < n; ++q) {
    for (const Matrix& s : singles) {
      Matrix l = Matrix::Identity(1, 1);
      for (int k = 0; k < n; ++k) {
        const Matrix f = k == q ? s : Matrix(Matrix::Identity(2, 2));
        l = Matrix(Eigen::kroneckerProduct(l, f));
      }
      const Matrix ldl = l.adjoint() * l;
      super += Matrix(Eigen::kroneckerProduct(l.conjugate(), l));
      super -= 0.5 * Matrix(Eigen::kroneckerProduct(id, ldl));
      super -= 0.5 * Matrix(Eigen::kroneckerProduct(ldl.transpose(), id));
    }
  }
  const Matrix prop = (gt * super).exp();
  const Eigen::Map<const StateVector> vec(rho0.data(), dim * dim);
  const StateVector out = prop * vec;
  return Eigen::Map<const Matrix>(out.data(), dim, dim);
}

TEST(LindbladOps, ZeroTemperatureIsLowering) {
  const auto ops = lindblad_ops(Environment::ZeroTemperature, 0, 1);
  ASSERT_EQ(ops.size(), 1u);
  Matrix expected = Matrix::Zero(2, 2);
  expected(1, 0) = 1.0;
  EXPECT_LT(max_abs_diff(ops[0].matrix(), expected), 1e-15);
}

TEST(LindbladOps, DephasingIsProjectorOnZero) {
  const auto ops = lindblad_ops(Environment::Dephasing, 0, 1);
  ASSERT_EQ(ops.size(), 1u);
  Matrix expected = Matrix::Zero(2, 2);
  expected(0, 0) = 1.0;
  EXPECT_LT(max_abs_diff(ops[0].matrix(), expected), 1e-15);
}

TEST(LindbladOps, InfiniteTemperatureEmbedsOnSecondQubit) {
  const auto ops = lindblad_ops(Environment::InfiniteTemperature, 1, 2);
  ASSERT_EQ(ops.size(), 2u);
  const Operator id = Operator::identity(1);
  EXPECT_LT(max_abs_diff(ops[0].matrix(), kron(id, gates::lowering()).matrix()), 1e-15);
  EXPECT_LT(max_abs_diff(ops[1].matrix(), kron(id, gates::raising()).matrix()), 1e-15);
}

TEST(LindbladRhs, SingleJumpFromGroundIndex) {
  const DensityMatrix rho = DensityMatrix::pure(input_state(PureStateAngles(0.0, 0.0)));
  Matrix expected = Matrix::Zero(2, 2);
  expected(0, 0) = -1.0;
  expected(1, 1) = 1.0;
  EXPECT_LT(max_abs_diff(lindblad_rhs(rho, Environment::ZeroTemperature, 1.0).matrix(), expected),
            1e-15);
}

TEST(LindbladRhs, AllOnesStateIsStationaryAtZeroTemperature) {
  const DensityMatrix rho = DensityMatrix::pure(input_state(PureStateAngles(std::numbers::pi, 0.0)));
  EXPECT_LT(lindblad_rhs(rho, Environment::ZeroTemperature, 1.0).matrix().cwiseAbs().maxCoeff(),
            1e-15);
}

TEST(LindbladRhs, DephasingHalvesCoherenceRate) {
  const DensityMatrix plus =
      DensityMatrix::pure(input_state(PureStateAngles(std::numbers::pi / 2.0, 0.0)));
  const Matrix rhs = lindblad_rhs(plus, Environment::Dephasing, 1.0).matrix();
  EXPECT_LT(std::abs(rhs(0, 0)), 1e-15);
  EXPECT_LT(std::abs(rhs(1, 1)), 1e-15);
  EXPECT_LT(std::abs(rhs(0, 1) + 0.5 * plus(0, 1)), 1e-15);
  EXPECT_LT(std::abs(rhs(1, 0) + 0.5 * plus(1, 0)), 1e-15);
}

TEST(LindbladRhs, TracelessForRandomStates) {
  std::mt19937_64 rng(23);
  for (Environment env : kEnvs) {
    for (int i = 0; i < 100; ++i) {
      const DensityMatrix rho = random_density(i % 2 ? 8 : 2, rng);
      EXPECT_LT(std::abs(lindblad_rhs(rho, env, 1.0).matrix().trace()), 1e-12);
    }
  }
}

TEST(EvolveRk4, ZeroTimeReturnsInputExactly) {
  std::mt19937_64 rng(1);
  const DensityMatrix rho = random_density(8, rng);
  EXPECT_EQ(max_abs_diff(evolve_rk4(rho, Environment::InfiniteTemperature, 1.0, 0.0, 10).matrix(),
                         rho.matrix()),
            0.0);
}

TEST(EvolveRk4, HalfLifeOfGroundIndexPopulation) {
  const DensityMatrix rho = DensityMatrix::pure(input_state(PureStateAngles(0.0, 0.0)));
  const Matrix out = evolve_rk4(rho, Environment::ZeroTemperature, std::numbers::ln2).matrix();
  Matrix expected = Matrix::Zero(2, 2);
  expected(0, 0) = expected(1, 1) = 0.5;
  EXPECT_LT(max_abs_diff(out, expected), 1e-8);
}

TEST(EvolveRk4, GhzCoherenceUnderDephasing) {
  const Matrix out = evolve_rk4(ghz_state(), Environment::Dephasing, 1.0).matrix();
  EXPECT_NEAR(out(0, 7).real(), std::exp(-1.5) / 2.0, 1e-8);
}

TEST(EvolveRk4, DephasingKeepsDiagonal) {
  std::mt19937_64 rng(2);
  const DensityMatrix rho = random_density(8, rng);
  const Matrix out = evolve_rk4(rho, Environment::Dephasing, 1.3).matrix();
  EXPECT_LT((out.diagonal() - rho.matrix().diagonal()).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(EvolveRk4, FixedPoints) {
  const Matrix zero_t = evolve_rk4(ghz_state(), Environment::ZeroTemperature, 10.0).matrix();
  EXPECT_GT(zero_t(7, 7).real(), 0.9999);
  EXPECT_GT(evolve_rk4(w_state(), Environment::ZeroTemperature, 10.0)(7, 7).real(), 0.9999);
  const Matrix hot = evolve_rk4(w_state(), Environment::InfiniteTemperature, 10.0).matrix();
  EXPECT_LT(max_abs_diff(hot, Matrix::Identity(8, 8) / 8.0), 1e-4);
}

TEST(EvolveRk4, FourthOrderConvergence) {
  std::mt19937_64 rng(4);
  const DensityMatrix rho = random_density(4, rng);
  const Matrix exact = liouvillian_exact(rho.matrix(), Environment::InfiniteTemperature, 1.0);
  const double coarse =
      max_abs_diff(evolve_rk4(rho, Environment::InfiniteTemperature, 1.0, 1.0, 20).matrix(), exact);
  const double fine =
      max_abs_diff(evolve_rk4(rho, Environment::InfiniteTemperature, 1.0, 1.0, 40).matrix(), exact);
  EXPECT_NEAR(std::log2(coarse / fine), 4.0, 0.3);
}

TEST(EvolveRk4, RejectsBadArguments) {
  EXPECT_THROW(evolve_rk4(ghz_state(), Environment::Dephasing, 1.0, -1.0, 10),
               std::invalid_argument);
  EXPECT_THROW(evolve_rk4(ghz_state(), Environment::Dephasing, 1.0, 1.0, 0),
               std::invalid_argument);
}

TEST(ClosedSingleQubit, MatchesQuotedFormulas) {
  std::mt19937_64 rng(6);
  const DensityMatrix rho = random_density(2, rng);
  const double gt = 0.7;
  const double e = std::exp(-gt);
  const Matrix z = closed_single_qubit(rho, Environment::ZeroTemperature, gt).matrix();
  EXPECT_NEAR(z(0, 0).real(), rho(0, 0).real() * e, 1e-15);
  EXPECT_LT(std::abs(z(0, 1) - rho(0, 1) * std::exp(-gt / 2.0)), 1e-15);
  EXPECT_NEAR(z(1, 1).real(), 1.0 - rho(0, 0).real() * e, 1e-15);
  const Matrix i = closed_single_qubit(rho, Environment::InfiniteTemperature, gt).matrix();
  const double diff = (rho(0, 0) - rho(1, 1)).real();
  EXPECT_NEAR(i(0, 0).real(), (1.0 + diff * e * e) / 2.0, 1e-15);
  EXPECT_NEAR(i(1, 1).real(), (1.0 - diff * e * e) / 2.0, 1e-15);
  EXPECT_LT(std::abs(i(0, 1) - rho(0, 1) * e), 1e-15);
  EXPECT_LT(max_abs_diff(closed_single_qubit(rho, Environment::Dephasing, 0.0).matrix(),
                         rho.matrix()),
            1e-15);
}

TEST(ClosedGhz, ZeroTemperatureComponents) {
  const double gt = 0.4;
  const double e1 = std::exp(-gt), e2 = std::exp(-2 * gt), e3 = std::exp(-3 * gt);
  const Matrix m = closed_ghz(Environment::ZeroTemperature, gt).matrix();
  EXPECT_NEAR(m(0, 0).real(), e3 / 2.0, 1e-15);
  EXPECT_NEAR(m(0, 7).real(), std::exp(-1.5 * gt) / 2.0, 1e-15);
  for (int k : {1, 2, 4}) EXPECT_NEAR(m(k, k).real(), (e2 - e3) / 2.0, 1e-15);
  for (int k : {3, 5, 6}) EXPECT_NEAR(m(k, k).real(), e1 / 2.0 - e2 + e3 / 2.0, 1e-15);
  EXPECT_NEAR(m(7, 7).real(), 1.0 - 1.5 * e1 + 1.5 * e2 - 0.5 * e3, 1e-15);
}

TEST(ClosedW, ZeroTemperatureComponents) {
  const double gt = 0.4;
  const double e1 = std::exp(-gt), e2 = std::exp(-2 * gt);
  const double u = e1 - e2;
  const Matrix m = closed_w(Environment::ZeroTemperature, gt).matrix();
  EXPECT_NEAR(m(1, 1).real(), e2 / 2.0, 1e-15);
  EXPECT_NEAR(m(1, 2).real(), e2 / (2.0 * std::numbers::sqrt2), 1e-15);
  EXPECT_NEAR(m(1, 4).real(), e2 / (2.0 * std::numbers::sqrt2), 1e-15);
  EXPECT_NEAR(m(2, 4).real(), e2 / 4.0, 1e-15);
  EXPECT_NEAR(m(3, 3).real(), 0.75 * u, 1e-15);
  EXPECT_NEAR(m(3, 5).real(), 0.25 * u, 1e-15);
  EXPECT_NEAR(m(3, 6).real(), std::numbers::sqrt2 * u / 4.0, 1e-15);
  EXPECT_NEAR(m(6, 6).real(), u / 2.0, 1e-15);
  EXPECT_NEAR(m(7, 7).real(), 1.0 - 2.0 * e1 + e2, 1e-15);
}

TEST(ClosedW, DephasingAtZeroIsPristine) {
  EXPECT_LT(max_abs_diff(closed_w(Environment::Dephasing, 0.0).matrix(), w_state().matrix()),
            1e-15);
}

TEST(ClosedForms, AgreeWithLiouvillianExponential) {
  std::mt19937_64 rng(8);
  const DensityMatrix single = random_density(2, rng);
  for (Environment env : kEnvs) {
    for (double gt : {0.05, 0.5, 1.7, 4.0}) {
      EXPECT_LT(max_abs_diff(closed_single_qubit(single, env, gt).matrix(),
                             liouvillian_exact(single.matrix(), env, gt)),
                1e-12)
          << to_string(env) << " gt=" << gt;
      EXPECT_LT(max_abs_diff(closed_ghz(env, gt).matrix(),
                             liouvillian_exact(ghz_state().matrix(), env, gt)),
                1e-12)
          << to_string(env) << " gt=" << gt;
      EXPECT_LT(max_abs_diff(closed_w(env, gt).matrix(),
                             liouvillian_exact(w_state().matrix(), env, gt)),
                1e-12)
          << to_string(env) << " gt=" << gt;
    }
  }
}

TEST(ClosedForms, IntegratorAgreesOnGrid) {
  std::mt19937_64 rng(10);
  const DensityMatrix single = random_density(2, rng);
  for (Environment env : kEnvs) {
    for (int k = 1; k <= 20; ++k) {
      const double gt = 0.1 * k;
      EXPECT_LT(max_abs_diff(evolve_rk4(single, env, gt).matrix(),
                             closed_single_qubit(single, env, gt).matrix()),
                1e-8);
      if (k % 5 == 0) {
        EXPECT_LT(max_abs_diff(evolve_rk4(ghz_state(), env, gt).matrix(),
                               closed_ghz(env, gt).matrix()),
                  1e-8);
        EXPECT_LT(max_abs_diff(evolve_rk4(w_state(), env, gt).matrix(), closed_w(env, gt).matrix()),
                  1e-8);
      }
    }
  }
}

TEST(ClosedForms, ValidDensityMatricesOverTime) {
  for (Environment env : kEnvs) {
    for (double gt : {0.0, 0.01, 0.3, 1.0, 5.0, 30.0}) {
      for (ChannelKind ch : {ChannelKind::Ghz, ChannelKind::W}) {
        const DensityMatrix rho = ClosedFormChannel{ch, env}(gt);
        EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 1e-12);
        EXPECT_GT(min_eigenvalue(rho.matrix()), -1e-12);
      }
    }
  }
}

}  // namespace
}  // namespace ghzw
