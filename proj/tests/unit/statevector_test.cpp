// Copyright 2026 The hlvqa Authors.
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

#include "hlvqa/statevector.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

namespace hlvqa {
namespace {

using Dense = std::vector<std::vector<cplx>>;

// Dense 2^n operator of a single-qubit matrix on qubit q (qubit 0 = LSB).
Dense embed(int n, int q, const cplx m[4]) {
  const std::size_t dim = std::size_t{1} << n;
  Dense d(dim, std::vector<cplx>(dim, 0.0));
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      if ((r & ~(std::size_t{1} << q)) != (c & ~(std::size_t{1} << q))) continue;
      d[r][c] = m[2 * ((r >> q) & 1) + ((c >> q) & 1)];
    }
  return d;
}

std::vector<cplx> apply_dense(const Dense& d, const std::vector<cplx>& v) {
  std::vector<cplx> out(v.size(), 0.0);
  for (std::size_t r = 0; r < v.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c) out[r] += d[r][c] * v[c];
  return out;
}

StateVector random_state(int n, std::mt19937_64& g) {
  std::normal_distribution<double> nd;
  StateVector s(n);
  double norm = 0.0;
  for (auto& a : s.amplitudes()) {
    a = {nd(g), nd(g)};
    norm += std::norm(a);
  }
  s.scale(1.0 / std::sqrt(norm));
  return s;
}

TEST(StateVector, StartsInZeroState) {
  const StateVector s = init_zero_state(3);
  EXPECT_EQ(s.size(), 8u);
  EXPECT_EQ(s[0], cplx(1.0, 0.0));
  EXPECT_DOUBLE_EQ(s.norm_squared(), 1.0);
  for (int q = 0; q < 3; ++q) EXPECT_DOUBLE_EQ(expectation_z(s, q), 1.0);
}

TEST(StateVector, RejectsBadSizes) {
  EXPECT_THROW(StateVector(0), std::invalid_argument);
  EXPECT_THROW(StateVector(kMaxQubits + 1), std::invalid_argument);
}

TEST(StateVector, RotationMatricesMatchClosedForm) {
  const double a = 0.7;
  const double c = std::cos(a / 2), s = std::sin(a / 2);
  cplx m[4];
  gate_matrix(Gate::rx(0, a), m);
  EXPECT_NEAR(std::abs(m[0] - cplx(c, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(m[1] - cplx(0, -s)), 0.0, 1e-15);
  gate_matrix(Gate::ry(0, a), m);
  EXPECT_NEAR(std::abs(m[1] - cplx(-s, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(m[2] - cplx(s, 0)), 0.0, 1e-15);
  gate_matrix(Gate::rz(0, a), m);
  EXPECT_NEAR(std::abs(m[0] - std::polar(1.0, -a / 2)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(m[3] - std::polar(1.0, a / 2)), 0.0, 1e-15);
}

TEST(StateVector, SingleQubitGatesMatchDenseOperator) {
  std::mt19937_64 g(11);
  for (int n = 1; n <= 4; ++n) {
    for (int q = 0; q < n; ++q) {
      for (Gate gate : {Gate::rx(q, 0.3), Gate::ry(q, -1.1), Gate::rz(q, 2.4), Gate::h(q)}) {
        StateVector s = random_state(n, g);
        cplx m[4];
        gate_matrix(gate, m);
        const auto want = apply_dense(embed(n, q, m), s.amplitudes());
        s.apply(gate);
        for (std::size_t i = 0; i < want.size(); ++i) EXPECT_NEAR(std::abs(s[i] - want[i]), 0.0, 1e-14);
      }
    }
  }
}

TEST(StateVector, CnotPermutesBasisStates) {
  // |q1 q0> = |01> (index 1), control 0 -> target 1 gives |11> (index 3).
  StateVector s(2);
  s.apply(Gate::rx(0, std::numbers::pi));
  s.apply(Gate::cnot(0, 1));
  EXPECT_NEAR(std::norm(s[3]), 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(expectation_z(s, 1), -1.0);
}

TEST(StateVector, BellStateHasZeroMagnetizationAndFullCorrelation) {
  StateVector s(2);
  s.apply(Gate::h(0));
  s.apply(Gate::cnot(0, 1));
  EXPECT_NEAR(std::norm(s[0]), 0.5, 1e-15);
  EXPECT_NEAR(std::norm(s[3]), 0.5, 1e-15);
  EXPECT_NEAR(expectation_z(s, 0), 0.0, 1e-15);
  CostOperator z1{{{1, 1.0}}};
  EXPECT_NEAR(expectation_correlated_z(s, 0, z1), 1.0, 1e-15);
}

TEST(StateVector, GatesPreserveNorm) {
  std::mt19937_64 g(5);
  StateVector s = random_state(5, g);
  for (int k = 0; k < 40; ++k) {
    s.apply(Gate::ry(k % 5, 0.1 * k));
    s.apply(Gate::cnot(k % 5, (k + 2) % 5));
  }
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-13);
}

TEST(StateVector, WeightedZIsLinearInTerms) {
  std::mt19937_64 g(3);
  const StateVector s = random_state(3, g);
  CostOperator op{{{0, 0.5}, {2, -2.0}}};
  EXPECT_NEAR(expectation_weighted_z(s, op), 0.5 * expectation_z(s, 0) - 2.0 * expectation_z(s, 2),
              1e-15);
  const auto d = op.diagonal(3);
  ASSERT_EQ(d.size(), 8u);
  EXPECT_DOUBLE_EQ(d[0], -1.5);
  EXPECT_DOUBLE_EQ(d[5], -0.5 + 2.0);
}

TEST(StateVector, RzAppendedLeavesWeightedZUnchanged) {
  std::mt19937_64 g(17);
  for (int k = 0; k < 20; ++k) {
    StateVector s = random_state(4, g);
    CostOperator op{{{0, 1.0}, {1, -0.3}, {3, 0.8}}};
    const double before = expectation_weighted_z(s, op);
    s.apply(Gate::rz(k % 4, 0.37 * k - 2.0));
    EXPECT_NEAR(expectation_weighted_z(s, op), before, 1e-12);
  }
}

TEST(StateVector, MatrixElementWithItselfIsExpectation) {
  std::mt19937_64 g(23);
  const StateVector s = random_state(3, g);
  CostOperator op{{{1, 1.3}}};
  const cplx m = matrix_element_weighted_z(s, op, s);
  EXPECT_NEAR(m.real(), expectation_weighted_z(s, op), 1e-15);
  EXPECT_NEAR(m.imag(), 0.0, 1e-15);
}

TEST(StateVector, RejectsOutOfRangeQubits) {
  StateVector s(2);
  EXPECT_THROW(s.apply(Gate::h(2)), std::out_of_range);
  EXPECT_THROW(s.apply(Gate::cnot(1, 1)), std::invalid_argument);
}

}  // namespace
}  // namespace hlvqa
