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

#include "hlvqa/derivatives.hpp"

#include <cmath>

#include <gtest/gtest.h>

namespace hlvqa {
namespace {

const std::vector<double> kNodes{0.1, 0.35, 0.6, 0.85};
const std::vector<double> kTheta{0.4, -0.9, 1.3, 0.2};

// Value and derivatives of sum_j alpha_j L_j(x), alpha_j = prod_{k<=j} cos theta_k.
struct Poly {
  double f = 0, f1 = 0, f2 = 0;
};

Poly interpolant(double x) {
  Poly p;
  double alpha = 1.0;
  const int n = static_cast<int>(kNodes.size());
  for (int j = 0; j < n; ++j) {
    alpha *= std::cos(kTheta[j]);
    double den = 1.0;
    std::vector<double> r;
    for (int i = 0; i < n; ++i) {
      if (i == j) continue;
      den *= kNodes[j] - kNodes[i];
      r.push_back(kNodes[i]);
    }
    // Product of (x - r_i): value, first and second derivative by the product rule.
    double v = 1.0, d1 = 0.0, d2 = 0.0;
    for (double ri : r) {
      d2 = d2 * (x - ri) + 2.0 * d1;
      d1 = d1 * (x - ri) + v;
      v *= x - ri;
    }
    p.f += alpha * v / den;
    p.f1 += alpha * d1 / den;
    p.f2 += alpha * d2 / den;
  }
  return p;
}

class DerivativesTest : public ::testing::TestWithParam<FeatureMapKind> {};

TEST(Derivatives, ExtendedMatchesClassicalInterpolant) {
  const NodeSet nodes(kNodes);
  const Circuit c = build_lagrange_vqc(FeatureMapKind::LagrangeExtended, nodes);
  const CostOperator cost = lagrange_cost(nodes);
  for (double x : {0.0, 0.22, 0.5, 0.77}) {
    const Poly want = interpolant(x);
    EXPECT_NEAR(expectation(c, x, kTheta, cost), want.f, 1e-12);
    for (auto e : {DiffEngine::ShiftRule, DiffEngine::HadamardTest}) {
      EXPECT_NEAR(df_dx(c, x, kTheta, cost, e), want.f1, 1e-10) << engine_name(e);
      EXPECT_NEAR(d2f_dx2(c, x, kTheta, cost, e), want.f2, 1e-9) << engine_name(e);
    }
  }
}

TEST_P(DerivativesTest, EnginesAgreeOnThetaPartials) {
  const NodeSet nodes(kNodes);
  const Circuit c = build_lagrange_vqc(GetParam(), nodes, 2);
  const CostOperator cost = lagrange_cost(nodes);
  std::vector<double> th(8);
  for (int k = 0; k < 8; ++k) th[k] = 0.3 * k - 1.0;
  for (int a = 0; a < 8; ++a) {
    const double s = shift_rule_partial(c, 0.4, th, SlotId::theta(a), cost);
    const double h = hadamard_test_partial(c, 0.4, th, SlotId::theta(a), cost);
    EXPECT_NEAR(s, h, 1e-10);
    const double s2 = second_partial(c, 0.4, th, SlotId::theta(a), SlotId::theta((a + 3) % 8), cost,
                                     DiffEngine::ShiftRule);
    const double h2 = second_partial(c, 0.4, th, SlotId::theta(a), SlotId::theta((a + 3) % 8), cost,
                                     DiffEngine::HadamardTest);
    EXPECT_NEAR(s2, h2, 1e-10);
  }
}

INSTANTIATE_TEST_SUITE_P(Structures, DerivativesTest,
                         ::testing::Values(FeatureMapKind::LagrangeExtended,
                                           FeatureMapKind::LagrangeSimplified));

TEST(Derivatives, ThetaPartialMatchesFiniteDifference) {
  const Circuit c = build_chebyshev_vqc(3, 2);
  CostOperator cost = chebyshev_cost(3);
  std::vector<double> th{0.1, 0.5, -0.7, 1.1, -0.2, 0.9};
  const double h = 1e-6;
  for (int a = 0; a < 6; ++a) {
    auto up = th, dn = th;
    up[a] += h;
    dn[a] -= h;
    const double fd = (expectation(c, 0.3, up, cost) - expectation(c, 0.3, dn, cost)) / (2 * h);
    EXPECT_NEAR(hadamard_test_partial(c, 0.3, th, SlotId::theta(a), cost), fd, 1e-8);
  }
}

TEST(Derivatives, ChebyshevFeatureDerivativeMatchesFiniteDifference) {
  const Circuit c = build_chebyshev_vqc(2, 1);
  const CostOperator cost = chebyshev_cost(2);
  const std::vector<double> th{0.0, 0.0};
  // Zero ansatz: <Z_0> + <Z_1> = T_2 + T_2 T_4.
  auto f = [](double x) {
    const double t2 = 2 * x * x - 1, t4 = 8 * x * x * x * x - 8 * x * x + 1;
    return t2 + t2 * t4;
  };
  const double x = 0.37, h = 1e-5;
  EXPECT_NEAR(expectation(c, x, th, cost), f(x), 1e-13);
  EXPECT_NEAR(df_dx(c, x, th, cost), (f(x + h) - f(x - h)) / (2 * h), 1e-7);
  EXPECT_NEAR(d2f_dx2(c, x, th, cost, DiffEngine::HadamardTest),
              (f(x + h) - 2 * f(x) + f(x - h)) / (h * h), 1e-3);
}

TEST(Derivatives, CircuitCounts) {
  EXPECT_EQ(derivative_circuit_count(3, DiffEngine::HadamardTest), 1 + 3 + 9);
  EXPECT_EQ(derivative_circuit_count(3, DiffEngine::ShiftRule), 1 + 6 + 36);
}

TEST(Derivatives, HadamardCircuitsAddAnAncilla) {
  const Circuit c = build_chebyshev_vqc(2, 1);
  const Circuit h1 = hadamard_first_circuit(c, 0);
  EXPECT_EQ(h1.n_qubits, c.n_qubits + 1);
  EXPECT_THROW(hadamard_first_circuit(c, c.num_gates() - 1), std::invalid_argument);
}

TEST(Derivatives, RejectsFixedSlots) {
  const Circuit c = build_chebyshev_vqc(2, 1);
  EXPECT_THROW(shift_rule_partial(c, 0.3, {0, 0}, SlotId{SlotKind::Fixed, 0}, chebyshev_cost(2)),
               std::invalid_argument);
  EXPECT_THROW(shift_rule_partial(c, 0.3, {0, 0}, SlotId::theta(2), chebyshev_cost(2)),
               std::out_of_range);
}

}  // namespace
}  // namespace hlvqa
