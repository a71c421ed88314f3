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

#include "hlvqa/circuit.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "hlvqa/derivatives.hpp"

namespace hlvqa {
namespace {

// Classical Lagrange basis polynomial.
double lagrange_basis(const std::vector<double>& x, int j, double t) {
  double p = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (static_cast<int>(i) != j) p *= (t - x[i]) / (x[j] - x[i]);
  return p;
}

// Chebyshev polynomial of the first kind by the three-term recurrence.
double chebyshev_t(int n, double x) {
  double a = 1.0, b = x;
  if (n == 0) return a;
  for (int k = 1; k < n; ++k) {
    const double c = 2.0 * x * b - a;
    a = b;
    b = c;
  }
  return b;
}

const std::vector<double> kNodes{0.05, 0.3, 0.55, 0.8};

TEST(NodeSet, RhoIsHalfScaledProductOfGaps) {
  const NodeSet s({0.1, 0.5, 0.7});
  // rho_0 = (0.5 (0.1 - 0.5)) (0.5 (0.1 - 0.7)) = 0.06.
  EXPECT_NEAR(s.rho()[0], 0.06, 1e-15);
  EXPECT_NEAR(s.rho()[1], 0.5 * 0.4 * 0.5 * (-0.2), 1e-15);
  EXPECT_EQ(s.prefix(2).size(), 2);
}

TEST(NodeSet, RejectsInvalidNodes) {
  EXPECT_THROW(NodeSet(std::vector<double>{}), std::invalid_argument);
  EXPECT_THROW(NodeSet({0.5, 0.2}), std::invalid_argument);
  EXPECT_THROW(NodeSet({0.2, 0.2}), std::invalid_argument);
  EXPECT_THROW(NodeSet({0.2, 1.0}), std::invalid_argument);
  EXPECT_THROW(NodeSet({-0.1, 0.3}), std::invalid_argument);
}

TEST(Encoding, AnglesAndDerivatives) {
  Encoding e;
  e.kind = FeatureMapKind::LagrangeExtended;
  e.count = 2;
  e.nodes = {0.2, 0.6};
  EXPECT_NEAR(e.phi(1, 0.4), std::acos(-0.1), 1e-15);
  const double h = 1e-6;
  EXPECT_NEAR(e.dphi(0, 0.5), (e.phi(0, 0.5 + h) - e.phi(0, 0.5 - h)) / (2 * h), 1e-8);
  EXPECT_NEAR(e.d2phi(0, 0.5), (e.dphi(0, 0.5 + h) - e.dphi(0, 0.5 - h)) / (2 * h), 1e-7);

  Encoding c;
  c.kind = FeatureMapKind::Chebyshev;
  c.count = 3;
  EXPECT_NEAR(c.phi(2, 0.3), 6.0 * std::acos(0.3), 1e-14);
  EXPECT_THROW(c.phi(3, 0.3), std::out_of_range);
  EXPECT_THROW(c.phi(0, 1.5), std::domain_error);
}

TEST(Circuit, ExtendedMapSizes) {
  for (int n = 2; n <= 6; ++n) {
    std::vector<double> x;
    for (int i = 0; i < n; ++i) x.push_back(0.1 + 0.8 * i / n);
    const Circuit c = build_lagrange_extended(NodeSet(x));
    EXPECT_EQ(c.n_qubits, 2 * n);
    EXPECT_EQ(c.register_qubits, n);
    EXPECT_EQ(c.num_gates(), 7 * n - 1);
    EXPECT_EQ(c.variable_occurrences().size(), static_cast<std::size_t>(n));
  }
}

TEST(Circuit, SimplifiedMapUsesOneAncilla) {
  for (int n = 2; n <= 6; ++n) {
    std::vector<double> x;
    for (int i = 0; i < n; ++i) x.push_back(0.1 + 0.8 * i / n);
    const Circuit c = build_lagrange_simplified(NodeSet(x));
    EXPECT_EQ(c.n_qubits, n + 1);
    // End nodes are encoded once, interior nodes twice.
    EXPECT_EQ(c.variable_occurrences().size(), static_cast<std::size_t>(2 * n - 2));
  }
}

TEST(Circuit, AnsatzLayout) {
  const Circuit a = build_ansatz(3, 2);
  EXPECT_EQ(a.n_theta, 6);
  EXPECT_EQ(a.num_gates(), 2 * (3 + 2));
  EXPECT_EQ(a.ops[0].kind, GateKind::RX);
  EXPECT_EQ(a.ops[3].kind, GateKind::CNOT);
  EXPECT_EQ(a.ops[3].control, 0);
  EXPECT_EQ(a.ops[3].target, 1);
  EXPECT_THROW(build_ansatz(0, 1), std::invalid_argument);
}

TEST(Circuit, ComposeRejectsMisplacedSlots) {
  const NodeSet s({0.1, 0.4});
  EXPECT_THROW(compose(build_lagrange_extended(s), build_ansatz(5, 1)), std::invalid_argument);
  EXPECT_THROW(compose(build_ansatz(2, 1), build_ansatz(2, 1)), std::invalid_argument);
}

TEST(Circuit, ThetaLengthIsChecked) {
  const Circuit c = build_lagrange_vqc(FeatureMapKind::LagrangeExtended, NodeSet(kNodes));
  EXPECT_THROW(resolve_angles(c, 0.3, {0.0}), std::invalid_argument);
}

// Register readout at theta = 0 encodes the scaled node products.
TEST(LagrangeMap, ZeroAnsatzGivesScaledProducts) {
  const NodeSet nodes(kNodes);
  for (auto kind : {FeatureMapKind::LagrangeExtended, FeatureMapKind::LagrangeSimplified}) {
    const Circuit c = build_lagrange_vqc(kind, nodes);
    for (double x : {0.0, 0.17, 0.5, 0.93}) {
      const StateVector s = hlvqa::bind(c, x, std::vector<double>(4, 0.0));
      for (int j = 0; j < 4; ++j) {
        const double want = lagrange_basis(kNodes, j, x) * nodes.rho()[j];
        EXPECT_NEAR(expectation_z(s, j), want, 1e-13) << feature_map_name(kind) << " j=" << j;
      }
    }
  }
}

TEST(LagrangeMap, ExtendedReadoutIsCumulativeCosineCombination) {
  const NodeSet nodes(kNodes);
  const Circuit c = build_lagrange_vqc(FeatureMapKind::LagrangeExtended, nodes);
  const CostOperator cost = lagrange_cost(nodes);
  std::mt19937_64 g(9);
  std::uniform_real_distribution<double> u(-std::numbers::pi, std::numbers::pi);
  for (int k = 0; k < 25; ++k) {
    std::vector<double> th(4);
    for (double& t : th) t = u(g);
    const double x = 0.9 * (k + 0.5) / 25.0;
    double want = 0.0, alpha = 1.0;
    for (int j = 0; j < 4; ++j) {
      alpha *= std::cos(th[j]);
      want += alpha * lagrange_basis(kNodes, j, x);
    }
    EXPECT_NEAR(expectation(c, x, th, cost), want, 1e-12);
  }
}

TEST(LagrangeMap, StructuresAgreeAtZeroTheta) {
  const NodeSet nodes(kNodes);
  const CostOperator cost = lagrange_cost(nodes);
  const std::vector<double> zero(4, 0.0);
  for (double x : {0.02, 0.33, 0.61, 0.9}) {
    const double e = expectation(build_lagrange_vqc(FeatureMapKind::LagrangeExtended, nodes), x,
                                 zero, cost);
    const double s = expectation(build_lagrange_vqc(FeatureMapKind::LagrangeSimplified, nodes), x,
                                 zero, cost);
    EXPECT_NEAR(e, 1.0, 1e-12);
    EXPECT_NEAR(s, 1.0, 1e-12);
  }
}

TEST(ChebyshevMap, QubitsCarryEvenChebyshevPolynomials) {
  const Circuit c = build_chebyshev_vqc(4, 1);
  for (double x : {0.1, 0.45, 0.8}) {
    const StateVector s = hlvqa::bind(c, x, std::vector<double>(4, 0.0));
    // Zero ansatz leaves <Z_0> = T_2(x); CNOTs fold parities onto later qubits.
    EXPECT_NEAR(expectation_z(s, 0), chebyshev_t(2, x), 1e-13);
    EXPECT_NEAR(expectation_z(s, 1), chebyshev_t(2, x) * chebyshev_t(4, x), 1e-13);
  }
}

}  // namespace
}  // namespace hlvqa
