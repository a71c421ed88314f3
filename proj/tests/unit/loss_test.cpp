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

#include "hlvqa/loss.hpp"

#include <cmath>

#include <gtest/gtest.h>

namespace hlvqa {
namespace {

// u' = 0 with u(0) = u0: any constant readout is exact.
ProblemSpec constant_problem() {
  ProblemSpec p;
  p.kind = ProblemKind::Linear;
  p.mass = 0.0;
  p.damping = 1.0;
  p.stiffness = 0.0;
  p.u0 = 0.4;
  p.t_lo = 0.0;
  p.t_hi = 1.0;
  return p;
}

TEST(Loss, DistanceAndWeights) {
  EXPECT_DOUBLE_EQ(distance(Distance::Squared, -3.0), 9.0);
  EXPECT_DOUBLE_EQ(distance(Distance::Absolute, -3.0), 3.0);
  const LossBreakdown b = total_loss(1.0, 2.0, 4.0, kEtaHadamardLagrange);
  EXPECT_DOUBLE_EQ(b.total, 1.0 + 0.6 * 2.0 + 4.0);
  EXPECT_DOUBLE_EQ(total_loss(1.0, 2.0, 4.0, kEtaKyriienko).total, 3.0);
  EXPECT_THROW(total_loss(1.0, 1.0, 1.0, Eta{1.0, -0.1, 0.0}), std::invalid_argument);
}

TEST(Loss, FloatingShiftMeetsInitialValue) {
  const NodeSet nodes({0.1, 0.5, 0.8});
  ReadoutSpec spec = make_lagrange_readout(FeatureMapKind::LagrangeExtended, nodes);
  const std::vector<double> th{0.3, -1.2, 0.7};
  spec.shift = floating_shift(spec, 0.0, 2.5, th);
  EXPECT_NEAR(readout(spec, 0.0, th), 2.5, 1e-13);
}

TEST(Loss, ExactConstantSolutionHasZeroLoss) {
  const ProblemSpec p = constant_problem();
  const NodeSet nodes({0.1, 0.5, 0.8});
  ReadoutSpec spec = make_lagrange_readout(FeatureMapKind::LagrangeExtended, nodes);
  // theta = (t0, 0, 0) makes every alpha_j = cos t0, a constant readout.
  const std::vector<double> th{0.9, 0.0, 0.0};
  spec.shift = floating_shift(spec, 0.0, p.u0, th);
  EXPECT_NEAR(de_loss(p, spec, th, {0.1, 0.3, 0.7}), 0.0, 1e-20);
  EXPECT_NEAR(cs_loss(p, spec, th, false), 0.0, 1e-24);
  EXPECT_NEAR(reg_loss(spec, th, {{0.2, 0.4}, {0.6, 0.4}}), 0.0, 1e-24);
  EXPECT_THROW(de_loss(p, spec, th, {0.95}), std::out_of_range);
  EXPECT_THROW(de_loss(p, spec, th, {}), std::invalid_argument);
}

TEST(Loss, DeLossScalesWithResidual) {
  ProblemSpec p = constant_problem();
  p.damping = 0.0;
  p.stiffness = 1.0;  // residual = u
  const NodeSet nodes({0.1, 0.5});
  ReadoutSpec spec = make_lagrange_readout(FeatureMapKind::LagrangeExtended, nodes);
  spec.shift = 0.0;
  const std::vector<double> th{0.0, 0.0};  // readout 1
  EXPECT_NEAR(de_loss(p, spec, th, {0.2, 0.4}), 1.0, 1e-12);
  p.residual_scale = 2.0;
  EXPECT_NEAR(de_loss(p, spec, th, {0.2}), 0.25, 1e-12);
  spec.distance = Distance::Absolute;
  EXPECT_NEAR(de_loss(p, spec, th, {0.2}), 0.5, 1e-12);
}

TEST(Loss, ModelGradientMatchesFiniteDifference) {
  LossModel m;
  m.eta = kEtaHadamardLagrange;
  m.rows.push_back({LossGroup::DE, 0.5, {{0, 2.0}, {2, -1.0}}, 0.3});
  m.rows.push_back({LossGroup::DE, 0.5, {{1, 1.5}}, -0.2});
  m.rows.push_back({LossGroup::CS, 1.0, {{3, 1.0}, {0, -1.0}}, 0.1});
  m.rows.push_back({LossGroup::Reg, 1.0, {{4, 1.0}}, -0.7});
  const std::vector<double> o{0.2, -0.4, 0.9, 0.05, 1.1, 0.0};
  for (Distance d : {Distance::Squared, Distance::Absolute}) {
    m.dist = d;
    std::vector<double> g;
    m.gradient(o, g);
    ASSERT_EQ(g.size(), o.size());
    const double h = 1e-7;
    for (std::size_t k = 0; k < o.size(); ++k) {
      auto up = o, dn = o;
      up[k] += h;
      dn[k] -= h;
      const double fd = (m.evaluate(up).total - m.evaluate(dn).total) / (2 * h);
      EXPECT_NEAR(g[k], fd, 1e-6) << "k=" << k;
    }
  }
}

TEST(Loss, ModelGroupsAreReportedSeparately) {
  LossModel m;
  m.eta = {1.0, 0.5, 2.0};
  m.rows.push_back({LossGroup::DE, 1.0, {}, 1.0});
  m.rows.push_back({LossGroup::CS, 1.0, {}, 2.0});
  m.rows.push_back({LossGroup::Reg, 0.5, {}, 1.0});
  const LossBreakdown b = m.evaluate({});
  EXPECT_DOUBLE_EQ(b.de, 1.0);
  EXPECT_DOUBLE_EQ(b.cs, 4.0);
  EXPECT_DOUBLE_EQ(b.reg, 0.5);
  EXPECT_DOUBLE_EQ(b.total, 1.0 + 2.0 + 1.0);
}

}  // namespace
}  // namespace hlvqa
