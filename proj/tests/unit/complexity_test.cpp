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

#include "hlvqa/complexity.hpp"

#include <gtest/gtest.h>

#include "hlvqa/baselines.hpp"
#include "hlvqa/training.hpp"

namespace hlvqa {
namespace {

TEST(Budget, ChebyshevCircuitCount) {
  // 13 points, 1 + 2 * 10 parameter shifts, shift-rule x derivatives on 5 encodings.
  const GateBudget b = ki_budget(5, 2, 12);
  EXPECT_EQ(b.circuits_per_iteration, 13 * 21 * (1 + 10 + 100));
  EXPECT_EQ(b.gates_per_circuit.at("f"), 5 + 2 * 10);
}

TEST(Budget, LagrangeCircuitCount) {
  // Hadamard tests: 1 + n + n^2 circuits per point.
  const GateBudget b = hl_budget(7, 8, FeatureMapKind::LagrangeExtended);
  EXPECT_EQ(b.circuits_per_iteration, 8 * 15 * (1 + 7 + 49));
  EXPECT_EQ(b.gates_per_circuit.at("df"), b.gates_per_circuit.at("f") + 1);
  EXPECT_EQ(b.gates_per_circuit.at("d2f"), b.gates_per_circuit.at("f") + 2);
  EXPECT_GT(hl_budget(7, 8, FeatureMapKind::LagrangeSimplified).gates_per_circuit.at("f"),
            b.gates_per_circuit.at("f"));
}

TEST(Budget, DroppedTermsShrinkTheBudget) {
  DeTerms t;
  t.f2 = false;
  EXPECT_EQ(hl_budget(4, 3, FeatureMapKind::LagrangeExtended, t).circuits_per_iteration,
            3 * 9 * (1 + 4));
  EXPECT_LT(ki_budget(4, 1, 5, t).circuits_per_iteration, ki_budget(4, 1, 5).circuits_per_iteration);
}

TEST(Budget, GrowsWithProblemSize) {
  for (int n = 2; n < 8; ++n) {
    EXPECT_LT(hl_budget(n, 5, FeatureMapKind::LagrangeExtended).gates_per_iteration,
              hl_budget(n + 1, 5, FeatureMapKind::LagrangeExtended).gates_per_iteration);
    EXPECT_LT(ki_budget(n, 2, 10).gates_per_iteration, ki_budget(n + 1, 2, 10).gates_per_iteration);
  }
}

TEST(Budget, AccumulateAddsWholeIterations) {
  GateBudget b = hl_budget(3, 2, FeatureMapKind::LagrangeExtended);
  b.accumulate(4);
  b.accumulate(1);
  EXPECT_EQ(b.total_circuits, 5 * b.circuits_per_iteration);
  EXPECT_EQ(b.total_gates, 5 * b.gates_per_iteration);
}

TEST(Budget, SatoObservablesAndCircuits) {
  EXPECT_EQ(sato_observables(BoundaryKind::Periodic), 3);
  EXPECT_EQ(sato_observables(BoundaryKind::Dirichlet), 4);
  EXPECT_EQ(sato_observables(BoundaryKind::Neumann), 5);
  // 5 layers of 8 parameters plus 5 encoding angles.
  EXPECT_EQ(sato_budget(BoundaryKind::Neumann, 5, 5, 8).circuits_per_iteration, 5 * 46);
  EXPECT_THROW(sato_budget(BoundaryKind::Neumann, 0, 5, 8), std::invalid_argument);
}

TEST(Budget, ClosedFormMatchesLiveCircuitCounter) {
  const ProblemSpec p = dmss_problem();
  SolverSetup s;
  s.nodes = make_nodes(NodeKind::Kind1, p.a, p.b, 3);
  const TrainingTrace t = run_training(p, s, Schedule{}, 1, 1);
  // Readout points: three DE nodes plus the constraint point.
  EXPECT_EQ(t.circuits_per_iteration_last,
            hl_budget(3, 4, FeatureMapKind::LagrangeExtended).circuits_per_iteration);
}

}  // namespace
}  // namespace hlvqa
