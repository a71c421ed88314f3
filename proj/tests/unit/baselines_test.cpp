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

#include "hlvqa/baselines.hpp"

#include <gtest/gtest.h>

#include "hlvqa/complexity.hpp"

namespace hlvqa {
namespace {

TEST(Kyriienko, SetupDefaults) {
  const SolverSetup s = ki_setup(5, 2, NodeKind::Kind2, 12);
  EXPECT_EQ(s.map, FeatureMapKind::Chebyshev);
  EXPECT_EQ(s.chebyshev_qubits, 5);
  EXPECT_EQ(s.layers, 2);
  EXPECT_EQ(s.nodes.size(), 12u);
  EXPECT_EQ(s.engine, DiffEngine::ShiftRule);
  EXPECT_EQ(s.eta.reg, 0.0);
  const ProblemSpec p = ki_dmss_problem();
  EXPECT_DOUBLE_EQ(p.t_hi, kKiTrainEnd);
  EXPECT_EQ(ki_schedule().kind, ScheduleKind::FixedSet);
  EXPECT_DOUBLE_EQ(ki_schedule().fixed_lr, kKiLearningRate);
}

TEST(Kyriienko, LiveCounterMatchesClosedForm) {
  const TrainingTrace t = run_ki_dmss(3, 1, NodeKind::Kind2, 4, 1, 1);
  ASSERT_EQ(t.records.size(), 1u);
  EXPECT_EQ(t.circuits_per_iteration_last, ki_budget(3, 1, 4).circuits_per_iteration);
}

TEST(Kyriienko, ShortRunIsDeterministic) {
  const auto a = run_ki_dmss(3, 1, NodeKind::Kind2, 4, 9, 10);
  const auto b = run_ki_dmss(3, 1, NodeKind::Kind2, 4, 9, 10);
  EXPECT_EQ(a.final_state.theta, b.final_state.theta);
}

}  // namespace
}  // namespace hlvqa
