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

#include "hlvqa/evaluation.hpp"

#include <cmath>

#include <gtest/gtest.h>

namespace hlvqa {
namespace {

TEST(Evaluation, ExactConstantSolution) {
  ProblemSpec p;
  p.kind = ProblemKind::Linear;
  p.mass = 0.0;
  p.damping = 1.0;
  p.stiffness = 0.0;
  p.u0 = 0.4;
  p.t_lo = p.eval_lo = 0.0;
  p.t_hi = p.eval_hi = 2.0;
  SolutionState s;
  s.nodes = {0.1, 0.5, 0.8};
  s.theta = {0.9, 0.0, 0.0};
  s.shift = p.u0 / p.amplitude - std::cos(0.9);
  const SolutionSummary r = evaluate_solution(p, s, 11);
  ASSERT_EQ(r.rows.size(), 11u);
  EXPECT_DOUBLE_EQ(r.rows.back().t, 2.0);
  EXPECT_NEAR(r.total_de_loss, 0.0, 1e-24);
  EXPECT_NEAR(r.bc_loss, 0.0, 1e-24);
  EXPECT_NEAR(r.max_abs_error, 0.0, 1e-12);
  EXPECT_NEAR(r.ref_range, 0.0, 1e-15);
  EXPECT_THROW(evaluate_solution(p, s, 1), std::invalid_argument);
}

// Classical interpolant with cumulative cosine weights, mapped to physical units.
TEST(Evaluation, ChainRuleToPhysicalTime) {
  const ProblemSpec p = dmss_problem();
  SolutionState s;
  s.nodes = {0.1, 0.45, 0.8};
  s.theta = {0.3, -0.6, 1.0};
  s.shift = 0.2;
  const double k = (p.b - p.a) / (p.t_hi - p.t_lo);
  for (double t : {0.0, 3.3, 9.0}) {
    const double x = p.a + k * (t - p.t_lo);
    double f = 0.0, f1 = 0.0, alpha = 1.0;
    for (int j = 0; j < 3; ++j) {
      alpha *= std::cos(s.theta[j]);
      double v = 1.0, d = 0.0, den = 1.0;
      for (int i = 0; i < 3; ++i) {
        if (i == j) continue;
        d = d * (x - s.nodes[i]) + v;
        v *= x - s.nodes[i];
        den *= s.nodes[j] - s.nodes[i];
      }
      f += alpha * v / den;
      f1 += alpha * d / den;
    }
    const Triple u = solution_values(p, s, {t})[0];
    EXPECT_NEAR(u.f, p.amplitude * (f + s.shift), 1e-12);
    EXPECT_NEAR(u.f1, p.amplitude * f1 * k, 1e-10);
  }
}

}  // namespace
}  // namespace hlvqa
