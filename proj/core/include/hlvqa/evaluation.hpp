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

#pragma once

#include <vector>

#include "hlvqa/problems.hpp"
#include "hlvqa/training.hpp"

namespace hlvqa {

// One evaluation point in physical units.
struct EvaluationRow {
  double t = 0.0;
  Triple u;
  Triple ref;
  double de_loss = 0.0;  // squared physical residual
};

struct SolutionSummary {
  std::vector<EvaluationRow> rows;
  double total_de_loss = 0.0;  // mean of de_loss over rows
  double bc_loss = 0.0;        // summed squared constraint residuals, physical units
  double max_abs_error = 0.0;  // max |u - ref|
  double ref_range = 0.0;      // max ref - min ref
};

// Physical u, u', u'' of a trained solution at arbitrary t.
std::vector<Triple> solution_values(const ProblemSpec& problem, const SolutionState& s,
                                    const std::vector<double>& ts);

// Equispaced evaluation over [eval_lo, eval_hi] against the analytical oracle.
SolutionSummary evaluate_solution(const ProblemSpec& problem, const SolutionState& s,
                                  int n_points = 50);

}  // namespace hlvqa
