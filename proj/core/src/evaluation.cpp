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

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hlvqa/evaluator.hpp"

namespace hlvqa {

std::vector<Triple> solution_values(const ProblemSpec& problem, const SolutionState& s,
                                    const std::vector<double>& ts) {
  const ReadoutSpec spec = solution_readout(s);
  const AffineMap m = problem.map();
  const double k = m.dx_dt(), U = problem.amplitude;
  std::vector<double> xs;
  for (double t : ts) xs.push_back(m.to_x(t));
  // The engine only changes how derivatives would be measured, not their values.
  CachedEvaluator ev(spec.circuit, spec.cost, DiffEngine::HadamardTest);
  ev.set_points(xs, std::vector<PointNeed>(xs.size(), PointNeed::Full));
  std::vector<double> out;
  ev.evaluate(s.theta, out);
  std::vector<Triple> r(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i)
    r[i] = {U * (out[3 * i] + s.shift), U * out[3 * i + 1] * k, U * out[3 * i + 2] * k * k};
  return r;
}

SolutionSummary evaluate_solution(const ProblemSpec& problem, const SolutionState& s,
                                  int n_points) {
  if (n_points < 2) throw std::invalid_argument("evaluate_solution: need at least two points");
  std::vector<double> ts(n_points);
  for (int i = 0; i < n_points; ++i)
    ts[i] = problem.eval_lo + (problem.eval_hi - problem.eval_lo) * i / (n_points - 1.0);
  const auto vals = solution_values(problem, s, ts);

  SolutionSummary sum;
  double lo = 0.0, hi = 0.0;
  for (int i = 0; i < n_points; ++i) {
    EvaluationRow row;
    row.t = ts[i];
    row.u = vals[i];
    row.ref = problem.analytical(ts[i]);
    const double r = problem.residual(ts[i], row.u.f, row.u.f1, row.u.f2);
    row.de_loss = r * r;
    sum.total_de_loss += row.de_loss;
    sum.max_abs_error = std::max(sum.max_abs_error, std::abs(row.u.f - row.ref.f));
    lo = i == 0 ? row.ref.f : std::min(lo, row.ref.f);
    hi = i == 0 ? row.ref.f : std::max(hi, row.ref.f);
    sum.rows.push_back(row);
  }
  sum.total_de_loss /= n_points;
  sum.ref_range = hi - lo;

  const auto cons = problem.constraints();
  std::vector<double> ct;
  for (const auto& c : cons) ct.push_back(c.t);
  const auto cv = solution_values(problem, s, ct);
  for (std::size_t i = 0; i < cons.size(); ++i) {
    const Triple& u = cv[i];
    const double v = cons[i].order == 0 ? u.f : cons[i].order == 1 ? u.f1 : u.f2;
    sum.bc_loss += (v - cons[i].value) * (v - cons[i].value);
  }
  return sum;
}

}  // namespace hlvqa
