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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hlvqa/complexity.hpp"
#include "hlvqa/evaluation.hpp"
#include "hlvqa/training.hpp"
#include "hlvqa_app/config.hpp"

namespace hlvqa::app {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SeedResult {
  std::uint64_t seed = 0;
  TrainingTrace trace;
  SolutionSummary summary;
  // 50-point DE loss of the state at the end of part 1 (two-part schedule).
  std::optional<double> part1_eval_loss;
  double wall_seconds = 0.0;  // never written to report files
};

struct BudgetReport {
  GateBudget closed_form;
  int readout_points = 0;
  std::optional<GateBudget> sato;
};

struct RunReport {
  RunConfig config;
  std::vector<SeedResult> seeds;
  int selected = -1;  // index into seeds for select=best
  BudgetReport budget;

  bool any_diverged() const;
};

// Distinct encoded points one training iteration reads out on the full node set.
int readout_point_count(const ProblemSpec& problem, const std::vector<double>& nodes);

BudgetReport budget_for(const RunConfig& c);
nlohmann::json budget_json(const BudgetReport& b);

// Trains every seed. Progress lines go to `log` when non-null.
RunReport execute(const RunConfig& c, std::ostream* log = nullptr);

// Right half from the left one by the point symmetry u(a + b - x) = -u(x).
std::vector<EvaluationRow> mirror_rows(const ProblemSpec& problem,
                                       const std::vector<EvaluationRow>& rows);

// Writes the report file set into `dir`; throws IoError naming the path.
std::vector<std::filesystem::path> emit_report(const RunReport& r, const std::filesystem::path& dir);

std::string format_double(double v);

}  // namespace hlvqa::app
