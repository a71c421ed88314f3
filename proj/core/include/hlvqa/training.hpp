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
#include <string>
#include <vector>

#include "hlvqa/loss.hpp"
#include "hlvqa/problems.hpp"

namespace hlvqa {

struct AdamConfig {
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

struct AdamState {
  std::vector<double> theta, m, v;
  int step_count = 0;
  double learning_rate = 0.01;

  static AdamState init(std::vector<double> theta, double lr);
};

AdamState adam_step(const AdamState& state, const std::vector<double>& gradient,
                    const AdamConfig& cfg = {});

// lr = rates[i] for the first i with loss > thresholds[i], else rates.back().
struct LrPolicy {
  std::vector<double> thresholds{0.1, 0.02};
  std::vector<double> rates{0.04, 0.02, 0.01};

  double rate(double loss) const;
  void validate() const;
};

enum class ScheduleKind { FixedSet, TwoPartEvolving };

struct Schedule {
  ScheduleKind kind = ScheduleKind::FixedSet;
  double fixed_lr = 0.01;
  int initial_nodes = 3;
  LrPolicy part1;
  double part2_lr = 0.01;
  int window = 3;
  // Restart the Adam moments whenever the point set changes.
  bool reset_moments = true;
};

// What the solver trains and on which points.
struct SolverSetup {
  FeatureMapKind map = FeatureMapKind::LagrangeExtended;
  // Encoded points: interpolation nodes for Lagrange maps, controlled
  // points for the Chebyshev map.
  std::vector<double> nodes;
  int layers = 1;
  int chebyshev_qubits = 5;
  DiffEngine engine = DiffEngine::HadamardTest;
  Eta eta = kEtaHadamardLagrange;
  Distance distance = Distance::Squared;
  double eps_loss = 1e-4;
  double eps_grad = 1e-4;

  void validate() const;
};

// Enough to rebuild the readout f_theta(x) + shift.
struct SolutionState {
  FeatureMapKind map = FeatureMapKind::LagrangeExtended;
  std::vector<double> nodes;  // register nodes (Lagrange) or empty
  int layers = 1;
  int chebyshev_qubits = 5;
  std::vector<double> theta;
  double shift = 0.0;
};

ReadoutSpec solution_readout(const SolutionState& s);

struct TraceRecord {
  int iter = 0;
  LossBreakdown loss;
  double grad_maxnorm = 0.0;
  double lr = 0.0;
  int part = 1;
  int active_nodes = 0;
  std::vector<int> de_nodes;
  std::vector<int> reg_nodes;
  std::int64_t circuits_cum = 0;
  std::int64_t gates_cum = 0;
};

struct TrainingTrace {
  std::vector<TraceRecord> records;
  SolutionState final_state;
  bool converged = false;  // every stage met its criterion
  bool diverged = false;
  std::string divergence_reason;

  bool has_part1 = false;
  int part1_iterations = 0;
  double part1_loss = 0.0;
  SolutionState part1_state;

  std::int64_t circuits_per_iteration_last = 0;
  std::int64_t gates_per_iteration_last = 0;
};

bool converged(const TrainingTrace& trace, double eps_loss, double eps_grad);

TrainingTrace run_training(const ProblemSpec& problem, const SolverSetup& setup,
                           const Schedule& schedule, std::uint64_t seed, int max_iters);

// Uniform draws in [-pi, pi) from a 64-bit Mersenne twister; portable across
// standard libraries.
std::vector<double> random_theta(std::uint64_t seed, int n);

}  // namespace hlvqa
