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

#include "hlvqa/problems.hpp"
#include "hlvqa/training.hpp"

namespace hlvqa {

inline constexpr double kKiTrainEnd = 12.0;
inline constexpr double kKiLearningRate = 0.01;

// Chebyshev-map solver settings for the mass-spring problem: shift-rule
// gradients, total magnetization cost, eta = (1, 1, 0).
ProblemSpec ki_dmss_problem();
SolverSetup ki_setup(int n_qubits, int n_layers, NodeKind node_kind, int n_nodes);
Schedule ki_schedule();

TrainingTrace run_ki_dmss(int n_qubits, int n_layers, NodeKind node_kind, int n_nodes,
                          std::uint64_t seed, int max_iters = 2000);

}  // namespace hlvqa
