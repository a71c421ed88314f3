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

namespace hlvqa {

ProblemSpec ki_dmss_problem() { return dmss_problem(kKiTrainEnd); }

SolverSetup ki_setup(int n_qubits, int n_layers, NodeKind node_kind, int n_nodes) {
  const ProblemSpec p = ki_dmss_problem();
  SolverSetup s;
  s.map = FeatureMapKind::Chebyshev;
  s.chebyshev_qubits = n_qubits;
  s.layers = n_layers;
  s.nodes = make_nodes(node_kind, p.a, p.b, n_nodes);
  s.engine = DiffEngine::ShiftRule;
  s.eta = kEtaKyriienko;
  return s;
}

Schedule ki_schedule() {
  Schedule sc;
  sc.kind = ScheduleKind::FixedSet;
  sc.fixed_lr = kKiLearningRate;
  return sc;
}

TrainingTrace run_ki_dmss(int n_qubits, int n_layers, NodeKind node_kind, int n_nodes,
                          std::uint64_t seed, int max_iters) {
  return run_training(ki_dmss_problem(), ki_setup(n_qubits, n_layers, node_kind, n_nodes),
                      ki_schedule(), seed, max_iters);
}

}  // namespace hlvqa
