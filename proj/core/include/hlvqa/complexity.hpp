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
#include <map>
#include <string>

#include "hlvqa/circuit.hpp"
#include "hlvqa/problems.hpp"

namespace hlvqa {

// Basic gates are Pauli and Clifford gates plus single-qubit rotations.
struct GateBudget {
  std::int64_t circuits_per_iteration = 0;
  // Circuit class -> gates per circuit of that class.
  std::map<std::string, std::int64_t> gates_per_circuit;
  // Circuit class -> circuits per iteration of that class.
  std::map<std::string, std::int64_t> circuits_per_class;
  std::int64_t gates_per_iteration = 0;
  std::int64_t total_circuits = 0;
  std::int64_t total_gates = 0;

  // Adds `iterations` iterations to the run totals.
  void accumulate(std::int64_t iterations);
};

// Which of f, df/dx, d2f/dx2 the DE needs.
struct DeTerms {
  bool f = true, f1 = true, f2 = true;
};

GateBudget ki_budget(int n_qubits, int n_layers, int n_controlled_points, DeTerms terms = {});
// n_points counts every readout point, boundary points included.
GateBudget hl_budget(int n_interp, int n_points, FeatureMapKind structure, DeTerms terms = {});

int sato_observables(BoundaryKind bc);
GateBudget sato_budget(BoundaryKind bc, int n_encoding_qubits, int n_layers, int params_per_layer,
                       int n_shift_circuits = 1);

inline constexpr int kCryGates = 4;
inline constexpr int kMcpGates = 18;

}  // namespace hlvqa
