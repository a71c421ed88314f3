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

#include <stdexcept>

namespace hlvqa {

namespace {

void require_positive(std::int64_t v, const char* what) {
  if (v < 1) throw std::invalid_argument(std::string(what) + " must be positive");
}

// Fills the per-iteration totals from the class maps.
void finish(GateBudget& b) {
  b.circuits_per_iteration = 0;
  b.gates_per_iteration = 0;
  for (const auto& [cls, n] : b.circuits_per_class) {
    b.circuits_per_iteration += n;
    b.gates_per_iteration += n * b.gates_per_circuit.at(cls);
  }
}

}  // namespace

void GateBudget::accumulate(std::int64_t iterations) {
  total_circuits += iterations * circuits_per_iteration;
  total_gates += iterations * gates_per_iteration;
}

GateBudget ki_budget(int n_qubits, int n_layers, int n_controlled_points, DeTerms terms) {
  require_positive(n_qubits, "n_qubits");
  require_positive(n_layers, "n_layers");
  require_positive(n_controlled_points, "n_controlled_points");
  const std::int64_t n = n_qubits;
  const std::int64_t params = n * n_layers;
  const std::int64_t outer = (n_controlled_points + 1) * (1 + 2 * params);
  const std::int64_t gates = n + 2 * params;
  GateBudget b;
  if (terms.f) b.circuits_per_class["f"] = outer;
  if (terms.f1) b.circuits_per_class["df"] = outer * 2 * n;
  if (terms.f2) b.circuits_per_class["d2f"] = outer * 4 * n * n;
  for (const auto& [cls, c] : b.circuits_per_class) b.gates_per_circuit[cls] = gates;
  finish(b);
  return b;
}

GateBudget hl_budget(int n_interp, int n_points, FeatureMapKind structure, DeTerms terms) {
  require_positive(n_interp, "n_interp");
  require_positive(n_points, "n_points");
  if (structure == FeatureMapKind::Chebyshev)
    throw std::invalid_argument("hl_budget needs a Lagrange structure");
  const std::int64_t n = n_interp;
  const std::int64_t params = n;
  const std::int64_t outer = n_points * (1 + 2 * params);
  std::int64_t gf = 5 * n + 2 * params;
  if (structure == FeatureMapKind::LagrangeSimplified) gf += n / 2;
  GateBudget b;
  if (terms.f) {
    b.circuits_per_class["f"] = outer;
    b.gates_per_circuit["f"] = gf;
  }
  if (terms.f1) {
    b.circuits_per_class["df"] = outer * n;
    b.gates_per_circuit["df"] = gf + 1;
  }
  if (terms.f2) {
    b.circuits_per_class["d2f"] = outer * n * n;
    b.gates_per_circuit["d2f"] = gf + 2;
  }
  finish(b);
  return b;
}

int sato_observables(BoundaryKind bc) {
  switch (bc) {
    case BoundaryKind::Periodic:
      return 3;
    case BoundaryKind::Dirichlet:
      return 4;
    case BoundaryKind::Neumann:
      return 5;
  }
  throw std::invalid_argument("unknown boundary kind");
}

GateBudget sato_budget(BoundaryKind bc, int n_encoding_qubits, int n_layers, int params_per_layer,
                       int n_shift_circuits) {
  require_positive(n_encoding_qubits, "n_encoding_qubits");
  require_positive(n_layers, "n_layers");
  require_positive(params_per_layer, "params_per_layer");
  if (n_shift_circuits < 0) throw std::invalid_argument("n_shift_circuits must be >= 0");
  const std::int64_t enc = n_encoding_qubits;
  const std::int64_t params = static_cast<std::int64_t>(n_layers) * params_per_layer + enc;
  const std::int64_t ub = enc + 1;
  const std::int64_t ushift = 1 + enc * kMcpGates;
  const std::int64_t utheta = params * kCryGates + static_cast<std::int64_t>(n_layers) * kMcpGates;
  GateBudget b;
  b.circuits_per_class["main"] = sato_observables(bc) * (1 + params);
  b.gates_per_circuit["main"] = 3 + ub + utheta + n_shift_circuits * ushift;
  b.gates_per_circuit["U_b"] = ub;
  b.gates_per_circuit["U_theta"] = utheta;
  b.gates_per_circuit["U_shift"] = ushift;
  finish(b);
  return b;
}

}  // namespace hlvqa
