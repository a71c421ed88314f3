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

#include <string>
#include <vector>

#include "hlvqa/statevector.hpp"

namespace hlvqa {

enum class FeatureMapKind { Chebyshev, LagrangeExtended, LagrangeSimplified };

const char* feature_map_name(FeatureMapKind kind);

// Interpolation nodes of a Lagrange register and their normalizers
// rho_j = 2^{1-n} prod_{i != j} (x_j - x_i), the zero-theta value of <Z_j>
// at its own node.
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::vector<double> nodes);

  int size() const { return static_cast<int>(nodes_.size()); }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& rho() const { return rho_; }
  double node(int j) const { return nodes_.at(j); }

  // First `m` nodes as their own set.
  NodeSet prefix(int m) const;

 private:
  std::vector<double> nodes_;
  std::vector<double> rho_;
};

// Encoding functions phi_i(x) bound to VariableSlots.
struct Encoding {
  FeatureMapKind kind = FeatureMapKind::Chebyshev;
  int count = 0;
  std::vector<double> nodes;  // Lagrange kinds only

  // arccos argument of slot i; angle = arccos(argument) (times 2(i+1) for Chebyshev).
  double argument(int i, double x) const;
  double phi(int i, double x) const;
  double dphi(int i, double x) const;
  double d2phi(int i, double x) const;
};

enum class SlotKind { Fixed, Variable, Theta };

struct SlotId {
  SlotKind kind = SlotKind::Theta;
  int index = 0;
  static SlotId variable(int i) { return {SlotKind::Variable, i}; }
  static SlotId theta(int k) { return {SlotKind::Theta, k}; }
};

struct Op {
  GateKind kind = GateKind::H;
  int target = 0;
  int control = -1;
  SlotKind slot = SlotKind::Fixed;
  int index = -1;
  double fixed = 0.0;
};

struct Circuit {
  int n_qubits = 0;
  std::vector<Op> ops;
  Encoding encoding;
  int n_theta = 0;
  // Leading ops that only carry Fixed or Variable slots; the trailing ops
  // act on the measured register and carry the theta slots.
  int map_end = 0;
  // Measured first register occupies qubits [0, register_qubits).
  int register_qubits = 0;

  int num_gates() const { return static_cast<int>(ops.size()); }
  int num_slots(SlotKind kind) const;
  // Gate indices carrying the slot, in circuit order.
  std::vector<int> occurrences(SlotId slot) const;
  // Every rotation gate that carries a Variable slot.
  std::vector<int> variable_occurrences() const;
};

Circuit build_chebyshev_map(int n_qubits);
Circuit build_lagrange_extended(const NodeSet& nodes);
Circuit build_lagrange_simplified(const NodeSet& nodes);
Circuit build_ansatz(int n_qubits, int n_layers);

// Feature map followed by an ansatz acting on the map's first register.
Circuit compose(const Circuit& map, const Circuit& ansatz);

// Feature map + single-layer ansatz for a Lagrange register, or the Chebyshev
// map + `layers` ansatz layers.
Circuit build_lagrange_vqc(FeatureMapKind kind, const NodeSet& nodes, int layers = 1);
Circuit build_chebyshev_vqc(int n_qubits, int layers);

CostOperator lagrange_cost(const NodeSet& nodes);
CostOperator chebyshev_cost(int n_qubits);

// Per-op angles with every slot resolved.
std::vector<double> resolve_angles(const Circuit& c, double x, const std::vector<double>& theta);
Gate op_gate(const Op& op, double angle);
StateVector run(const Circuit& c, const std::vector<double>& angles);
StateVector bind(const Circuit& c, double x, const std::vector<double>& theta);

}  // namespace hlvqa
