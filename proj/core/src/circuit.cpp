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

#include "hlvqa/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hlvqa {

const char* feature_map_name(FeatureMapKind kind) {
  switch (kind) {
    case FeatureMapKind::Chebyshev: return "chebyshev";
    case FeatureMapKind::LagrangeExtended: return "extended";
    case FeatureMapKind::LagrangeSimplified: return "simplified";
  }
  return "?";
}

NodeSet::NodeSet(std::vector<double> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.empty()) throw std::invalid_argument("node set is empty");
  for (std::size_t j = 0; j < nodes_.size(); ++j) {
    if (!std::isfinite(nodes_[j]) || nodes_[j] < 0.0 || nodes_[j] >= 1.0)
      throw std::invalid_argument("node outside [0, 1)");
    if (j > 0 && !(nodes_[j] > nodes_[j - 1]))
      throw std::invalid_argument("nodes must be strictly increasing");
  }
  const int n = size();
  rho_.resize(nodes_.size());
  for (int j = 0; j < n; ++j) {
    double p = 1.0;
    for (int i = 0; i < n; ++i)
      if (i != j) p *= 0.5 * (nodes_[j] - nodes_[i]);
    rho_[j] = p;
  }
}

NodeSet NodeSet::prefix(int m) const {
  if (m < 1 || m > size()) throw std::out_of_range("node prefix length");
  return NodeSet(std::vector<double>(nodes_.begin(), nodes_.begin() + m));
}

double Encoding::argument(int i, double x) const {
  if (i < 0 || i >= count) throw std::out_of_range("encoding slot out of range");
  if (kind == FeatureMapKind::Chebyshev) return x;
  return 0.5 * (x - nodes[i]);
}

double Encoding::phi(int i, double x) const {
  const double g = argument(i, x);
  if (!(std::abs(g) <= 1.0)) throw std::domain_error("arccos argument outside [-1, 1]");
  const double a = std::acos(g);
  return kind == FeatureMapKind::Chebyshev ? 2.0 * (i + 1) * a : a;
}

double Encoding::dphi(int i, double x) const {
  const double g = argument(i, x);
  if (!(std::abs(g) < 1.0)) throw std::domain_error("encoding derivative diverges");
  const double r = std::sqrt(1.0 - g * g);
  if (kind == FeatureMapKind::Chebyshev) return -2.0 * (i + 1) / r;
  return -0.5 / r;
}

double Encoding::d2phi(int i, double x) const {
  const double g = argument(i, x);
  if (!(std::abs(g) < 1.0)) throw std::domain_error("encoding derivative diverges");
  const double r = 1.0 - g * g;
  const double r32 = r * std::sqrt(r);
  if (kind == FeatureMapKind::Chebyshev) return -2.0 * (i + 1) * g / r32;
  return -0.25 * g / r32;
}

int Circuit::num_slots(SlotKind kind) const {
  if (kind == SlotKind::Theta) return n_theta;
  if (kind == SlotKind::Variable) return encoding.count;
  return 0;
}

std::vector<int> Circuit::occurrences(SlotId slot) const {
  std::vector<int> out;
  for (int g = 0; g < num_gates(); ++g)
    if (ops[g].slot == slot.kind && ops[g].index == slot.index) out.push_back(g);
  return out;
}

std::vector<int> Circuit::variable_occurrences() const {
  std::vector<int> out;
  for (int g = 0; g < num_gates(); ++g)
    if (ops[g].slot == SlotKind::Variable) out.push_back(g);
  return out;
}

namespace {

Op fixed_op(GateKind k, int target, int control = -1) {
  Op o;
  o.kind = k;
  o.target = target;
  o.control = control;
  return o;
}

Op var_op(GateKind k, int target, int index) {
  Op o;
  o.kind = k;
  o.target = target;
  o.slot = SlotKind::Variable;
  o.index = index;
  return o;
}

void require_pair(const NodeSet& nodes) {
  if (nodes.size() < 2) throw std::invalid_argument("Lagrange map needs at least two nodes");
}

Encoding lagrange_encoding(FeatureMapKind kind, const NodeSet& nodes) {
  Encoding e;
  e.kind = kind;
  e.count = nodes.size();
  e.nodes = nodes.nodes();
  return e;
}

}  // namespace

Circuit build_chebyshev_map(int n_qubits) {
  if (n_qubits < 1) throw std::invalid_argument("Chebyshev map needs a qubit");
  Circuit c;
  c.n_qubits = n_qubits;
  c.register_qubits = n_qubits;
  c.encoding.kind = FeatureMapKind::Chebyshev;
  c.encoding.count = n_qubits;
  for (int j = 0; j < n_qubits; ++j) c.ops.push_back(var_op(GateKind::RY, j, j));
  c.map_end = c.num_gates();
  return c;
}

// Register qubit j pairs with second-register qubit n + j. Each pair runs a
// Hadamard test of RY(phi_j), leaving <Z_j> = (x - x_j)/2 correlated with the
// partner. The closing network folds the partner parities into the register
// so that, after the ansatz CNOT chain at theta = 0, <Z_j> carries the
// product over every other node.
Circuit build_lagrange_extended(const NodeSet& nodes) {
  require_pair(nodes);
  const int n = nodes.size();
  Circuit c;
  c.n_qubits = 2 * n;
  c.register_qubits = n;
  c.encoding = lagrange_encoding(FeatureMapKind::LagrangeExtended, nodes);
  for (int j = 0; j < n; ++j) {
    c.ops.push_back(fixed_op(GateKind::H, j));
    c.ops.push_back(fixed_op(GateKind::CNOT, n + j, j));
    c.ops.push_back(var_op(GateKind::RY, n + j, j));
    c.ops.push_back(fixed_op(GateKind::CNOT, n + j, j));
    c.ops.push_back(fixed_op(GateKind::H, j));
  }
  for (int i = 0; i < n; ++i) c.ops.push_back(fixed_op(GateKind::CNOT, 0, n + i));
  for (int j = 1; j < n; ++j) c.ops.push_back(fixed_op(GateKind::CNOT, j, n + j - 1));
  c.map_end = c.num_gates();
  return c;
}

// A single ancilla walks through a sequence of register-parity frames, one
// RY(phi) per frame. CNOTs from the register move the ancilla between frames.
// Interior encoding functions are visited twice, the end nodes once.
Circuit build_lagrange_simplified(const NodeSet& nodes) {
  require_pair(nodes);
  const int n = nodes.size();
  const int anc = n;
  Circuit c;
  c.n_qubits = n + 1;
  c.register_qubits = n;
  c.encoding = lagrange_encoding(FeatureMapKind::LagrangeSimplified, nodes);

  using Frame = std::vector<int>;
  auto unit = [n](int i) {
    Frame f(n, 0);
    f[i] = 1;
    return f;
  };
  auto pair = [n](int i, int k) {
    Frame f(n, 0);
    f[i] ^= 1;
    f[k] ^= 1;
    return f;
  };
  std::vector<std::pair<Frame, int>> path;
  path.emplace_back(unit(1), 0);
  for (int i = 1; i <= n - 2; ++i) path.emplace_back(unit(i + 1), i);
  for (int i = 1; i <= n - 2; ++i) path.emplace_back(pair(0, i), i);
  path.emplace_back(pair(0, n - 1), n - 1);

  for (int j = 0; j < n; ++j) c.ops.push_back(fixed_op(GateKind::H, j));
  Frame cur(n, 0);
  for (const auto& [frame, slot] : path) {
    for (int k = 0; k < n; ++k)
      if (cur[k] != frame[k]) c.ops.push_back(fixed_op(GateKind::CNOT, anc, k));
    cur = frame;
    c.ops.push_back(var_op(GateKind::RY, anc, slot));
  }
  for (int k = 0; k < n; ++k)
    if (cur[k]) c.ops.push_back(fixed_op(GateKind::CNOT, anc, k));
  for (int j = 0; j < n; ++j) c.ops.push_back(fixed_op(GateKind::H, j));
  c.map_end = c.num_gates();
  return c;
}

Circuit build_ansatz(int n_qubits, int n_layers) {
  if (n_qubits < 1 || n_layers < 1) throw std::invalid_argument("ansatz sizes must be positive");
  Circuit c;
  c.n_qubits = n_qubits;
  c.register_qubits = n_qubits;
  c.n_theta = n_qubits * n_layers;
  int k = 0;
  for (int l = 0; l < n_layers; ++l) {
    for (int q = 0; q < n_qubits; ++q) {
      Op o;
      o.kind = GateKind::RX;
      o.target = q;
      o.slot = SlotKind::Theta;
      o.index = k++;
      c.ops.push_back(o);
    }
    for (int q = 0; q + 1 < n_qubits; ++q) c.ops.push_back(fixed_op(GateKind::CNOT, q + 1, q));
  }
  return c;
}

Circuit compose(const Circuit& map, const Circuit& ansatz) {
  if (ansatz.n_qubits > map.register_qubits)
    throw std::invalid_argument("ansatz wider than the measured register");
  for (const auto& o : ansatz.ops)
    if (o.slot == SlotKind::Variable) throw std::invalid_argument("ansatz carries a variable slot");
  for (const auto& o : map.ops)
    if (o.slot == SlotKind::Theta) throw std::invalid_argument("feature map carries a theta slot");
  Circuit c = map;
  c.map_end = map.num_gates();
  c.n_theta = ansatz.n_theta;
  c.ops.insert(c.ops.end(), ansatz.ops.begin(), ansatz.ops.end());
  return c;
}

Circuit build_lagrange_vqc(FeatureMapKind kind, const NodeSet& nodes, int layers) {
  Circuit map;
  if (kind == FeatureMapKind::LagrangeExtended) {
    map = build_lagrange_extended(nodes);
  } else if (kind == FeatureMapKind::LagrangeSimplified) {
    map = build_lagrange_simplified(nodes);
  } else {
    throw std::invalid_argument("not a Lagrange feature map");
  }
  return compose(map, build_ansatz(nodes.size(), layers));
}

Circuit build_chebyshev_vqc(int n_qubits, int layers) {
  return compose(build_chebyshev_map(n_qubits), build_ansatz(n_qubits, layers));
}

CostOperator lagrange_cost(const NodeSet& nodes) {
  CostOperator op;
  for (int j = 0; j < nodes.size(); ++j) op.terms.emplace_back(j, 1.0 / nodes.rho()[j]);
  return op;
}

CostOperator chebyshev_cost(int n_qubits) {
  CostOperator op;
  for (int j = 0; j < n_qubits; ++j) op.terms.emplace_back(j, 1.0);
  return op;
}

std::vector<double> resolve_angles(const Circuit& c, double x, const std::vector<double>& theta) {
  if (static_cast<int>(theta.size()) != c.n_theta)
    throw std::invalid_argument("theta length " + std::to_string(theta.size()) + " does not match " +
                                std::to_string(c.n_theta) + " parameter slots");
  std::vector<double> phi(c.encoding.count);
  for (int i = 0; i < c.encoding.count; ++i) phi[i] = c.encoding.phi(i, x);
  std::vector<double> angles(c.ops.size(), 0.0);
  for (std::size_t g = 0; g < c.ops.size(); ++g) {
    const Op& o = c.ops[g];
    switch (o.slot) {
      case SlotKind::Fixed: angles[g] = o.fixed; break;
      case SlotKind::Variable: angles[g] = phi.at(o.index); break;
      case SlotKind::Theta: angles[g] = theta.at(o.index); break;
    }
  }
  return angles;
}

Gate op_gate(const Op& op, double angle) {
  Gate g;
  g.kind = op.kind;
  g.target = op.target;
  g.control = op.control;
  g.angle = angle;
  return g;
}

StateVector run(const Circuit& c, const std::vector<double>& angles) {
  StateVector s(c.n_qubits);
  for (std::size_t g = 0; g < c.ops.size(); ++g) s.apply(op_gate(c.ops[g], angles[g]));
  return s;
}

StateVector bind(const Circuit& c, double x, const std::vector<double>& theta) {
  if (c.n_qubits == 0) return StateVector(1);
  return run(c, resolve_angles(c, x, theta));
}

}  // namespace hlvqa
