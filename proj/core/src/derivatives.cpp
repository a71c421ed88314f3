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

#include "hlvqa/derivatives.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hlvqa {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

void require_rotation(const Circuit& c, int gate) {
  if (gate < 0 || gate >= c.num_gates()) throw std::out_of_range("gate index out of range");
  if (!is_rotation(c.ops[gate].kind))
    throw std::invalid_argument("slot bound to a non-rotation gate");
}

std::vector<int> slot_occurrences(const Circuit& c, SlotId slot) {
  if (slot.kind == SlotKind::Fixed) throw std::invalid_argument("fixed slot has no derivative");
  if (slot.index < 0 || slot.index >= c.num_slots(slot.kind))
    throw std::out_of_range("slot index out of range");
  auto occ = c.occurrences(slot);
  for (int g : occ) require_rotation(c, g);
  return occ;
}

double eval_angles(const Circuit& c, const std::vector<double>& angles, const CostOperator& cost) {
  return expectation_weighted_z(run(c, angles), cost);
}

Op make_op(GateKind k, int target, int control = -1, double angle = 0.0) {
  Op o;
  o.kind = k;
  o.target = target;
  o.control = control;
  o.fixed = angle;
  return o;
}

// Controlled generator of the rotation `rot` on `target`, built from the gate
// set. CY uses RZ(pi/2) X RZ(-pi/2) = Y; CZ uses H X H = Z.
void append_controlled_generator(std::vector<Op>& ops, GateKind rot, int anc, int target,
                                 bool on_zero) {
  if (on_zero) ops.push_back(make_op(GateKind::RX, anc, -1, std::numbers::pi));
  switch (rot) {
    case GateKind::RX:
      ops.push_back(make_op(GateKind::CNOT, target, anc));
      break;
    case GateKind::RY:
      ops.push_back(make_op(GateKind::RZ, target, -1, -kHalfPi));
      ops.push_back(make_op(GateKind::CNOT, target, anc));
      ops.push_back(make_op(GateKind::RZ, target, -1, kHalfPi));
      break;
    case GateKind::RZ:
      ops.push_back(make_op(GateKind::H, target));
      ops.push_back(make_op(GateKind::CNOT, target, anc));
      ops.push_back(make_op(GateKind::H, target));
      break;
    default:
      throw std::invalid_argument("generator insertion needs a rotation gate");
  }
  if (on_zero) ops.push_back(make_op(GateKind::RX, anc, -1, std::numbers::pi));
}

Circuit with_ancilla(const Circuit& c) {
  Circuit d = c;
  d.n_qubits = c.n_qubits + 1;
  d.ops.clear();
  d.ops.push_back(make_op(GateKind::H, c.n_qubits));
  return d;
}

}  // namespace

const char* engine_name(DiffEngine e) {
  return e == DiffEngine::ShiftRule ? "shift-rule" : "hadamard-test";
}

EncodingDerivatives encoding_derivatives(const Encoding& enc, double x) {
  EncodingDerivatives d;
  d.dphi_dx.resize(enc.count);
  d.d2phi_dx2.resize(enc.count);
  for (int i = 0; i < enc.count; ++i) {
    d.dphi_dx[i] = enc.dphi(i, x);
    d.d2phi_dx2[i] = enc.d2phi(i, x);
  }
  return d;
}

double expectation(const Circuit& c, double x, const std::vector<double>& theta,
                   const CostOperator& cost) {
  return expectation_weighted_z(bind(c, x, theta), cost);
}

double shift_rule_occurrence_partial(const Circuit& c, double x, const std::vector<double>& theta,
                                     int gate, const CostOperator& cost) {
  require_rotation(c, gate);
  auto angles = resolve_angles(c, x, theta);
  const double a0 = angles[gate];
  angles[gate] = a0 + kHalfPi;
  const double fp = eval_angles(c, angles, cost);
  angles[gate] = a0 - kHalfPi;
  const double fm = eval_angles(c, angles, cost);
  return 0.5 * (fp - fm);
}

double shift_rule_partial(const Circuit& c, double x, const std::vector<double>& theta, SlotId slot,
                          const CostOperator& cost) {
  double s = 0.0;
  for (int g : slot_occurrences(c, slot)) s += shift_rule_occurrence_partial(c, x, theta, g, cost);
  return s;
}

double shift_rule_second(const Circuit& c, double x, const std::vector<double>& theta, SlotId a,
                         SlotId b, const CostOperator& cost) {
  const auto oa = slot_occurrences(c, a);
  const auto ob = slot_occurrences(c, b);
  const auto base = resolve_angles(c, x, theta);
  double s = 0.0;
  for (int ga : oa) {
    for (int gb : ob) {
      double acc = 0.0;
      for (int sa : {1, -1}) {
        for (int sb : {1, -1}) {
          auto angles = base;
          angles[ga] += sa * kHalfPi;
          angles[gb] += sb * kHalfPi;
          acc += sa * sb * eval_angles(c, angles, cost);
        }
      }
      s += 0.25 * acc;
    }
  }
  return s;
}

Circuit hadamard_first_circuit(const Circuit& c, int gate) {
  require_rotation(c, gate);
  Circuit d = with_ancilla(c);
  const int anc = c.n_qubits;
  for (int g = 0; g < c.num_gates(); ++g) {
    d.ops.push_back(c.ops[g]);
    if (g == gate) append_controlled_generator(d.ops, c.ops[g].kind, anc, c.ops[g].target, false);
  }
  // RX(pi/2)^dag Z RX(pi/2) = Y
  d.ops.push_back(make_op(GateKind::RX, anc, -1, kHalfPi));
  return d;
}

Circuit hadamard_second_circuit(const Circuit& c, int a, int b, bool same_branch) {
  require_rotation(c, a);
  require_rotation(c, b);
  Circuit d = with_ancilla(c);
  const int anc = c.n_qubits;
  for (int g = 0; g < c.num_gates(); ++g) {
    d.ops.push_back(c.ops[g]);
    if (g == a)
      append_controlled_generator(d.ops, c.ops[g].kind, anc, c.ops[g].target, !same_branch);
    if (g == b) append_controlled_generator(d.ops, c.ops[g].kind, anc, c.ops[g].target, false);
  }
  d.ops.push_back(make_op(GateKind::H, anc));
  return d;
}

double hadamard_test_occurrence_partial(const Circuit& c, double x,
                                        const std::vector<double>& theta, int gate,
                                        const CostOperator& cost) {
  const Circuit d = hadamard_first_circuit(c, gate);
  return expectation_correlated_z(bind(d, x, theta), c.n_qubits, cost);
}

double hadamard_test_partial(const Circuit& c, double x, const std::vector<double>& theta,
                             SlotId slot, const CostOperator& cost) {
  double s = 0.0;
  for (int g : slot_occurrences(c, slot))
    s += hadamard_test_occurrence_partial(c, x, theta, g, cost);
  return s;
}

double hadamard_test_second(const Circuit& c, double x, const std::vector<double>& theta,
                            SlotId a, SlotId b, const CostOperator& cost) {
  const auto oa = slot_occurrences(c, a);
  const auto ob = slot_occurrences(c, b);
  const int anc = c.n_qubits;
  double f = 0.0;
  bool have_f = false;
  double s = 0.0;
  for (int ga : oa) {
    for (int gb : ob) {
      const double cross =
          expectation_correlated_z(bind(hadamard_second_circuit(c, ga, gb, false), x, theta), anc,
                                   cost);
      double both;
      if (ga == gb) {
        // The generator squares to the identity, so the doubly inserted
        // branch is the plain circuit.
        if (!have_f) {
          f = expectation(c, x, theta, cost);
          have_f = true;
        }
        both = f;
      } else {
        both = expectation_correlated_z(bind(hadamard_second_circuit(c, ga, gb, true), x, theta),
                                        anc, cost);
      }
      s += 0.5 * (cross - both);
    }
  }
  return s;
}

double second_partial(const Circuit& c, double x, const std::vector<double>& theta, SlotId a,
                      SlotId b, const CostOperator& cost, DiffEngine engine) {
  return engine == DiffEngine::ShiftRule ? shift_rule_second(c, x, theta, a, b, cost)
                                         : hadamard_test_second(c, x, theta, a, b, cost);
}

double df_dx(const Circuit& c, double x, const std::vector<double>& theta, const CostOperator& cost,
             DiffEngine engine) {
  const auto d = encoding_derivatives(c.encoding, x);
  double s = 0.0;
  for (int i = 0; i < c.encoding.count; ++i) {
    const SlotId slot = SlotId::variable(i);
    const double p = engine == DiffEngine::ShiftRule ? shift_rule_partial(c, x, theta, slot, cost)
                                                     : hadamard_test_partial(c, x, theta, slot, cost);
    s += p * d.dphi_dx[i];
  }
  return s;
}

double d2f_dx2(const Circuit& c, double x, const std::vector<double>& theta,
               const CostOperator& cost, DiffEngine engine) {
  const auto d = encoding_derivatives(c.encoding, x);
  const int n = c.encoding.count;
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    const SlotId si = SlotId::variable(i);
    const double p = engine == DiffEngine::ShiftRule ? shift_rule_partial(c, x, theta, si, cost)
                                                     : hadamard_test_partial(c, x, theta, si, cost);
    s += p * d.d2phi_dx2[i];
    for (int j = 0; j < n; ++j) {
      s += second_partial(c, x, theta, si, SlotId::variable(j), cost, engine) * d.dphi_dx[i] *
           d.dphi_dx[j];
    }
  }
  return s;
}

long long derivative_circuit_count(int occurrences, DiffEngine engine) {
  const long long k = occurrences;
  return engine == DiffEngine::ShiftRule ? 1 + 2 * k + 4 * k * k : 1 + k + k * k;
}

}  // namespace hlvqa
