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

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace hlvqa {

using cplx = std::complex<double>;

// Qubit 0 is the least significant bit of a basis-state index.
constexpr int kMaxQubits = 24;

enum class GateKind { RX, RY, RZ, H, CNOT };

const char* gate_name(GateKind kind);
bool is_rotation(GateKind kind);

struct Gate {
  GateKind kind = GateKind::H;
  int target = 0;
  int control = -1;  // CNOT only
  double angle = 0.0;  // rotations only; R = exp(-i angle P / 2)

  static Gate rx(int q, double a) { return {GateKind::RX, q, -1, a}; }
  static Gate ry(int q, double a) { return {GateKind::RY, q, -1, a}; }
  static Gate rz(int q, double a) { return {GateKind::RZ, q, -1, a}; }
  static Gate h(int q) { return {GateKind::H, q, -1, 0.0}; }
  static Gate cnot(int c, int t) { return {GateKind::CNOT, t, c, 0.0}; }
};

// Weighted sum of single-qubit Z observables, sum_j w_j Z_j.
struct CostOperator {
  std::vector<std::pair<int, double>> terms;

  int max_qubit() const;
  // Diagonal of the operator over the low `n` qubits.
  std::vector<double> diagonal(int n) const;
};

class StateVector {
 public:
  explicit StateVector(int n_qubits);

  int num_qubits() const { return n_; }
  std::size_t size() const { return amp_.size(); }
  const std::vector<cplx>& amplitudes() const { return amp_; }
  std::vector<cplx>& amplitudes() { return amp_; }
  cplx operator[](std::size_t i) const { return amp_[i]; }

  double norm_squared() const;

  // In-place gate kernels.
  void apply(const Gate& g);
  void apply_matrix(int q, const cplx m[4]);
  void apply_cnot(int control, int target);

  // Multiply the whole vector by a scalar, used to form linear combinations
  // of branch states.
  void scale(cplx s);
  void axpy(cplx s, const StateVector& other);

 private:
  int n_;
  std::vector<cplx> amp_;
};

StateVector init_zero_state(int n_qubits);

// Value-semantics wrapper over StateVector::apply.
StateVector apply_gate(StateVector state, const Gate& gate);

// 2x2 matrix of a single-qubit gate, row-major.
void gate_matrix(const Gate& g, cplx m[4]);

double expectation_z(const StateVector& s, int q);
double expectation_weighted_z(const StateVector& s, const CostOperator& op);
// sum_j w_j <Z_a Z_j>, the ancilla-correlated readout of derivative circuits.
double expectation_correlated_z(const StateVector& s, int ancilla,
                                const CostOperator& op);

// <u| C |v> for a diagonal weighted-Z operator.
cplx matrix_element_weighted_z(const StateVector& u, const CostOperator& op,
                               const StateVector& v);

}  // namespace hlvqa
