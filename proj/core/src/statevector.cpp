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

#include "hlvqa/statevector.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hlvqa {

const char* gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::RX: return "RX";
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::H: return "H";
    case GateKind::CNOT: return "CNOT";
  }
  return "?";
}

bool is_rotation(GateKind kind) {
  return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ;
}

int CostOperator::max_qubit() const {
  int m = -1;
  for (const auto& [q, w] : terms) m = std::max(m, q);
  return m;
}

std::vector<double> CostOperator::diagonal(int n) const {
  std::vector<double> d(std::size_t{1} << n, 0.0);
  for (const auto& [q, w] : terms) {
    if (q < 0 || q >= n) throw std::out_of_range("cost operator qubit out of range");
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < d.size(); ++i) d[i] += (i & bit) ? -w : w;
  }
  return d;
}

StateVector::StateVector(int n_qubits) : n_(n_qubits) {
  if (n_qubits < 1) throw std::invalid_argument("state needs at least one qubit");
  if (n_qubits > kMaxQubits)
    throw std::invalid_argument("too many qubits for a dense state: " + std::to_string(n_qubits));
  amp_.assign(std::size_t{1} << n_qubits, cplx(0.0, 0.0));
  amp_[0] = 1.0;
}

double StateVector::norm_squared() const {
  double s = 0.0;
  for (const auto& a : amp_) s += std::norm(a);
  return s;
}

void gate_matrix(const Gate& g, cplx m[4]) {
  const double c = std::cos(0.5 * g.angle);
  const double s = std::sin(0.5 * g.angle);
  switch (g.kind) {
    case GateKind::RX:
      m[0] = c; m[1] = cplx(0, -s); m[2] = cplx(0, -s); m[3] = c;
      return;
    case GateKind::RY:
      m[0] = c; m[1] = -s; m[2] = s; m[3] = c;
      return;
    case GateKind::RZ:
      m[0] = cplx(c, -s); m[1] = 0; m[2] = 0; m[3] = cplx(c, s);
      return;
    case GateKind::H: {
      const double r = 1.0 / std::sqrt(2.0);
      m[0] = r; m[1] = r; m[2] = r; m[3] = -r;
      return;
    }
    case GateKind::CNOT:
      break;
  }
  throw std::invalid_argument("CNOT has no single-qubit matrix");
}

void StateVector::apply_matrix(int q, const cplx m[4]) {
  if (q < 0 || q >= n_) throw std::out_of_range("qubit index out of range: " + std::to_string(q));
  const std::size_t stride = std::size_t{1} << q;
  const std::size_t dim = amp_.size();
  cplx* a = amp_.data();
  for (std::size_t base = 0; base < dim; base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      const cplx a0 = a[i];
      const cplx a1 = a[i + stride];
      a[i] = m[0] * a0 + m[1] * a1;
      a[i + stride] = m[2] * a0 + m[3] * a1;
    }
  }
}

void StateVector::apply_cnot(int control, int target) {
  if (control < 0 || control >= n_ || target < 0 || target >= n_)
    throw std::out_of_range("CNOT qubit index out of range");
  if (control == target) throw std::invalid_argument("CNOT control equals target");
  const std::size_t cb = std::size_t{1} << control;
  const std::size_t tb = std::size_t{1} << target;
  for (std::size_t i = 0; i < amp_.size(); ++i) {
    if ((i & cb) && !(i & tb)) std::swap(amp_[i], amp_[i | tb]);
  }
}

void StateVector::apply(const Gate& g) {
  if (g.kind == GateKind::CNOT) {
    apply_cnot(g.control, g.target);
    return;
  }
  cplx m[4];
  gate_matrix(g, m);
  apply_matrix(g.target, m);
}

void StateVector::scale(cplx s) {
  for (auto& a : amp_) a *= s;
}

void StateVector::axpy(cplx s, const StateVector& other) {
  if (other.amp_.size() != amp_.size()) throw std::invalid_argument("axpy size mismatch");
  for (std::size_t i = 0; i < amp_.size(); ++i) amp_[i] += s * other.amp_[i];
}

StateVector init_zero_state(int n_qubits) { return StateVector(n_qubits); }

StateVector apply_gate(StateVector state, const Gate& gate) {
  state.apply(gate);
  return state;
}

double expectation_z(const StateVector& s, int q) {
  if (q < 0 || q >= s.num_qubits()) throw std::out_of_range("qubit index out of range");
  const std::size_t bit = std::size_t{1} << q;
  double e = 0.0;
  const auto& a = s.amplitudes();
  for (std::size_t i = 0; i < a.size(); ++i) e += (i & bit) ? -std::norm(a[i]) : std::norm(a[i]);
  return e;
}

double expectation_weighted_z(const StateVector& s, const CostOperator& op) {
  double e = 0.0;
  for (const auto& [q, w] : op.terms) e += w * expectation_z(s, q);
  return e;
}

double expectation_correlated_z(const StateVector& s, int ancilla, const CostOperator& op) {
  if (ancilla < 0 || ancilla >= s.num_qubits()) throw std::out_of_range("ancilla out of range");
  const std::size_t ab = std::size_t{1} << ancilla;
  const auto& a = s.amplitudes();
  double e = 0.0;
  for (const auto& [q, w] : op.terms) {
    if (q < 0 || q >= s.num_qubits()) throw std::out_of_range("qubit index out of range");
    const std::size_t bit = std::size_t{1} << q;
    double t = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const bool odd = ((i & bit) != 0) != ((i & ab) != 0);
      t += odd ? -std::norm(a[i]) : std::norm(a[i]);
    }
    e += w * t;
  }
  return e;
}

cplx matrix_element_weighted_z(const StateVector& u, const CostOperator& op, const StateVector& v) {
  if (u.size() != v.size()) throw std::invalid_argument("matrix element size mismatch");
  const auto d = op.diagonal(u.num_qubits());
  cplx acc = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) acc += std::conj(u[i]) * d[i] * v[i];
  return acc;
}

}  // namespace hlvqa
