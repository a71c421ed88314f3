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

#include "hlvqa/evaluator.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

namespace hlvqa {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

void generator_matrix(GateKind kind, cplx* m) {
  switch (kind) {
    case GateKind::RX:
      m[0] = 0; m[1] = 1; m[2] = 1; m[3] = 0;
      break;
    case GateKind::RY:
      m[0] = 0; m[1] = cplx(0, -1); m[2] = cplx(0, 1); m[3] = 0;
      break;
    case GateKind::RZ:
      m[0] = 1; m[1] = 0; m[2] = 0; m[3] = -1;
      break;
    default:
      throw std::invalid_argument("generator of a non-rotation gate");
  }
}

void apply_generator(StateVector& s, GateKind kind, int q) {
  cplx m[4];
  generator_matrix(kind, m);
  s.apply_matrix(q, m);
}

// Accumulates coef * T(u, v) into st, where T[l', l] = sum_hi v[hi, l'] conj(u[hi, l])
// is stored transposed: st[l * dim + l'].
void accumulate_transition(std::vector<cplx>& st, std::size_t dim, cplx coef, const StateVector& u,
                           const StateVector& v) {
  const auto& ua = u.amplitudes();
  const auto& va = v.amplitudes();
  const std::size_t blocks = ua.size() / dim;
  for (std::size_t hi = 0; hi < blocks; ++hi) {
    const cplx* ub = ua.data() + hi * dim;
    const cplx* vb = va.data() + hi * dim;
    for (std::size_t l = 0; l < dim; ++l) {
      const cplx cu = coef * std::conj(ub[l]);
      if (cu == cplx(0.0, 0.0)) continue;
      cplx* row = st.data() + l * dim;
      for (std::size_t lp = 0; lp < dim; ++lp) row[lp] += cu * vb[lp];
    }
  }
}

// M <- U M with U acting on `bit`; u is row-major 2x2.
void left_mul(std::vector<cplx>& m, std::size_t n, const cplx* u, std::size_t bit) {
  for (std::size_t r0 = 0; r0 < n; ++r0) {
    if (r0 & bit) continue;
    cplx* a = m.data() + r0 * n;
    cplx* b = m.data() + (r0 | bit) * n;
    for (std::size_t c = 0; c < n; ++c) {
      const cplx x0 = a[c], x1 = b[c];
      a[c] = u[0] * x0 + u[1] * x1;
      b[c] = u[2] * x0 + u[3] * x1;
    }
  }
}

// M <- M U^dag.
void right_mul_dag(std::vector<cplx>& m, std::size_t n, const cplx* u, std::size_t bit) {
  const cplx v00 = std::conj(u[0]), v01 = std::conj(u[2]);
  const cplx v10 = std::conj(u[1]), v11 = std::conj(u[3]);
  for (std::size_t r = 0; r < n; ++r) {
    cplx* row = m.data() + r * n;
    for (std::size_t c0 = 0; c0 < n; ++c0) {
      if (c0 & bit) continue;
      const std::size_t c1 = c0 | bit;
      const cplx a0 = row[c0], a1 = row[c1];
      row[c0] = a0 * v00 + a1 * v10;
      row[c1] = a0 * v01 + a1 * v11;
    }
  }
}

void permute_cnot(std::vector<cplx>& m, std::size_t n, const Op& op) {
  const std::size_t cb = std::size_t{1} << op.control;
  const std::size_t tb = std::size_t{1} << op.target;
  // Rows with the control set swap pairwise, then columns.
  for (std::size_t r = 0; r < n; ++r)
    if ((r & cb) && !(r & tb)) std::swap_ranges(m.begin() + r * n, m.begin() + (r + 1) * n, m.begin() + (r | tb) * n);
  for (std::size_t r = 0; r < n; ++r) {
    cplx* row = m.data() + r * n;
    for (std::size_t c = 0; c < n; ++c)
      if ((c & cb) && !(c & tb)) std::swap(row[c], row[c | tb]);
  }
}

// M <- G M G^dag, or G^dag M G when `inverse`.
void conjugate(std::vector<cplx>& m, std::size_t n, const Op& op, double angle, bool inverse) {
  if (op.kind == GateKind::CNOT) {
    permute_cnot(m, n, op);
    return;
  }
  cplx u[4];
  gate_matrix(op_gate(op, angle), u);
  if (inverse) {
    const cplx d[4] = {std::conj(u[0]), std::conj(u[2]), std::conj(u[1]), std::conj(u[3])};
    std::copy(d, d + 4, u);
  }
  const std::size_t bit = std::size_t{1} << op.target;
  left_mul(m, n, u, bit);
  right_mul_dag(m, n, u, bit);
}


double re_trace(const std::vector<cplx>& o, const std::vector<cplx>& st) {
  double acc = 0.0;
  for (std::size_t i = 0; i < o.size(); ++i) acc += o[i].real() * st[i].real() - o[i].imag() * st[i].imag();
  return acc;
}

}  // namespace

CachedEvaluator::CachedEvaluator(Circuit vqc, CostOperator cost, DiffEngine engine)
    : vqc_(std::move(vqc)), cost_(std::move(cost)), engine_(engine) {
  reg_ = vqc_.register_qubits;
  if (reg_ < 1 || reg_ > vqc_.n_qubits) throw std::invalid_argument("bad measured register");
  if (reg_ > 12) throw std::invalid_argument("measured register too wide for cached evaluation");
  dim_ = std::size_t{1} << reg_;
  if (cost_.max_qubit() >= reg_) throw std::invalid_argument("cost acts outside the register");
  for (int g = vqc_.map_end; g < vqc_.num_gates(); ++g) {
    const Op& o = vqc_.ops[g];
    if (o.slot == SlotKind::Variable) throw std::invalid_argument("variable slot after the map");
    if (o.target >= reg_ || o.control >= reg_)
      throw std::invalid_argument("ansatz gate outside the measured register");
  }
  for (int g = 0; g < vqc_.map_end; ++g)
    if (vqc_.ops[g].slot == SlotKind::Theta) throw std::invalid_argument("theta slot inside the map");
  for (int k = 0; k < vqc_.n_theta; ++k)
    if (vqc_.occurrences(SlotId::theta(k)).size() != 1)
      throw std::invalid_argument("each theta slot must occur exactly once");
  var_occ_ = vqc_.variable_occurrences();

  const int k = static_cast<int>(var_occ_.size());
  const std::int64_t g = vqc_.num_gates();
  full_circuits_ = derivative_circuit_count(k, engine_);
  if (engine_ == DiffEngine::ShiftRule) {
    full_gates_ = full_circuits_ * g;
  } else {
    full_gates_ = g;
    for (int a : var_occ_) full_gates_ += hadamard_first_circuit(vqc_, a).num_gates();
    // One cross circuit per unordered pair (symmetric real part) plus one
    // doubly inserted circuit off the diagonal, K^2 in total.
    for (int ia = 0; ia < k; ++ia) {
      for (int ib = ia; ib < k; ++ib) {
        full_gates_ += hadamard_second_circuit(vqc_, var_occ_[ia], var_occ_[ib], false).num_gates();
        if (ib != ia)
          full_gates_ += hadamard_second_circuit(vqc_, var_occ_[ia], var_occ_[ib], true).num_gates();
      }
    }
  }
}

void CachedEvaluator::set_points(const std::vector<double>& xs, const std::vector<PointNeed>& needs) {
  if (xs.size() != needs.size()) throw std::invalid_argument("point/need length mismatch");
  points_.clear();
  circuits_ = 0;
  gates_ = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Point p;
    p.x = xs[i];
    p.need = needs[i];
    if (engine_ == DiffEngine::HadamardTest)
      prepare_hadamard(p);
    else
      prepare_shift(p);
    if (p.need == PointNeed::Full) {
      circuits_ += full_circuits_;
      gates_ += full_gates_;
    } else {
      circuits_ += 1;
      gates_ += vqc_.num_gates();
    }
    points_.push_back(std::move(p));
  }
}

void CachedEvaluator::prepare_hadamard(Point& p) const {
  const std::vector<double> zeros(vqc_.n_theta, 0.0);
  const auto angles = resolve_angles(vqc_, p.x, zeros);
  const int m = vqc_.map_end;

  auto run_with = [&](int ga, int gb) {
    StateVector s(vqc_.n_qubits);
    for (int g = 0; g < m; ++g) {
      s.apply(op_gate(vqc_.ops[g], angles[g]));
      if (g == ga) apply_generator(s, vqc_.ops[g].kind, vqc_.ops[g].target);
      if (g == gb) apply_generator(s, vqc_.ops[g].kind, vqc_.ops[g].target);
    }
    return s;
  };

  const StateVector base = run_with(-1, -1);
  p.s0.assign(dim_ * dim_, cplx(0.0, 0.0));
  accumulate_transition(p.s0, dim_, 1.0, base, base);
  if (p.need == PointNeed::Value) return;

  const auto d = encoding_derivatives(vqc_.encoding, p.x);
  const int k = static_cast<int>(var_occ_.size());
  std::vector<double> d1(k), d2(k);
  for (int a = 0; a < k; ++a) {
    d1[a] = d.dphi_dx[vqc_.ops[var_occ_[a]].index];
    d2[a] = d.d2phi_dx2[vqc_.ops[var_occ_[a]].index];
  }

  // W = sum_a phi'_a M_a, Y = sum_a phi''_a M_a, Z = sum_{a,b} phi'_a phi'_b M_ab
  StateVector w(vqc_.n_qubits), y(vqc_.n_qubits), z(vqc_.n_qubits);
  w.scale(0.0);
  y.scale(0.0);
  z.scale(0.0);
  double diag = 0.0;
  for (int a = 0; a < k; ++a) {
    const StateVector ma = run_with(var_occ_[a], -1);
    w.axpy(d1[a], ma);
    y.axpy(d2[a], ma);
    diag += d1[a] * d1[a];
    for (int b = a + 1; b < k; ++b) z.axpy(2.0 * d1[a] * d1[b], run_with(var_occ_[a], var_occ_[b]));
  }
  z.axpy(diag, base);

  // df/dx = Im<M|O|W>; d2f/dx2 = Im<M|O|Y> + Re<W|O|W>/2 - Re<M|O|Z>/2
  const cplx mi(0.0, -1.0);
  p.s1.assign(dim_ * dim_, cplx(0.0, 0.0));
  accumulate_transition(p.s1, dim_, mi, base, w);
  p.s2.assign(dim_ * dim_, cplx(0.0, 0.0));
  accumulate_transition(p.s2, dim_, mi, base, y);
  accumulate_transition(p.s2, dim_, 0.5, w, w);
  accumulate_transition(p.s2, dim_, -0.5, base, z);
}

void CachedEvaluator::prepare_shift(Point& p) const {
  const std::vector<double> zeros(vqc_.n_theta, 0.0);
  const auto angles = resolve_angles(vqc_, p.x, zeros);
  const int m = vqc_.map_end;

  auto run_shifted = [&](int ga, double sa, int gb, double sb) {
    StateVector s(vqc_.n_qubits);
    for (int g = 0; g < m; ++g) {
      double a = angles[g];
      if (g == ga) a += sa;
      if (g == gb) a += sb;
      s.apply(op_gate(vqc_.ops[g], a));
    }
    return s;
  };

  const StateVector base = run_shifted(-1, 0.0, -1, 0.0);
  p.s0.assign(dim_ * dim_, cplx(0.0, 0.0));
  accumulate_transition(p.s0, dim_, 1.0, base, base);
  if (p.need == PointNeed::Value) return;

  const auto d = encoding_derivatives(vqc_.encoding, p.x);
  const int k = static_cast<int>(var_occ_.size());
  p.s1.assign(dim_ * dim_, cplx(0.0, 0.0));
  p.s2.assign(dim_ * dim_, cplx(0.0, 0.0));
  for (int a = 0; a < k; ++a) {
    const int ga = var_occ_[a];
    const double d1a = d.dphi_dx[vqc_.ops[ga].index];
    const double d2a = d.d2phi_dx2[vqc_.ops[ga].index];
    for (int sa : {1, -1}) {
      const StateVector s = run_shifted(ga, sa * kHalfPi, -1, 0.0);
      accumulate_transition(p.s1, dim_, 0.5 * sa * d1a, s, s);
      accumulate_transition(p.s2, dim_, 0.5 * sa * d2a, s, s);
    }
    for (int b = 0; b < k; ++b) {
      const int gb = var_occ_[b];
      const double d1b = d.dphi_dx[vqc_.ops[gb].index];
      for (int sa : {1, -1}) {
        for (int sb : {1, -1}) {
          const StateVector s = run_shifted(ga, sa * kHalfPi, gb, sb * kHalfPi);
          accumulate_transition(p.s2, dim_, 0.25 * sa * sb * d1a * d1b, s, s);
        }
      }
    }
  }
}

std::vector<cplx> CachedEvaluator::propagated_cost(const std::vector<double>& theta) const {
  if (static_cast<int>(theta.size()) != vqc_.n_theta)
    throw std::invalid_argument("theta length does not match the parameter slots");
  const std::size_t n = dim_;
  std::vector<cplx> o(n * n, cplx(0.0, 0.0));
  const auto diag = cost_.diagonal(reg_);
  for (std::size_t i = 0; i < n; ++i) o[i * n + i] = diag[i];

  // O <- g^dag O g, last gate first.
  for (int gi = vqc_.num_gates() - 1; gi >= vqc_.map_end; --gi) {
    const Op& op = vqc_.ops[gi];
    if (op.kind == GateKind::CNOT) {
      const std::size_t cb = std::size_t{1} << op.control;
      const std::size_t tb = std::size_t{1} << op.target;
      auto perm = [&](std::size_t i) { return (i & cb) ? (i ^ tb) : i; };
      std::vector<cplx> t(n * n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) t[r * n + c] = o[perm(r) * n + perm(c)];
      o.swap(t);
      continue;
    }
    double angle = op.fixed;
    if (op.slot == SlotKind::Theta) angle = theta[op.index];
    cplx u[4];
    gate_matrix(op_gate(op, angle), u);
    const std::size_t bit = std::size_t{1} << op.target;
    // right multiply by g
    for (std::size_t r = 0; r < n; ++r) {
      cplx* row = o.data() + r * n;
      for (std::size_t c0 = 0; c0 < n; ++c0) {
        if (c0 & bit) continue;
        const std::size_t c1 = c0 | bit;
        const cplx a0 = row[c0], a1 = row[c1];
        row[c0] = a0 * u[0] + a1 * u[2];
        row[c1] = a0 * u[1] + a1 * u[3];
      }
    }
    // left multiply by g^dag
    const cplx v00 = std::conj(u[0]), v01 = std::conj(u[2]);
    const cplx v10 = std::conj(u[1]), v11 = std::conj(u[3]);
    for (std::size_t r0 = 0; r0 < n; ++r0) {
      if (r0 & bit) continue;
      const std::size_t r1 = r0 | bit;
      cplx* a = o.data() + r0 * n;
      cplx* b = o.data() + r1 * n;
      for (std::size_t c = 0; c < n; ++c) {
        const cplx x0 = a[c], x1 = b[c];
        a[c] = v00 * x0 + v01 * x1;
        b[c] = v10 * x0 + v11 * x1;
      }
    }
  }
  return o;
}

void CachedEvaluator::values(const std::vector<cplx>& o, double* out) const {
  for (std::size_t p = 0; p < points_.size(); ++p) {
    const Point& pt = points_[p];
    out[3 * p] = re_trace(o, pt.s0);
    if (pt.need == PointNeed::Full) {
      out[3 * p + 1] = re_trace(o, pt.s1);
      out[3 * p + 2] = re_trace(o, pt.s2);
    } else {
      out[3 * p + 1] = 0.0;
      out[3 * p + 2] = 0.0;
    }
  }
}

void CachedEvaluator::evaluate(const std::vector<double>& theta, std::vector<double>& out) const {
  out.assign(3 * points_.size(), 0.0);
  values(propagated_cost(theta), out.data());
}

void CachedEvaluator::evaluate_shifted(const std::vector<double>& theta,
                                       std::vector<std::vector<double>>& out) const {
  const int np = vqc_.n_theta;
  out.assign(1 + 2 * np, std::vector<double>(3 * points_.size(), 0.0));
  values(propagated_cost(theta), out[0].data());
  std::vector<double> t = theta;
  for (int k = 0; k < np; ++k) {
    t[k] = theta[k] + kHalfPi;
    values(propagated_cost(t), out[1 + 2 * k].data());
    t[k] = theta[k] - kHalfPi;
    values(propagated_cost(t), out[2 + 2 * k].data());
    t[k] = theta[k];
  }
}

void CachedEvaluator::theta_gradient(const std::vector<double>& theta,
                                     const std::vector<double>& weights,
                                     std::vector<double>& grad) const {
  if (static_cast<int>(theta.size()) != vqc_.n_theta)
    throw std::invalid_argument("theta length does not match the parameter slots");
  if (weights.size() != 3 * points_.size()) throw std::invalid_argument("weight length mismatch");
  const std::size_t n = dim_;
  // Weighted register matrix, un-transposed: value = Re Tr(A^dag C A S).
  std::vector<cplx> xt(n * n, cplx(0.0, 0.0));
  auto add = [&](const std::vector<cplx>& st, double w) {
    if (w == 0.0) return;
    for (std::size_t i = 0; i < n * n; ++i) xt[i] += w * st[i];
  };
  for (std::size_t p = 0; p < points_.size(); ++p) {
    add(points_[p].s0, weights[3 * p]);
    if (points_[p].need == PointNeed::Full) {
      add(points_[p].s1, weights[3 * p + 1]);
      add(points_[p].s2, weights[3 * p + 2]);
    }
  }
  std::vector<cplx> x(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) x[c * n + r] = xt[r * n + c];
  auto angle_of = [&](const Op& op) { return op.slot == SlotKind::Theta ? theta[op.index] : op.fixed; };
  const int first = vqc_.map_end, last = vqc_.num_gates();
  for (int g = first; g < last; ++g) conjugate(x, n, vqc_.ops[g], angle_of(vqc_.ops[g]), false);

  std::vector<cplx> lam(n * n, cplx(0.0, 0.0));
  const auto diag = cost_.diagonal(reg_);
  for (std::size_t i = 0; i < n; ++i) lam[i * n + i] = diag[i];

  grad.assign(vqc_.n_theta, 0.0);
  for (int g = last - 1; g >= first; --g) {
    const Op& op = vqc_.ops[g];
    if (op.slot == SlotKind::Theta) {
      // d/dtheta Re Tr(L G X G^dag) = Im Tr([L, P] X) / 2 for G = exp(-i theta P / 2).
      cplx pm[4];
      generator_matrix(op.kind, pm);
      const std::size_t bit = std::size_t{1} << op.target;
      // Tr([L, P] X) = sum_{r,c} L[r,c] (P X - X P)[c,r]
      cplx tr(0.0, 0.0);
      for (std::size_t r = 0; r < n; ++r) {
        const std::size_t rb = (r & bit) ? 1 : 0;
        const std::size_t r0 = r & ~bit, r1 = r | bit;
        for (std::size_t c = 0; c < n; ++c) {
          const std::size_t cbit = (c & bit) ? 1 : 0;
          const std::size_t c0 = c & ~bit, c1 = c | bit;
          const cplx px = pm[2 * cbit] * x[c0 * n + r] + pm[2 * cbit + 1] * x[c1 * n + r];
          const cplx xp = x[c * n + r0] * pm[rb] + x[c * n + r1] * pm[2 + rb];
          tr += lam[r * n + c] * (px - xp);
        }
      }
      grad[op.index] += 0.5 * tr.imag();
    }
    conjugate(x, n, op, angle_of(op), true);
    conjugate(lam, n, op, angle_of(op), true);
  }
}

}  // namespace hlvqa
