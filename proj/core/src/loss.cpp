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

#include "hlvqa/loss.hpp"

#include <cmath>
#include <stdexcept>

namespace hlvqa {

ReadoutSpec make_lagrange_readout(FeatureMapKind kind, const NodeSet& nodes, int layers) {
  ReadoutSpec s;
  s.circuit = build_lagrange_vqc(kind, nodes, layers);
  s.map_kind = kind;
  s.cost = lagrange_cost(nodes);
  s.engine = DiffEngine::HadamardTest;
  return s;
}

ReadoutSpec make_chebyshev_readout(int n_qubits, int layers) {
  ReadoutSpec s;
  s.circuit = build_chebyshev_vqc(n_qubits, layers);
  s.map_kind = FeatureMapKind::Chebyshev;
  s.cost = chebyshev_cost(n_qubits);
  s.engine = DiffEngine::ShiftRule;
  return s;
}

double readout(const ReadoutSpec& spec, double x, const std::vector<double>& theta) {
  return expectation(spec.circuit, x, theta, spec.cost) + spec.shift;
}

Triple readout_triple(const ReadoutSpec& spec, double x, const std::vector<double>& theta) {
  Triple r;
  r.f = readout(spec, x, theta);
  r.f1 = df_dx(spec.circuit, x, theta, spec.cost, spec.engine);
  r.f2 = d2f_dx2(spec.circuit, x, theta, spec.cost, spec.engine);
  return r;
}

double floating_shift(const ReadoutSpec& spec, double x0, double u0,
                      const std::vector<double>& theta) {
  return u0 - expectation(spec.circuit, x0, theta, spec.cost);
}

Triple physical_triple(const ProblemSpec& problem, const ReadoutSpec& spec, double t,
                       const std::vector<double>& theta) {
  const AffineMap m = problem.map();
  const double k = m.dx_dt();
  const Triple r = readout_triple(spec, m.to_x(t), theta);
  const double u = problem.amplitude;
  return {u * r.f, u * r.f1 * k, u * r.f2 * k * k};
}

double distance(Distance d, double r) { return d == Distance::Squared ? r * r : std::abs(r); }

double de_loss(const ProblemSpec& problem, const ReadoutSpec& spec,
               const std::vector<double>& theta, const std::vector<double>& points) {
  if (points.empty()) throw std::invalid_argument("de_loss: empty point list");
  const AffineMap m = problem.map();
  double s = 0.0;
  for (double x : points) {
    if (x < problem.a || x > problem.b)
      throw std::out_of_range("de_loss: point outside the encoding interval");
    const double t = m.to_t(x);
    const Triple u = physical_triple(problem, spec, t, theta);
    s += distance(spec.distance, problem.residual(t, u.f, u.f1, u.f2) / problem.residual_scale);
  }
  return s / static_cast<double>(points.size());
}

double cs_loss(const ProblemSpec& problem, const ReadoutSpec& spec,
               const std::vector<double>& theta, bool floating) {
  const auto cons = problem.constraints();
  double s = 0.0;
  for (std::size_t i = floating ? 1 : 0; i < cons.size(); ++i) {
    const Constraint& c = cons[i];
    const Triple u = physical_triple(problem, spec, c.t, theta);
    const double val = c.order == 0 ? u.f : c.order == 1 ? u.f1 : u.f2;
    const double r = (val - c.value) * std::pow(problem.length_scale, c.order) / problem.amplitude;
    s += distance(spec.distance, r);
  }
  return s;
}

double reg_loss(const ReadoutSpec& spec, const std::vector<double>& theta,
                const std::vector<std::pair<double, double>>& reg_points) {
  if (reg_points.empty()) return 0.0;
  double s = 0.0;
  for (const auto& [x, u] : reg_points) s += distance(spec.distance, readout(spec, x, theta) - u);
  return s / static_cast<double>(reg_points.size());
}

LossBreakdown total_loss(double de, double cs, double reg, Eta eta) {
  if (eta.de < 0.0 || eta.cs < 0.0 || eta.reg < 0.0)
    throw std::invalid_argument("total_loss: negative weight");
  LossBreakdown b;
  b.de = de;
  b.cs = cs;
  b.reg = reg;
  b.eta = eta;
  b.total = eta.de * de + eta.cs * cs + eta.reg * reg;
  return b;
}

double ResidualRow::value(const std::vector<double>& o) const {
  double r = constant;
  for (const auto& [k, c] : terms) r += c * o[k];
  return r;
}

LossBreakdown LossModel::evaluate(const std::vector<double>& o) const {
  double part[3] = {0.0, 0.0, 0.0};
  for (const auto& row : rows)
    part[static_cast<int>(row.group)] += row.weight * distance(dist, row.value(o));
  return total_loss(part[0], part[1], part[2], eta);
}

void LossModel::gradient(const std::vector<double>& o, std::vector<double>& g) const {
  g.assign(o.size(), 0.0);
  for (const auto& row : rows) {
    const double w = row.group == LossGroup::DE ? eta.de : row.group == LossGroup::CS ? eta.cs : eta.reg;
    const double r = row.value(o);
    const double dr = dist == Distance::Squared ? 2.0 * r : (r > 0.0 ? 1.0 : r < 0.0 ? -1.0 : 0.0);
    const double s = w * row.weight * dr;
    for (const auto& [k, c] : row.terms) g[k] += s * c;
  }
}

}  // namespace hlvqa
