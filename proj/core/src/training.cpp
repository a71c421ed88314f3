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

#include "hlvqa/training.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>

#include "hlvqa/evaluator.hpp"

namespace hlvqa {

AdamState AdamState::init(std::vector<double> theta, double lr) {
  AdamState s;
  s.m.assign(theta.size(), 0.0);
  s.v.assign(theta.size(), 0.0);
  s.theta = std::move(theta);
  s.learning_rate = lr;
  return s;
}

AdamState adam_step(const AdamState& state, const std::vector<double>& gradient,
                    const AdamConfig& cfg) {
  if (gradient.size() != state.theta.size())
    throw std::invalid_argument("adam_step: gradient length mismatch");
  for (double g : gradient)
    if (!std::isfinite(g)) throw std::invalid_argument("adam_step: non-finite gradient");
  if (!(state.learning_rate > 0.0)) throw std::invalid_argument("adam_step: learning rate <= 0");
  AdamState s = state;
  s.step_count += 1;
  const double c1 = 1.0 - std::pow(cfg.beta1, s.step_count);
  const double c2 = 1.0 - std::pow(cfg.beta2, s.step_count);
  for (std::size_t k = 0; k < s.theta.size(); ++k) {
    s.m[k] = cfg.beta1 * s.m[k] + (1.0 - cfg.beta1) * gradient[k];
    s.v[k] = cfg.beta2 * s.v[k] + (1.0 - cfg.beta2) * gradient[k] * gradient[k];
    const double mh = s.m[k] / c1;
    const double vh = s.v[k] / c2;
    s.theta[k] -= s.learning_rate * mh / (std::sqrt(vh) + cfg.eps);
  }
  return s;
}

double LrPolicy::rate(double loss) const {
  for (std::size_t i = 0; i < thresholds.size(); ++i)
    if (loss > thresholds[i]) return rates[i];
  return rates.back();
}

void LrPolicy::validate() const {
  if (rates.size() != thresholds.size() + 1)
    throw std::invalid_argument("lr policy needs one more rate than thresholds");
  for (double r : rates)
    if (!(r > 0.0)) throw std::invalid_argument("lr policy rates must be positive");
}

void SolverSetup::validate() const {
  if (nodes.size() < 2) throw std::invalid_argument("at least two training nodes are required");
  if (layers < 1) throw std::invalid_argument("layers must be >= 1");
  if (map == FeatureMapKind::Chebyshev && chebyshev_qubits < 1)
    throw std::invalid_argument("chebyshev_qubits must be >= 1");
  if (eta.de < 0.0 || eta.cs < 0.0 || eta.reg < 0.0)
    throw std::invalid_argument("eta weights must be non-negative");
  if (!(eps_loss >= 0.0) || !(eps_grad >= 0.0))
    throw std::invalid_argument("thresholds must be non-negative");
}

ReadoutSpec solution_readout(const SolutionState& s) {
  ReadoutSpec r = s.map == FeatureMapKind::Chebyshev
                      ? make_chebyshev_readout(s.chebyshev_qubits, s.layers)
                      : make_lagrange_readout(s.map, NodeSet(s.nodes), s.layers);
  r.shift = s.shift;
  return r;
}

bool converged(const TrainingTrace& trace, double eps_loss, double eps_grad) {
  if (trace.records.empty()) return false;
  const TraceRecord& r = trace.records.back();
  return r.loss.total <= eps_loss || r.grad_maxnorm <= eps_grad;
}

namespace {

constexpr double kDivergenceLoss = 1e6;

class UniformAngle {
 public:
  explicit UniformAngle(std::uint64_t seed) : rng_(seed) {}
  double operator()() {
    const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    return -std::numbers::pi + 2.0 * std::numbers::pi * u;
  }

 private:
  std::mt19937_64 rng_;
};

struct Stage {
  std::vector<int> de_nodes;
  std::vector<int> reg_nodes;
  std::vector<double> reg_targets;  // readout units, aligned with reg_nodes
  int part = 1;
};

class Trainer {
 public:
  Trainer(const ProblemSpec& p, const SolverSetup& s, const Schedule& sc, std::uint64_t seed,
          int max_iters)
      : prob_(p), setup_(s), sched_(sc), rng_(seed), max_iters_(max_iters), map_(p.map()) {}

  TrainingTrace run();

 private:
  int register_size() const { return static_cast<int>(state_.nodes.size()); }
  void build_circuit(int n_nodes);
  // Runs one stage to convergence; false when training must stop.
  bool run_stage(const Stage& st, const std::function<double(double)>& lr_of_loss);
  double value_at(double x) const;

  const ProblemSpec& prob_;
  const SolverSetup& setup_;
  const Schedule& sched_;
  UniformAngle rng_;
  int max_iters_;
  AffineMap map_;

  SolutionState state_;
  Circuit circuit_;
  CostOperator cost_;
  AdamState adam_;
  TrainingTrace trace_;
  int iter_ = 0;
  std::int64_t circuits_cum_ = 0, gates_cum_ = 0;
};

void Trainer::build_circuit(int n_nodes) {
  if (setup_.map == FeatureMapKind::Chebyshev) {
    circuit_ = build_chebyshev_vqc(setup_.chebyshev_qubits, setup_.layers);
    cost_ = chebyshev_cost(setup_.chebyshev_qubits);
    return;
  }
  const NodeSet nodes(std::vector<double>(setup_.nodes.begin(), setup_.nodes.begin() + n_nodes));
  circuit_ = build_lagrange_vqc(setup_.map, nodes, setup_.layers);
  cost_ = lagrange_cost(nodes);
}

double Trainer::value_at(double x) const {
  return expectation(circuit_, x, adam_.theta, cost_) + state_.shift;
}

bool Trainer::run_stage(const Stage& st, const std::function<double(double)>& lr_of_loss) {
  const auto cons = prob_.constraints();
  if (cons.empty() || cons[0].order != 0)
    throw std::invalid_argument("the floating shift needs a value constraint first");

  // Point layout: boundary points, DE nodes, regularization nodes.
  std::vector<double> xs;
  std::vector<PointNeed> needs;
  auto add_point = [&](double x, PointNeed need) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (xs[i] == x) {
        if (need == PointNeed::Full) needs[i] = PointNeed::Full;
        return static_cast<int>(i);
      }
    }
    xs.push_back(x);
    needs.push_back(need);
    return static_cast<int>(xs.size()) - 1;
  };
  std::vector<int> cons_pt;
  for (const auto& c : cons) cons_pt.push_back(add_point(map_.to_x(c.t), PointNeed::Full));
  std::vector<int> de_pt, reg_pt;
  for (int j : st.de_nodes) de_pt.push_back(add_point(setup_.nodes[j], PointNeed::Full));
  for (int j : st.reg_nodes) reg_pt.push_back(add_point(setup_.nodes[j], PointNeed::Value));

  CachedEvaluator ev(circuit_, cost_, setup_.engine);
  ev.set_points(xs, needs);

  // v(p) = o[3p] + shift, shift = u0 / U - o[3 pf].
  const double U = prob_.amplitude, L = prob_.length_scale, sig = prob_.residual_scale;
  const double k = map_.dx_dt();
  const int pf = cons_pt[0];
  const double v0 = cons[0].value / U;
  auto value_terms = [&](int p, double scale, ResidualRow& row) {
    if (p != pf) {
      row.terms.emplace_back(3 * p, scale);
      row.terms.emplace_back(3 * pf, -scale);
    }
    row.constant += scale * v0;
  };

  LossModel model;
  model.eta = setup_.eta;
  model.dist = setup_.distance;
  for (int p : de_pt) {
    const double t = map_.to_t(xs[p]);
    const LinearResidual lr = prob_.residual_at(t);
    ResidualRow row;
    row.group = LossGroup::DE;
    row.weight = 1.0 / static_cast<double>(de_pt.size());
    const double us = U / sig;
    if (lr.c2 != 0.0) row.terms.emplace_back(3 * p + 2, us * lr.c2 * k * k);
    if (lr.c1 != 0.0) row.terms.emplace_back(3 * p + 1, us * lr.c1 * k);
    if (lr.c0 != 0.0) value_terms(p, us * lr.c0, row);
    row.constant += lr.g / sig;
    model.rows.push_back(row);
  }
  for (std::size_t i = 1; i < cons.size(); ++i) {
    const Constraint& c = cons[i];
    const int p = cons_pt[i];
    ResidualRow row;
    row.group = LossGroup::CS;
    const double lk = std::pow(L, c.order);
    if (c.order == 0) {
      value_terms(p, 1.0, row);
    } else if (c.order == 1) {
      row.terms.emplace_back(3 * p + 1, L * k);
    } else {
      row.terms.emplace_back(3 * p + 2, L * L * k * k);
    }
    row.constant -= lk * c.value / U;
    model.rows.push_back(row);
  }
  for (std::size_t i = 0; i < reg_pt.size(); ++i) {
    ResidualRow row;
    row.group = LossGroup::Reg;
    row.weight = 1.0 / static_cast<double>(reg_pt.size());
    value_terms(reg_pt[i], 1.0, row);
    row.constant -= st.reg_targets[i];
    model.rows.push_back(row);
  }

  const int P = ev.num_theta();
  const std::int64_t circ_it = ev.circuits_per_evaluation() * (1 + 2 * P);
  const std::int64_t gate_it = ev.gates_per_evaluation() * (1 + 2 * P);
  trace_.circuits_per_iteration_last = circ_it;
  trace_.gates_per_iteration_last = gate_it;

  if (sched_.reset_moments || adam_.m.size() != adam_.theta.size()) {
    adam_.m.assign(adam_.theta.size(), 0.0);
    adam_.v.assign(adam_.theta.size(), 0.0);
    adam_.step_count = 0;
  }

  std::vector<double> out, dl, grad(P);
  while (true) {
    if (iter_ >= max_iters_) return false;
    ev.evaluate(adam_.theta, out);
    const LossBreakdown loss = model.evaluate(out);
    model.gradient(out, dl);
    ev.theta_gradient(adam_.theta, dl, grad);
    double gmax = 0.0;
    for (double g : grad) gmax = std::max(gmax, std::abs(g));
    state_.shift = v0 - out[3 * pf];
    circuits_cum_ += circ_it;
    gates_cum_ += gate_it;

    TraceRecord rec;
    rec.iter = iter_++;
    rec.loss = loss;
    rec.grad_maxnorm = gmax;
    rec.part = st.part;
    rec.active_nodes = register_size();
    rec.de_nodes = st.de_nodes;
    rec.reg_nodes = st.reg_nodes;
    rec.circuits_cum = circuits_cum_;
    rec.gates_cum = gates_cum_;
    rec.lr = lr_of_loss(loss.total);

    if (!std::isfinite(loss.total) || loss.total > kDivergenceLoss || !std::isfinite(gmax)) {
      trace_.records.push_back(rec);
      trace_.diverged = true;
      trace_.divergence_reason = "loss diverged at iteration " + std::to_string(rec.iter);
      return false;
    }
    const bool done = loss.total <= setup_.eps_loss || gmax <= setup_.eps_grad;
    if (done) rec.lr = 0.0;
    trace_.records.push_back(rec);
    if (done) return true;

    adam_.learning_rate = rec.lr;
    adam_ = adam_step(adam_, grad);
    for (double th : adam_.theta) {
      if (!std::isfinite(th)) {
        trace_.diverged = true;
        trace_.divergence_reason = "non-finite parameter at iteration " + std::to_string(rec.iter);
        return false;
      }
    }
  }
}

TrainingTrace Trainer::run() {
  const int n_all = static_cast<int>(setup_.nodes.size());
  state_.map = setup_.map;
  state_.layers = setup_.layers;
  state_.chebyshev_qubits = setup_.chebyshev_qubits;

  auto sync_state = [&]() {
    state_.theta = adam_.theta;
    if (setup_.map != FeatureMapKind::Chebyshev)
      state_.nodes.assign(setup_.nodes.begin(), setup_.nodes.begin() + circuit_.register_qubits);
  };
  auto fixed_lr = [&](double lr) { return [lr](double) { return lr; }; };

  bool ok = true;
  if (sched_.kind == ScheduleKind::FixedSet || setup_.map == FeatureMapKind::Chebyshev) {
    build_circuit(n_all);
    std::vector<double> th(circuit_.n_theta);
    for (double& t : th) t = rng_();
    adam_ = AdamState::init(th, sched_.fixed_lr);
    sync_state();
    Stage st;
    for (int j = 0; j < n_all; ++j) st.de_nodes.push_back(j);
    ok = run_stage(st, fixed_lr(sched_.fixed_lr));
    sync_state();
    trace_.final_state = state_;
    trace_.converged = ok;
    return trace_;
  }

  const int m0 = std::min(sched_.initial_nodes, n_all);
  if (m0 < 2) throw std::invalid_argument("two-part schedule needs at least two initial nodes");
  const int L = setup_.layers;
  std::vector<double> th(static_cast<std::size_t>(m0) * L);
  for (double& t : th) t = rng_();
  build_circuit(m0);
  adam_ = AdamState::init(th, sched_.part1.rate(1e300));
  sync_state();
  std::vector<double> frozen(n_all, 0.0);

  auto policy = [&](double loss) { return sched_.part1.rate(loss); };
  for (int m = m0; m <= n_all && ok; ++m) {
    if (m > m0) {
      // Freeze the node leaving the DE set at its current value.
      frozen[m - 3] = value_at(setup_.nodes[m - 3]);
      std::vector<double> grown(static_cast<std::size_t>(m) * L);
      for (int l = 0; l < L; ++l) {
        for (int q = 0; q < m - 1; ++q) grown[l * m + q] = adam_.theta[l * (m - 1) + q];
        grown[l * m + m - 1] = rng_();
      }
      build_circuit(m);
      adam_.theta = grown;
      adam_.m.assign(grown.size(), 0.0);
      adam_.v.assign(grown.size(), 0.0);
      adam_.step_count = 0;
      sync_state();
    }
    Stage st;
    st.part = 1;
    st.de_nodes = {m - 2, m - 1};
    for (int j = 1; j <= m - 3; ++j) {
      st.reg_nodes.push_back(j);
      st.reg_targets.push_back(frozen[j]);
    }
    ok = run_stage(st, policy);
  }
  sync_state();
  trace_.has_part1 = true;
  trace_.part1_iterations = iter_;
  trace_.part1_loss = trace_.records.empty() ? 0.0 : trace_.records.back().loss.total;
  trace_.part1_state = state_;

  const int w = std::min(sched_.window, n_all);
  for (int s = 0; ok && s + w <= n_all; ++s) {
    Stage st;
    st.part = 2;
    for (int j = 0; j < n_all; ++j) {
      if (j >= s && j < s + w) {
        st.de_nodes.push_back(j);
      } else {
        st.reg_nodes.push_back(j);
        st.reg_targets.push_back(value_at(setup_.nodes[j]));
      }
    }
    ok = run_stage(st, fixed_lr(sched_.part2_lr));
  }
  sync_state();
  trace_.final_state = state_;
  trace_.converged = ok;
  return trace_;
}

}  // namespace

std::vector<double> random_theta(std::uint64_t seed, int n) {
  UniformAngle u(seed);
  std::vector<double> th(n);
  for (double& t : th) t = u();
  return th;
}

TrainingTrace run_training(const ProblemSpec& problem, const SolverSetup& setup,
                           const Schedule& schedule, std::uint64_t seed, int max_iters) {
  if (max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
  problem.validate();
  setup.validate();
  if (schedule.kind == ScheduleKind::TwoPartEvolving) schedule.part1.validate();
  Trainer t(problem, setup, schedule, seed, max_iters);
  return t.run();
}

}  // namespace hlvqa
