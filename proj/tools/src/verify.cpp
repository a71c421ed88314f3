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

#include "hlvqa_app/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "hlvqa/baselines.hpp"
#include "hlvqa/circuit.hpp"
#include "hlvqa/complexity.hpp"
#include "hlvqa/derivatives.hpp"
#include "hlvqa/problems.hpp"
#include "hlvqa/statevector.hpp"
#include "hlvqa/training.hpp"

namespace hlvqa::app {

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(g_() >> 11) * 0x1.0p-53;
  }
  int integer(int lo, int hi) { return lo + static_cast<int>(g_() % static_cast<std::uint64_t>(hi - lo + 1)); }

 private:
  std::mt19937_64 g_;
};

// Sorted nodes in [0, 0.95) with pairwise gaps of at least `gap`.
std::vector<double> random_nodes(Rng& rng, int n, double gap) {
  while (true) {
    std::vector<double> x(n);
    for (double& v : x) v = rng.uniform(0.0, 0.95);
    std::sort(x.begin(), x.end());
    bool ok = true;
    for (int i = 1; i < n; ++i) ok = ok && x[i] - x[i - 1] >= gap;
    if (ok) return x;
  }
}

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

CostOperator random_cost(Rng& rng, int n) {
  CostOperator c;
  for (int q = 0; q < n; ++q) c.terms.emplace_back(q, rng.uniform(-1.0, 1.0));
  return c;
}

}  // namespace

std::string format_check(const CheckResult& r) {
  return std::string(r.passed ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " + r.name +
         ": " + r.detail;
}

CheckResult check_encoding_identity(std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0;
  for (int n = 2; n <= 6; ++n) {
    for (int draw = 0; draw < 50; ++draw) {
      const NodeSet nodes(random_nodes(rng, n, 0.0));
      const double x = rng.uniform(0.0, 0.95);
      const std::vector<double> zero(n, 0.0);
      for (auto kind : {FeatureMapKind::LagrangeExtended, FeatureMapKind::LagrangeSimplified}) {
        const StateVector s = hlvqa::bind(build_lagrange_vqc(kind, nodes), x, zero);
        for (int j = 0; j < n; ++j) {
          double want = 1.0;
          for (int i = 0; i < n; ++i)
            if (i != j) want *= x - nodes.node(i);
          want /= std::ldexp(1.0, n - 1);
          worst = std::max(worst, std::abs(expectation_z(s, j) - want));
        }
      }
    }
  }
  return {1, "encoding identity", worst <= 1e-10, fmt("max |<Z_j> - product| = %.3g (tol 1e-10)", worst)};
}

CheckResult check_partition_of_unity(std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0;
  for (int n = 2; n <= 6; ++n) {
    for (int set = 0; set < 4; ++set) {
      const NodeSet nodes(random_nodes(rng, n, 0.1));
      const CostOperator cost = lagrange_cost(nodes);
      const std::vector<double> zero(n, 0.0);
      for (auto kind : {FeatureMapKind::LagrangeExtended, FeatureMapKind::LagrangeSimplified}) {
        const Circuit c = build_lagrange_vqc(kind, nodes);
        for (int k = 0; k < 100; ++k) {
          const double x = rng.uniform(0.0, 0.95);
          worst = std::max(worst, std::abs(expectation(c, x, zero, cost) - 1.0));
        }
      }
    }
  }
  return {2, "partition of unity", worst <= 1e-10, fmt("max |readout - 1| = %.3g (tol 1e-10)", worst)};
}

CheckResult check_structure_equivalence(std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0;
  int draws = 0;
  for (int n = 2; n <= 6; ++n) {
    for (int draw = 0; draw < 20; ++draw, ++draws) {
      const NodeSet nodes(random_nodes(rng, n, 0.1));
      const CostOperator cost = lagrange_cost(nodes);
      std::vector<double> theta(n);
      for (double& t : theta) t = rng.uniform(-std::numbers::pi, std::numbers::pi);
      const double x = rng.uniform(0.0, 0.95);
      const double e = expectation(build_lagrange_vqc(FeatureMapKind::LagrangeExtended, nodes), x,
                                   theta, cost);
      const double s = expectation(build_lagrange_vqc(FeatureMapKind::LagrangeSimplified, nodes), x,
                                   theta, cost);
      worst = std::max(worst, std::abs(e - s));
    }
  }
  return {3, "structure equivalence", worst <= 1e-10,
          fmt("max |extended - simplified| = %.3g over %.0f draws (tol 1e-10)", worst, draws)};
}

CheckResult check_derivatives(std::uint64_t seed) {
  Rng rng(seed);
  double engines = 0.0, fd1 = 0.0, fd2 = 0.0;
  const int configs = 120;
  for (int k = 0; k < configs; ++k) {
    Circuit c;
    double x;
    const int type = k % 3;
    if (type == 0) {
      const int q = rng.integer(2, 3);
      c = build_chebyshev_vqc(q, rng.integer(1, 2));
      x = rng.uniform(0.1, 0.9);
    } else {
      const int n = rng.integer(2, 4);
      const NodeSet nodes(random_nodes(rng, n, 0.1));
      c = build_lagrange_vqc(type == 1 ? FeatureMapKind::LagrangeExtended
                                       : FeatureMapKind::LagrangeSimplified,
                             nodes, rng.integer(1, 2));
      x = rng.uniform(0.0, 0.95);
    }
    const int reg = c.register_qubits;
    const CostOperator cost = random_cost(rng, reg);
    std::vector<double> theta(c.n_theta);
    for (double& t : theta) t = rng.uniform(-std::numbers::pi, std::numbers::pi);
    auto f = [&](double xx, const std::vector<double>& th) { return expectation(c, xx, th, cost); };

    // d/dx and d2/dx2.
    const double d1s = df_dx(c, x, theta, cost, DiffEngine::ShiftRule);
    const double d1h = df_dx(c, x, theta, cost, DiffEngine::HadamardTest);
    const double d2s = d2f_dx2(c, x, theta, cost, DiffEngine::ShiftRule);
    const double d2h = d2f_dx2(c, x, theta, cost, DiffEngine::HadamardTest);
    const double h1 = 1e-5, h2 = 1e-4;
    const double fd_1 = (f(x + h1, theta) - f(x - h1, theta)) / (2.0 * h1);
    const double fd_2 = (f(x + h2, theta) - 2.0 * f(x, theta) + f(x - h2, theta)) / (h2 * h2);
    engines = std::max({engines, std::abs(d1s - d1h), std::abs(d2s - d2h)});
    fd1 = std::max({fd1, std::abs(d1s - fd_1), std::abs(d1h - fd_1)});
    fd2 = std::max({fd2, std::abs(d2s - fd_2), std::abs(d2h - fd_2)});

    // d/dtheta_a and d2/dtheta_a dtheta_b.
    const int a = rng.integer(0, c.n_theta - 1), b = rng.integer(0, c.n_theta - 1);
    const double ps = shift_rule_partial(c, x, theta, SlotId::theta(a), cost);
    const double ph = hadamard_test_partial(c, x, theta, SlotId::theta(a), cost);
    auto shifted = [&](int i, double di, int j, double dj) {
      std::vector<double> th = theta;
      th[i] += di;
      th[j] += dj;
      return f(x, th);
    };
    const double fd_t = (shifted(a, h1, a, 0.0) - shifted(a, -h1, a, 0.0)) / (2.0 * h1);
    const double ss = second_partial(c, x, theta, SlotId::theta(a), SlotId::theta(b), cost,
                                     DiffEngine::ShiftRule);
    const double sh = second_partial(c, x, theta, SlotId::theta(a), SlotId::theta(b), cost,
                                     DiffEngine::HadamardTest);
    const double fd_tt = (shifted(a, h2, b, h2) - shifted(a, h2, b, -h2) - shifted(a, -h2, b, h2) +
                          shifted(a, -h2, b, -h2)) /
                         (4.0 * h2 * h2);
    engines = std::max({engines, std::abs(ps - ph), std::abs(ss - sh)});
    fd1 = std::max({fd1, std::abs(ps - fd_t), std::abs(ph - fd_t)});
    fd2 = std::max({fd2, std::abs(ss - fd_tt), std::abs(sh - fd_tt)});
  }
  const bool ok = engines <= 1e-10 && fd1 <= 1e-6 && fd2 <= 1e-4;
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "%d configs; engines %.3g (tol 1e-10), FD first %.3g (tol 1e-6), FD second %.3g "
                "(tol 1e-4)",
                configs, engines, fd1, fd2);
  return {4, "derivative correctness", ok, buf};
}

CheckResult check_rz_invariance(std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const int n = rng.integer(1, 5);
    StateVector s = init_zero_state(n);
    for (int g = 0; g < 30; ++g) {
      const int kind = rng.integer(0, n > 1 ? 4 : 3);
      const int q = rng.integer(0, n - 1);
      const double ang = rng.uniform(-std::numbers::pi, std::numbers::pi);
      switch (kind) {
        case 0: s.apply(Gate::rx(q, ang)); break;
        case 1: s.apply(Gate::ry(q, ang)); break;
        case 2: s.apply(Gate::rz(q, ang)); break;
        case 3: s.apply(Gate::h(q)); break;
        default: s.apply(Gate::cnot(q, (q + rng.integer(1, n - 1)) % n)); break;
      }
    }
    const CostOperator cost = random_cost(rng, n);
    const double before = expectation_weighted_z(s, cost);
    s.apply(Gate::rz(rng.integer(0, n - 1), rng.uniform(-std::numbers::pi, std::numbers::pi)));
    worst = std::max(worst, std::abs(expectation_weighted_z(s, cost) - before));
  }
  return {5, "RZ invariance", worst <= 1e-12, fmt("max change %.3g over 200 circuits (tol 1e-12)", worst)};
}

CheckResult check_oracles() {
  // DMSS: classical RK4 on m u'' + b u' + k u = 0.
  const ProblemSpec d = dmss_problem();
  double u = d.u0, v = d.v0, dmss_err = 0.0;
  const int steps = 10000;
  const double h = (d.eval_hi - d.eval_lo) / steps;
  auto acc = [&](double uu, double vv) { return -(d.damping * vv + d.stiffness * uu) / d.mass; };
  for (int i = 1; i <= steps; ++i) {
    const double k1u = v, k1v = acc(u, v);
    const double k2u = v + 0.5 * h * k1v, k2v = acc(u + 0.5 * h * k1u, v + 0.5 * h * k1v);
    const double k3u = v + 0.5 * h * k2v, k3v = acc(u + 0.5 * h * k2u, v + 0.5 * h * k2v);
    const double k4u = v + h * k3v, k4v = acc(u + h * k3u, v + h * k3v);
    u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
    v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    const Triple o = dmss_analytical(d, d.eval_lo + i * h);
    dmss_err = std::max({dmss_err, std::abs(o.f - u), std::abs(o.f1 - v)});
  }

  // Poisson: residual off the midpoint and the boundary identities.
  double res = 0.0, bcerr = 0.0;
  for (auto bc : {BoundaryKind::Periodic, BoundaryKind::Dirichlet, BoundaryKind::Neumann}) {
    const ProblemSpec p = poisson_problem(bc);
    const double a = p.domain_lo, b = p.domain_hi, xm = p.midpoint();
    auto f = [&](double x) { return poisson_analytical(p, x); };
    for (int i = 0; i <= 310; ++i) {
      const double x = a + (b - a) * i / 310.0;
      if (x == xm) continue;
      res = std::max(res, std::abs(f(x).f2 + poisson_source(p, x)));
    }
    const double below = std::nextafter(xm, a), above = std::nextafter(xm, b);
    bcerr = std::max({bcerr, std::abs(f(xm).f), std::abs(f(below).f - f(above).f),
                      std::abs(f(below).f1 - f(above).f1)});
    switch (bc) {
      case BoundaryKind::Dirichlet:
        bcerr = std::max({bcerr, std::abs(f(a - 1.0).f), std::abs(f(b + 1.0).f)});
        break;
      case BoundaryKind::Neumann:
        bcerr = std::max({bcerr, std::abs(f(a).f1), std::abs(f(b).f1)});
        break;
      case BoundaryKind::Periodic: {
        const double T = b - a + 1.0;
        bcerr = std::max({bcerr, std::abs(f(a - 0.5).f - f(a - 0.5 + T).f),
                          std::abs(f(a - 0.5).f1 - f(a - 0.5 + T).f1)});
        break;
      }
    }
  }
  const bool ok = dmss_err <= 1e-6 && res <= 1e-12 && bcerr <= 1e-12;
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "DMSS vs RK4 %.3g (tol 1e-6); Poisson residual %.3g, boundary identities %.3g "
                "(tol 1e-12)",
                dmss_err, res, bcerr);
  return {6, "analytical oracles", ok, buf};
}

CheckResult check_complexity() {
  std::string detail;
  bool ok = true;
  auto expect = [&](const char* what, std::int64_t got, std::int64_t want) {
    if (got != want) {
      ok = false;
      detail += std::string(what) + " " + std::to_string(got) + " != " + std::to_string(want) + "; ";
    }
  };
  const GateBudget ki = ki_budget(5, 2, 12);
  expect("ki circuits", ki.circuits_per_iteration, 30303);
  expect("ki gates/circuit", ki.gates_per_circuit.at("f"), 25);
  const GateBudget hs = hl_budget(7, 8, FeatureMapKind::LagrangeSimplified);
  const GateBudget he = hl_budget(7, 8, FeatureMapKind::LagrangeExtended);
  expect("hl simplified f gates", hs.gates_per_circuit.at("f"), 52);
  expect("hl extended f gates", he.gates_per_circuit.at("f"), 49);
  expect("hl circuits", he.circuits_per_iteration, 6840);
  const GateBudget sn = sato_budget(BoundaryKind::Neumann, 5, 5, 8);
  expect("sato circuits", sn.circuits_per_iteration, 230);
  expect("sato parameters", sn.circuits_per_iteration / sato_observables(BoundaryKind::Neumann) - 1, 45);

  // Live counters from one training iteration on the same configurations.
  const TrainingTrace kt = run_ki_dmss(5, 2, NodeKind::Kind2, 12, 1, 1);
  expect("ki live circuits", kt.circuits_per_iteration_last, ki.circuits_per_iteration);
  SolverSetup hs_setup;
  hs_setup.nodes = chebyshev_nodes_kind1(0.0, 0.9, 7);
  Schedule fixed;
  const TrainingTrace ht = run_training(dmss_problem(), hs_setup, fixed, 1, 1);
  expect("hl live circuits", ht.circuits_per_iteration_last, he.circuits_per_iteration);

  // Poisson solver setup: simplified structure, three nodes plus the boundary point.
  const GateBudget hp = hl_budget(3, 4, FeatureMapKind::LagrangeSimplified);
  detail += "Sato/solver gates per iteration";
  for (auto bc : {BoundaryKind::Periodic, BoundaryKind::Dirichlet, BoundaryKind::Neumann}) {
    const double ratio = static_cast<double>(sato_budget(bc, 5, 5, 8).gates_per_iteration) /
                         static_cast<double>(hp.gates_per_iteration);
    if (!(ratio >= 50.0)) ok = false;
    detail += std::string(" ") + boundary_name(bc) + fmt(" %.4g", ratio);
  }
  detail += " (need >= 50)";
  if (ok) detail = "goldens and live counters match; " + detail;
  return {10, "complexity", ok, detail};
}

std::vector<CheckResult> property_suite(std::uint64_t seed) {
  return {check_encoding_identity(seed),     check_partition_of_unity(seed + 1),
          check_structure_equivalence(seed + 2), check_derivatives(seed + 3),
          check_rz_invariance(seed + 4),     check_oracles(),
          check_complexity()};
}

}  // namespace hlvqa::app
