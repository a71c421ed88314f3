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

namespace hlvqa {

// Linear: constant-coefficient mass u'' + damping u' + stiffness u = 0 with
// u(t_lo) = u0, plus u'(t_lo) = v0 when second order.
enum class ProblemKind { DMSS, Poisson, Linear };
enum class BoundaryKind { Periodic, Dirichlet, Neumann };
enum class Side { Left, Right };
enum class NodeKind { Kind1, Kind2 };

const char* problem_name(ProblemKind k);
const char* boundary_name(BoundaryKind k);

// Chebyshev-Gauss nodes rescaled to [a, b], ascending.
std::vector<double> chebyshev_nodes_kind1(double a, double b, int n);
// Positive-branch nodes b cos((2k-1) pi / (4(n-1))), k = 1..n-1, completed by b.
std::vector<double> chebyshev_nodes_kind2(double b, int n);
std::vector<double> make_nodes(NodeKind kind, double a, double b, int n);

struct Triple {
  double f = 0.0, f1 = 0.0, f2 = 0.0;
};

// Physical t <-> encoded x.
struct AffineMap {
  double t_lo = 0.0, t_hi = 1.0;
  double a = 0.0, b = 1.0;

  AffineMap() = default;
  AffineMap(double t_lo_, double t_hi_, double a_, double b_);
  double to_x(double t) const { return a + (b - a) * (t - t_lo) / (t_hi - t_lo); }
  double to_t(double x) const { return t_lo + (t_hi - t_lo) * (x - a) / (b - a); }
  double dx_dt() const { return (b - a) / (t_hi - t_lo); }
};

// u^(order)(t) = value.
struct Constraint {
  double t = 0.0;
  int order = 0;
  double value = 0.0;
};

// r = c2 u'' + c1 u' + c0 u + g(t).
struct LinearResidual {
  double c0 = 0.0, c1 = 0.0, c2 = 0.0, g = 0.0;
  double operator()(double u, double u1, double u2) const { return c2 * u2 + c1 * u1 + c0 * u + g; }
};

struct ProblemSpec {
  ProblemKind kind = ProblemKind::DMSS;
  double t_lo = 0.0, t_hi = 10.0;  // training interval, mapped onto [a, b]
  double a = 0.0, b = 0.9;
  double eval_lo = 0.0, eval_hi = 10.0;

  double mass = 1.0, damping = 1.0, stiffness = 1.0;
  double u0 = 1.0, v0 = 0.0;

  int n_src = 5;
  BoundaryKind bc = BoundaryKind::Neumann;
  double domain_lo = 0.0, domain_hi = 31.0;
  Side side = Side::Left;

  // Readout v = u / amplitude. Loss residuals are divided by residual_scale,
  // derivative constraints are taken in units of length_scale.
  double amplitude = 1.0;
  double length_scale = 1.0;
  double residual_scale = 1.0;

  AffineMap map() const { return AffineMap(t_lo, t_hi, a, b); }
  double midpoint() const { return 0.5 * (domain_lo + domain_hi); }
  LinearResidual residual_at(double t) const;
  double residual(double t, double u, double u1, double u2) const {
    return residual_at(t)(u, u1, u2);
  }
  // Constraints in application order; the first one is met by the floating
  // shift, the rest enter the boundary loss.
  std::vector<Constraint> constraints() const;
  Triple analytical(double t) const;
  void validate() const;
};

// m = b = k = 1, u0 = 1, v0 = 0, trained over [0, t_train] and evaluated on [0, 10].
ProblemSpec dmss_problem(double t_train = 10.0);
// Half-interval Poisson problem on [0, 31] with the step source of exponent 5.
// Solves one half of [domain_lo, domain_hi]; the other half follows by symmetry.
ProblemSpec poisson_problem(BoundaryKind bc, Side side = Side::Left, int n_src = 5,
                            double domain_lo = 0.0, double domain_hi = 31.0);

double dmss_residual(const ProblemSpec& p, double f, double f1, double f2);
// Closed-form underdamped solution with its first two derivatives.
Triple dmss_analytical(const ProblemSpec& p, double t);

double poisson_source(const ProblemSpec& p, double x);
// Piecewise quadratic solution on [domain_lo, domain_hi]. At the midpoint the
// value is 0; `side` picks the branch used for the derivatives there.
Triple poisson_analytical(const ProblemSpec& p, double x, Side side = Side::Left);

}  // namespace hlvqa
