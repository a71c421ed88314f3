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

#include "hlvqa/problems.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hlvqa {

const char* problem_name(ProblemKind k) {
  switch (k) {
    case ProblemKind::DMSS:
      return "dmss";
    case ProblemKind::Poisson:
      return "poisson";
    case ProblemKind::Linear:
      return "linear";
  }
  return "?";
}

const char* boundary_name(BoundaryKind k) {
  switch (k) {
    case BoundaryKind::Periodic:
      return "periodic";
    case BoundaryKind::Dirichlet:
      return "dirichlet";
    case BoundaryKind::Neumann:
      return "neumann";
  }
  return "?";
}

std::vector<double> chebyshev_nodes_kind1(double a, double b, int n) {
  if (n < 2) throw std::invalid_argument("chebyshev_nodes_kind1: n must be >= 2");
  if (!(a < b)) throw std::invalid_argument("chebyshev_nodes_kind1: empty interval");
  std::vector<double> x(n);
  for (int k = 1; k <= n; ++k)
    x[k - 1] = 0.5 * (a + b) + 0.5 * (b - a) * std::cos((2.0 * k - 1.0) * std::numbers::pi / (2.0 * n));
  std::sort(x.begin(), x.end());
  return x;
}

std::vector<double> chebyshev_nodes_kind2(double b, int n) {
  if (n < 2) throw std::invalid_argument("chebyshev_nodes_kind2: n must be >= 2");
  if (!(b > 0.0)) throw std::invalid_argument("chebyshev_nodes_kind2: b must be positive");
  std::vector<double> x;
  x.reserve(n);
  for (int k = 1; k <= n - 1; ++k)
    x.push_back(b * std::cos((2.0 * k - 1.0) * std::numbers::pi / (4.0 * (n - 1))));
  x.push_back(b);
  std::sort(x.begin(), x.end());
  for (int i = 1; i < n; ++i)
    if (!(x[i] > x[i - 1])) throw std::invalid_argument("chebyshev_nodes_kind2: duplicate nodes");
  return x;
}

std::vector<double> make_nodes(NodeKind kind, double a, double b, int n) {
  return kind == NodeKind::Kind1 ? chebyshev_nodes_kind1(a, b, n) : chebyshev_nodes_kind2(b, n);
}

AffineMap::AffineMap(double t_lo_, double t_hi_, double a_, double b_)
    : t_lo(t_lo_), t_hi(t_hi_), a(a_), b(b_) {
  if (!(t_hi > t_lo) || !(b > a)) throw std::invalid_argument("AffineMap: degenerate interval");
}

void ProblemSpec::validate() const {
  if (!(0.0 <= a && a < b && b < 1.0))
    throw std::invalid_argument("encoded interval must satisfy 0 <= a < b < 1");
  if (!(t_hi > t_lo)) throw std::invalid_argument("physical interval is degenerate");
  if (!(eval_hi > eval_lo)) throw std::invalid_argument("evaluation interval is degenerate");
  if (!(amplitude > 0.0) || !(length_scale > 0.0) || !(residual_scale > 0.0))
    throw std::invalid_argument("scales must be positive");
  if (kind == ProblemKind::Linear) return;
  if (kind == ProblemKind::DMSS) {
    if (!(mass > 0.0)) throw std::invalid_argument("mass must be positive");
    if (damping * damping - 4.0 * mass * stiffness >= 0.0)
      throw std::invalid_argument("DMSS oracle needs an underdamped system");
  } else {
    if (n_src < 0) throw std::invalid_argument("n_src must be >= 0");
    if (!(domain_hi > domain_lo)) throw std::invalid_argument("Poisson domain is degenerate");
  }
}

LinearResidual ProblemSpec::residual_at(double t) const {
  LinearResidual r;
  if (kind != ProblemKind::Poisson) {
    r.c2 = mass;
    r.c1 = damping;
    r.c0 = stiffness;
    return r;
  }
  r.c2 = 1.0;
  // The solved half fixes the source branch, including at the midpoint.
  const double s = std::pow(0.5, 0.5 * n_src);
  if (t == midpoint())
    r.g = side == Side::Left ? s : -s;
  else
    r.g = poisson_source(*this, t);
  return r;
}

std::vector<Constraint> ProblemSpec::constraints() const {
  if (kind == ProblemKind::DMSS) return {{t_lo, 0, u0}, {t_lo, 1, v0}};
  if (kind == ProblemKind::Linear) {
    if (mass != 0.0) return {{t_lo, 0, u0}, {t_lo, 1, v0}};
    return {{t_lo, 0, u0}};
  }
  const double xm = midpoint();
  const bool left = side == Side::Left;
  std::vector<Constraint> c{{xm, 0, 0.0}};
  switch (bc) {
    case BoundaryKind::Dirichlet:
      c.push_back({left ? domain_lo - 1.0 : domain_hi + 1.0, 0, 0.0});
      break;
    case BoundaryKind::Neumann:
      c.push_back({left ? domain_lo : domain_hi, 1, 0.0});
      break;
    case BoundaryKind::Periodic:
      c.push_back({left ? domain_lo - 0.5 : domain_hi + 0.5, 0, 0.0});
      break;
  }
  return c;
}

Triple ProblemSpec::analytical(double t) const {
  if (kind == ProblemKind::Linear) {
    if (mass == 0.0 && stiffness == 0.0) return {u0, 0.0, 0.0};
    if (mass == 0.0 && damping != 0.0) {
      const double r = -stiffness / damping;
      const double e = u0 * std::exp(r * (t - t_lo));
      return {e, r * e, r * r * e};
    }
    if (damping * damping - 4.0 * mass * stiffness < 0.0) return dmss_analytical(*this, t);
    throw std::domain_error("no closed form for this linear problem");
  }
  return kind == ProblemKind::DMSS ? dmss_analytical(*this, t) : poisson_analytical(*this, t, side);
}

ProblemSpec dmss_problem(double t_train) {
  ProblemSpec p;
  p.kind = ProblemKind::DMSS;
  p.t_lo = 0.0;
  p.t_hi = t_train;
  p.eval_lo = 0.0;
  p.eval_hi = 10.0;
  return p;
}

ProblemSpec poisson_problem(BoundaryKind bc, Side side, int n_src, double domain_lo,
                            double domain_hi) {
  ProblemSpec p;
  p.kind = ProblemKind::Poisson;
  p.bc = bc;
  p.side = side;
  p.n_src = n_src;
  p.domain_lo = domain_lo;
  p.domain_hi = domain_hi;
  const double xm = p.midpoint();
  // Pad by one unit so every boundary point lies inside the encoded range.
  if (side == Side::Left) {
    p.t_lo = p.domain_lo - 1.0;
    p.t_hi = xm;
    p.eval_lo = p.domain_lo;
    p.eval_hi = xm;
  } else {
    p.t_lo = xm;
    p.t_hi = p.domain_hi + 1.0;
    p.eval_lo = xm;
    p.eval_hi = p.domain_hi;
  }
  // Dimensionless form: t in units of the half width L, u in units of s L^2 / 2,
  // which bounds |u| on the half for every boundary kind.
  p.length_scale = p.t_hi - p.t_lo;
  p.residual_scale = std::pow(0.5, 0.5 * p.n_src);
  p.amplitude = 0.5 * p.residual_scale * p.length_scale * p.length_scale;
  return p;
}

double dmss_residual(const ProblemSpec& p, double f, double f1, double f2) {
  return p.mass * f2 + p.damping * f1 + p.stiffness * f;
}

Triple dmss_analytical(const ProblemSpec& p, double t) {
  const double disc = p.damping * p.damping - 4.0 * p.mass * p.stiffness;
  if (disc >= 0.0) throw std::domain_error("dmss_analytical: system is not underdamped");
  const double al = -p.damping / (2.0 * p.mass);
  const double be = std::sqrt(-disc) / (2.0 * p.mass);
  const double tau = t - p.t_lo;
  const double c1 = p.u0;
  const double c2 = (p.v0 - al * c1) / be;
  const double e = std::exp(al * tau);
  const double cs = std::cos(be * tau), sn = std::sin(be * tau);
  // g = C1 cos + C2 sin and its derivatives; f = e g.
  const double g = c1 * cs + c2 * sn;
  const double g1 = be * (c2 * cs - c1 * sn);
  const double g2 = -be * be * g;
  Triple r;
  r.f = e * g;
  r.f1 = e * (al * g + g1);
  r.f2 = e * (al * al * g + 2.0 * al * g1 + g2);
  return r;
}

double poisson_source(const ProblemSpec& p, double x) {
  const double xm = p.midpoint();
  if (x == xm) throw std::domain_error("poisson_source: undefined at the midpoint");
  const double s = std::pow(0.5, 0.5 * p.n_src);
  return x < xm ? s : -s;
}

Triple poisson_analytical(const ProblemSpec& p, double x, Side side) {
  const double a = p.domain_lo, b = p.domain_hi, xm = p.midpoint();
  const double A = -std::pow(0.5, 0.5 * p.n_src + 1.0);
  double bl = 0.0;
  switch (p.bc) {
    case BoundaryKind::Periodic:
      bl = 0.5 * (3.0 * a + b - 1.0);
      break;
    case BoundaryKind::Dirichlet:
      bl = 0.5 * (3.0 * a + b - 2.0);
      break;
    case BoundaryKind::Neumann:
      bl = 2.0 * a;
      break;
  }
  // Constant term pinned by f(x_m) = 0.
  const double cl = bl * xm - xm * xm;
  const bool use_left = x < xm || (x == xm && side == Side::Left);
  Triple r;
  if (use_left) {
    r.f = A * (x * x - bl * x + cl);
    r.f1 = A * (2.0 * x - bl);
    r.f2 = 2.0 * A;
  } else {
    // Right branch is the point reflection -f_L(a + b - x).
    const double y = a + b - x;
    r.f = -A * (y * y - bl * y + cl);
    r.f1 = A * (2.0 * y - bl);
    r.f2 = -2.0 * A;
  }
  if (x == xm) r.f = 0.0;
  return r;
}

}  // namespace hlvqa
