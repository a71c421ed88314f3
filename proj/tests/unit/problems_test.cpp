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

#include <cmath>

#include <gtest/gtest.h>

namespace hlvqa {
namespace {

double cheb_t(int n, double x) { return std::cos(n * std::acos(x)); }

TEST(Nodes, KindOneAreMappedChebyshevRoots) {
  const auto x = chebyshev_nodes_kind1(0.0, 0.9, 7);
  ASSERT_EQ(x.size(), 7u);
  for (std::size_t i = 0; i < x.size(); ++i) {
    EXPECT_NEAR(cheb_t(7, (x[i] - 0.45) / 0.45), 0.0, 1e-13);
    if (i > 0) EXPECT_GT(x[i], x[i - 1]);
  }
  EXPECT_GT(x.front(), 0.0);
  EXPECT_LT(x.back(), 0.9);
}

TEST(Nodes, KindTwoEndAtTheRightEdge) {
  const auto x = chebyshev_nodes_kind2(0.9, 12);
  ASSERT_EQ(x.size(), 12u);
  EXPECT_DOUBLE_EQ(x.back(), 0.9);
  // Interior points are the positive roots of T_{2(n-1)} scaled by b.
  for (int i = 0; i < 11; ++i) EXPECT_NEAR(cheb_t(22, x[i] / 0.9), 0.0, 1e-12);
  EXPECT_GT(x.front(), 0.0);
}

TEST(Nodes, RejectBadArguments) {
  EXPECT_THROW(chebyshev_nodes_kind1(0.0, 0.9, 1), std::invalid_argument);
  EXPECT_THROW(chebyshev_nodes_kind1(0.5, 0.5, 3), std::invalid_argument);
  EXPECT_THROW(chebyshev_nodes_kind2(0.0, 3), std::invalid_argument);
}

TEST(AffineMap, RoundTrip) {
  const AffineMap m(0.0, 10.0, 0.0, 0.9);
  EXPECT_DOUBLE_EQ(m.to_x(10.0), 0.9);
  EXPECT_NEAR(m.to_t(m.to_x(3.7)), 3.7, 1e-14);
  EXPECT_DOUBLE_EQ(m.dx_dt(), 0.09);
  EXPECT_THROW(AffineMap(1.0, 1.0, 0.0, 0.9), std::invalid_argument);
}

TEST(Dmss, OracleMatchesClosedFormForUnitCoefficients) {
  const ProblemSpec p = dmss_problem();
  const double beta = std::sqrt(3.0) / 2.0;
  for (double t : {0.0, 0.5, 2.0, 7.3, 10.0}) {
    const double want = std::exp(-t / 2) * (std::cos(beta * t) + std::sin(beta * t) / std::sqrt(3.0));
    const Triple u = p.analytical(t);
    EXPECT_NEAR(u.f, want, 1e-14);
    EXPECT_NEAR(dmss_residual(p, u.f, u.f1, u.f2), 0.0, 1e-14);
  }
  EXPECT_NEAR(p.analytical(0.0).f1, 0.0, 1e-15);
}

TEST(Dmss, ConstraintsAndValidation) {
  const ProblemSpec p = dmss_problem(12.0);
  EXPECT_DOUBLE_EQ(p.t_hi, 12.0);
  EXPECT_DOUBLE_EQ(p.eval_hi, 10.0);
  const auto c = p.constraints();
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].order, 0);
  EXPECT_EQ(c[1].order, 1);
  ProblemSpec over = p;
  over.damping = 3.0;
  EXPECT_THROW(over.validate(), std::invalid_argument);
  EXPECT_THROW(dmss_analytical(over, 1.0), std::domain_error);
}

// Left and right branches written out for a = 0, b = 31, n = 5.
TEST(Poisson, DirichletAndNeumannBranchesMatchExplicitPolynomials) {
  const double A = -std::pow(0.5, 3.5);
  const ProblemSpec d = poisson_problem(BoundaryKind::Dirichlet);
  const ProblemSpec n = poisson_problem(BoundaryKind::Neumann);
  for (double x : {0.0, 3.0, 9.5, 15.0}) {
    EXPECT_NEAR(poisson_analytical(d, x).f, A * (x * x - 14.5 * x - 15.5), 1e-12);
    EXPECT_NEAR(poisson_analytical(n, x).f, A * (x * x - 240.25), 1e-12);
  }
  for (double x : {16.0, 22.5, 31.0}) {
    EXPECT_NEAR(poisson_analytical(d, x).f, -A * (x * x - 47.5 * x + 496.0), 1e-12);
    EXPECT_NEAR(poisson_analytical(n, x).f, -A * (x * x - 62.0 * x + 720.75), 1e-12);
  }
}

TEST(Poisson, OraclesSolveTheEquationAndMeetTheirBoundaries) {
  for (auto bc : {BoundaryKind::Periodic, BoundaryKind::Dirichlet, BoundaryKind::Neumann}) {
    const ProblemSpec p = poisson_problem(bc);
    const double xm = p.midpoint();
    for (double x = 0.0; x <= 31.0; x += 0.5) {
      if (x == xm) continue;
      const Triple u = poisson_analytical(p, x);
      EXPECT_NEAR(u.f2 + poisson_source(p, x), 0.0, 1e-15) << boundary_name(bc);
    }
    EXPECT_EQ(poisson_analytical(p, xm).f, 0.0);
    // Point symmetry about the midpoint.
    EXPECT_NEAR(poisson_analytical(p, 4.0).f, -poisson_analytical(p, 27.0).f, 1e-12);
    for (const Constraint& c : p.constraints()) {
      const Triple u = poisson_analytical(p, c.t);
      EXPECT_NEAR(c.order == 0 ? u.f : u.f1, c.value, 1e-12) << boundary_name(bc);
    }
  }
}

TEST(Poisson, ConstraintsPerBoundaryKind) {
  EXPECT_DOUBLE_EQ(poisson_problem(BoundaryKind::Dirichlet).constraints()[1].t, -1.0);
  EXPECT_DOUBLE_EQ(poisson_problem(BoundaryKind::Periodic).constraints()[1].t, -0.5);
  const auto n = poisson_problem(BoundaryKind::Neumann).constraints();
  EXPECT_EQ(n[1].order, 1);
  EXPECT_DOUBLE_EQ(n[0].t, 15.5);
  const auto r = poisson_problem(BoundaryKind::Dirichlet, Side::Right).constraints();
  EXPECT_DOUBLE_EQ(r[1].t, 32.0);
}

TEST(Poisson, ScalesAndSource) {
  const ProblemSpec p = poisson_problem(BoundaryKind::Neumann);
  EXPECT_DOUBLE_EQ(p.t_lo, -1.0);
  EXPECT_DOUBLE_EQ(p.t_hi, 15.5);
  EXPECT_DOUBLE_EQ(p.length_scale, 16.5);
  EXPECT_DOUBLE_EQ(p.residual_scale, std::pow(0.5, 2.5));
  EXPECT_THROW(poisson_source(p, 15.5), std::domain_error);
  EXPECT_DOUBLE_EQ(p.residual_at(15.5).g, std::pow(0.5, 2.5));
  // |u| on the half stays below the amplitude.
  for (double x = 0.0; x <= 15.5; x += 0.25)
    EXPECT_LE(std::abs(poisson_analytical(p, x).f), p.amplitude);
}

TEST(Linear, FirstOrderDecayOracle) {
  ProblemSpec p;
  p.kind = ProblemKind::Linear;
  p.mass = 0.0;
  p.damping = 2.0;
  p.stiffness = 1.0;
  p.u0 = 3.0;
  const Triple u = p.analytical(1.0);
  EXPECT_NEAR(u.f, 3.0 * std::exp(-0.5), 1e-14);
  EXPECT_NEAR(p.residual(1.0, u.f, u.f1, u.f2), 0.0, 1e-14);
  EXPECT_EQ(p.constraints().size(), 1u);
}

}  // namespace
}  // namespace hlvqa
