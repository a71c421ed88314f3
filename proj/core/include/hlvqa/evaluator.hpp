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

#include <cstdint>
#include <vector>

#include "hlvqa/circuit.hpp"
#include "hlvqa/derivatives.hpp"

namespace hlvqa {

enum class PointNeed { Value, Full };

// Batched readout of f, df/dx and d2f/dx2 over a fixed point set.
//
// Every derivative circuit shares the x-dependent feature-map prefix and ends
// with the same theta-dependent ansatz on the measured register. For each point
// the branch states of the derivative circuits (generator insertions for the
// Hadamard test, angle shifts for the shift rule) are simulated once and
// reduced over the unmeasured qubits into register matrices S with
// value = Re Tr(O S), where O = A(theta)^dag C A(theta). Only O depends on
// theta, so a theta sweep costs one small conjugation per variant.
class CachedEvaluator {
 public:
  CachedEvaluator(Circuit vqc, CostOperator cost, DiffEngine engine);

  void set_points(const std::vector<double>& xs, const std::vector<PointNeed>& needs);

  int num_points() const { return static_cast<int>(points_.size()); }
  int num_theta() const { return vqc_.n_theta; }
  const Circuit& circuit() const { return vqc_; }
  DiffEngine engine() const { return engine_; }

  // Raw cost expectations: out[3p] = f, out[3p+1] = df/dx, out[3p+2] = d2f/dx2
  // (derivatives are 0 for Value points).
  void evaluate(const std::vector<double>& theta, std::vector<double>& out) const;

  // out[0] at theta, out[1 + 2k] at theta_k + pi/2, out[2 + 2k] at theta_k - pi/2.
  void evaluate_shifted(const std::vector<double>& theta,
                        std::vector<std::vector<double>>& out) const;

  // grad[k] = sum_o weights[o] d out[o] / d theta_k, from one adjoint sweep over
  // the ansatz. Equals the shift-rule combination of evaluate_shifted().
  void theta_gradient(const std::vector<double>& theta, const std::vector<double>& weights,
                      std::vector<double>& grad) const;

  // Register observable A^dag C A, row-major.
  std::vector<cplx> propagated_cost(const std::vector<double>& theta) const;

  // Logical circuits represented by one evaluate() call, and their gate total.
  std::int64_t circuits_per_evaluation() const { return circuits_; }
  std::int64_t gates_per_evaluation() const { return gates_; }

 private:
  struct Point {
    double x = 0.0;
    PointNeed need = PointNeed::Value;
    // Transposed register matrices for f, df/dx, d2f/dx2.
    std::vector<cplx> s0, s1, s2;
  };

  void prepare_hadamard(Point& p) const;
  void prepare_shift(Point& p) const;
  void values(const std::vector<cplx>& o, double* out) const;

  Circuit vqc_;
  CostOperator cost_;
  DiffEngine engine_;
  int reg_ = 0;
  std::size_t dim_ = 0;
  std::vector<int> var_occ_;
  std::vector<Point> points_;
  std::int64_t circuits_ = 0;
  std::int64_t gates_ = 0;
  std::int64_t full_circuits_ = 0;
  std::int64_t full_gates_ = 0;
};

}  // namespace hlvqa
