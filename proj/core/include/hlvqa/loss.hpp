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

#include <utility>
#include <vector>

#include "hlvqa/circuit.hpp"
#include "hlvqa/derivatives.hpp"
#include "hlvqa/problems.hpp"

namespace hlvqa {

enum class Distance { Squared, Absolute };

struct Eta {
  double de = 1.0, cs = 1.0, reg = 0.0;
};

inline constexpr Eta kEtaHadamardLagrange{1.0, 0.6, 1.0};
inline constexpr Eta kEtaKyriienko{1.0, 1.0, 0.0};

struct ReadoutSpec {
  Circuit circuit;
  FeatureMapKind map_kind = FeatureMapKind::LagrangeExtended;
  CostOperator cost;
  double shift = 0.0;
  DiffEngine engine = DiffEngine::HadamardTest;
  Distance distance = Distance::Squared;
};

ReadoutSpec make_lagrange_readout(FeatureMapKind kind, const NodeSet& nodes, int layers = 1);
ReadoutSpec make_chebyshev_readout(int n_qubits, int layers);

struct LossBreakdown {
  double de = 0.0, cs = 0.0, reg = 0.0;
  Eta eta;
  double total = 0.0;
};

double readout(const ReadoutSpec& spec, double x, const std::vector<double>& theta);
// Readout value and x-derivatives in encoded units.
Triple readout_triple(const ReadoutSpec& spec, double x, const std::vector<double>& theta);
double floating_shift(const ReadoutSpec& spec, double x0, double u0,
                      const std::vector<double>& theta);

// Physical u, u', u'' at t from the readout at the mapped encoded point.
Triple physical_triple(const ProblemSpec& problem, const ReadoutSpec& spec, double t,
                       const std::vector<double>& theta);

double distance(Distance d, double r);

// Mean DE residual distance over encoded points.
double de_loss(const ProblemSpec& problem, const ReadoutSpec& spec,
               const std::vector<double>& theta, const std::vector<double>& points);
// Summed constraint residual distances. The first constraint is skipped when
// `floating` is set: it is met by the shift.
double cs_loss(const ProblemSpec& problem, const ReadoutSpec& spec,
               const std::vector<double>& theta, bool floating = true);
double reg_loss(const ReadoutSpec& spec, const std::vector<double>& theta,
                const std::vector<std::pair<double, double>>& reg_points);
LossBreakdown total_loss(double de, double cs, double reg, Eta eta);

// Loss as a function of a vector of circuit outputs o. Every row is affine,
// R = sum_k c_k o[k] + constant, and contributes weight * distance(R) to its group.
enum class LossGroup { DE, CS, Reg };

struct ResidualRow {
  LossGroup group = LossGroup::DE;
  double weight = 1.0;
  std::vector<std::pair<int, double>> terms;
  double constant = 0.0;

  double value(const std::vector<double>& o) const;
};

struct LossModel {
  std::vector<ResidualRow> rows;
  Eta eta;
  Distance dist = Distance::Squared;

  LossBreakdown evaluate(const std::vector<double>& o) const;
  // dL/do, resized to o.size().
  void gradient(const std::vector<double>& o, std::vector<double>& g) const;
};

}  // namespace hlvqa
