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

#include <vector>

#include "hlvqa/circuit.hpp"

namespace hlvqa {

enum class DiffEngine { ShiftRule, HadamardTest };

const char* engine_name(DiffEngine e);

struct EncodingDerivatives {
  std::vector<double> dphi_dx;
  std::vector<double> d2phi_dx2;
};

EncodingDerivatives encoding_derivatives(const Encoding& enc, double x);

double expectation(const Circuit& c, double x, const std::vector<double>& theta,
                   const CostOperator& cost);

// Parameter-shift rule: 1/2 [f(+pi/2) - f(-pi/2)] per gate occurrence.
double shift_rule_partial(const Circuit& c, double x, const std::vector<double>& theta, SlotId slot,
                          const CostOperator& cost);
double shift_rule_occurrence_partial(const Circuit& c, double x, const std::vector<double>& theta,
                                     int gate, const CostOperator& cost);
// Double shift over every ordered occurrence pair; coinciding occurrences
// reduce to [f(+pi) - 2f + f(-pi)] / 4.
double shift_rule_second(const Circuit& c, double x, const std::vector<double>& theta, SlotId a,
                         SlotId b, const CostOperator& cost);

// Hadamard-test derivative circuits. The ancilla is qubit c.n_qubits and starts
// in |+>. A controlled generator of the rotation at `gate` is inserted right
// after it; measuring Y_anc (x) C gives Im<M|C|M_a> = d<C>/d(angle).
Circuit hadamard_first_circuit(const Circuit& c, int gate);
// Generator of gate `a` on the ancilla-0 branch and of gate `b` on the
// ancilla-1 branch (or both on branch 1 when `same_branch`), read out through
// X_anc (x) C: Re<M_a|C|M_b> or Re<M|C|M_ab>.
Circuit hadamard_second_circuit(const Circuit& c, int a, int b, bool same_branch);

double hadamard_test_partial(const Circuit& c, double x, const std::vector<double>& theta,
                             SlotId slot, const CostOperator& cost);
double hadamard_test_occurrence_partial(const Circuit& c, double x,
                                        const std::vector<double>& theta, int gate,
                                        const CostOperator& cost);
double hadamard_test_second(const Circuit& c, double x, const std::vector<double>& theta,
                            SlotId a, SlotId b, const CostOperator& cost);

double second_partial(const Circuit& c, double x, const std::vector<double>& theta, SlotId a,
                      SlotId b, const CostOperator& cost,
                      DiffEngine engine = DiffEngine::ShiftRule);

double df_dx(const Circuit& c, double x, const std::vector<double>& theta, const CostOperator& cost,
             DiffEngine engine = DiffEngine::ShiftRule);
double d2f_dx2(const Circuit& c, double x, const std::vector<double>& theta,
               const CostOperator& cost, DiffEngine engine = DiffEngine::ShiftRule);

// Circuit counts per readout point for the x-derivative triple (f, f', f'').
long long derivative_circuit_count(int occurrences, DiffEngine engine);

}  // namespace hlvqa
