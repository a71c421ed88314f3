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

#include <benchmark/benchmark.h>

#include "hlvqa/evaluator.hpp"
#include "hlvqa/problems.hpp"
#include "hlvqa/training.hpp"

namespace hlvqa {
namespace {

void BM_RotationGate(benchmark::State& st) {
  StateVector s(static_cast<int>(st.range(0)));
  const Gate g = Gate::ry(1, 0.3);
  for (auto _ : st) {
    s.apply(g);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(s.size()));
}
BENCHMARK(BM_RotationGate)->DenseRange(8, 20, 4);

void BM_Cnot(benchmark::State& st) {
  StateVector s(static_cast<int>(st.range(0)));
  for (auto _ : st) {
    s.apply_cnot(0, 3);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(s.size()));
}
BENCHMARK(BM_Cnot)->DenseRange(8, 20, 4);

struct LagrangeFixture {
  NodeSet nodes;
  Circuit circuit;
  CachedEvaluator ev;
  std::vector<double> theta;

  explicit LagrangeFixture(int n)
      : nodes(make_nodes(NodeKind::Kind1, 0.0, 0.9, n)),
        circuit(build_lagrange_vqc(FeatureMapKind::LagrangeExtended, nodes)),
        ev(circuit, lagrange_cost(nodes), DiffEngine::HadamardTest),
        theta(random_theta(1, n)) {
    std::vector<double> xs = nodes.nodes();
    xs.push_back(0.0);
    ev.set_points(xs, std::vector<PointNeed>(xs.size(), PointNeed::Full));
  }
};

void BM_Evaluate(benchmark::State& st) {
  LagrangeFixture f(static_cast<int>(st.range(0)));
  std::vector<double> out;
  for (auto _ : st) {
    f.ev.evaluate(f.theta, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_Evaluate)->DenseRange(3, 7, 2);

void BM_ThetaGradient(benchmark::State& st) {
  LagrangeFixture f(static_cast<int>(st.range(0)));
  std::vector<double> w(3 * (f.theta.size() + 1), 1.0), grad;
  for (auto _ : st) {
    f.ev.theta_gradient(f.theta, w, grad);
    benchmark::DoNotOptimize(grad.data());
  }
}
BENCHMARK(BM_ThetaGradient)->DenseRange(3, 7, 2);

void BM_TrainingIterations(benchmark::State& st) {
  const ProblemSpec p = dmss_problem();
  SolverSetup s;
  s.nodes = make_nodes(NodeKind::Kind1, p.a, p.b, static_cast<int>(st.range(0)));
  Schedule sc;
  for (auto _ : st) benchmark::DoNotOptimize(run_training(p, s, sc, 1, 20));
  st.SetItemsProcessed(st.iterations() * 20);
}
BENCHMARK(BM_TrainingIterations)->Arg(4)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace hlvqa

BENCHMARK_MAIN();
