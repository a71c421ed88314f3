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

#include "hlvqa_app/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace hlvqa::app {

namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << content;
  out.close();
  if (!out) throw IoError("write failed for " + path.string());
}

std::string seed_file(const char* stem, std::uint64_t seed) {
  return std::string(stem) + "_seed" + std::to_string(seed) + ".csv";
}

std::string trace_csv(const TrainingTrace& t) {
  std::ostringstream s;
  s << "iter,loss_total,loss_de,loss_cs,loss_reg,grad_maxnorm,lr,active_nodes,circuits_cum,"
       "gates_cum\n";
  for (const TraceRecord& r : t.records) {
    s << r.iter << ',' << format_double(r.loss.total) << ',' << format_double(r.loss.de) << ','
      << format_double(r.loss.cs) << ',' << format_double(r.loss.reg) << ','
      << format_double(r.grad_maxnorm) << ',' << format_double(r.lr) << ',' << r.active_nodes
      << ',' << r.circuits_cum << ',' << r.gates_cum << '\n';
  }
  return s.str();
}

std::string eval_csv(const std::vector<EvaluationRow>& rows) {
  std::ostringstream s;
  s << "x,f,f_ref,f1,f1_ref,f2,f2_ref,de_loss\n";
  for (const EvaluationRow& r : rows) {
    s << format_double(r.t) << ',' << format_double(r.u.f) << ',' << format_double(r.ref.f) << ','
      << format_double(r.u.f1) << ',' << format_double(r.ref.f1) << ',' << format_double(r.u.f2)
      << ',' << format_double(r.ref.f2) << ',' << format_double(r.de_loss) << '\n';
  }
  return s.str();
}

double de_loss_std(const SolutionSummary& s) {
  if (s.rows.empty()) return 0.0;
  double var = 0.0;
  for (const auto& r : s.rows) var += (r.de_loss - s.total_de_loss) * (r.de_loss - s.total_de_loss);
  return std::sqrt(var / static_cast<double>(s.rows.size()));
}

double final_loss(const TrainingTrace& t) {
  return t.records.empty() ? 0.0 : t.records.back().loss.total;
}

json budget_to_json(const GateBudget& b) {
  return {{"circuits_per_iteration", b.circuits_per_iteration},
          {"gates_per_iteration", b.gates_per_iteration},
          {"circuits_per_class", b.circuits_per_class},
          {"gates_per_circuit", b.gates_per_circuit}};
}

json seed_json(const SeedResult& r) {
  const TrainingTrace& t = r.trace;
  const SolutionSummary& s = r.summary;
  json j;
  j["seed"] = r.seed;
  j["iterations"] = t.records.size();
  j["converged"] = t.converged;
  j["diverged"] = t.diverged;
  j["divergence_reason"] = t.divergence_reason;
  if (!t.records.empty()) {
    const LossBreakdown& l = t.records.back().loss;
    j["final_loss"] = {{"total", l.total}, {"de", l.de}, {"cs", l.cs}, {"reg", l.reg}};
    j["final_grad_maxnorm"] = t.records.back().grad_maxnorm;
    j["circuits_total"] = t.records.back().circuits_cum;
    j["gates_total"] = t.records.back().gates_cum;
  }
  j["circuits_per_iteration_last"] = t.circuits_per_iteration_last;
  j["gates_per_iteration_last"] = t.gates_per_iteration_last;
  j["total_de_loss"] = s.total_de_loss;
  j["de_loss_std"] = de_loss_std(s);
  j["bc_loss"] = s.bc_loss;
  j["max_abs_error"] = s.max_abs_error;
  j["ref_range"] = s.ref_range;
  if (t.has_part1) {
    j["part1_iterations"] = t.part1_iterations;
    j["part1_training_loss"] = t.part1_loss;
    if (r.part1_eval_loss) j["part1_eval_loss"] = *r.part1_eval_loss;
  }
  j["theta"] = t.final_state.theta;
  j["shift"] = t.final_state.shift;
  return j;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool RunReport::any_diverged() const {
  return std::any_of(seeds.begin(), seeds.end(),
                     [](const SeedResult& s) { return s.trace.diverged; });
}

int readout_point_count(const ProblemSpec& problem, const std::vector<double>& nodes) {
  const AffineMap m = problem.map();
  std::vector<double> xs = nodes;
  for (const Constraint& c : problem.constraints()) xs.push_back(m.to_x(c.t));
  std::sort(xs.begin(), xs.end());
  return static_cast<int>(std::unique(xs.begin(), xs.end()) - xs.begin());
}

BudgetReport budget_for(const RunConfig& c) {
  BudgetReport b;
  b.readout_points = readout_point_count(c.problem, c.setup.nodes);
  if (c.algorithm == Algorithm::KyriienkoInspired)
    b.closed_form = ki_budget(c.setup.chebyshev_qubits, c.setup.layers, b.readout_points - 1);
  else
    b.closed_form = hl_budget(c.n_nodes, b.readout_points, c.setup.map);
  if (c.sato) {
    b.sato = sato_budget(c.problem.bc, c.sato->encoding_qubits, c.sato->layers,
                         c.sato->params_per_layer, c.sato->shift_circuits);
  }
  return b;
}

json budget_json(const BudgetReport& b) {
  json j;
  j["readout_points"] = b.readout_points;
  j["closed_form"] = budget_to_json(b.closed_form);
  if (b.sato) {
    j["sato"] = budget_to_json(*b.sato);
    j["sato_to_solver_gate_ratio"] = static_cast<double>(b.sato->gates_per_iteration) /
                                     static_cast<double>(b.closed_form.gates_per_iteration);
  }
  return j;
}

RunReport execute(const RunConfig& c, std::ostream* log) {
  RunReport r;
  r.config = c;
  r.budget = budget_for(c);
  for (std::uint64_t seed : c.seeds) {
    const auto t0 = std::chrono::steady_clock::now();
    SeedResult s;
    s.seed = seed;
    s.trace = run_training(c.problem, c.setup, c.schedule, seed, c.max_iters);
    s.summary = evaluate_solution(c.problem, s.trace.final_state, c.eval_points);
    if (s.trace.has_part1)
      s.part1_eval_loss = evaluate_solution(c.problem, s.trace.part1_state, c.eval_points).total_de_loss;
    s.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (log) {
      char line[256];
      std::snprintf(line, sizeof line,
                    "seed %llu: %zu iterations, converged %d, DE loss %.4g, BC loss %.4g, %.2f s\n",
                    static_cast<unsigned long long>(seed), s.trace.records.size(),
                    s.trace.converged ? 1 : 0, s.summary.total_de_loss, s.summary.bc_loss,
                    s.wall_seconds);
      *log << line << std::flush;
    }
    r.seeds.push_back(std::move(s));
  }
  if (c.select == Selection::Best) {
    for (std::size_t i = 0; i < r.seeds.size(); ++i) {
      if (r.seeds[i].trace.diverged) continue;
      if (r.selected < 0 || final_loss(r.seeds[i].trace) < final_loss(r.seeds[r.selected].trace))
        r.selected = static_cast<int>(i);
    }
  }
  return r;
}

std::vector<EvaluationRow> mirror_rows(const ProblemSpec& problem,
                                       const std::vector<EvaluationRow>& rows) {
  ProblemSpec other = problem;
  other.side = problem.side == Side::Left ? Side::Right : Side::Left;
  const double sum = problem.domain_lo + problem.domain_hi;
  std::vector<EvaluationRow> out;
  out.reserve(rows.size());
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    EvaluationRow m;
    m.t = sum - it->t;
    m.u = {-it->u.f, it->u.f1, -it->u.f2};
    m.ref = poisson_analytical(other, m.t, other.side);
    // The residual flips sign, so its square carries over.
    m.de_loss = it->de_loss;
    out.push_back(m);
  }
  return out;
}

std::vector<fs::path> emit_report(const RunReport& r, const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  std::vector<fs::path> files;
  auto put = [&](const std::string& name, const std::string& content) {
    write_file(dir / name, content);
    files.push_back(dir / name);
  };

  put("config.resolved.json", to_json(r.config).dump(2) + "\n");

  std::ostringstream agg;
  agg << "seed,iterations,converged,diverged,part1_iterations,part1_eval_loss,final_loss,"
         "total_de_loss,bc_loss,max_abs_error,ref_range,circuits_total,gates_total,selected\n";
  json seeds = json::array();
  for (std::size_t i = 0; i < r.seeds.size(); ++i) {
    const SeedResult& s = r.seeds[i];
    put(seed_file("trace", s.seed), trace_csv(s.trace));
    put(seed_file("eval", s.seed), eval_csv(s.summary.rows));
    if (r.config.mirror)
      put(seed_file("eval_mirror", s.seed), eval_csv(mirror_rows(r.config.problem, s.summary.rows)));
    const TrainingTrace& t = s.trace;
    const bool has = !t.records.empty();
    agg << s.seed << ',' << t.records.size() << ',' << (t.converged ? 1 : 0) << ','
        << (t.diverged ? 1 : 0) << ',' << (t.has_part1 ? t.part1_iterations : 0) << ','
        << format_double(s.part1_eval_loss.value_or(0.0)) << ',' << format_double(final_loss(t))
        << ',' << format_double(s.summary.total_de_loss) << ',' << format_double(s.summary.bc_loss)
        << ',' << format_double(s.summary.max_abs_error) << ','
        << format_double(s.summary.ref_range) << ',' << (has ? t.records.back().circuits_cum : 0)
        << ',' << (has ? t.records.back().gates_cum : 0) << ','
        << (static_cast<int>(i) == r.selected ? 1 : 0) << '\n';
    seeds.push_back(seed_json(s));
  }
  put("aggregate.csv", agg.str());

  json summary;
  summary["algorithm"] = algorithm_name(r.config.algorithm);
  summary["problem"] = problem_name(r.config.problem.kind);
  summary["eval_points"] = r.config.eval_points;
  summary["seeds"] = seeds;
  if (r.selected >= 0) summary["selected_seed"] = r.seeds[r.selected].seed;
  summary["budget"] = budget_json(r.budget);
  put("summary.json", summary.dump(2) + "\n");
  return files;
}

}  // namespace hlvqa::app
