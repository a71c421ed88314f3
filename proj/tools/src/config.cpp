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

#include "hlvqa_app/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>

#include "hlvqa/loss.hpp"

namespace hlvqa::app {

namespace {

using json = nlohmann::json;

// Wraps one JSON object; every key must be taken exactly once before finish().
class Fields {
 public:
  Fields(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError(path_.empty() ? "config" : path_, "expected an object");
  }

  std::string name(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  const json* find(const std::string& key) {
    seen_.insert(key);
    auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  bool has(const std::string& key) const { return j_.contains(key); }

  double number(const std::string& key, double def) {
    const json* v = find(key);
    if (!v) return def;
    if (!v->is_number()) throw ConfigError(name(key), "expected a number");
    const double d = v->get<double>();
    if (!std::isfinite(d)) throw ConfigError(name(key), "must be finite");
    return d;
  }

  int integer(const std::string& key, int def) {
    const json* v = find(key);
    if (!v) return def;
    if (!v->is_number_integer()) throw ConfigError(name(key), "expected an integer");
    return v->get<int>();
  }

  bool boolean(const std::string& key, bool def) {
    const json* v = find(key);
    if (!v) return def;
    if (!v->is_boolean()) throw ConfigError(name(key), "expected true or false");
    return v->get<bool>();
  }

  std::string text(const std::string& key, const std::string& def) {
    const json* v = find(key);
    if (!v) return def;
    if (!v->is_string()) throw ConfigError(name(key), "expected a string");
    return v->get<std::string>();
  }

  template <typename E>
  E choice(const std::string& key, E def, const std::map<std::string, E>& options) {
    const json* v = find(key);
    if (!v) return def;
    if (!v->is_string()) throw ConfigError(name(key), "expected a string");
    auto it = options.find(v->get<std::string>());
    if (it == options.end()) {
      std::string list;
      for (const auto& [k, e] : options) list += (list.empty() ? "" : ", ") + k;
      throw ConfigError(name(key), "unknown value '" + v->get<std::string>() + "' (expected " +
                                       list + ")");
    }
    return it->second;
  }

  std::vector<double> numbers(const std::string& key, std::vector<double> def) {
    const json* v = find(key);
    if (!v) return def;
    if (!v->is_array()) throw ConfigError(name(key), "expected an array of numbers");
    std::vector<double> out;
    for (const auto& e : *v) {
      if (!e.is_number()) throw ConfigError(name(key), "expected an array of numbers");
      out.push_back(e.get<double>());
    }
    return out;
  }

  // Rejects keys present in the object but never asked for.
  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it)
      if (!seen_.count(it.key())) throw ConfigError(name(it.key()), "unknown key");
  }

  // Fails when `key` is present; used for fields that do not apply.
  void forbid(const std::string& key, const std::string& why) {
    seen_.insert(key);
    if (j_.contains(key)) throw ConfigError(name(key), why);
  }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

const std::map<std::string, ProblemKind> kProblems{{"dmss", ProblemKind::DMSS},
                                                   {"poisson", ProblemKind::Poisson}};
const std::map<std::string, BoundaryKind> kBoundaries{{"periodic", BoundaryKind::Periodic},
                                                      {"dirichlet", BoundaryKind::Dirichlet},
                                                      {"neumann", BoundaryKind::Neumann}};
const std::map<std::string, Side> kSides{{"left", Side::Left}, {"right", Side::Right}};
const std::map<std::string, Algorithm> kAlgorithms{
    {"hadamard_lagrange", Algorithm::HadamardLagrange},
    {"kyriienko_inspired", Algorithm::KyriienkoInspired}};
const std::map<std::string, FeatureMapKind> kStructures{
    {"extended", FeatureMapKind::LagrangeExtended},
    {"simplified", FeatureMapKind::LagrangeSimplified}};
const std::map<std::string, NodeKind> kNodeKinds{{"kind1", NodeKind::Kind1},
                                                 {"kind2", NodeKind::Kind2}};
const std::map<std::string, DiffEngine> kEngines{{"hadamard_test", DiffEngine::HadamardTest},
                                                 {"shift_rule", DiffEngine::ShiftRule}};
const std::map<std::string, ScheduleKind> kSchedules{{"fixed", ScheduleKind::FixedSet},
                                                     {"two_part", ScheduleKind::TwoPartEvolving}};
const std::map<std::string, Distance> kDistances{{"squared", Distance::Squared},
                                                 {"absolute", Distance::Absolute}};
const std::map<std::string, Selection> kSelections{{"all", Selection::All},
                                                   {"best", Selection::Best}};

template <typename E>
std::string key_of(const std::map<std::string, E>& options, E value) {
  for (const auto& [k, e] : options)
    if (e == value) return k;
  return "?";
}

void require(bool ok, const std::string& field, const std::string& message) {
  if (!ok) throw ConfigError(field, message);
}

// Runs a core validator, reporting its message against `field`.
template <typename F>
void check_with(const std::string& field, F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    throw ConfigError(field, e.what());
  }
}

}  // namespace

const char* algorithm_name(Algorithm a) {
  return a == Algorithm::HadamardLagrange ? "hadamard_lagrange" : "kyriienko_inspired";
}

RunConfig parse_config(const json& j) {
  Fields f(j, "");
  RunConfig c;

  const ProblemKind kind = f.choice("problem", ProblemKind::DMSS, kProblems);
  c.algorithm = f.choice("algorithm", Algorithm::HadamardLagrange, kAlgorithms);
  const bool ki = c.algorithm == Algorithm::KyriienkoInspired;
  if (ki) require(kind == ProblemKind::DMSS, "algorithm", "kyriienko_inspired supports only dmss");

  // Problem.
  if (kind == ProblemKind::DMSS) {
    f.forbid("boundary", "only used by poisson");
    f.forbid("side", "only used by poisson");
    f.forbid("mirror", "only used by poisson");
    f.forbid("n_src", "only used by poisson");
    f.forbid("domain", "only used by poisson");
    const double t_hi = f.number("t_train_hi", ki ? 12.0 : 10.0);
    require(t_hi > 0.0, f.name("t_train_hi"), "must be positive");
    c.problem = dmss_problem(t_hi);
    c.problem.mass = f.number("mass", c.problem.mass);
    c.problem.damping = f.number("damping", c.problem.damping);
    c.problem.stiffness = f.number("stiffness", c.problem.stiffness);
    c.problem.u0 = f.number("u0", c.problem.u0);
    c.problem.v0 = f.number("v0", c.problem.v0);
    require(c.problem.mass > 0.0, "mass", "must be positive");
    require(c.problem.damping * c.problem.damping < 4.0 * c.problem.mass * c.problem.stiffness,
            "stiffness", "damping^2 - 4 mass stiffness must be negative (underdamped)");
    require(c.problem.eval_hi <= t_hi, "t_train_hi", "must cover the evaluation interval [0, 10]");
  } else {
    for (const char* k : {"t_train_hi", "mass", "damping", "stiffness", "u0", "v0"})
      f.forbid(k, "only used by dmss");
    const BoundaryKind bc = f.choice("boundary", BoundaryKind::Neumann, kBoundaries);
    const Side side = f.choice("side", Side::Left, kSides);
    c.mirror = f.boolean("mirror", false);
    const int n_src = f.integer("n_src", 5);
    require(n_src >= 0, "n_src", "must be >= 0");
    const std::vector<double> dom = f.numbers("domain", {0.0, 31.0});
    require(dom.size() == 2 && dom[1] > dom[0], "domain", "expected [lo, hi] with lo < hi");
    c.problem = poisson_problem(bc, side, n_src, dom[0], dom[1]);
  }
  const std::vector<double> iv = f.numbers("interval", {c.problem.a, c.problem.b});
  require(iv.size() == 2 && 0.0 <= iv[0] && iv[0] < iv[1] && iv[1] < 1.0, "interval",
          "expected [a, b] with 0 <= a < b < 1");
  c.problem.a = iv[0];
  c.problem.b = iv[1];
  c.problem.amplitude = f.number("amplitude", c.problem.amplitude);
  require(c.problem.amplitude > 0.0, "amplitude", "must be positive");
  check_with("problem", [&] { c.problem.validate(); });

  // Solver.
  SolverSetup& s = c.setup;
  if (ki) {
    f.forbid("structure", "only used by hadamard_lagrange");
    s.map = FeatureMapKind::Chebyshev;
    s.chebyshev_qubits = f.integer("n_qubits", 5);
    require(s.chebyshev_qubits >= 1, "n_qubits", "must be >= 1");
  } else {
    f.forbid("n_qubits", "set by n_nodes for hadamard_lagrange");
    s.map = f.choice("structure", FeatureMapKind::LagrangeExtended, kStructures);
  }
  s.layers = f.integer("n_layers", ki ? 2 : 1);
  require(s.layers >= 1, "n_layers", "must be >= 1");
  c.node_kind = f.choice("node_kind", ki ? NodeKind::Kind2 : NodeKind::Kind1, kNodeKinds);
  c.n_nodes = f.integer("n_nodes", ki ? 12 : (kind == ProblemKind::DMSS ? 7 : 3));
  require(c.n_nodes >= 2, "n_nodes", "must be >= 2");
  check_with("n_nodes", [&] { s.nodes = make_nodes(c.node_kind, c.problem.a, c.problem.b, c.n_nodes); });
  if (!ki) {
    const int qubits = s.map == FeatureMapKind::LagrangeExtended ? 2 * c.n_nodes : c.n_nodes + 1;
    require(qubits <= kMaxQubits, "n_nodes", "circuit would need " + std::to_string(qubits) +
                                                 " qubits (limit " + std::to_string(kMaxQubits) + ")");
  }
  s.engine = f.choice("engine", ki ? DiffEngine::ShiftRule : DiffEngine::HadamardTest, kEngines);
  s.distance = f.choice("distance", Distance::Squared, kDistances);
  s.eps_loss = f.number("eps_loss", 1e-4);
  s.eps_grad = f.number("eps_grad", 1e-4);
  require(s.eps_loss >= 0.0, "eps_loss", "must be >= 0");
  require(s.eps_grad >= 0.0, "eps_grad", "must be >= 0");
  s.eta = ki ? kEtaKyriienko : kEtaHadamardLagrange;
  if (const json* e = f.find("eta")) {
    Fields ef(*e, "eta");
    s.eta.de = ef.number("de", s.eta.de);
    s.eta.cs = ef.number("cs", s.eta.cs);
    s.eta.reg = ef.number("reg", s.eta.reg);
    ef.finish();
    require(s.eta.de >= 0.0, "eta.de", "must be >= 0");
    require(s.eta.cs >= 0.0, "eta.cs", "must be >= 0");
    require(s.eta.reg >= 0.0, "eta.reg", "must be >= 0");
  }
  check_with("config", [&] { s.validate(); });

  // Schedule.
  Schedule& sc = c.schedule;
  sc.kind = (!ki && kind == ProblemKind::DMSS) ? ScheduleKind::TwoPartEvolving
                                               : ScheduleKind::FixedSet;
  if (const json* sj = f.find("schedule")) {
    Fields sf(*sj, "schedule");
    sc.kind = sf.choice("kind", sc.kind, kSchedules);
    sc.fixed_lr = sf.number("lr", sc.fixed_lr);
    sc.initial_nodes = sf.integer("initial_nodes", sc.initial_nodes);
    sc.part1.thresholds = sf.numbers("lr_thresholds", sc.part1.thresholds);
    sc.part1.rates = sf.numbers("lr_rates", sc.part1.rates);
    sc.part2_lr = sf.number("part2_lr", sc.part2_lr);
    sc.window = sf.integer("window", sc.window);
    sc.reset_moments = sf.boolean("reset_moments", sc.reset_moments);
    sf.finish();
  }
  require(!(ki && sc.kind == ScheduleKind::TwoPartEvolving), "schedule.kind",
          "two_part needs a Lagrange structure");
  require(sc.fixed_lr > 0.0, "schedule.lr", "must be positive");
  require(sc.part2_lr > 0.0, "schedule.part2_lr", "must be positive");
  check_with("schedule.lr_rates", [&] { sc.part1.validate(); });
  if (sc.kind == ScheduleKind::TwoPartEvolving) {
    require(sc.initial_nodes >= 3 && sc.initial_nodes <= c.n_nodes, "schedule.initial_nodes",
            "must lie in [3, n_nodes]");
    require(sc.window >= 1 && sc.window <= c.n_nodes, "schedule.window",
            "must lie in [1, n_nodes]");
  }

  // Run.
  if (const json* sd = f.find("seeds")) {
    require(sd->is_array() && !sd->empty(), "seeds", "expected a non-empty array");
    c.seeds.clear();
    for (const auto& e : *sd) {
      require(e.is_number_unsigned() || (e.is_number_integer() && e.get<std::int64_t>() >= 0), "seeds", "seeds must be non-negative integers");
      c.seeds.push_back(e.get<std::uint64_t>());
    }
    std::vector<std::uint64_t> sorted = c.seeds;
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), "seeds",
            "duplicate seed");
  }
  c.max_iters = f.integer("max_iters", c.max_iters);
  require(c.max_iters >= 1, "max_iters", "must be >= 1");
  c.eval_points = f.integer("eval_points", c.eval_points);
  require(c.eval_points >= 2, "eval_points", "must be >= 2");
  c.select = f.choice("select", Selection::All, kSelections);
  c.output_dir = f.text("output_dir", c.output_dir);
  require(!c.output_dir.empty(), "output_dir", "must not be empty");

  if (const json* sj = f.find("sato")) {
    Fields sf(*sj, "sato");
    SatoConfig sa;
    sa.encoding_qubits = sf.integer("encoding_qubits", sa.encoding_qubits);
    sa.layers = sf.integer("layers", sa.layers);
    sa.params_per_layer = sf.integer("params_per_layer", sa.params_per_layer);
    sa.shift_circuits = sf.integer("shift_circuits", sa.shift_circuits);
    sf.finish();
    require(kind == ProblemKind::Poisson, "sato", "only defined for poisson");
    require(sa.encoding_qubits >= 1, "sato.encoding_qubits", "must be positive");
    require(sa.layers >= 1, "sato.layers", "must be positive");
    require(sa.params_per_layer >= 1, "sato.params_per_layer", "must be positive");
    require(sa.shift_circuits >= 0, "sato.shift_circuits", "must be >= 0");
    c.sato = sa;
  }

  f.finish();
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config", std::string("parse error in ") + path.string() + ": " + e.what());
  }
  return parse_config(j);
}

json to_json(const RunConfig& c) {
  const ProblemSpec& p = c.problem;
  const bool ki = c.algorithm == Algorithm::KyriienkoInspired;
  json j;
  j["problem"] = key_of(kProblems, p.kind);
  if (p.kind == ProblemKind::DMSS) {
    j["t_train_hi"] = p.t_hi;
    j["mass"] = p.mass;
    j["damping"] = p.damping;
    j["stiffness"] = p.stiffness;
    j["u0"] = p.u0;
    j["v0"] = p.v0;
  } else {
    j["boundary"] = key_of(kBoundaries, p.bc);
    j["side"] = key_of(kSides, p.side);
    j["mirror"] = c.mirror;
    j["n_src"] = p.n_src;
    j["domain"] = {p.domain_lo, p.domain_hi};
  }
  j["interval"] = {p.a, p.b};
  j["amplitude"] = p.amplitude;
  j["algorithm"] = algorithm_name(c.algorithm);
  if (ki)
    j["n_qubits"] = c.setup.chebyshev_qubits;
  else
    j["structure"] = key_of(kStructures, c.setup.map);
  j["n_layers"] = c.setup.layers;
  j["node_kind"] = key_of(kNodeKinds, c.node_kind);
  j["n_nodes"] = c.n_nodes;
  j["engine"] = key_of(kEngines, c.setup.engine);
  j["distance"] = key_of(kDistances, c.setup.distance);
  j["eps_loss"] = c.setup.eps_loss;
  j["eps_grad"] = c.setup.eps_grad;
  j["eta"] = {{"de", c.setup.eta.de}, {"cs", c.setup.eta.cs}, {"reg", c.setup.eta.reg}};
  const Schedule& sc = c.schedule;
  j["schedule"] = {{"kind", key_of(kSchedules, sc.kind)},
                   {"lr", sc.fixed_lr},
                   {"initial_nodes", sc.initial_nodes},
                   {"lr_thresholds", sc.part1.thresholds},
                   {"lr_rates", sc.part1.rates},
                   {"part2_lr", sc.part2_lr},
                   {"window", sc.window},
                   {"reset_moments", sc.reset_moments}};
  j["seeds"] = c.seeds;
  j["max_iters"] = c.max_iters;
  j["eval_points"] = c.eval_points;
  j["select"] = key_of(kSelections, c.select);
  j["output_dir"] = c.output_dir;
  if (c.sato) {
    j["sato"] = {{"encoding_qubits", c.sato->encoding_qubits},
                 {"layers", c.sato->layers},
                 {"params_per_layer", c.sato->params_per_layer},
                 {"shift_circuits", c.sato->shift_circuits}};
  }
  return j;
}

}  // namespace hlvqa::app
