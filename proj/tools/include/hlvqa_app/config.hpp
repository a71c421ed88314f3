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
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hlvqa/problems.hpp"
#include "hlvqa/training.hpp"

namespace hlvqa::app {

// Raised for any invalid or unknown config field; `field` is the JSON path.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

enum class Algorithm { HadamardLagrange, KyriienkoInspired };
enum class Selection { All, Best };

struct SatoConfig {
  int encoding_qubits = 5;
  int layers = 5;
  int params_per_layer = 8;
  int shift_circuits = 1;
};

struct RunConfig {
  ProblemSpec problem;
  bool mirror = false;
  Algorithm algorithm = Algorithm::HadamardLagrange;
  NodeKind node_kind = NodeKind::Kind1;
  int n_nodes = 7;
  SolverSetup setup;
  Schedule schedule;
  std::vector<std::uint64_t> seeds{1};
  int max_iters = 2000;
  int eval_points = 50;
  Selection select = Selection::All;
  std::string output_dir = "out";
  std::optional<SatoConfig> sato;
};

const char* algorithm_name(Algorithm a);

// Every key is optional; defaults depend on problem and algorithm.
RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::filesystem::path& path);

// Fully resolved form; parse_config(to_json(c)) reproduces c.
nlohmann::json to_json(const RunConfig& c);

}  // namespace hlvqa::app
