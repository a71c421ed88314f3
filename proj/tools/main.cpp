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

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hlvqa_app/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Variational ODE solver with Lagrange-encoded quantum circuits"};
  app.require_subcommand(1);

  std::string run_config;
  std::optional<std::uint64_t> seed_override;
  CLI::App* run = app.add_subcommand("run", "Train every configured seed and write reports");
  run->add_option("config", run_config, "JSON run configuration")->required();
  run->add_option("--seed-override", seed_override, "Replace the configured seeds with this one");

  std::string budget_config;
  CLI::App* budget = app.add_subcommand("budget", "Print closed-form gate and circuit budgets");
  budget->add_option("config", budget_config, "JSON run configuration")->required();

  CLI::App* verify = app.add_subcommand("verify", "Run the property suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : hlvqa::app::kExitConfig;
  }

  using namespace hlvqa::app;
  if (*run) return run_command(run_config, seed_override, std::cout, std::cerr);
  if (*budget) return budget_command(budget_config, std::cout, std::cerr);
  if (*verify) return verify_command(std::cout);
  return kExitConfig;
}
