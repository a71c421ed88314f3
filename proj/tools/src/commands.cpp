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

#include "hlvqa_app/commands.hpp"

#include <cstdlib>
#include <ostream>

#include "hlvqa_app/config.hpp"
#include "hlvqa_app/report.hpp"
#include "hlvqa_app/verify.hpp"

namespace hlvqa::app {

namespace {

std::optional<RunConfig> load(const std::filesystem::path& path, std::ostream& err) {
  try {
    return load_config(path);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "config error: " << e.what() << "\n";
  }
  return std::nullopt;
}

}  // namespace

int run_command(const std::filesystem::path& config, std::optional<std::uint64_t> seed_override,
                std::ostream& out, std::ostream& err) {
  std::optional<RunConfig> c = load(config, err);
  if (!c) return kExitConfig;
  if (seed_override) c->seeds = {*seed_override};
  if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) c->output_dir = dir;

  RunReport report;
  try {
    report = execute(*c, &out);
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  }
  try {
    const auto files = emit_report(report, c->output_dir);
    out << "wrote " << files.size() << " files to " << c->output_dir << "\n";
  } catch (const std::exception& e) {
    err << "I/O error: " << e.what() << "\n";
    return kExitIo;
  }
  if (report.any_diverged()) {
    for (const SeedResult& s : report.seeds)
      if (s.trace.diverged) err << "seed " << s.seed << " diverged: " << s.trace.divergence_reason << "\n";
    return kExitDiverged;
  }
  return kExitOk;
}

int budget_command(const std::filesystem::path& config, std::ostream& out, std::ostream& err) {
  std::optional<RunConfig> c = load(config, err);
  if (!c) return kExitConfig;
  out << budget_json(budget_for(*c)).dump(2) << "\n";
  return kExitOk;
}

int verify_command(std::ostream& out) {
  bool ok = true;
  for (const CheckResult& r : property_suite()) {
    out << format_check(r) << "\n" << std::flush;
    ok = ok && r.passed;
  }
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace hlvqa::app
