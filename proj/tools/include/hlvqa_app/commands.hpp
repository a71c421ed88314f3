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
#include <iosfwd>
#include <optional>

namespace hlvqa::app {

enum ExitCode : int {
  kExitOk = 0,
  kExitIo = 1,
  kExitConfig = 2,
  kExitDiverged = 3,
  kExitCheckFailed = 4,
};

// Environment variable that overrides the configured output directory.
inline constexpr const char* kOutputDirEnv = "HLVQA_OUTPUT_DIR";

int run_command(const std::filesystem::path& config, std::optional<std::uint64_t> seed_override,
                std::ostream& out, std::ostream& err);
int budget_command(const std::filesystem::path& config, std::ostream& out, std::ostream& err);
int verify_command(std::ostream& out);

}  // namespace hlvqa::app
