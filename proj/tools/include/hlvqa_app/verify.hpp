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
#include <string>
#include <vector>

namespace hlvqa::app {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

std::string format_check(const CheckResult& r);

// Property checks over seeded random draws. Each one is self-contained.
CheckResult check_encoding_identity(std::uint64_t seed);
CheckResult check_partition_of_unity(std::uint64_t seed);
CheckResult check_structure_equivalence(std::uint64_t seed);
CheckResult check_derivatives(std::uint64_t seed);
CheckResult check_rz_invariance(std::uint64_t seed);
CheckResult check_oracles();
CheckResult check_complexity();

inline constexpr std::uint64_t kVerifySeed = 20260101;

std::vector<CheckResult> property_suite(std::uint64_t seed = kVerifySeed);

}  // namespace hlvqa::app
