// Copyright 2026 The blfmoiqp Authors
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

#ifndef BLF_CLI_HPP
#define BLF_CLI_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string_view>

#include "blf/oracle.hpp"
#include "blf/search.hpp"

namespace blf {

enum class Mode { kValidate, kSolve, kOracle, kCheck };

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalid = 1,
  kExitBudget = 2,
  kExitMismatch = 3,
};

struct RunConfig {
  std::filesystem::path instance_path;
  Mode mode = Mode::kSolve;
  BranchingRule branching = BranchingRule::kFirstFractional;
  std::size_t node_budget = 10'000;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
  std::optional<std::filesystem::path> trace_path;
  std::optional<std::filesystem::path> output_path;
};

std::optional<Mode> parse_mode(std::string_view text);
std::optional<BranchingRule> parse_branching(std::string_view text);

/// Runs one mode. The result document goes to output_path or, when unset,
/// to out; diagnostics and status lines go to err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace blf

#endif  // BLF_CLI_HPP
