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

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "blf/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Branch and cut over the efficient set of a multi-objective integer quadratic program"};
  blf::RunConfig config;
  std::string mode = "solve";
  std::string branching = "first-fractional";
  std::string trace;
  std::string output;

  app.add_option("--instance", config.instance_path, "Instance file (YAML)")
      ->required()
      ->check(CLI::ExistingFile);
  app.add_option("--mode", mode, "validate | solve | oracle | check")
      ->check(CLI::IsMember({"validate", "solve", "oracle", "check"}));
  app.add_option("--branching", branching, "first-fractional | most-fractional")
      ->check(CLI::IsMember({"first-fractional", "most-fractional"}));
  app.add_option("--node-budget", config.node_budget, "Maximum number of processed nodes")
      ->check(CLI::PositiveNumber);
  app.add_option("--enum-cap", config.enumeration_cap, "Maximum bounding-box size for enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--trace", trace, "Write the search trace (JSON lines) here");
  app.add_option("--output", output, "Write the result document here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : blf::kExitInvalid;
  }

  config.mode = *blf::parse_mode(mode);
  config.branching = *blf::parse_branching(branching);
  if (!trace.empty()) config.trace_path = trace;
  if (!output.empty()) config.output_path = output;
  return blf::run(config, std::cout, std::cerr);
}
