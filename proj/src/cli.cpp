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

#include "blf/cli.hpp"

#include <fstream>
#include <string>

#include "blf/instance_io.hpp"
#include "blf/result_io.hpp"

namespace blf {

std::optional<Mode> parse_mode(std::string_view text) {
  if (text == "validate") return Mode::kValidate;
  if (text == "solve") return Mode::kSolve;
  if (text == "oracle") return Mode::kOracle;
  if (text == "check") return Mode::kCheck;
  return std::nullopt;
}

std::optional<BranchingRule> parse_branching(std::string_view text) {
  if (text == "first-fractional") return BranchingRule::kFirstFractional;
  if (text == "most-fractional") return BranchingRule::kMostFractional;
  return std::nullopt;
}

namespace {

void emit(const RunConfig& config, const ResultDocument& doc, std::ostream& out) {
  const auto text = render_result(doc);
  if (!config.output_path) {
    out << text;
    return;
  }
  std::ofstream file(*config.output_path);
  if (!file) throw std::runtime_error("cannot write " + config.output_path->string());
  file << text;
}

void emit_trace(const RunConfig& config, const SolveResult& result) {
  if (!config.trace_path) return;
  std::ofstream file(*config.trace_path);
  if (!file) throw std::runtime_error("cannot write " + config.trace_path->string());
  write_trace(file, result.trace);
}

int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.node_budget < 1 || config.enumeration_cap < 1) {
    err << "error: node budget and enumeration cap must be positive\n";
    return kExitInvalid;
  }
  const Instance inst = load_instance(config.instance_path);
  const auto violations = validate_instance(inst);
  if (config.mode == Mode::kValidate || !violations.empty()) {
    for (const auto& v : violations) err << "invalid: " << to_string(v.kind) << ": " << v.message << '\n';
    if (config.mode == Mode::kValidate) emit(config, make_validate_document(violations), out);
    return violations.empty() ? kExitOk : kExitInvalid;
  }

  if (config.mode == Mode::kOracle) {
    emit(config, make_oracle_document(oracle_solve(inst, config.enumeration_cap)), out);
    return kExitOk;
  }

  SolverConfig solver;
  solver.branching = config.branching;
  solver.node_budget = config.node_budget;
  solver.enumeration_cap = config.enumeration_cap;
  const auto result = solve(inst, solver);
  emit_trace(config, result);
  if (!result.complete) {
    err << "node budget of " << config.node_budget << " exhausted; result is partial\n";
  }

  if (config.mode == Mode::kSolve) {
    emit(config, make_solve_document(result), out);
    return result.complete ? kExitOk : kExitBudget;
  }

  const auto doc = make_check_document(result, oracle_solve(inst, config.enumeration_cap));
  emit(config, doc, out);
  if (!result.complete) return kExitBudget;
  if (!*doc.agree) {
    err << "solver and oracle disagree\n";
    return kExitMismatch;
  }
  err << "solver and oracle agree\n";
  return kExitOk;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(config, out, err);
  } catch (const ParseError& e) {
    err << config.instance_path.string() << ": " << e.what() << '\n';
  } catch (const DimensionError& e) {
    err << config.instance_path.string() << ": dimension mismatch: " << e.what() << '\n';
  } catch (const EnumerationCapError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitInvalid;
}

}  // namespace blf
