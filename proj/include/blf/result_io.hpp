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

#ifndef BLF_RESULT_IO_HPP
#define BLF_RESULT_IO_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "blf/instance.hpp"
#include "blf/oracle.hpp"
#include "blf/search.hpp"

namespace blf {

/// Result of one CLI mode. Fields not produced by a mode stay empty and are
/// omitted from the rendered document.
struct ResultDocument {
  std::string mode;
  // validate
  std::optional<bool> valid;
  std::optional<std::vector<std::string>> violations;
  // solve, check
  std::optional<bool> complete;
  std::optional<std::size_t> node_count;
  std::optional<std::size_t> cut_count;
  std::optional<std::size_t> t1_runs;
  std::optional<std::size_t> t2_runs;
  std::optional<std::vector<IntPoint>> x_eff;
  // oracle, check
  std::optional<std::vector<IntPoint>> D;
  std::optional<std::vector<IntPoint>> X_Q;
  std::optional<std::vector<IntPoint>> X_F;
  std::optional<std::vector<IntPoint>> X_Eff;
  // check
  std::optional<bool> agree;

  bool operator==(const ResultDocument&) const = default;
};

ResultDocument make_validate_document(const std::vector<Violation>& violations);
ResultDocument make_solve_document(const SolveResult& result);
ResultDocument make_oracle_document(const ParetoSets& sets);
/// agree is true iff both efficient sets coincide.
ResultDocument make_check_document(const SolveResult& result, const ParetoSets& sets);

/// YAML with a fixed key order; point lists are sorted lexicographically.
std::string render_result(const ResultDocument& doc);
/// Throws ParseError.
ResultDocument parse_result(std::string_view text);

/// One JSON object per line with keys node, parent, action, point, value, H,
/// H_prime, variable. Absent fields are null; indices are 1-based and
/// rationals are strings.
std::string render_trace_event(const TraceEvent& event);
void write_trace(std::ostream& out, const std::vector<TraceEvent>& trace);
/// Throws ParseError.
TraceEvent parse_trace_event(std::string_view line);

}  // namespace blf

#endif  // BLF_RESULT_IO_HPP
