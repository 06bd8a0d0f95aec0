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

#ifndef BLF_SEARCH_HPP
#define BLF_SEARCH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "blf/cuts.hpp"
#include "blf/instance.hpp"
#include "blf/lfp_simplex.hpp"
#include "blf/oracle.hpp"

namespace blf {

enum class BranchingRule { kFirstFractional, kMostFractional };

struct SolverConfig {
  BranchingRule branching = BranchingRule::kFirstFractional;
  std::size_t node_budget = 10'000;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
};

enum class NodeStatus {
  kOpen,
  kFathomedInfeasible,
  kFathomedExplored,
  kBranched,
  kCutApplied,
};

struct Node {
  std::size_t id = 0;
  std::optional<std::size_t> parent;
  /// Branching bounds and cuts along the path from the root, in order.
  std::vector<LinearRow> extra_rows;
  NodeStatus status = NodeStatus::kOpen;
};

enum class TraceAction {
  kLfpSolved,
  kInfeasible,
  kBranched,
  kIntegerFound,
  kT1,
  kT2,
  kRecorded,
  kCutsAdded,
  kFathomed,
};

const char* to_string(TraceAction action);
const char* to_string(NodeStatus status);

/// One search event. Field use per action:
///   lfp_solved   point = x*, value = psi1(x*)
///   branched     point = x*, variable = branching index
///   integer_found, recorded   point = x*
///   t1, t2       value = test optimum, point = witness when not efficient
///   cuts_added, fathomed (after an integer node)   H, H_prime
struct TraceEvent {
  std::size_t node = 0;
  std::optional<std::size_t> parent;
  TraceAction action = TraceAction::kLfpSolved;
  std::optional<RationalVector> point;
  std::optional<Rational> value;
  std::optional<IndexSet> H;
  std::optional<IndexSet> H_prime;
  std::optional<std::size_t> variable;

  bool operator==(const TraceEvent&) const = default;
};

struct SolveResult {
  /// Lexicographically sorted, duplicate free.
  std::vector<IntPoint> x_eff;
  std::size_t node_count = 0;
  std::size_t cut_count = 0;
  std::size_t t1_runs = 0;
  std::size_t t2_runs = 0;
  /// False when the node budget ran out with open nodes left.
  bool complete = true;
  std::vector<TraceEvent> trace;
};

/// Hooks for inspecting the search; default implementations do nothing.
class SearchObserver {
 public:
  virtual ~SearchObserver() = default;
  virtual void on_lfp_optimum(const Node& node, const LfpOutcome& outcome);
  virtual void on_integer_node(const Node& node, const LfpOutcome& outcome,
                               const CutReport& report);
};

/// Depth-first branch and cut; the <= child is explored first.
SolveResult solve(const Instance& inst, const SolverConfig& config = {},
                  SearchObserver* observer = nullptr);

/// Index of the coordinate to branch on. Throws std::invalid_argument when x
/// is integral.
std::size_t select_branch_variable(const RationalVector& x, BranchingRule rule);

/// Children with x_k <= floor(v) (id first_id) and x_k >= floor(v) + 1
/// (id first_id + 1). Throws std::invalid_argument when v is integral.
std::pair<Node, Node> branch(const Node& node, std::size_t k, const Rational& v,
                             std::size_t first_id);

/// The polyhedron rows followed by the node's extra rows.
ConstraintSystem node_system(const Instance& inst, const Node& node);

}  // namespace blf

#endif  // BLF_SEARCH_HPP
