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

#include "blf/search.hpp"

#include <algorithm>
#include <memory>
#include <set>
#include <stdexcept>

#include "blf/efficiency.hpp"

namespace blf {

const char* to_string(TraceAction action) {
  switch (action) {
    case TraceAction::kLfpSolved:
      return "lfp_solved";
    case TraceAction::kInfeasible:
      return "infeasible";
    case TraceAction::kBranched:
      return "branched";
    case TraceAction::kIntegerFound:
      return "integer_found";
    case TraceAction::kT1:
      return "t1";
    case TraceAction::kT2:
      return "t2";
    case TraceAction::kRecorded:
      return "recorded";
    case TraceAction::kCutsAdded:
      return "cuts_added";
    case TraceAction::kFathomed:
      return "fathomed";
  }
  return "unknown";
}

const char* to_string(NodeStatus status) {
  switch (status) {
    case NodeStatus::kOpen:
      return "open";
    case NodeStatus::kFathomedInfeasible:
      return "fathomed_infeasible";
    case NodeStatus::kFathomedExplored:
      return "fathomed_explored";
    case NodeStatus::kBranched:
      return "branched";
    case NodeStatus::kCutApplied:
      return "cut_applied";
  }
  return "unknown";
}

void SearchObserver::on_lfp_optimum(const Node&, const LfpOutcome&) {}
void SearchObserver::on_integer_node(const Node&, const LfpOutcome&, const CutReport&) {}

std::size_t select_branch_variable(const RationalVector& x, BranchingRule rule) {
  std::optional<std::size_t> best;
  Rational best_score;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (is_integer(x[j])) continue;
    if (rule == BranchingRule::kFirstFractional) return j;
    const Rational score = fractionality(x[j]);
    if (!best || score > best_score) {
      best = j;
      best_score = score;
    }
  }
  if (!best) throw std::invalid_argument("select_branch_variable: point is integral");
  return *best;
}

std::pair<Node, Node> branch(const Node& node, std::size_t k, const Rational& v,
                             std::size_t first_id) {
  if (is_integer(v)) throw std::invalid_argument("branch: value is integral");
  const Rational lo = floor(v);
  Node down{first_id, node.id, node.extra_rows, NodeStatus::kOpen};
  Node up{first_id + 1, node.id, node.extra_rows, NodeStatus::kOpen};
  down.extra_rows.push_back({{{k, Rational(1)}}, Sense::kLessEqual, lo});
  up.extra_rows.push_back({{{k, Rational(1)}}, Sense::kGreaterEqual, lo + 1});
  return {std::move(down), std::move(up)};
}

ConstraintSystem node_system(const Instance& inst, const Node& node) {
  auto system = ConstraintSystem::from_polyhedron(inst.polyhedron);
  for (const auto& row : node.extra_rows) system.add_row(row);
  return system;
}

namespace {

struct OpenNode {
  Node node;
  std::shared_ptr<const Tableau> parent_tableau;  // null at the root
  std::vector<LinearRow> new_rows;
};

class Driver {
 public:
  Driver(const Instance& inst, const SolverConfig& config, SearchObserver* observer)
      : inst_(inst), config_(config), observer_(observer) {}

  SolveResult run() {
    check_dimensions(inst_);
    domain_ = enumerate_feasible(inst_, config_.enumeration_cap);
    stack_.push_back({Node{}, nullptr, {}});
    while (!stack_.empty()) {
      if (result_.node_count == config_.node_budget) {
        result_.complete = false;
        break;
      }
      OpenNode open = std::move(stack_.back());
      stack_.pop_back();
      ++result_.node_count;
      process(std::move(open));
    }
    result_.x_eff.assign(recorded_.begin(), recorded_.end());
    return std::move(result_);
  }

 private:
  TraceEvent& emit(const Node& node, TraceAction action) {
    TraceEvent ev;
    ev.node = node.id;
    ev.parent = node.parent;
    ev.action = action;
    result_.trace.push_back(std::move(ev));
    return result_.trace.back();
  }

  void process(OpenNode open) {
    Node& node = open.node;
    const auto& psi1 = inst_.fractionals[0];
    LfpOutcome outcome =
        open.parent_tableau
            ? add_rows_and_reoptimize(*open.parent_tableau, open.new_rows, psi1)
            : solve_lfp(ConstraintSystem::from_polyhedron(inst_.polyhedron), psi1);
    if (outcome.status == LfpStatus::kInfeasible) {
      node.status = NodeStatus::kFathomedInfeasible;
      emit(node, TraceAction::kInfeasible);
      return;
    }
    if (outcome.status == LfpStatus::kUnbounded) {
      throw SimplexError("relaxation is unbounded at node " + std::to_string(node.id));
    }
    {
      auto& ev = emit(node, TraceAction::kLfpSolved);
      ev.point = outcome.x;
      ev.value = outcome.value;
    }
    if (observer_ != nullptr) observer_->on_lfp_optimum(node, outcome);

    if (!all_integer(outcome.x)) {
      const auto k = select_branch_variable(outcome.x, config_.branching);
      auto [down, up] = branch(node, k, outcome.x[k], next_id_);
      next_id_ += 2;
      node.status = NodeStatus::kBranched;
      auto& ev = emit(node, TraceAction::kBranched);
      ev.point = outcome.x;
      ev.variable = k;
      auto shared = std::make_shared<const Tableau>(std::move(outcome.tableau));
      auto down_row = down.extra_rows.back();
      auto up_row = up.extra_rows.back();
      stack_.push_back({std::move(up), shared, {std::move(up_row)}});
      stack_.push_back({std::move(down), shared, {std::move(down_row)}});
      return;
    }

    emit(node, TraceAction::kIntegerFound).point = outcome.x;
    const auto xi = to_int_point(outcome.x);
    const auto t1 = test_moiqp_efficiency(xi, inst_, domain_);
    ++result_.t1_runs;
    record_test(node, TraceAction::kT1, t1);
    if (t1.efficient) {
      const auto t2 = test_boilfp_efficiency(xi, inst_, domain_);
      ++result_.t2_runs;
      record_test(node, TraceAction::kT2, t2);
      if (t2.efficient) {
        recorded_.insert(xi);
        emit(node, TraceAction::kRecorded).point = outcome.x;
      }
    }

    const auto report = build_cut_report(outcome.tableau, inst_, outcome.x);
    if (observer_ != nullptr) observer_->on_integer_node(node, outcome, report);
    if (!report.cut_moiqp || !report.cut_boilfp) {
      node.status = NodeStatus::kFathomedExplored;
      auto& ev = emit(node, TraceAction::kFathomed);
      ev.H = report.H;
      ev.H_prime = report.H_prime;
      return;
    }
    std::vector<LinearRow> cuts{*report.cut_moiqp};
    if (report.H_prime != report.H) cuts.push_back(*report.cut_boilfp);
    result_.cut_count += cuts.size();
    node.status = NodeStatus::kCutApplied;
    {
      auto& ev = emit(node, TraceAction::kCutsAdded);
      ev.H = report.H;
      ev.H_prime = report.H_prime;
    }
    Node successor{next_id_++, node.id, node.extra_rows, NodeStatus::kOpen};
    successor.extra_rows.insert(successor.extra_rows.end(), cuts.begin(), cuts.end());
    stack_.push_back({std::move(successor),
                      std::make_shared<const Tableau>(std::move(outcome.tableau)),
                      std::move(cuts)});
  }

  void record_test(const Node& node, TraceAction action, const EfficiencyVerdict& verdict) {
    auto& ev = emit(node, action);
    ev.value = verdict.objective_value;
    if (verdict.witness) ev.point = to_rational(*verdict.witness);
  }

  const Instance& inst_;
  const SolverConfig& config_;
  SearchObserver* observer_;
  std::vector<IntPoint> domain_;
  std::vector<OpenNode> stack_;
  std::set<IntPoint> recorded_;
  std::size_t next_id_ = 1;
  SolveResult result_;
};

}  // namespace

SolveResult solve(const Instance& inst, const SolverConfig& config, SearchObserver* observer) {
  return Driver(inst, config, observer).run();
}

}  // namespace blf
