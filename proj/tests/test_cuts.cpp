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

#include <map>

#include "blf/cuts.hpp"
#include "blf/oracle.hpp"
#include "blf/search.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "random_instances.hpp"

namespace blf {
namespace {

using testing::q;
using testing::vec;

IndexSet one_based(std::initializer_list<std::size_t> ids) {
  IndexSet out;
  for (auto j : ids) out.push_back(j - 1);
  return out;
}

struct Captured {
  Node node;
  LfpOutcome outcome;
  CutReport report;
};

class Capture : public SearchObserver {
 public:
  void on_integer_node(const Node& node, const LfpOutcome& outcome,
                       const CutReport& report) override {
    nodes.emplace(node.id, Captured{node, outcome, report});
  }
  std::map<std::size_t, Captured> nodes;
};

// f_bar column for registry variable j, one entry per criterion.
RationalVector column(const CutReport& report, std::size_t j) {
  RationalVector out;
  for (std::size_t k = 0; k < report.nonbasis.size(); ++k) {
    if (report.nonbasis[k] != j) continue;
    for (const auto& row : report.f_bar) out.push_back(row[k]);
  }
  return out;
}

TEST_CASE("root criterion rows and sets") {
  const auto inst = testing::worked_example();
  const auto root = solve_lfp(ConstraintSystem::from_polyhedron(inst.polyhedron), inst.fractionals[0]);
  const auto report = build_cut_report(root.tableau, inst, root.x);
  CHECK(report.nonbasis == one_based({1, 3, 5}));
  CHECK(column(report, 0) == RationalVector{61, q("297/2"), 86});
  CHECK(column(report, 2) == RationalVector{-55, q("-425/2"), -22});
  CHECK(column(report, 4) == RationalVector{-26, q("-153/2"), 1});
  CHECK(report.H == one_based({3, 5}));
  CHECK(report.H_prime == one_based({1, 3, 5}));
  REQUIRE(report.cut_moiqp);
  CHECK(*report.cut_moiqp ==
        LinearRow{{{2, Rational(1)}, {4, Rational(1)}}, Sense::kGreaterEqual, Rational(1)});
  REQUIRE(report.cut_boilfp);
  CHECK(report.cut_boilfp->terms.size() == 3);
}

TEST_CASE("criterion column of the cut slack at the (0,1,0) node") {
  const auto inst = testing::worked_example();
  Capture cap;
  solve(inst, {}, &cap);
  REQUIRE(cap.nodes.count(5));
  const auto& report = cap.nodes.at(5).report;
  CHECK(cap.nodes.at(5).outcome.x == vec({0, 1, 0}));
  CHECK(column(report, 8) == RationalVector{-17, -19, -55});
  CHECK(report.H_prime == one_based({9}));
}

TEST_CASE("zero gradient gives an all-zero criterion matrix") {
  Instance inst;
  inst.n = 2;
  inst.r = 2;
  inst.quadratics = {{testing::mat({{1, 0}, {0, 1}}), vec({-1, -1})},
                     {testing::mat({{2, 0}, {0, 2}}), vec({-2, -2})}};
  inst.fractionals = {{vec({1, 0}), vec({0, 0}), Rational(0), Rational(1)},
                      {vec({0, 1}), vec({0, 0}), Rational(0), Rational(1)}};
  // x1 >= 1 and x2 >= 1 force both originals basic at (1,1).
  inst.polyhedron = {testing::mat({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}), vec({1, 1, -1, -1})};
  const auto out = solve_lfp(ConstraintSystem::from_polyhedron(inst.polyhedron), inst.fractionals[0]);
  REQUIRE(out.optimal());
  CHECK(out.x == vec({1, 1}));
  const auto fbar = reduced_criterion_rows(out.tableau, inst, out.x);
  for (const auto& row : fbar) {
    for (const auto& v : row) CHECK(v == 0);
  }
  CHECK(build_H(fbar, out.tableau.nonbasis()) == out.tableau.nonbasis());
}

TEST_CASE("set construction edge cases") {
  const RationalMatrix positive{{1, 2}, {3, q("1/2")}};
  CHECK(build_H(positive, {4, 7}).empty());
  const RationalMatrix mixed{{1, 0, -1}, {0, 0, 5}};
  CHECK(build_H(mixed, {2, 3, 6}) == IndexSet{3, 6});
}

TEST_CASE("H prime empty when the second objective strictly increases") {
  ConstraintSystem system(1);
  system.add_row({{{0, Rational(1)}}, Sense::kLessEqual, Rational(1)});
  const FractionalObjective psi1{vec({1}), vec({0}), Rational(0), Rational(1)};
  const FractionalObjective psi2{vec({1}), vec({0}), Rational(0), Rational(1)};
  const auto out = solve_lfp(system, psi1);
  CHECK(build_H_prime(out.tableau, psi1, psi2).empty());
  const FractionalObjective psi3{vec({-1}), vec({0}), Rational(0), Rational(1)};
  CHECK(build_H_prime(out.tableau, psi1, psi3) == IndexSet{0});
}

TEST_CASE("make_cut") {
  CHECK(make_cut(one_based({3, 5})) ==
        LinearRow{{{2, Rational(1)}, {4, Rational(1)}}, Sense::kGreaterEqual, Rational(1)});
  const auto c = make_cut(one_based({1, 9, 10}));
  CHECK(c.terms.size() == 3);
  CHECK(c.terms[1].var == 8);
  CHECK(make_cut({6}) == LinearRow{{{6, Rational(1)}}, Sense::kGreaterEqual, Rational(1)});
  CHECK_THROWS_AS(make_cut({}), std::invalid_argument);
}

// Point reached from x* by raising nonbasic j to 1 along its column.
RationalVector step_point(const Tableau& t, std::size_t j) {
  auto x = t.point();
  if (j < t.num_original()) x[j] += 1;
  for (std::size_t i = 0; i < t.num_rows(); ++i) {
    if (t.basis()[i] < t.num_original()) x[t.basis()[i]] -= t.entry(i, j);
  }
  return x;
}

class Safety : public SearchObserver {
 public:
  Safety(const Instance& inst, std::vector<IntPoint> eff) : inst_(inst), eff_(std::move(eff)) {}

  void on_integer_node(const Node& node, const LfpOutcome& outcome,
                       const CutReport& report) override {
    const auto& t = outcome.tableau;
    // Linearization identity along each nonbasic column.
    for (std::size_t k = 0; k < report.nonbasis.size(); ++k) {
      const auto d = step_point(t, report.nonbasis[k]);
      RationalVector delta(d.size());
      for (std::size_t a = 0; a < d.size(); ++a) delta[a] = d[a] - outcome.x[a];
      for (std::size_t i = 0; i < inst_.quadratics.size(); ++i) {
        CHECK(report.f_bar[i][k] == dot(gradient_quadratic(inst_.quadratics[i], outcome.x), delta));
      }
    }
    const auto system = node_system(inst_, node);
    const auto xi = to_int_point(outcome.x);
    for (const auto& y : eff_) {
      const auto ry = to_rational(y);
      if (y == xi || !system.contains(ry)) continue;
      const auto reg = system.registry_values(ry);
      for (const auto* set : {&report.H, &report.H_prime}) {
        Rational lhs = 0;
        for (auto j : *set) lhs += reg[j];
        CHECK(lhs >= 1);
        ++checks;
      }
    }
  }

  std::size_t checks = 0;

 private:
  const Instance& inst_;
  std::vector<IntPoint> eff_;
};

TEST_CASE("property: cuts keep every other efficient point") {
  testing::InstanceGenerator gen(9001);
  std::size_t checks = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const auto inst = gen.instance();
    Safety safety(inst, oracle_solve(inst).X_Eff);
    solve(inst, {}, &safety);
    checks += safety.checks;
  }
  CHECK(checks > 0);
}

}  // namespace
}  // namespace blf
