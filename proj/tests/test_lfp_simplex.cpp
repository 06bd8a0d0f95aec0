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

#include <algorithm>
#include <map>
#include <sstream>

#include "blf/lfp_simplex.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "random_instances.hpp"
#include "vertex_oracle.hpp"

namespace blf {
namespace {

using testing::q;
using testing::vec;

LinearRow row(std::initializer_list<std::pair<std::size_t, long>> terms, Sense sense,
              long rhs) {
  LinearRow out;
  for (const auto& [var, coef] : terms) out.terms.push_back({var, Rational(coef)});
  out.sense = sense;
  out.rhs = rhs;
  return out;
}

std::map<std::size_t, Rational> as_map(const std::vector<std::pair<std::size_t, Rational>>& g) {
  return {g.begin(), g.end()};
}

// Independent pricing: move one unit along nonbasic j and differentiate the
// ratio numerator Q*dP - P*dQ from the raw column.
Rational directional_gamma(const Tableau& t, const FractionalObjective& obj, std::size_t j) {
  const auto x = t.point();
  RationalVector d(t.num_original(), Rational(0));
  if (j < t.num_original()) d[j] = 1;
  for (std::size_t i = 0; i < t.num_rows(); ++i) {
    const auto k = t.basis()[i];
    if (k < t.num_original()) d[k] -= t.entry(i, j);
  }
  const Rational P = dot(obj.p, x) + obj.alpha;
  const Rational Q = dot(obj.q, x) + obj.beta;
  return Q * dot(obj.p, d) - P * dot(obj.q, d);
}

void check_optimum_invariants(const ConstraintSystem& system, const LfpOutcome& out,
                              const FractionalObjective& obj) {
  REQUIRE(out.optimal());
  const auto& t = out.tableau;
  CHECK(t.primal_feasible());
  CHECK(t.num_rows() == system.num_rows());
  CHECK(t.num_columns() == system.registry_size());
  CHECK(system.registry_values(out.x) == t.registry_point());
  CHECK(system.contains(out.x));
  const auto st = t.fractional_state(obj);
  for (std::size_t idx = 0; idx < st.nonbasis.size(); ++idx) {
    CHECK(st.gamma[idx] >= 0);
    CHECK(st.gamma[idx] == directional_gamma(t, obj, st.nonbasis[idx]));
  }
  for (std::size_t k = 1; k < out.primal_values.size(); ++k) {
    CHECK(out.primal_values[k] <= out.primal_values[k - 1]);
  }
}

TEST_CASE("root relaxation of the worked example") {
  const auto inst = testing::worked_example();
  const auto system = ConstraintSystem::from_polyhedron(inst.polyhedron);
  const auto out = solve_lfp(system, inst.fractionals[0]);
  REQUIRE(out.optimal());
  CHECK(out.x == vec({0, 3, 0}));
  CHECK(out.value == q("-19/3"));
  CHECK(out.tableau.nonbasis() == std::vector<std::size_t>{0, 2, 4});
  const auto g1 = as_map(reduced_gradient_row(out.tableau, inst.fractionals[0]));
  const auto g2 = as_map(reduced_gradient_row(out.tableau, inst.fractionals[1]));
  CHECK(g1 == std::map<std::size_t, Rational>{{0, 16}, {2, 34}, {4, 6}});
  CHECK(g2 == std::map<std::size_t, Rational>{{0, -9}, {2, -22}, {4, -2}});
  check_optimum_invariants(system, out, inst.fractionals[0]);
}

TEST_CASE("reoptimization after cuts and a branching bound") {
  const auto inst = testing::worked_example();
  const auto& psi = inst.fractionals[0];
  auto system = ConstraintSystem::from_polyhedron(inst.polyhedron);
  const auto root = solve_lfp(system, psi);
  REQUIRE(root.optimal());

  const std::vector<LinearRow> cuts{row({{2, 1}, {4, 1}}, Sense::kGreaterEqual, 1),
                                    row({{0, 1}, {2, 1}, {4, 1}}, Sense::kGreaterEqual, 1)};
  const auto n1 = add_rows_and_reoptimize(root.tableau, cuts, psi);
  REQUIRE(n1.optimal());
  CHECK(n1.x == RationalVector{0, q("5/2"), 0});
  CHECK(n1.value == q("-17/3"));
  for (const auto& c : cuts) system.add_row(c);
  check_optimum_invariants(system, n1, psi);

  const auto bound = row({{1, 1}}, Sense::kLessEqual, 2);
  const auto n2 = add_row_and_reoptimize(n1.tableau, bound, psi);
  REQUIRE(n2.optimal());
  CHECK(n2.x == vec({0, 2, 0}));
  CHECK(n2.value == -5);
  auto s2 = system;
  s2.add_row(bound);
  check_optimum_invariants(s2, n2, psi);

  const auto other = row({{1, 1}}, Sense::kGreaterEqual, 3);
  CHECK(add_row_and_reoptimize(n1.tableau, other, psi).status == LfpStatus::kInfeasible);
}

TEST_CASE("system down a branch that contradicts an earlier bound is infeasible") {
  const auto inst = testing::worked_example();
  auto system = ConstraintSystem::from_polyhedron(inst.polyhedron);
  system.add_row(row({{2, 1}, {4, 1}}, Sense::kGreaterEqual, 1));
  system.add_row(row({{0, 1}, {2, 1}, {4, 1}}, Sense::kGreaterEqual, 1));
  const auto s8 = system.add_row(row({{1, 1}}, Sense::kLessEqual, 2));
  CHECK(s8 == 7);
  system.add_row(row({{0, 1}, {2, 1}, {s8, 1}}, Sense::kGreaterEqual, 1));
  system.add_row(row({{1, 1}}, Sense::kLessEqual, 1));
  system.add_row(row({{1, 1}}, Sense::kGreaterEqual, 3));
  CHECK(solve_lfp(system, inst.fractionals[0]).status == LfpStatus::kInfeasible);
}

TEST_CASE("single variable ratio on the unit interval") {
  ConstraintSystem system(1);
  system.add_row(row({{0, 1}}, Sense::kLessEqual, 1));
  const FractionalObjective obj{vec({1}), vec({1}), Rational(-1), Rational(1)};
  const auto out = solve_lfp(system, obj);
  REQUIRE(out.optimal());
  CHECK(out.x == vec({0}));
  CHECK(out.value == -1);
}

TEST_CASE("constant ratio has zero reduced gradients") {
  const auto inst = testing::worked_example();
  const auto system = ConstraintSystem::from_polyhedron(inst.polyhedron);
  const FractionalObjective constant{vec({2, 6, 4}), vec({1, 3, 2}), Rational(10), Rational(5)};
  const auto root = solve_lfp(system, inst.fractionals[0]);
  for (const auto& [j, g] : reduced_gradient_row(root.tableau, constant)) CHECK(g == 0);
}

TEST_CASE("vacuous row leaves the optimum unchanged") {
  const auto inst = testing::worked_example();
  const auto system = ConstraintSystem::from_polyhedron(inst.polyhedron);
  const auto root = solve_lfp(system, inst.fractionals[0]);
  LinearRow vacuous;
  vacuous.rhs = 1;
  const auto out = add_row_and_reoptimize(root.tableau, vacuous, inst.fractionals[0]);
  REQUIRE(out.optimal());
  CHECK(out.x == root.x);
  CHECK(out.value == root.value);
  CHECK(out.pivots == 0);
}

TEST_CASE("origin infeasible needs the auxiliary phase") {
  ConstraintSystem system(2);
  system.add_row(row({{0, 1}, {1, 1}}, Sense::kGreaterEqual, 1));
  system.add_row(row({{0, 1}, {1, 1}}, Sense::kLessEqual, 3));
  const auto out = solve_lfp(system, linear_objective(vec({1, 2})));
  REQUIRE(out.optimal());
  CHECK(out.x == vec({1, 0}));
  CHECK(out.value == 1);
}

TEST_CASE("contradictory bounds are infeasible") {
  ConstraintSystem system(1);
  system.add_row(row({{0, 1}}, Sense::kGreaterEqual, 2));
  system.add_row(row({{0, 1}}, Sense::kLessEqual, 1));
  CHECK(solve_lfp(system, linear_objective(vec({1}))).status == LfpStatus::kInfeasible);
}

TEST_CASE("linear objective over an unbounded region") {
  ConstraintSystem system(2);
  system.add_row(row({{0, 1}, {1, -1}}, Sense::kLessEqual, 0));
  CHECK(solve_lfp(system, linear_objective(vec({-1, 0}))).status == LfpStatus::kUnbounded);
}

TEST_CASE("ge rows are stored negated") {
  const auto r = row({{0, 2}, {1, -3}}, Sense::kGreaterEqual, 4).normalized();
  CHECK(r.sense == Sense::kLessEqual);
  CHECK(r.rhs == -4);
  CHECK(r.terms[0].coef == -2);
  CHECK(r.terms[1].coef == 3);
}

TEST_CASE("rows may not reference future slacks") {
  ConstraintSystem system(2);
  CHECK_THROWS_AS(system.add_row(row({{2, 1}}, Sense::kLessEqual, 1)), DimensionError);
}

TEST_CASE("tableau dump lists basis rows and pricing rows") {
  const auto inst = testing::worked_example();
  const auto out = solve_lfp(ConstraintSystem::from_polyhedron(inst.polyhedron), inst.fractionals[0]);
  std::ostringstream os;
  dump_tableau(os, out.tableau, inst.fractionals);
  const auto text = os.str();
  CHECK(text.find("x1") != std::string::npos);
  CHECK(text.find("gamma1 | 16") != std::string::npos);
  CHECK(text.find("-19/3") != std::string::npos);
  CHECK(text.find("1/5") != std::string::npos);
}

TEST_CASE("property: random programs agree with vertex enumeration") {
  testing::InstanceGenerator gen(20261016);
  for (int trial = 0; trial < 150; ++trial) {
    const auto inst = gen.instance();
    const auto system = ConstraintSystem::from_polyhedron(inst.polyhedron);
    for (const auto& obj : {inst.fractionals[0], inst.fractionals[1],
                            linear_objective(gen.int_vector(inst.n, -10, 10))}) {
      const auto out = solve_lfp(system, obj);
      check_optimum_invariants(system, out, obj);
      const auto expected =
          testing::vertex_minimum(inst.polyhedron.A, inst.polyhedron.b, inst.n, obj);
      REQUIRE(expected);
      CHECK(out.value == *expected);
    }
  }
}

TEST_CASE("property: reoptimization matches a cold solve of the extended system") {
  testing::InstanceGenerator gen(77);
  for (int trial = 0; trial < 150; ++trial) {
    const auto inst = gen.instance();
    const auto& psi = inst.fractionals[0];
    const auto root = solve_lfp(ConstraintSystem::from_polyhedron(inst.polyhedron), psi);
    REQUIRE(root.optimal());

    Polyhedron extended = inst.polyhedron;
    std::vector<LinearRow> rows;
    const long count = gen.uniform(1, 2);
    for (long k = 0; k < count; ++k) {
      LinearRow r;
      RationalVector a(inst.n, Rational(0));
      for (std::size_t j = 0; j < inst.n; ++j) {
        a[j] = gen.uniform(-3, 3);
        if (a[j] != 0) r.terms.push_back({j, a[j]});
      }
      r.sense = gen.uniform(0, 1) == 0 ? Sense::kLessEqual : Sense::kGreaterEqual;
      r.rhs = gen.uniform(-2, 4);
      rows.push_back(r);
      const auto norm = r.normalized();
      RationalVector na(inst.n, Rational(0));
      for (const auto& t : norm.terms) na[t.var] = t.coef;
      extended.A.push_back(na);
      extended.b.push_back(norm.rhs);
    }
    const auto warm = add_rows_and_reoptimize(root.tableau, rows, psi);
    const auto expected = testing::vertex_minimum(extended.A, extended.b, inst.n, psi);
    if (!expected) {
      CHECK(warm.status == LfpStatus::kInfeasible);
      continue;
    }
    auto system = ConstraintSystem::from_polyhedron(inst.polyhedron);
    for (const auto& r : rows) system.add_row(r);
    check_optimum_invariants(system, warm, psi);
    CHECK(warm.value == *expected);
  }
}

}  // namespace
}  // namespace blf
