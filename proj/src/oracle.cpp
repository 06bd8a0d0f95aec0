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

#include "blf/oracle.hpp"

#include <algorithm>
#include <string>

#include "blf/lfp_simplex.hpp"

namespace blf {

IntPoint coordinate_upper_bounds(const Instance& inst) {
  check_dimensions(inst);
  const auto system = ConstraintSystem::from_polyhedron(inst.polyhedron);
  IntPoint upper(inst.n, 0);
  for (std::size_t k = 0; k < inst.n; ++k) {
    RationalVector c(inst.n, Rational(0));
    c[k] = -1;
    const auto out = solve_lfp(system, linear_objective(c));
    if (out.status == LfpStatus::kInfeasible) {
      throw std::invalid_argument("feasible region is empty");
    }
    if (out.status == LfpStatus::kUnbounded) {
      throw std::invalid_argument("x" + std::to_string(k + 1) + " is unbounded above");
    }
    upper[k] = floor(-out.value).get_num().get_si();
  }
  return upper;
}

bool is_feasible(const Instance& inst, const IntPoint& x) {
  if (x.size() != inst.n) throw DimensionError("point has wrong length");
  if (std::any_of(x.begin(), x.end(), [](std::int64_t v) { return v < 0; })) return false;
  const auto rx = to_rational(x);
  for (std::size_t i = 0; i < inst.polyhedron.num_rows(); ++i) {
    if (dot(inst.polyhedron.A[i], rx) > inst.polyhedron.b[i]) return false;
  }
  return true;
}

std::vector<IntPoint> enumerate_feasible(const Instance& inst, std::uint64_t cap) {
  const auto upper = coordinate_upper_bounds(inst);
  std::uint64_t volume = 1;
  for (auto u : upper) {
    const auto width = static_cast<std::uint64_t>(u) + 1;
    if (volume > cap / width) {
      throw EnumerationCapError("bounding box exceeds " + std::to_string(cap) + " points");
    }
    volume *= width;
  }
  if (volume > cap) {
    throw EnumerationCapError("bounding box exceeds " + std::to_string(cap) + " points");
  }
  std::vector<IntPoint> out;
  IntPoint x(inst.n, 0);
  for (;;) {
    if (is_feasible(inst, x)) out.push_back(x);
    std::size_t k = inst.n;
    while (k > 0 && x[k - 1] == upper[k - 1]) x[--k] = 0;
    if (k == 0) break;
    ++x[k - 1];
  }
  return out;
}

bool dominates(const RationalVector& u, const RationalVector& v) {
  bool strict = false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] > v[i]) return false;
    strict = strict || u[i] < v[i];
  }
  return strict;
}

std::vector<std::size_t> nondominated(const std::vector<RationalVector>& values) {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < values.size(); ++a) {
    bool beaten = false;
    for (std::size_t b = 0; b < values.size() && !beaten; ++b) {
      beaten = b != a && dominates(values[b], values[a]);
    }
    if (!beaten) out.push_back(a);
  }
  return out;
}

std::vector<IntPoint> pareto_filter(const std::vector<IntPoint>& points, const Criteria& criteria) {
  std::vector<RationalVector> values;
  values.reserve(points.size());
  for (const auto& p : points) values.push_back(criteria(p));
  std::vector<IntPoint> out;
  for (auto k : nondominated(values)) out.push_back(points[k]);
  return out;
}

RationalVector quadratic_criteria(const Instance& inst, const IntPoint& x) {
  const auto rx = to_rational(x);
  RationalVector out;
  for (const auto& f : inst.quadratics) out.push_back(eval_quadratic(f, rx));
  return out;
}

RationalVector fractional_criteria(const Instance& inst, const IntPoint& x) {
  const auto rx = to_rational(x);
  RationalVector out;
  for (const auto& psi : inst.fractionals) out.push_back(eval_fractional(psi, rx));
  return out;
}

ParetoSets oracle_solve(const Instance& inst, std::uint64_t cap) {
  ParetoSets sets;
  sets.D = enumerate_feasible(inst, cap);
  sets.X_Q = pareto_filter(sets.D, [&](const IntPoint& x) { return quadratic_criteria(inst, x); });
  sets.X_F = pareto_filter(sets.D, [&](const IntPoint& x) { return fractional_criteria(inst, x); });
  for (const auto& x : sets.X_Q) {
    if (std::find(sets.X_F.begin(), sets.X_F.end(), x) != sets.X_F.end()) {
      sets.X_Eff.push_back(x);
    }
  }
  return sets;
}

}  // namespace blf
