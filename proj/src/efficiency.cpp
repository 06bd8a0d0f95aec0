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

#include "blf/efficiency.hpp"

#include <stdexcept>

#include "blf/oracle.hpp"

namespace blf {
namespace {

void require_feasible(const IntPoint& x, const Instance& inst) {
  if (!is_feasible(inst, x)) {
    throw std::invalid_argument("efficiency test: point is not feasible");
  }
}

// Keeps the first y (domain order) attaining the largest positive value.
void offer(EfficiencyVerdict& verdict, const Rational& value, const IntPoint& y) {
  if (value > verdict.objective_value) {
    verdict.objective_value = value;
    verdict.witness = y;
  }
}

EfficiencyVerdict finish(EfficiencyVerdict verdict) {
  verdict.efficient = verdict.objective_value == 0;
  return verdict;
}

}  // namespace

EfficiencyVerdict test_moiqp_efficiency(const IntPoint& x_star, const Instance& inst) {
  require_feasible(x_star, inst);
  return test_moiqp_efficiency(x_star, inst, enumerate_feasible(inst));
}

EfficiencyVerdict test_moiqp_efficiency(const IntPoint& x_star, const Instance& inst,
                                        const std::vector<IntPoint>& domain) {
  require_feasible(x_star, inst);
  const auto bound = quadratic_criteria(inst, x_star);
  EfficiencyVerdict verdict;
  verdict.objective_value = 0;
  for (const auto& y : domain) {
    const auto fy = quadratic_criteria(inst, y);
    Rational phi = 0;
    bool admissible = true;
    for (std::size_t i = 0; i < fy.size() && admissible; ++i) {
      const Rational eps = bound[i] - fy[i];
      admissible = eps >= 0;
      phi += eps;
    }
    if (admissible) offer(verdict, phi, y);
  }
  return finish(std::move(verdict));
}

EfficiencyVerdict test_boilfp_efficiency(const IntPoint& x_star, const Instance& inst) {
  require_feasible(x_star, inst);
  return test_boilfp_efficiency(x_star, inst, enumerate_feasible(inst));
}

EfficiencyVerdict test_boilfp_efficiency(const IntPoint& x_star, const Instance& inst,
                                         const std::vector<IntPoint>& domain) {
  require_feasible(x_star, inst);
  const auto xs = to_rational(x_star);
  RationalVector level;
  for (const auto& psi : inst.fractionals) level.push_back(eval_fractional(psi, xs));
  EfficiencyVerdict verdict;
  verdict.objective_value = 0;
  for (const auto& y : domain) {
    const auto ry = to_rational(y);
    Rational total = 0;
    bool admissible = true;
    for (std::size_t s = 0; s < inst.fractionals.size() && admissible; ++s) {
      const auto& psi = inst.fractionals[s];
      // Largest w_s allowed by the linearized row.
      Rational w = level[s] * psi.beta - psi.alpha;
      for (std::size_t j = 0; j < ry.size(); ++j) {
        w -= (psi.p[j] - level[s] * psi.q[j]) * ry[j];
      }
      admissible = w >= 0;
      total += w;
    }
    if (admissible) offer(verdict, total, y);
  }
  return finish(std::move(verdict));
}

}  // namespace blf
