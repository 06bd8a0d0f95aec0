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

#ifndef BLF_EFFICIENCY_HPP
#define BLF_EFFICIENCY_HPP

#include <optional>
#include <vector>

#include "blf/instance.hpp"
#include "blf/rational.hpp"

namespace blf {

struct EfficiencyVerdict {
  bool efficient = true;
  /// Optimal value of the test program (0 iff efficient).
  Rational objective_value;
  /// An optimizer with positive value; absent when efficient.
  std::optional<IntPoint> witness;
};

/// max sum_i eps_i  s.t.  f_i(y) + eps_i <= f_i(x*), eps >= 0, y in D.
/// Throws std::invalid_argument if x* is not in D.
EfficiencyVerdict test_moiqp_efficiency(const IntPoint& x_star, const Instance& inst);
EfficiencyVerdict test_moiqp_efficiency(const IntPoint& x_star, const Instance& inst,
                                        const std::vector<IntPoint>& domain);

/// max w1 + w2  s.t.  (p^s - psi^s(x*) q^s) y + w_s <= psi^s(x*) beta^s - alpha^s,
/// w >= 0, y in D. Throws std::invalid_argument if x* is not in D.
EfficiencyVerdict test_boilfp_efficiency(const IntPoint& x_star, const Instance& inst);
EfficiencyVerdict test_boilfp_efficiency(const IntPoint& x_star, const Instance& inst,
                                         const std::vector<IntPoint>& domain);

}  // namespace blf

#endif  // BLF_EFFICIENCY_HPP
