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

#ifndef BLF_ORACLE_HPP
#define BLF_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "blf/instance.hpp"
#include "blf/rational.hpp"

namespace blf {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

class EnumerationCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest integer value of each coordinate over the continuous region.
/// Throws std::invalid_argument if the region is empty or unbounded.
IntPoint coordinate_upper_bounds(const Instance& inst);

/// Integer points of { x >= 0 | Ax <= b } in lexicographic order. Throws
/// EnumerationCapError when the bounding box holds more than cap points.
std::vector<IntPoint> enumerate_feasible(const Instance& inst,
                                         std::uint64_t cap = kDefaultEnumerationCap);

/// Ax <= b and x >= 0.
bool is_feasible(const Instance& inst, const IntPoint& x);

/// u <= v componentwise with at least one strict inequality.
bool dominates(const RationalVector& u, const RationalVector& v);

/// Positions of the non-dominated vectors, ascending.
std::vector<std::size_t> nondominated(const std::vector<RationalVector>& values);

using Criteria = std::function<RationalVector(const IntPoint&)>;

/// Non-dominated points under the criteria, in input order.
std::vector<IntPoint> pareto_filter(const std::vector<IntPoint>& points, const Criteria& criteria);

/// (f_1(x), ..., f_r(x)).
RationalVector quadratic_criteria(const Instance& inst, const IntPoint& x);
/// (psi1(x), psi2(x)).
RationalVector fractional_criteria(const Instance& inst, const IntPoint& x);

struct ParetoSets {
  std::vector<IntPoint> D;
  std::vector<IntPoint> X_Q;
  std::vector<IntPoint> X_F;
  std::vector<IntPoint> X_Eff;
};

ParetoSets oracle_solve(const Instance& inst, std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace blf

#endif  // BLF_ORACLE_HPP
