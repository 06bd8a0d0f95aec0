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

#ifndef BLF_INSTANCE_HPP
#define BLF_INSTANCE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "blf/rational.hpp"

namespace blf {

using RationalMatrix = std::vector<RationalVector>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// f(x) = 1/2 x'Qx + c'x with Q symmetric positive semi-definite.
struct QuadraticObjective {
  RationalMatrix Q;
  RationalVector c;

  bool operator==(const QuadraticObjective&) const = default;
};

/// psi(x) = (p'x + alpha) / (q'x + beta).
struct FractionalObjective {
  RationalVector p;
  RationalVector q;
  Rational alpha;
  Rational beta;

  bool operator==(const FractionalObjective&) const = default;
};

/// { x >= 0 | Ax <= b }.
struct Polyhedron {
  RationalMatrix A;
  RationalVector b;

  std::size_t num_rows() const { return A.size(); }
  bool operator==(const Polyhedron&) const = default;
};

struct Instance {
  std::size_t n = 0;
  std::size_t r = 0;
  std::vector<QuadraticObjective> quadratics;
  std::vector<FractionalObjective> fractionals;
  Polyhedron polyhedron;

  bool operator==(const Instance&) const = default;
};

enum class ViolationKind {
  kDimensionMismatch,
  kNotSymmetric,
  kNotPsd,
  kEmptyRegion,
  kUnboundedRegion,
  kDenominatorNonpositive,
};

struct Violation {
  ViolationKind kind;
  std::string message;
};

const char* to_string(ViolationKind kind);

/// Structural checks only (sizes, r >= 2, exactly two fractional objectives).
/// Throws DimensionError on the first inconsistency.
void check_dimensions(const Instance& inst);

/// Returns every violated invariant. Runs n + 2 auxiliary linear programs:
/// one maximization per coordinate and one denominator minimization per
/// fractional objective.
std::vector<Violation> validate_instance(const Instance& inst);

/// Exact LDL' with symmetric pivoting; true iff every pivot is >= 0 and the
/// trailing block is zero once all remaining diagonal entries vanish.
bool is_positive_semidefinite(const RationalMatrix& Q);

bool is_symmetric(const RationalMatrix& Q);

Rational eval_quadratic(const QuadraticObjective& obj, const RationalVector& x);

/// Throws std::domain_error when q'x + beta == 0.
Rational eval_fractional(const FractionalObjective& obj, const RationalVector& x);

/// Qx + c.
RationalVector gradient_quadratic(const QuadraticObjective& obj,
                                  const RationalVector& x);

Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace blf

#endif  // BLF_INSTANCE_HPP
