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

#ifndef BLF_LFP_SIMPLEX_HPP
#define BLF_LFP_SIMPLEX_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "blf/instance.hpp"
#include "blf/rational.hpp"

namespace blf {

// Variables live in a registry: originals 0..n-1, then one slack per
// constraint row in the order the rows were added. Indices are 0-based in
// the API; printed forms use x1, x2, ...

enum class Sense { kLessEqual, kGreaterEqual };

struct Term {
  std::size_t var;
  Rational coef;

  bool operator==(const Term&) const = default;
};

struct LinearRow {
  std::vector<Term> terms;
  Sense sense = Sense::kLessEqual;
  Rational rhs;

  /// Same row with sense <= (a >= row is negated).
  LinearRow normalized() const;
  bool operator==(const LinearRow&) const = default;
};

/// Constraint rows in <= form, each owning one nonnegative slack.
class ConstraintSystem {
 public:
  explicit ConstraintSystem(std::size_t num_original = 0);
  static ConstraintSystem from_polyhedron(const Polyhedron& poly);

  /// Appends the normalized row. Terms may reference any registry variable
  /// that exists before this row. Returns the registry index of its slack.
  std::size_t add_row(const LinearRow& row);

  std::size_t num_original() const { return num_original_; }
  std::size_t num_rows() const { return rows_.size(); }
  std::size_t registry_size() const { return num_original_ + rows_.size(); }
  const std::vector<LinearRow>& rows() const { return rows_; }

  /// Values of every registry variable at the original point x.
  RationalVector registry_values(const RationalVector& x) const;
  /// x >= 0 and every slack >= 0.
  bool contains(const RationalVector& x) const;

 private:
  std::size_t num_original_;
  std::vector<LinearRow> rows_;
};

class SimplexError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Per-objective pricing data at the current basic solution.
struct FractionalState {
  Rational numerator;    // P(x) = p'x + alpha
  Rational denominator;  // Q(x) = q'x + beta
  std::vector<std::size_t> nonbasis;
  RationalVector eta;
  RationalVector theta;
  RationalVector gamma;  // gamma_j = Q * eta_j - P * theta_j
};

/// Dense simplex tableau in the form x_B = rhs - body * x_N.
class Tableau {
 public:
  Tableau() = default;
  /// Slack basis for the system; rhs may be negative.
  explicit Tableau(const ConstraintSystem& system);

  std::size_t num_rows() const { return rhs_.size(); }
  std::size_t num_columns() const { return num_columns_; }
  std::size_t num_original() const { return num_original_; }

  const std::vector<std::size_t>& basis() const { return basis_; }
  std::vector<std::size_t> nonbasis() const;
  bool is_basic(std::size_t col) const { return row_of_[col].has_value(); }
  std::optional<std::size_t> row_of(std::size_t col) const { return row_of_[col]; }

  const Rational& entry(std::size_t row, std::size_t col) const {
    return body_[row][col];
  }
  const Rational& rhs(std::size_t row) const { return rhs_[row]; }

  bool primal_feasible() const;
  /// Basic solution over the whole registry.
  RationalVector registry_point() const;
  /// Basic solution restricted to the original variables.
  RationalVector point() const;

  FractionalState fractional_state(const FractionalObjective& obj) const;

  void pivot(std::size_t row, std::size_t col);

  /// Adds the row with a fresh basic slack, expressed in the current
  /// nonbasic variables. Returns the slack's registry index.
  std::size_t append_row(const LinearRow& row);

  /// Auxiliary phase with a single artificial column. Returns false when
  /// the region is empty; otherwise the tableau is primal feasible.
  bool run_phase_one(std::size_t pivot_cap, std::size_t& pivots);

 private:
  std::size_t num_original_ = 0;
  std::size_t num_columns_ = 0;
  std::vector<RationalVector> body_;
  RationalVector rhs_;
  std::vector<std::size_t> basis_;
  std::vector<std::optional<std::size_t>> row_of_;
};

enum class LfpStatus { kOptimal, kInfeasible, kUnbounded };

struct LfpOutcome {
  LfpStatus status = LfpStatus::kInfeasible;
  RationalVector x;  // optimal point over the original variables
  Rational value;    // objective value at x
  Tableau tableau;
  std::size_t pivots = 0;
  /// Objective value after each primal pivot of the optimality phase.
  std::vector<Rational> primal_values;

  bool optimal() const { return status == LfpStatus::kOptimal; }
};

/// Minimizes the objective over the continuous region of the system.
/// kUnbounded is only reachable for objectives with q = 0.
LfpOutcome solve_lfp(const ConstraintSystem& system,
                     const FractionalObjective& objective);

/// Appends the rows to an optimal tableau and restores optimality with dual
/// simplex pivots followed by primal pivots.
LfpOutcome add_rows_and_reoptimize(Tableau tableau,
                                   std::span<const LinearRow> rows,
                                   const FractionalObjective& objective);

LfpOutcome add_row_and_reoptimize(Tableau tableau, const LinearRow& row,
                                  const FractionalObjective& objective);

/// gamma_j for every nonbasic j, ascending j.
std::vector<std::pair<std::size_t, Rational>> reduced_gradient_row(
    const Tableau& tableau, const FractionalObjective& objective);

/// Linear objective c'x wrapped as a fractional objective (q = 0, beta = 1).
FractionalObjective linear_objective(RationalVector c);

/// Tableau block: one line per basic variable, then a gamma row per
/// objective, then optional criterion rows (one vector per criterion,
/// aligned with nonbasis()).
void dump_tableau(std::ostream& out, const Tableau& tableau,
                  std::span<const FractionalObjective> objectives,
                  const RationalMatrix* criterion_rows = nullptr);

}  // namespace blf

#endif  // BLF_LFP_SIMPLEX_HPP
