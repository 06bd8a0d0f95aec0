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

#include "blf/lfp_simplex.hpp"

#include <algorithm>
#include <cassert>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

namespace blf {

// ---------------------------------------------------------------------------
// LinearRow / ConstraintSystem

LinearRow LinearRow::normalized() const {
  if (sense == Sense::kLessEqual) return *this;
  LinearRow out;
  out.sense = Sense::kLessEqual;
  out.rhs = -rhs;
  out.terms.reserve(terms.size());
  for (const auto& t : terms) out.terms.push_back({t.var, -t.coef});
  return out;
}

ConstraintSystem::ConstraintSystem(std::size_t num_original)
    : num_original_(num_original) {}

ConstraintSystem ConstraintSystem::from_polyhedron(const Polyhedron& poly) {
  const std::size_t n = poly.A.empty() ? 0 : poly.A.front().size();
  ConstraintSystem system(n);
  for (std::size_t i = 0; i < poly.A.size(); ++i) {
    LinearRow row;
    for (std::size_t j = 0; j < n; ++j) {
      if (poly.A[i][j] != 0) row.terms.push_back({j, poly.A[i][j]});
    }
    row.rhs = poly.b[i];
    system.add_row(row);
  }
  return system;
}

std::size_t ConstraintSystem::add_row(const LinearRow& row) {
  const std::size_t slack = registry_size();
  for (const auto& t : row.terms) {
    if (t.var >= slack) {
      throw DimensionError("row references x" + std::to_string(t.var + 1) +
                           " which does not exist yet");
    }
  }
  rows_.push_back(row.normalized());
  return slack;
}

RationalVector ConstraintSystem::registry_values(const RationalVector& x) const {
  if (x.size() != num_original_) {
    throw DimensionError("registry_values: point has wrong length");
  }
  RationalVector v = x;
  v.reserve(registry_size());
  for (const auto& row : rows_) {
    Rational lhs = 0;
    for (const auto& t : row.terms) lhs += t.coef * v[t.var];
    v.push_back(row.rhs - lhs);
  }
  return v;
}

bool ConstraintSystem::contains(const RationalVector& x) const {
  const auto v = registry_values(x);
  return std::all_of(v.begin(), v.end(), [](const Rational& a) { return a >= 0; });
}

// ---------------------------------------------------------------------------
// Tableau

Tableau::Tableau(const ConstraintSystem& system)
    : num_original_(system.num_original()),
      num_columns_(system.num_original()),
      row_of_(system.num_original()) {
  for (const auto& row : system.rows()) append_row(row);
}

std::vector<std::size_t> Tableau::nonbasis() const {
  std::vector<std::size_t> out;
  out.reserve(num_columns_ - basis_.size());
  for (std::size_t j = 0; j < num_columns_; ++j) {
    if (!row_of_[j]) out.push_back(j);
  }
  return out;
}

bool Tableau::primal_feasible() const {
  return std::all_of(rhs_.begin(), rhs_.end(), [](const Rational& v) { return v >= 0; });
}

RationalVector Tableau::registry_point() const {
  RationalVector v(num_columns_, Rational(0));
  for (std::size_t i = 0; i < basis_.size(); ++i) v[basis_[i]] = rhs_[i];
  return v;
}

RationalVector Tableau::point() const {
  RationalVector v(num_original_, Rational(0));
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i] < num_original_) v[basis_[i]] = rhs_[i];
  }
  return v;
}

FractionalState Tableau::fractional_state(const FractionalObjective& obj) const {
  FractionalState st;
  st.numerator = obj.alpha;
  st.denominator = obj.beta;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const auto k = basis_[i];
    if (k >= num_original_) continue;
    st.numerator += obj.p[k] * rhs_[i];
    st.denominator += obj.q[k] * rhs_[i];
  }
  st.nonbasis = nonbasis();
  const auto count = st.nonbasis.size();
  st.eta.assign(count, Rational(0));
  st.theta.assign(count, Rational(0));
  st.gamma.assign(count, Rational(0));
  for (std::size_t idx = 0; idx < count; ++idx) {
    const auto j = st.nonbasis[idx];
    Rational eta = j < num_original_ ? obj.p[j] : Rational(0);
    Rational theta = j < num_original_ ? obj.q[j] : Rational(0);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const auto k = basis_[i];
      if (k >= num_original_ || body_[i][j] == 0) continue;
      eta -= obj.p[k] * body_[i][j];
      theta -= obj.q[k] * body_[i][j];
    }
    st.gamma[idx] = st.denominator * eta - st.numerator * theta;
    st.eta[idx] = std::move(eta);
    st.theta[idx] = std::move(theta);
  }
  return st;
}

void Tableau::pivot(std::size_t row, std::size_t col) {
  if (body_[row][col] == 0) throw SimplexError("pivot on a zero element");
  const Rational inv = 1 / body_[row][col];
  auto& prow = body_[row];
  std::vector<std::size_t> support;
  for (std::size_t c = 0; c < num_columns_; ++c) {
    if (prow[c] != 0) {
      prow[c] *= inv;
      support.push_back(c);
    }
  }
  rhs_[row] *= inv;
  for (std::size_t i = 0; i < body_.size(); ++i) {
    if (i == row || body_[i][col] == 0) continue;
    const Rational factor = body_[i][col];
    for (auto c : support) body_[i][c] -= factor * prow[c];
    rhs_[i] -= factor * rhs_[row];
  }
  row_of_[basis_[row]].reset();
  basis_[row] = col;
  row_of_[col] = row;
}

std::size_t Tableau::append_row(const LinearRow& row) {
  const LinearRow norm = row.normalized();
  const std::size_t slack = num_columns_;
  for (auto& r : body_) r.emplace_back(0);
  ++num_columns_;
  row_of_.emplace_back();

  RationalVector fresh(num_columns_, Rational(0));
  for (const auto& t : norm.terms) {
    if (t.var >= slack) {
      throw DimensionError("row references x" + std::to_string(t.var + 1) +
                           " which does not exist yet");
    }
    fresh[t.var] += t.coef;
  }
  fresh[slack] = 1;
  Rational rhs = norm.rhs;
  // Eliminate basic columns so the new slack is the only basic one.
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rational factor = fresh[basis_[i]];
    if (factor == 0) continue;
    for (std::size_t c = 0; c < num_columns_; ++c) {
      if (body_[i][c] != 0) fresh[c] -= factor * body_[i][c];
    }
    rhs -= factor * rhs_[i];
  }
  body_.push_back(std::move(fresh));
  rhs_.push_back(std::move(rhs));
  basis_.push_back(slack);
  row_of_[slack] = basis_.size() - 1;
  return slack;
}

bool Tableau::run_phase_one(std::size_t pivot_cap, std::size_t& pivots) {
  if (primal_feasible()) return true;

  // Artificial column a with coefficient -1 in every infeasible row.
  const std::size_t art = num_columns_;
  for (std::size_t i = 0; i < body_.size(); ++i) {
    body_[i].emplace_back(rhs_[i] < 0 ? -1 : 0);
  }
  ++num_columns_;
  row_of_.emplace_back();

  auto bump = [&] {
    if (++pivots > pivot_cap) throw SimplexError("pivot cap exceeded in phase one");
  };

  std::size_t start = 0;
  for (std::size_t i = 1; i < rhs_.size(); ++i) {
    if (rhs_[i] < rhs_[start] || (rhs_[i] == rhs_[start] && basis_[i] < basis_[start])) {
      start = i;
    }
  }
  pivot(start, art);
  bump();

  // Minimize a with Bland's rule; a's reduced cost row is minus its tableau row.
  bool feasible = true;
  while (row_of_[art]) {
    const std::size_t ar = *row_of_[art];
    if (rhs_[ar] == 0) break;
    std::optional<std::size_t> entering;
    for (std::size_t j = 0; j < art; ++j) {
      if (!row_of_[j] && body_[ar][j] > 0) {
        entering = j;
        break;
      }
    }
    if (!entering) {
      feasible = false;
      break;
    }
    const auto j = *entering;
    std::optional<std::size_t> leave;
    Rational best;
    for (std::size_t i = 0; i < body_.size(); ++i) {
      if (body_[i][j] <= 0) continue;
      const Rational ratio = rhs_[i] / body_[i][j];
      if (!leave || ratio < best) {
        leave = i;
        best = ratio;
      } else if (ratio == best && basis_[*leave] != art &&
                 (basis_[i] == art || basis_[i] < basis_[*leave])) {
        leave = i;
      }
    }
    pivot(*leave, j);
    bump();
  }

  if (feasible && row_of_[art]) {
    // a is basic at zero; pivot it out on any nonzero entry.
    const std::size_t ar = *row_of_[art];
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < art; ++j) {
      if (!row_of_[j] && body_[ar][j] != 0) {
        col = j;
        break;
      }
    }
    if (!col) throw SimplexError("artificial variable cannot leave the basis");
    pivot(ar, *col);
    bump();
  }

  for (auto& r : body_) r.pop_back();
  --num_columns_;
  row_of_.pop_back();
  return feasible;
}

// ---------------------------------------------------------------------------
// Solvers

namespace {

std::size_t pivot_cap_for(const Tableau& t) {
  const std::size_t dim = t.num_rows() + t.num_columns();
  return 10 * dim * dim;
}

void count_pivot(std::size_t& pivots, std::size_t cap) {
  if (++pivots > cap) {
    throw SimplexError("pivot cap of " + std::to_string(cap) + " exceeded");
  }
}

// Fractional primal simplex. Entering column: least index with negative
// reduced gradient. Leaving row: minimum ratio, ties to the largest basic
// index, switching to the least index once a run of degenerate pivots grows
// longer than the column count.
LfpStatus run_primal(Tableau& t, const FractionalObjective& obj,
                     std::size_t cap, std::size_t& pivots,
                     std::vector<Rational>& values) {
  std::size_t degenerate_run = 0;
  for (;;) {
    const auto st = t.fractional_state(obj);
    std::optional<std::size_t> entering;
    for (std::size_t idx = 0; idx < st.nonbasis.size(); ++idx) {
      if (st.gamma[idx] < 0) {
        entering = st.nonbasis[idx];
        break;
      }
    }
    if (!entering) return LfpStatus::kOptimal;
    const auto j = *entering;
    const bool least_index = degenerate_run > t.num_columns();
    std::optional<std::size_t> leave;
    Rational best;
    for (std::size_t i = 0; i < t.num_rows(); ++i) {
      if (t.entry(i, j) <= 0) continue;
      const Rational ratio = t.rhs(i) / t.entry(i, j);
      if (!leave || ratio < best) {
        leave = i;
        best = ratio;
      } else if (ratio == best) {
        const bool smaller = t.basis()[i] < t.basis()[*leave];
        if (smaller == least_index) leave = i;
      }
    }
    if (!leave) return LfpStatus::kUnbounded;
    degenerate_run = best == 0 ? degenerate_run + 1 : 0;
    t.pivot(*leave, j);
    count_pivot(pivots, cap);
    const auto after = t.fractional_state(obj);
    values.push_back(after.numerator / after.denominator);
  }
}

// Among alternative optimal bases at a degenerate vertex, moves original
// columns with zero reduced gradient into rows held by a zero-valued slack.
// Point and reduced gradients are unchanged by these pivots.
void prefer_original_columns(Tableau& t, const FractionalObjective& obj,
                             std::size_t cap, std::size_t& pivots) {
  for (bool changed = true; changed;) {
    changed = false;
    const auto st = t.fractional_state(obj);
    for (std::size_t idx = 0; idx < st.nonbasis.size() && !changed; ++idx) {
      const auto j = st.nonbasis[idx];
      if (j >= t.num_original() || st.gamma[idx] != 0) continue;
      std::optional<std::size_t> row;
      for (std::size_t i = 0; i < t.num_rows(); ++i) {
        if (t.basis()[i] < t.num_original() || t.rhs(i) != 0 || t.entry(i, j) == 0) {
          continue;
        }
        if (!row || t.basis()[i] > t.basis()[*row]) row = i;
      }
      if (row) {
        t.pivot(*row, j);
        count_pivot(pivots, cap);
        changed = true;
      }
    }
  }
}

// Dual simplex on the objective linearized at the entry point:
// Q0 * p'x - P0 * q'x, whose reduced costs are the fractional reduced
// gradients at that point. Returns nullopt when the tableau is not dual
// feasible for that objective.
std::optional<bool> run_dual(Tableau& t, const FractionalObjective& obj,
                             std::size_t cap, std::size_t& pivots) {
  const auto entry_state = t.fractional_state(obj);
  const Rational P0 = entry_state.numerator;
  const Rational Q0 = entry_state.denominator;
  if (Q0 <= 0) return std::nullopt;
  for (const auto& g : entry_state.gamma) {
    if (g < 0) return std::nullopt;
  }
  for (;;) {
    std::optional<std::size_t> row;
    for (std::size_t i = 0; i < t.num_rows(); ++i) {
      if (t.rhs(i) < 0 && (!row || t.basis()[i] < t.basis()[*row])) row = i;
    }
    if (!row) return true;
    const auto st = t.fractional_state(obj);
    std::optional<std::size_t> entering;
    Rational best;
    for (std::size_t idx = 0; idx < st.nonbasis.size(); ++idx) {
      const auto j = st.nonbasis[idx];
      const Rational& a = t.entry(*row, j);
      if (a >= 0) continue;
      const Rational ratio = (Q0 * st.eta[idx] - P0 * st.theta[idx]) / -a;
      if (!entering || ratio < best) {
        entering = j;
        best = ratio;
      }
    }
    if (!entering) return false;
    t.pivot(*row, *entering);
    count_pivot(pivots, cap);
  }
}

LfpOutcome finish(Tableau t, const FractionalObjective& obj, std::size_t cap,
                  std::size_t pivots) {
  LfpOutcome out;
  const auto status = run_primal(t, obj, cap, pivots, out.primal_values);
  if (status == LfpStatus::kOptimal) {
    prefer_original_columns(t, obj, cap, pivots);
#ifndef NDEBUG
    const auto st = t.fractional_state(obj);
    for (std::size_t idx = 0; idx < st.nonbasis.size(); ++idx) {
      assert(st.gamma[idx] == st.denominator * st.eta[idx] - st.numerator * st.theta[idx]);
      assert(st.gamma[idx] >= 0);
    }
#endif
  }
  out.status = status;
  out.x = t.point();
  if (status == LfpStatus::kOptimal) out.value = eval_fractional(obj, out.x);
  out.pivots = pivots;
  out.tableau = std::move(t);
  return out;
}

LfpOutcome infeasible(Tableau t, std::size_t pivots) {
  LfpOutcome out;
  out.status = LfpStatus::kInfeasible;
  out.pivots = pivots;
  out.tableau = std::move(t);
  return out;
}

}  // namespace

FractionalObjective linear_objective(RationalVector c) {
  FractionalObjective obj;
  obj.q.assign(c.size(), Rational(0));
  obj.p = std::move(c);
  obj.alpha = 0;
  obj.beta = 1;
  return obj;
}

LfpOutcome solve_lfp(const ConstraintSystem& system,
                     const FractionalObjective& objective) {
  Tableau t(system);
  const auto cap = pivot_cap_for(t);
  std::size_t pivots = 0;
  if (!t.run_phase_one(cap, pivots)) return infeasible(std::move(t), pivots);
  return finish(std::move(t), objective, cap, pivots);
}

LfpOutcome add_rows_and_reoptimize(Tableau tableau,
                                   std::span<const LinearRow> rows,
                                   const FractionalObjective& objective) {
  for (const auto& row : rows) tableau.append_row(row);
  const auto cap = pivot_cap_for(tableau);
  std::size_t pivots = 0;
  if (!tableau.primal_feasible()) {
    const auto dual = run_dual(tableau, objective, cap, pivots);
    const bool feasible = dual ? *dual : tableau.run_phase_one(cap, pivots);
    if (!feasible) return infeasible(std::move(tableau), pivots);
  }
  return finish(std::move(tableau), objective, cap, pivots);
}

LfpOutcome add_row_and_reoptimize(Tableau tableau, const LinearRow& row,
                                  const FractionalObjective& objective) {
  return add_rows_and_reoptimize(std::move(tableau), std::span(&row, 1), objective);
}

std::vector<std::pair<std::size_t, Rational>> reduced_gradient_row(
    const Tableau& tableau, const FractionalObjective& objective) {
  const auto st = tableau.fractional_state(objective);
  std::vector<std::pair<std::size_t, Rational>> out;
  out.reserve(st.nonbasis.size());
  for (std::size_t idx = 0; idx < st.nonbasis.size(); ++idx) {
    out.emplace_back(st.nonbasis[idx], st.gamma[idx]);
  }
  return out;
}

void dump_tableau(std::ostream& out, const Tableau& tableau,
                  std::span<const FractionalObjective> objectives,
                  const RationalMatrix* criterion_rows) {
  const auto nonbasis = tableau.nonbasis();
  std::vector<std::vector<std::string>> lines;
  auto name = [](std::size_t j) { return "x" + std::to_string(j + 1); };

  std::vector<std::string> header{"B"};
  for (auto j : nonbasis) header.push_back(name(j));
  header.emplace_back("RHS");
  lines.push_back(std::move(header));

  std::vector<std::size_t> order(tableau.num_rows());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return tableau.basis()[a] < tableau.basis()[b];
  });
  for (auto i : order) {
    std::vector<std::string> line{name(tableau.basis()[i])};
    for (auto j : nonbasis) line.push_back(to_string(tableau.entry(i, j)));
    line.push_back(to_string(tableau.rhs(i)));
    lines.push_back(std::move(line));
  }
  for (std::size_t s = 0; s < objectives.size(); ++s) {
    const auto st = tableau.fractional_state(objectives[s]);
    std::vector<std::string> line{"gamma" + std::to_string(s + 1)};
    for (const auto& g : st.gamma) line.push_back(to_string(g));
    line.push_back(to_string(st.numerator / st.denominator));
    lines.push_back(std::move(line));
  }
  if (criterion_rows != nullptr) {
    for (std::size_t i = 0; i < criterion_rows->size(); ++i) {
      std::vector<std::string> line{"fbar" + std::to_string(i + 1)};
      for (const auto& v : (*criterion_rows)[i]) line.push_back(to_string(v));
      line.emplace_back("");
      lines.push_back(std::move(line));
    }
  }

  std::vector<std::size_t> width(lines.front().size(), 0);
  for (const auto& line : lines) {
    for (std::size_t c = 0; c < line.size() && c < width.size(); ++c) {
      width[c] = std::max(width[c], line[c].size());
    }
  }
  for (const auto& line : lines) {
    std::ostringstream os;
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c == 1 || c + 1 == line.size()) os << "| ";
      os << std::left << std::setw(static_cast<int>(width[c]) + 1) << line[c];
    }
    auto text = os.str();
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out << text << '\n';
  }
  out << '\n';
}

}  // namespace blf
