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

#include "blf/instance.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "blf/lfp_simplex.hpp"

namespace blf {

namespace {

void require_length(const RationalVector& v, std::size_t n, const char* what) {
  if (v.size() != n) {
    throw DimensionError(std::string(what) + ": expected length " +
                         std::to_string(n) + ", got " +
                         std::to_string(v.size()));
  }
}

void require_square(const RationalMatrix& m, std::size_t n, const char* what) {
  if (m.size() != n) {
    throw DimensionError(std::string(what) + ": expected " + std::to_string(n) +
                         " rows, got " + std::to_string(m.size()));
  }
  for (const auto& row : m) require_length(row, n, what);
}

}  // namespace

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kDimensionMismatch: return "dimension mismatch";
    case ViolationKind::kNotSymmetric: return "matrix not symmetric";
    case ViolationKind::kNotPsd: return "matrix not positive semi-definite";
    case ViolationKind::kEmptyRegion: return "empty region";
    case ViolationKind::kUnboundedRegion: return "unbounded region";
    case ViolationKind::kDenominatorNonpositive: return "denominator nonpositive";
  }
  return "unknown";
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) {
    throw DimensionError("dot: length " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  }
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

void check_dimensions(const Instance& inst) {
  const auto n = inst.n;
  if (n == 0) throw DimensionError("n must be positive");
  if (inst.r < 2) throw DimensionError("r must be at least 2");
  if (inst.quadratics.size() != inst.r) {
    throw DimensionError("expected " + std::to_string(inst.r) +
                         " quadratic objectives, got " +
                         std::to_string(inst.quadratics.size()));
  }
  for (const auto& f : inst.quadratics) {
    require_square(f.Q, n, "Q");
    require_length(f.c, n, "c");
  }
  if (inst.fractionals.size() != 2) {
    throw DimensionError("expected exactly 2 fractional objectives, got " +
                         std::to_string(inst.fractionals.size()));
  }
  for (const auto& psi : inst.fractionals) {
    require_length(psi.p, n, "p");
    require_length(psi.q, n, "q");
  }
  const auto& poly = inst.polyhedron;
  if (poly.A.empty()) throw DimensionError("A must have at least one row");
  for (const auto& row : poly.A) require_length(row, n, "A row");
  require_length(poly.b, poly.A.size(), "b");
}

bool is_symmetric(const RationalMatrix& Q) {
  for (std::size_t i = 0; i < Q.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (Q[i][j] != Q[j][i]) return false;
    }
  }
  return true;
}

bool is_positive_semidefinite(const RationalMatrix& Q) {
  RationalMatrix m = Q;
  const std::size_t n = m.size();
  for (std::size_t k = 0; k < n; ++k) {
    // Largest remaining diagonal entry as pivot.
    std::size_t best = k;
    for (std::size_t i = k; i < n; ++i) {
      if (m[i][i] < 0) return false;
      if (m[i][i] > m[best][best]) best = i;
    }
    if (m[best][best] == 0) {
      for (std::size_t i = k; i < n; ++i) {
        for (std::size_t j = k; j < n; ++j) {
          if (m[i][j] != 0) return false;
        }
      }
      return true;
    }
    if (best != k) {
      std::swap(m[best], m[k]);
      for (auto& row : m) std::swap(row[best], row[k]);
    }
    const Rational pivot = m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      const Rational factor = m[i][k] / pivot;
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] -= factor * m[k][j];
      m[i][k] = 0;
    }
    for (std::size_t j = k + 1; j < n; ++j) m[k][j] = 0;
  }
  return true;
}

Rational eval_quadratic(const QuadraticObjective& obj, const RationalVector& x) {
  require_length(x, obj.c.size(), "x");
  Rational quad = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < x.size(); ++j) row += obj.Q[i][j] * x[j];
    quad += x[i] * row;
  }
  return quad / 2 + dot(obj.c, x);
}

Rational eval_fractional(const FractionalObjective& obj, const RationalVector& x) {
  require_length(x, obj.p.size(), "x");
  const Rational den = dot(obj.q, x) + obj.beta;
  if (den == 0) throw std::domain_error("fractional objective: zero denominator");
  return (dot(obj.p, x) + obj.alpha) / den;
}

RationalVector gradient_quadratic(const QuadraticObjective& obj,
                                  const RationalVector& x) {
  require_length(x, obj.c.size(), "x");
  RationalVector g = obj.c;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) g[i] += obj.Q[i][j] * x[j];
  }
  return g;
}

std::vector<Violation> validate_instance(const Instance& inst) {
  std::vector<Violation> out;
  try {
    check_dimensions(inst);
  } catch (const DimensionError& e) {
    out.push_back({ViolationKind::kDimensionMismatch, e.what()});
    return out;
  }

  for (std::size_t i = 0; i < inst.quadratics.size(); ++i) {
    const auto& Q = inst.quadratics[i].Q;
    const auto label = "Q" + std::to_string(i + 1);
    if (!is_symmetric(Q)) {
      out.push_back({ViolationKind::kNotSymmetric, label + " is not symmetric"});
    } else if (!is_positive_semidefinite(Q)) {
      out.push_back({ViolationKind::kNotPsd, label + " is not positive semi-definite"});
    }
  }

  const auto system = ConstraintSystem::from_polyhedron(inst.polyhedron);
  for (std::size_t k = 0; k < inst.n; ++k) {
    RationalVector c(inst.n, Rational(0));
    c[k] = -1;
    const auto lp = solve_lfp(system, linear_objective(std::move(c)));
    if (lp.status == LfpStatus::kInfeasible) {
      out.push_back({ViolationKind::kEmptyRegion, "region {x >= 0 | Ax <= b} is empty"});
      return out;
    }
    if (lp.status == LfpStatus::kUnbounded) {
      out.push_back({ViolationKind::kUnboundedRegion,
                     "x" + std::to_string(k + 1) + " is unbounded above"});
    }
  }

  for (std::size_t s = 0; s < inst.fractionals.size(); ++s) {
    const auto& psi = inst.fractionals[s];
    const auto label = "denominator of psi" + std::to_string(s + 1);
    const auto lp = solve_lfp(system, linear_objective(psi.q));
    if (lp.status == LfpStatus::kUnbounded) {
      out.push_back({ViolationKind::kDenominatorNonpositive, label + " is unbounded below"});
    } else if (lp.status == LfpStatus::kOptimal && lp.value + psi.beta <= 0) {
      out.push_back({ViolationKind::kDenominatorNonpositive,
                     label + " reaches " + to_string(lp.value + psi.beta)});
    }
  }
  return out;
}

}  // namespace blf
