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

#include "blf/cuts.hpp"

namespace blf {

RationalMatrix reduced_criterion_rows(const Tableau& tableau, const Instance& inst,
                                      const RationalVector& x_star) {
  const auto nonbasis = tableau.nonbasis();
  const std::size_t n = tableau.num_original();
  RationalMatrix out;
  out.reserve(inst.quadratics.size());
  for (const auto& f : inst.quadratics) {
    const auto grad = gradient_quadratic(f, x_star);
    RationalVector row;
    row.reserve(nonbasis.size());
    for (auto j : nonbasis) {
      Rational v = j < n ? grad[j] : Rational(0);
      for (std::size_t i = 0; i < tableau.num_rows(); ++i) {
        const auto k = tableau.basis()[i];
        if (k < n) v -= grad[k] * tableau.entry(i, j);
      }
      row.push_back(std::move(v));
    }
    out.push_back(std::move(row));
  }
  return out;
}

IndexSet build_H(const RationalMatrix& f_bar, const IndexSet& nonbasis) {
  IndexSet out;
  for (std::size_t k = 0; k < nonbasis.size(); ++k) {
    bool negative = false;
    bool all_zero = true;
    for (const auto& row : f_bar) {
      negative = negative || row[k] < 0;
      all_zero = all_zero && row[k] == 0;
    }
    if (negative || all_zero) out.push_back(nonbasis[k]);
  }
  return out;
}

IndexSet build_H_prime(const Tableau& tableau, const FractionalObjective& psi1,
                       const FractionalObjective& psi2) {
  const auto s1 = tableau.fractional_state(psi1);
  const auto s2 = tableau.fractional_state(psi2);
  IndexSet out;
  for (std::size_t k = 0; k < s2.nonbasis.size(); ++k) {
    if (s2.gamma[k] < 0 || (s2.gamma[k] == 0 && s1.gamma[k] == 0)) {
      out.push_back(s2.nonbasis[k]);
    }
  }
  return out;
}

LinearRow make_cut(const IndexSet& indices) {
  if (indices.empty()) throw std::invalid_argument("make_cut: empty index set");
  LinearRow row;
  for (auto j : indices) row.terms.push_back({j, Rational(1)});
  row.sense = Sense::kGreaterEqual;
  row.rhs = 1;
  return row;
}

CutReport build_cut_report(const Tableau& tableau, const Instance& inst,
                           const RationalVector& x_star) {
  CutReport report;
  report.nonbasis = tableau.nonbasis();
  report.f_bar = reduced_criterion_rows(tableau, inst, x_star);
  report.H = build_H(report.f_bar, report.nonbasis);
  report.H_prime = build_H_prime(tableau, inst.fractionals[0], inst.fractionals[1]);
  if (!report.H.empty()) report.cut_moiqp = make_cut(report.H);
  if (!report.H_prime.empty()) report.cut_boilfp = make_cut(report.H_prime);
  return report;
}

}  // namespace blf
