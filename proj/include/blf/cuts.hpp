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

#ifndef BLF_CUTS_HPP
#define BLF_CUTS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "blf/instance.hpp"
#include "blf/lfp_simplex.hpp"

namespace blf {

using IndexSet = std::vector<std::size_t>;  // ascending registry indices

struct CutReport {
  IndexSet nonbasis;
  /// f_bar[i][k]: criterion i along nonbasis[k].
  RationalMatrix f_bar;
  IndexSet H;
  IndexSet H_prime;
  std::optional<LinearRow> cut_moiqp;
  std::optional<LinearRow> cut_boilfp;
};

/// rho_j - sum over basic originals k of grad f_i(x*)_k * a_kj, where rho_j is
/// grad f_i(x*)_j for an original j and 0 otherwise.
RationalMatrix reduced_criterion_rows(const Tableau& tableau, const Instance& inst,
                                      const RationalVector& x_star);

/// Columns where some criterion strictly decreases, plus all-zero columns.
IndexSet build_H(const RationalMatrix& f_bar, const IndexSet& nonbasis);

/// Columns with gamma2 < 0, plus columns where gamma1 = gamma2 = 0.
IndexSet build_H_prime(const Tableau& tableau, const FractionalObjective& psi1,
                       const FractionalObjective& psi2);

/// sum_{j in indices} x_j >= 1. Throws std::invalid_argument on an empty set.
LinearRow make_cut(const IndexSet& indices);

CutReport build_cut_report(const Tableau& tableau, const Instance& inst,
                           const RationalVector& x_star);

}  // namespace blf

#endif  // BLF_CUTS_HPP
