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

#ifndef BLF_TESTS_RANDOM_INSTANCES_HPP
#define BLF_TESTS_RANDOM_INSTANCES_HPP

#include <cstdint>
#include <random>

#include "blf/instance.hpp"
#include "blf/rational.hpp"

namespace blf::testing {

class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

  long uniform(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
  }

  Rational rational(long lo, long hi, long max_den) {
    Rational v(mpz_class(uniform(lo, hi)), mpz_class(uniform(1, max_den)));
    v.canonicalize();
    return v;
  }

  /// Q = M'M with M entries in [-m, m].
  RationalMatrix psd_matrix(std::size_t n, long m) {
    std::vector<std::vector<long>> M(n, std::vector<long>(n));
    for (auto& row : M) {
      for (auto& v : row) v = uniform(-m, m);
    }
    RationalMatrix Q(n, RationalVector(n, Rational(0)));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        long s = 0;
        for (std::size_t k = 0; k < n; ++k) s += M[k][a] * M[k][b];
        Q[a][b] = s;
      }
    }
    return Q;
  }

  RationalVector int_vector(std::size_t n, long lo, long hi) {
    RationalVector v(n);
    for (auto& x : v) x = uniform(lo, hi);
    return v;
  }

  /// n <= 3, r in {2,3}, entries in [-10,10], box at most 5 per coordinate.
  /// Draws until validation passes.
  Instance instance() {
    for (;;) {
      Instance inst = draw();
      if (validate_instance(inst).empty()) return inst;
    }
  }

 private:
  Instance draw() {
    Instance inst;
    inst.n = static_cast<std::size_t>(uniform(1, 3));
    inst.r = static_cast<std::size_t>(uniform(2, 3));
    const auto n = inst.n;
    for (std::size_t i = 0; i < inst.r; ++i) {
      inst.quadratics.push_back({psd_matrix(n, 3), int_vector(n, -10, 10)});
    }
    for (int s = 0; s < 2; ++s) {
      FractionalObjective psi;
      psi.p = int_vector(n, -10, 10);
      psi.q = int_vector(n, -10, 10);
      psi.alpha = uniform(-10, 10);
      psi.beta = uniform(1, 10);
      inst.fractionals.push_back(std::move(psi));
    }
    const long extra = uniform(1, 2);
    for (long k = 0; k < extra; ++k) {
      inst.polyhedron.A.push_back(int_vector(n, -10, 10));
      inst.polyhedron.b.emplace_back(uniform(0, 10));
    }
    for (std::size_t j = 0; j < n; ++j) {
      RationalVector row(n, Rational(0));
      row[j] = 1;
      inst.polyhedron.A.push_back(std::move(row));
      inst.polyhedron.b.emplace_back(uniform(1, 5));
    }
    return inst;
  }

  std::mt19937_64 rng_;
};

}  // namespace blf::testing

#endif  // BLF_TESTS_RANDOM_INSTANCES_HPP
