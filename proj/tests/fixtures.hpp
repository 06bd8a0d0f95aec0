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

#ifndef BLF_TESTS_FIXTURES_HPP
#define BLF_TESTS_FIXTURES_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "blf/instance.hpp"
#include "blf/rational.hpp"

namespace blf::testing {

inline Rational q(const char* text) { return *parse_rational(text); }

inline RationalVector vec(std::initializer_list<long> values) {
  RationalVector out;
  for (long v : values) out.emplace_back(v);
  return out;
}

inline RationalMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  RationalMatrix out;
  for (const auto& row : rows) out.push_back(vec(row));
  return out;
}

/// Three convex quadratics, two fractional objectives, two rows.
inline Instance worked_example() {
  Instance inst;
  inst.n = 3;
  inst.r = 3;
  inst.quadratics = {
      {mat({{50, 43, 20}, {43, 42, 20}, {20, 20, 11}}), vec({-94, -74, -37})},
      {mat({{33, 22, 25}, {22, 21, 18}, {25, 18, 42}}), vec({6, 90, -37})},
      {mat({{50, 17, 43}, {17, 6, 15}, {43, 15, 38}}), vec({36, -20, -70})},
  };
  inst.fractionals = {
      {vec({1, -4, -1}), vec({1, 0, 1}), Rational(-7), Rational(3)},
      {vec({-2, 1, -3}), vec({1, 1, 1}), Rational(-2), Rational(2)},
  };
  inst.polyhedron = {mat({{1, 1, 1}, {-1, 2, 3}}), vec({3, 6})};
  return inst;
}

/// One variable pinned to zero by x1 <= 0.
inline Instance single_point(std::size_t r = 2) {
  Instance inst;
  inst.n = 1;
  inst.r = r;
  for (std::size_t i = 0; i < r; ++i) {
    inst.quadratics.push_back({mat({{0}}), vec({static_cast<long>(i) + 1})});
  }
  inst.fractionals = {
      {vec({1}), vec({0}), Rational(0), Rational(1)},
      {vec({-1}), vec({1}), Rational(1), Rational(2)},
  };
  inst.polyhedron = {mat({{1}}), vec({0})};
  return inst;
}

inline std::vector<IntPoint> points(std::initializer_list<IntPoint> pts) {
  return {pts.begin(), pts.end()};
}

}  // namespace blf::testing

#endif  // BLF_TESTS_FIXTURES_HPP
