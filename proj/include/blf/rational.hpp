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

#ifndef BLF_RATIONAL_HPP
#define BLF_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace blf {

/// Arbitrary precision rational. Every quantity in the solver is exact.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;
using IntPoint = std::vector<std::int64_t>;

/// Parses "a", "-a" or "a/b". Returns nullopt on malformed text or b == 0.
std::optional<Rational> parse_rational(std::string_view text);

/// "a" for integers, "a/b" otherwise (canonical form, b > 0).
std::string to_string(const Rational& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

/// Largest integer not greater than value.
Rational floor(const Rational& value);

/// Distance to the nearest integer, in [0, 1/2].
Rational fractionality(const Rational& value);

RationalVector to_rational(const IntPoint& point);

/// Requires every coordinate integral and representable in 64 bits.
IntPoint to_int_point(const RationalVector& point);

bool all_integer(const RationalVector& point);

}  // namespace blf

#endif  // BLF_RATIONAL_HPP
