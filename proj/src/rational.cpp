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

#include "blf/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace blf {

namespace {

bool is_integer_literal(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    text.remove_prefix(1);
  }
  return !text.empty() &&
         std::all_of(text.begin(), text.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_integer_literal(num_text)) return std::nullopt;
  std::string num_str(num_text);
  if (num_str.front() == '+') num_str.erase(0, 1);
  mpz_class num(num_str, 10);
  mpz_class den = 1;
  if (slash != std::string_view::npos) {
    const auto den_text = text.substr(slash + 1);
    if (!is_integer_literal(den_text)) return std::nullopt;
    std::string den_str(den_text);
    if (den_str.front() == '+') den_str.erase(0, 1);
    den = mpz_class(den_str, 10);
    if (den == 0) return std::nullopt;
  }
  Rational value(num, den);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

Rational floor(const Rational& value) {
  mpz_class result;
  mpz_fdiv_q(result.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return Rational(result);
}

Rational fractionality(const Rational& value) {
  const Rational down = value - floor(value);
  const Rational up = 1 - down;
  return down < up ? down : up;
}

RationalVector to_rational(const IntPoint& point) {
  RationalVector out;
  out.reserve(point.size());
  for (auto v : point) out.emplace_back(static_cast<long>(v));
  return out;
}

IntPoint to_int_point(const RationalVector& point) {
  IntPoint out;
  out.reserve(point.size());
  for (const auto& v : point) {
    if (!is_integer(v) || !v.get_num().fits_slong_p()) {
      throw std::invalid_argument("coordinate " + to_string(v) +
                                  " is not a 64-bit integer");
    }
    out.push_back(v.get_num().get_si());
  }
  return out;
}

bool all_integer(const RationalVector& point) {
  return std::all_of(point.begin(), point.end(),
                     [](const Rational& v) { return is_integer(v); });
}

}  // namespace blf
