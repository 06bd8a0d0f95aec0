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

#ifndef BLF_INSTANCE_IO_HPP
#define BLF_INSTANCE_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "blf/instance.hpp"

namespace blf {

/// Malformed document. Line and column are 1-based; 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// YAML document with keys n, r, Q, c, fractional, A, b. Integers are required
/// in Q, c, A and b; p, q, alpha and beta accept "num/den" literals.
/// Throws ParseError (syntax, types, asymmetric Q) or DimensionError.
Instance parse_instance(std::string_view text);

/// Reads and parses a file; I/O failures raise std::runtime_error.
Instance load_instance(const std::filesystem::path& path);

std::string render_instance(const Instance& inst);

}  // namespace blf

#endif  // BLF_INSTANCE_IO_HPP
