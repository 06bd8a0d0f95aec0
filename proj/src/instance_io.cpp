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

#include "blf/instance_io.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace blf {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(line == 0 ? message
                                   : "line " + std::to_string(line) + ", column " +
                                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

[[noreturn]] void fail(const YAML::Node& node, const std::string& message) {
  const auto mark = node.Mark();
  if (mark.is_null()) throw ParseError(message, 0, 0);
  throw ParseError(message, static_cast<std::size_t>(mark.line) + 1,
                   static_cast<std::size_t>(mark.column) + 1);
}

YAML::Node field(const YAML::Node& map, const char* key) {
  const auto node = map[key];
  if (!node) fail(map, std::string("missing key '") + key + "'");
  return node;
}

Rational rational(const YAML::Node& node, bool integer, const std::string& what) {
  if (!node.IsScalar()) fail(node, what + ": expected a number");
  const auto value = parse_rational(node.Scalar());
  if (!value) fail(node, what + ": '" + node.Scalar() + "' is not a rational literal");
  if (integer && !is_integer(*value)) fail(node, what + ": expected an integer");
  return *value;
}

std::size_t count(const YAML::Node& node, const std::string& what) {
  const auto v = rational(node, true, what);
  if (v < 0) fail(node, what + ": must be nonnegative");
  return v.get_num().get_ui();
}

RationalVector vector(const YAML::Node& node, bool integer, const std::string& what) {
  if (!node.IsSequence()) fail(node, what + ": expected a list");
  RationalVector out;
  for (const auto& item : node) out.push_back(rational(item, integer, what));
  return out;
}

RationalMatrix matrix(const YAML::Node& node, bool integer, const std::string& what) {
  if (!node.IsSequence()) fail(node, what + ": expected a list of rows");
  RationalMatrix out;
  for (const auto& row : node) out.push_back(vector(row, integer, what));
  return out;
}

Instance from_yaml(const YAML::Node& root) {
  if (!root.IsMap()) fail(root, "instance document must be a mapping");
  Instance inst;
  inst.n = count(field(root, "n"), "n");
  inst.r = count(field(root, "r"), "r");

  const auto qs = field(root, "Q");
  const auto cs = field(root, "c");
  if (!qs.IsSequence()) fail(qs, "Q: expected a list of matrices");
  if (!cs.IsSequence()) fail(cs, "c: expected a list of vectors");
  if (qs.size() != cs.size()) fail(cs, "Q and c have different lengths");
  for (std::size_t i = 0; i < qs.size(); ++i) {
    const auto name = "Q" + std::to_string(i + 1);
    QuadraticObjective f{matrix(qs[i], true, name),
                         vector(cs[i], true, "c" + std::to_string(i + 1))};
    if (std::any_of(f.Q.begin(), f.Q.end(),
                    [&](const RationalVector& row) { return row.size() != f.Q.size(); })) {
      fail(qs[i], name + " is not square");
    }
    if (!is_symmetric(f.Q)) fail(qs[i], name + " is not symmetric");
    inst.quadratics.push_back(std::move(f));
  }

  const auto fr = field(root, "fractional");
  if (!fr.IsSequence()) fail(fr, "fractional: expected a list");
  for (std::size_t s = 0; s < fr.size(); ++s) {
    const auto& item = fr[s];
    if (!item.IsMap()) fail(item, "fractional: expected a mapping");
    const auto tag = "psi" + std::to_string(s + 1);
    inst.fractionals.push_back({vector(field(item, "p"), false, tag + ".p"),
                                vector(field(item, "q"), false, tag + ".q"),
                                rational(field(item, "alpha"), false, tag + ".alpha"),
                                rational(field(item, "beta"), false, tag + ".beta")});
  }

  inst.polyhedron.A = matrix(field(root, "A"), true, "A");
  inst.polyhedron.b = vector(field(root, "b"), true, "b");
  check_dimensions(inst);
  return inst;
}

void write_vector(std::ostream& os, const RationalVector& v) {
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << to_string(v[i]);
  os << ']';
}

void write_matrix(std::ostream& os, const RationalMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) os << ", ";
    write_vector(os, m[i]);
  }
  os << ']';
}

}  // namespace

Instance parse_instance(std::string_view text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw ParseError(e.msg, static_cast<std::size_t>(e.mark.line) + 1,
                     static_cast<std::size_t>(e.mark.column) + 1);
  }
  try {
    return from_yaml(root);
  } catch (const YAML::Exception& e) {
    throw ParseError(e.msg, e.mark.is_null() ? 0 : static_cast<std::size_t>(e.mark.line) + 1,
                     e.mark.is_null() ? 0 : static_cast<std::size_t>(e.mark.column) + 1);
  }
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

std::string render_instance(const Instance& inst) {
  std::ostringstream os;
  os << "n: " << inst.n << '\n';
  os << "r: " << inst.r << '\n';
  os << "Q:\n";
  for (const auto& f : inst.quadratics) {
    os << "  - ";
    write_matrix(os, f.Q);
    os << '\n';
  }
  os << "c:\n";
  for (const auto& f : inst.quadratics) {
    os << "  - ";
    write_vector(os, f.c);
    os << '\n';
  }
  os << "fractional:\n";
  for (const auto& psi : inst.fractionals) {
    os << "  - p: ";
    write_vector(os, psi.p);
    os << "\n    q: ";
    write_vector(os, psi.q);
    os << "\n    alpha: " << to_string(psi.alpha) << '\n';
    os << "    beta: " << to_string(psi.beta) << '\n';
  }
  os << "A: ";
  write_matrix(os, inst.polyhedron.A);
  os << "\nb: ";
  write_vector(os, inst.polyhedron.b);
  os << '\n';
  return os.str();
}

}  // namespace blf
