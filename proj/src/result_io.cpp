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

#include "blf/result_io.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <nlohmann/json.hpp>
#include <sstream>

#include "blf/instance_io.hpp"

namespace blf {

namespace {

std::vector<IntPoint> sorted(std::vector<IntPoint> points) {
  std::sort(points.begin(), points.end());
  return points;
}

void write_points(YAML::Emitter& out, const char* key,
                  const std::optional<std::vector<IntPoint>>& points) {
  if (!points) return;
  out << YAML::Key << key << YAML::Value << YAML::BeginSeq;
  for (const auto& p : sorted(*points)) out << YAML::Flow << p;
  out << YAML::EndSeq;
}

template <typename T>
void write_scalar(YAML::Emitter& out, const char* key, const std::optional<T>& value) {
  if (value) out << YAML::Key << key << YAML::Value << *value;
}

[[noreturn]] void fail(const YAML::Node& node, const std::string& message) {
  const auto mark = node.Mark();
  if (mark.is_null()) throw ParseError(message, 0, 0);
  throw ParseError(message, static_cast<std::size_t>(mark.line) + 1,
                   static_cast<std::size_t>(mark.column) + 1);
}

template <typename T>
std::optional<T> read_scalar(const YAML::Node& root, const char* key) {
  const auto node = root[key];
  if (!node) return std::nullopt;
  try {
    return node.as<T>();
  } catch (const YAML::Exception&) {
    fail(node, std::string("bad value for '") + key + "'");
  }
}

std::optional<std::vector<IntPoint>> read_points(const YAML::Node& root, const char* key) {
  const auto node = root[key];
  if (!node) return std::nullopt;
  if (!node.IsSequence()) fail(node, std::string("'") + key + "' must be a list");
  try {
    return node.as<std::vector<IntPoint>>();
  } catch (const YAML::Exception&) {
    fail(node, std::string("bad point in '") + key + "'");
  }
}

}  // namespace

ResultDocument make_validate_document(const std::vector<Violation>& violations) {
  ResultDocument doc;
  doc.mode = "validate";
  doc.valid = violations.empty();
  doc.violations.emplace();
  for (const auto& v : violations) {
    doc.violations->push_back(std::string(to_string(v.kind)) + ": " + v.message);
  }
  return doc;
}

ResultDocument make_solve_document(const SolveResult& result) {
  ResultDocument doc;
  doc.mode = "solve";
  doc.complete = result.complete;
  doc.node_count = result.node_count;
  doc.cut_count = result.cut_count;
  doc.t1_runs = result.t1_runs;
  doc.t2_runs = result.t2_runs;
  doc.x_eff = sorted(result.x_eff);
  return doc;
}

ResultDocument make_oracle_document(const ParetoSets& sets) {
  ResultDocument doc;
  doc.mode = "oracle";
  doc.D = sorted(sets.D);
  doc.X_Q = sorted(sets.X_Q);
  doc.X_F = sorted(sets.X_F);
  doc.X_Eff = sorted(sets.X_Eff);
  return doc;
}

ResultDocument make_check_document(const SolveResult& result, const ParetoSets& sets) {
  ResultDocument doc = make_solve_document(result);
  doc.mode = "check";
  doc.X_Eff = sorted(sets.X_Eff);
  doc.agree = *doc.x_eff == *doc.X_Eff;
  return doc;
}

std::string render_result(const ResultDocument& doc) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  out << YAML::Key << "mode" << YAML::Value << doc.mode;
  write_scalar(out, "valid", doc.valid);
  if (doc.violations) {
    out << YAML::Key << "violations" << YAML::Value << YAML::BeginSeq;
    for (const auto& v : *doc.violations) out << YAML::DoubleQuoted << v;
    out << YAML::EndSeq;
  }
  write_scalar(out, "agree", doc.agree);
  write_scalar(out, "complete", doc.complete);
  write_scalar(out, "node_count", doc.node_count);
  write_scalar(out, "cut_count", doc.cut_count);
  write_scalar(out, "t1_runs", doc.t1_runs);
  write_scalar(out, "t2_runs", doc.t2_runs);
  write_points(out, "x_eff", doc.x_eff);
  write_points(out, "D", doc.D);
  write_points(out, "X_Q", doc.X_Q);
  write_points(out, "X_F", doc.X_F);
  write_points(out, "X_Eff", doc.X_Eff);
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

ResultDocument parse_result(std::string_view text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw ParseError(e.msg, static_cast<std::size_t>(e.mark.line) + 1,
                     static_cast<std::size_t>(e.mark.column) + 1);
  }
  if (!root.IsMap()) fail(root, "result document must be a mapping");
  ResultDocument doc;
  const auto mode = read_scalar<std::string>(root, "mode");
  if (!mode) fail(root, "missing key 'mode'");
  doc.mode = *mode;
  doc.valid = read_scalar<bool>(root, "valid");
  if (const auto v = root["violations"]) {
    try {
      doc.violations = v.as<std::vector<std::string>>();
    } catch (const YAML::Exception&) {
      fail(v, "bad value for 'violations'");
    }
  }
  doc.agree = read_scalar<bool>(root, "agree");
  doc.complete = read_scalar<bool>(root, "complete");
  doc.node_count = read_scalar<std::size_t>(root, "node_count");
  doc.cut_count = read_scalar<std::size_t>(root, "cut_count");
  doc.t1_runs = read_scalar<std::size_t>(root, "t1_runs");
  doc.t2_runs = read_scalar<std::size_t>(root, "t2_runs");
  doc.x_eff = read_points(root, "x_eff");
  doc.D = read_points(root, "D");
  doc.X_Q = read_points(root, "X_Q");
  doc.X_F = read_points(root, "X_F");
  doc.X_Eff = read_points(root, "X_Eff");
  return doc;
}

// ---------------------------------------------------------------------------
// Trace

namespace {

using Json = nlohmann::ordered_json;

Json rational_list(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json index_list(const IndexSet& set) {
  Json out = Json::array();
  for (auto j : set) out.push_back(j + 1);
  return out;
}

template <typename T, typename F>
Json optional_json(const std::optional<T>& value, F convert) {
  return value ? convert(*value) : Json(nullptr);
}

Rational rational_from(const Json& j) {
  const auto v = parse_rational(j.get<std::string>());
  if (!v) throw ParseError("bad rational '" + j.get<std::string>() + "'", 0, 0);
  return *v;
}

IndexSet indices_from(const Json& j) {
  IndexSet out;
  for (const auto& v : j) out.push_back(v.get<std::size_t>() - 1);
  return out;
}

}  // namespace

std::string render_trace_event(const TraceEvent& event) {
  Json j;
  j["node"] = event.node;
  j["parent"] = optional_json(event.parent, [](std::size_t p) { return Json(p); });
  j["action"] = to_string(event.action);
  j["point"] = optional_json(event.point, rational_list);
  j["value"] = optional_json(event.value, [](const Rational& v) { return Json(to_string(v)); });
  j["H"] = optional_json(event.H, index_list);
  j["H_prime"] = optional_json(event.H_prime, index_list);
  j["variable"] = optional_json(event.variable, [](std::size_t k) { return Json(k + 1); });
  return j.dump();
}

void write_trace(std::ostream& out, const std::vector<TraceEvent>& trace) {
  for (const auto& ev : trace) out << render_trace_event(ev) << '\n';
}

TraceEvent parse_trace_event(std::string_view line) {
  try {
    const auto j = Json::parse(line);
    TraceEvent ev;
    ev.node = j.at("node").get<std::size_t>();
    if (!j.at("parent").is_null()) ev.parent = j.at("parent").get<std::size_t>();
    const auto action = j.at("action").get<std::string>();
    bool known = false;
    for (int a = 0; a <= static_cast<int>(TraceAction::kFathomed); ++a) {
      if (action == to_string(static_cast<TraceAction>(a))) {
        ev.action = static_cast<TraceAction>(a);
        known = true;
      }
    }
    if (!known) throw ParseError("unknown action '" + action + "'", 0, 0);
    if (!j.at("point").is_null()) {
      ev.point.emplace();
      for (const auto& v : j.at("point")) ev.point->push_back(rational_from(v));
    }
    if (!j.at("value").is_null()) ev.value = rational_from(j.at("value"));
    if (!j.at("H").is_null()) ev.H = indices_from(j.at("H"));
    if (!j.at("H_prime").is_null()) ev.H_prime = indices_from(j.at("H_prime"));
    if (!j.at("variable").is_null()) ev.variable = j.at("variable").get<std::size_t>() - 1;
    return ev;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what(), 0, 0);
  }
}

}  // namespace blf
