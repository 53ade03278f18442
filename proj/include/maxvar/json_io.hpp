// Copyright 2026 The maxvar Authors
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

#ifndef MAXVAR_JSON_IO_HPP
#define MAXVAR_JSON_IO_HPP

#include "maxvar/quadratic.hpp"
#include "maxvar/rational.hpp"
#include "maxvar/sequence.hpp"
#include "maxvar/step_function.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <variant>

namespace maxvar {

using Json = nlohmann::ordered_json;

inline std::string json_rat(const Rational& r) { return to_string(r); }

inline Rational rat_from_json(const Json& j, const char* field) {
  if (!j.is_string())
    throw std::runtime_error(std::string("field '") + field + "': expected rational string");
  return parse_rational(j.get<std::string>());
}

inline Json to_json(const StepFunction& f) {
  Json j;
  j["a"] = json_rat(f.left_tail);
  j["b"] = json_rat(f.right_tail);
  j["breakpoints"] = Json::array();
  for (const auto& t : f.breakpoints) j["breakpoints"].push_back(json_rat(t));
  j["values"] = Json::array();
  for (const auto& v : f.values) j["values"].push_back(json_rat(v));
  return j;
}

inline StepFunction step_from_json(const Json& j) {
  StepFunction f;
  for (const char* field : {"a", "b", "breakpoints", "values"})
    if (!j.contains(field))
      throw std::runtime_error(std::string("StepFunction: missing field '") + field + "'");
  f.left_tail = rat_from_json(j.at("a"), "a");
  f.right_tail = rat_from_json(j.at("b"), "b");
  if (!j.at("breakpoints").is_array())
    throw std::runtime_error("field 'breakpoints': expected array");
  if (!j.at("values").is_array()) throw std::runtime_error("field 'values': expected array");
  for (const auto& t : j.at("breakpoints")) f.breakpoints.push_back(rat_from_json(t, "breakpoints"));
  for (const auto& v : j.at("values")) f.values.push_back(rat_from_json(v, "values"));
  f.validate();
  return f;
}

inline Json to_json(const BVSequence& g) {
  Json j;
  j["a"] = json_rat(g.left_tail);
  j["b"] = json_rat(g.right_tail);
  j["offset"] = g.offset;
  j["core"] = Json::array();
  for (const auto& v : g.core) j["core"].push_back(json_rat(v));
  return j;
}

inline BVSequence seq_from_json(const Json& j) {
  BVSequence g;
  for (const char* field : {"a", "b", "offset", "core"})
    if (!j.contains(field))
      throw std::runtime_error(std::string("BVSequence: missing field '") + field + "'");
  g.left_tail = rat_from_json(j.at("a"), "a");
  g.right_tail = rat_from_json(j.at("b"), "b");
  if (!j.at("offset").is_number_integer())
    throw std::runtime_error("field 'offset': expected integer");
  g.offset = j.at("offset").get<long long>();
  if (!j.at("core").is_array()) throw std::runtime_error("field 'core': expected array");
  for (const auto& v : j.at("core")) g.core.push_back(rat_from_json(v, "core"));
  return g;
}

using Instance = std::variant<StepFunction, BVSequence>;

/// Schema detection: step functions carry "breakpoints", sequences "offset".
inline Instance instance_from_json(const Json& j) {
  if (j.contains("breakpoints")) return step_from_json(j);
  if (j.contains("offset") || j.contains("core")) return seq_from_json(j);
  throw std::runtime_error("instance: expected 'breakpoints' (step function) or 'offset'/'core' (sequence)");
}

inline Json to_json(const Instance& inst) {
  return std::visit([](const auto& v) { return to_json(v); }, inst);
}

inline Json to_json(const SurdSum& s) {
  if (auto r = s.as_rational()) return Json(json_rat(*r));
  Json j;
  j["rational"] = json_rat(s.rational_part());
  j["surds"] = Json::array();
  for (const auto& [d, c] : s.surd_terms()) {
    Json t;
    t["coef"] = json_rat(c);
    t["d"] = d.str();
    j["surds"].push_back(t);
  }
  j["approx"] = s.to_decimal_string();
  return j;
}

}  // namespace maxvar

#endif  // MAXVAR_JSON_IO_HPP
