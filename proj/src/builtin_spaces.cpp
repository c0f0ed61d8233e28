// Copyright 2026 The corona-lab Authors
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

#include "corona/builtin_spaces.hpp"

#include "corona/error.hpp"

namespace corona {

namespace {

Rational param_rational(const nlohmann::json& j, const std::string& what) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    auto r = parse_rational(j.get<std::string>());
    if (r) return *r;
  }
  throw Error(ErrorCode::kBadParams, what + " must be an integer or a \"p/q\" string");
}

CSequence parse_c_rule(const nlohmann::json& params) {
  if (!params.contains("c")) return CSequence::harmonic();
  const auto& c = params.at("c");
  if (c.is_string()) {
    std::string rule = c.get<std::string>();
    if (rule == "harmonic") return CSequence::harmonic();
    throw Error(ErrorCode::kBadParams, "unknown c rule name: " + rule);
  }
  if (!c.is_object() || !c.contains("rule")) {
    throw Error(ErrorCode::kBadParams, "c must be \"harmonic\" or an object with a rule");
  }
  std::string rule = c.at("rule").get<std::string>();
  if (rule == "harmonic") return CSequence::harmonic();
  if (rule == "geometric") {
    return CSequence::geometric(param_rational(c.at("c0"), "c0"),
                                param_rational(c.at("ratio"), "ratio"));
  }
  if (rule == "table") {
    std::vector<Rational> values;
    for (const auto& v : c.at("values")) values.push_back(param_rational(v, "table value"));
    return CSequence::table(std::move(values), param_rational(c.at("tail_ratio"), "tail_ratio"));
  }
  throw Error(ErrorCode::kBadParams, "unknown c rule: " + rule);
}

}  // namespace

const std::vector<std::string>& builtin_space_names() {
  static const std::vector<std::string> names = {
      "euclidean_plane", "punctured_plane_x1", "closed_punctured_x2", "discrete",
      "bounded_line",    "phi_sequence",       "seminorm_function"};
  return names;
}

SpaceHandle make_builtin_space(const std::string& name, const nlohmann::json& params) {
  if (name == "euclidean_plane") return make_euclidean_plane();
  if (name == "punctured_plane_x1") return make_punctured_plane(false);
  if (name == "closed_punctured_x2") return make_punctured_plane(true);
  if (name == "discrete") {
    int labels = 5;
    if (params.contains("labels")) {
      if (!params.at("labels").is_number_integer()) {
        throw Error(ErrorCode::kBadParams, "labels must be an integer");
      }
      labels = params.at("labels").get<int>();
    }
    return make_discrete_space(labels);
  }
  if (name == "bounded_line") return make_bounded_line();
  if (name == "phi_sequence") return make_phi_sequence_space();
  if (name == "seminorm_function") return make_seminorm_function_space(parse_c_rule(params));
  throw Error(ErrorCode::kUnknownSpace, "no builtin space named " + name);
}

}  // namespace corona
