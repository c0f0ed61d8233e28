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

#ifndef CORONA_BUILTIN_SPACES_HPP_
#define CORONA_BUILTIN_SPACES_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "corona/seminorm_space.hpp"
#include "corona/space.hpp"

namespace corona {

// Registry of the seven built-in spaces. Params schema (from CLI configs):
//   discrete:          {"labels": int >= 2}            (default 5)
//   seminorm_function: {"c": "harmonic"}                (default)
//                      {"c": {"rule": "geometric", "c0": "p/q", "ratio": "p/q"}}
//                      {"c": {"rule": "table", "values": [...], "tail_ratio": "p/q"}}
//   others take no params.
SpaceHandle make_builtin_space(const std::string& name, const nlohmann::json& params = {});

const std::vector<std::string>& builtin_space_names();

// Direct constructors for tests and tools that need the typed config.
SpaceHandle make_euclidean_plane();
SpaceHandle make_punctured_plane(bool closed_variant);  // false: x1, true: x2
SpaceHandle make_discrete_space(int labels);
SpaceHandle make_bounded_line();
SpaceHandle make_phi_sequence_space();
SpaceHandle make_seminorm_function_space(CSequence c);

// The seminorm config a seminorm_function handle was built with.
const SeminormConfig& seminorm_config_of(const MetricSpace& space);

}  // namespace corona

#endif  // CORONA_BUILTIN_SPACES_HPP_
