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

#ifndef CORONA_REPORTS_HPP_
#define CORONA_REPORTS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "corona/interval.hpp"
#include "corona/points.hpp"

namespace corona {

inline constexpr const char* kViolationWitnessed = "VIOLATION_WITNESSED";
inline constexpr const char* kNoViolationFound = "NO_VIOLATION_FOUND";
inline constexpr const char* kBoundVerified = "BOUND_VERIFIED";
inline constexpr const char* kContinuous = "CONTINUOUS_UP_TO_SAMPLING";
inline constexpr const char* kDiscontinuityWitnessed = "DISCONTINUITY_WITNESSED";

// Common report container; the canonical JSON schema is
// {"probe", "space", "params", "rows", "verdict", "gap", "seed"} with
// rationals serialized as "p/q" strings.
struct ProbeReport {
  std::string probe;
  std::string space;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::vector<nlohmann::ordered_json> rows;
  std::string verdict;
  std::optional<Num> gap;
  uint64_t seed = 0;

  // Optional scalar series for SVG emission.
  std::string series_x_label;
  std::string series_y_label;
  std::vector<std::pair<double, double>> series;
};

struct WCPRow {
  int k = 0;
  Num distance;
  CertifiedInterval ball;
};

struct WCPReport {
  std::string space;
  std::string family;
  Rational t;
  int k_max = 0;
  bool limit_reached = false;
  std::vector<WCPRow> rows;
  std::string verdict;
  std::optional<Num> gap;
  uint64_t seed = 0;

  ProbeReport to_probe_report() const;
};

enum class Direction { kRight, kLeft };
const char* direction_name(Direction d);

struct ContinuityReport {
  std::string space;
  Rational t;
  Direction direction = Direction::kRight;
  std::vector<Rational> eps_schedule;
  std::vector<Num> h_values;  // estimate per eps (sampled sup)
  std::vector<Num> h_lower;   // certified lower bound per eps
  std::string verdict;
  std::optional<Num> witness_gap;
  int resolution = 0;
  uint64_t seed = 0;

  ProbeReport to_probe_report() const;
};

struct CoronaCell {
  Rational eps;
  CertifiedInterval ratio;
  bool upper_is_sup = false;
};

struct CoronaPerT {
  Rational t;
  Num c_of_t;
  std::optional<Rational> eps0;  // set when the space exposes an exact hook
  std::vector<CoronaCell> cells;
};

struct CoronaEstimate {
  std::string space;
  std::vector<CoronaPerT> per_t;
  Num global_c;
  bool divergence_flag = false;
  int divergence_factor = 5;
  uint64_t seed = 0;

  ProbeReport to_probe_report() const;
};

}  // namespace corona

#endif  // CORONA_REPORTS_HPP_
