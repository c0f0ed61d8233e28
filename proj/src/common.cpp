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

#include "corona/error.hpp"
#include "corona/interval.hpp"
#include "corona/points.hpp"
#include "corona/space.hpp"

namespace corona {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kPointOutsideSpace: return "POINT_OUTSIDE_SPACE";
    case ErrorCode::kNoBackend: return "NO_BACKEND";
    case ErrorCode::kUnknownSpace: return "UNKNOWN_SPACE";
    case ErrorCode::kBadParams: return "BAD_PARAMS";
    case ErrorCode::kEpsTooLarge: return "EPS_TOO_LARGE";
    case ErrorCode::kResolutionTooLow: return "RESOLUTION_TOO_LOW";
    case ErrorCode::kFamilyCenterMismatch: return "FAMILY_CENTER_MISMATCH";
    case ErrorCode::kUnsupportedFormat: return "UNSUPPORTED_FORMAT";
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN_ERROR";
}

const char* bound_kind_name(BoundKind k) {
  switch (k) {
    case BoundKind::kAnalytic: return "ANALYTIC";
    case BoundKind::kWitness: return "WITNESS";
    case BoundKind::kSampled: return "SAMPLED";
  }
  return "UNKNOWN";
}

const char* point_kind_name(PointKind k) {
  switch (k) {
    case PointKind::kPlanar: return "PLANAR";
    case PointKind::kScalarPoint: return "SCALAR_POINT";
    case PointKind::kSparseSeq: return "SPARSE_SEQ";
    case PointKind::kPlFunction: return "PL_FUNCTION";
    case PointKind::kFiniteLabel: return "FINITE_LABEL";
  }
  return "UNKNOWN";
}

const char* witness_expectation_name(WitnessExpectation e) {
  switch (e) {
    case WitnessExpectation::kViolatesWcp: return "VIOLATES_WCP";
    case WitnessExpectation::kSatisfiesWcp: return "SATISFIES_WCP";
    case WitnessExpectation::kUnknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

PointKind kind_of(const Point& p) {
  if (std::holds_alternative<PlanarPoint>(p)) return PointKind::kPlanar;
  if (std::holds_alternative<Rational>(p)) return PointKind::kScalarPoint;
  if (std::holds_alternative<SparseSeq>(p)) return PointKind::kSparseSeq;
  if (std::holds_alternative<PLFunction>(p)) return PointKind::kPlFunction;
  return PointKind::kFiniteLabel;
}

std::string point_str(const Point& p) {
  if (const auto* pp = std::get_if<PlanarPoint>(&p)) {
    return "(" + format_double(pp->x) + ", " + format_double(pp->y) + ")";
  }
  if (const auto* r = std::get_if<Rational>(&p)) return to_string(*r);
  if (const auto* s = std::get_if<SparseSeq>(&p)) return s->str();
  if (const auto* f = std::get_if<PLFunction>(&p)) return f->str();
  return "label:" + std::to_string(std::get<Label>(p).value);
}

bool MetricSpace::in_closed_ball(const Point& x, const Rational& t, const Point& y) const {
  if (t < 0) throw Error(ErrorCode::kInvalidArgument, "ball radius must be nonnegative");
  Num d = distance(x, y);
  if (d.is_exact()) return d.rational() <= t;
  return d.as_double() <= to_double(t) + kPlanarTolerance;
}

std::vector<Point> MetricSpace::ratio_witnesses(const Point&, const Rational&, const Rational&,
                                                int, uint64_t) const {
  return {};
}

const WitnessFamily& MetricSpace::family(const std::string& name) const {
  for (const auto& f : families_) {
    if (f.name == name) return f;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "space " + name_ + " has no witness family named " + name);
}

void MetricSpace::check_radius_positive(const Rational& t) const {
  // t = 0 queries are rejected: the corona properties quantify over t > 0.
  if (t <= 0) throw Error(ErrorCode::kInvalidArgument, "ball radius must be positive");
}

}  // namespace corona
