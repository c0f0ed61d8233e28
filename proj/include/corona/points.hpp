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

#ifndef CORONA_POINTS_HPP_
#define CORONA_POINTS_HPP_

#include <cmath>
#include <string>
#include <variant>

#include "corona/pl_function.hpp"
#include "corona/rational.hpp"
#include "corona/sparse_seq.hpp"

namespace corona {

struct PlanarPoint {
  double x = 0.0;
  double y = 0.0;

  double norm() const { return std::hypot(x, y); }
  double distance_to(const PlanarPoint& o) const { return std::hypot(x - o.x, y - o.y); }
  bool operator==(const PlanarPoint& o) const { return x == o.x && y == o.y; }
};

struct Label {
  int value = 0;
  bool operator==(const Label& o) const { return value == o.value; }
};

enum class PointKind { kPlanar, kScalarPoint, kSparseSeq, kPlFunction, kFiniteLabel };

const char* point_kind_name(PointKind k);

using Point = std::variant<PlanarPoint, Rational, SparseSeq, PLFunction, Label>;

PointKind kind_of(const Point& p);
std::string point_str(const Point& p);

}  // namespace corona

#endif  // CORONA_POINTS_HPP_
