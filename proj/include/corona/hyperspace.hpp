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

#ifndef CORONA_HYPERSPACE_HPP_
#define CORONA_HYPERSPACE_HPP_

#include <utility>
#include <vector>

#include "corona/reports.hpp"
#include "corona/space.hpp"

namespace corona {

// Hausdorff distance between the two finite point sets, exact on exact
// spaces; planar sets go through the SIMD point-set kernels.
Num hausdorff(const MetricSpace& space, const FiniteSet& a, const FiniteSet& b);

// max over the sample of the certified ball distance to B(x, t): the exact
// one-sided deviation Theorem-style probes need when the balls are nested.
struct DirectedDeviation {
  Num estimate;  // max of upper bounds
  Num lower;     // max of certified lower bounds
};
DirectedDeviation directed_ball_deviation(const MetricSpace& space, const FiniteSet& sample,
                                          const Point& x, const Rational& t);

std::vector<Rational> default_eps_schedule(const Rational& t);  // t/2^j, j = 1..12

struct ContinuityParams {
  Direction direction = Direction::kRight;
  std::vector<Rational> eps_schedule;  // empty: default schedule
  int resolution = 64;
  uint64_t seed = 0;
};

ContinuityReport continuity_probe(const MetricSpace& space, const Point& x, const Rational& t,
                                  const ContinuityParams& params);

using BallQuery = std::pair<Point, Rational>;

// max over pairs of H(ball, ball) / d_inf — a lower estimate of the true
// Lipschitz constant of the ball map.
Num lipschitz_estimate(const MetricSpace& space, const std::vector<std::pair<BallQuery, BallQuery>>& pairs,
                       int resolution, uint64_t seed);

}  // namespace corona

#endif  // CORONA_HYPERSPACE_HPP_
