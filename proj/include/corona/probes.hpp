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

#ifndef CORONA_PROBES_HPP_
#define CORONA_PROBES_HPP_

#include "corona/hyperspace.hpp"
#include "corona/reports.hpp"
#include "corona/space.hpp"

namespace corona {

// Metric axiom check over all pairs and triples of the sample; exact on
// exact spaces. Failures become report rows, never exceptions.
ProbeReport check_metric_axioms(const MetricSpace& space, const std::vector<Point>& sample);

// Falsification probe for the weak corona property along a witness family.
// VIOLATION_WITNESSED requires d(x, y_k) -> t and certified ball-distance
// lower bounds that stay bounded away from zero. A NO_VIOLATION_FOUND verdict
// is explicitly not a proof that the property holds.
WCPReport wcp_probe(const MetricSpace& space, const WitnessFamily& family, int k_max);
WCPReport wcp_probe(const MetricSpace& space, const std::string& family_name, int k_max);

struct RatioResult {
  CertifiedInterval ratio;
  bool upper_is_sup = false;  // true only for analytic/exhaustive backends
};

// Encloses sup over y with d(x,y) <= t + eps of ball_distance(x,t,y) / eps.
RatioResult corona_ratio(const MetricSpace& space, const Point& x, const Rational& t,
                         const Rational& eps, int resolution, uint64_t seed);

struct ScanParams {
  std::vector<Rational> t_grid;
  std::vector<Rational> eps_grid;
  int resolution = 256;
  uint64_t seed = 0;
  int divergence_factor = 5;
};

// Fills per-t corona constants from ratio maxima (eps clipped below the
// space's eps0 hook where one exists) and flags sustained growth across the
// t grid. Never claims the corona property holds.
CoronaEstimate scp_scan(const MetricSpace& space, const ScanParams& params);

struct CrosscheckParams {
  int pairs = 64;
  std::vector<Rational> t_grid;
  std::vector<Rational> eps_grid;
  int resolution = 128;
  uint64_t seed = 0;
  double tolerance = 0.25;
};

// Compares the corona constant estimate C with the ball-map Lipschitz
// estimate L: PASS iff C <= L(1+tol) and L <= 2C(1+tol), or both diverge.
ProbeReport theorem2_crosscheck(const MetricSpace& space, const CrosscheckParams& params);

}  // namespace corona

#endif  // CORONA_PROBES_HPP_
