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
#include "corona/probes.hpp"
#include "corona/report_io.hpp"

namespace corona {

namespace {

bool points_equal(const Point& a, const Point& b) {
  if (a.index() != b.index()) return false;
  if (const auto* p = std::get_if<PlanarPoint>(&a)) return *p == std::get<PlanarPoint>(b);
  if (const auto* r = std::get_if<Rational>(&a)) return *r == std::get<Rational>(b);
  if (const auto* s = std::get_if<SparseSeq>(&a)) return *s == std::get<SparseSeq>(b);
  if (const auto* f = std::get_if<PLFunction>(&a)) return *f == std::get<PLFunction>(b);
  return std::get<Label>(a) == std::get<Label>(b);
}

}  // namespace

ProbeReport check_metric_axioms(const MetricSpace& space, const std::vector<Point>& sample) {
  if (sample.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "metric axiom check needs a nonempty sample");
  }
  const int n = static_cast<int>(sample.size());
  const bool exact = space.exact();
  const Num zero = exact ? Num(Rational(0)) : Num(0.0);
  const Num slack = exact ? Num(Rational(0)) : Num(MetricSpace::kPlanarTolerance);

  std::vector<std::vector<Num>> d(n, std::vector<Num>(n, zero));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) d[i][j] = space.distance(sample[i], sample[j]);
  }

  ProbeReport report;
  report.probe = "metric_axioms";
  report.space = space.name();
  report.params["sample_size"] = n;
  long checked_pairs = 0;
  long checked_triples = 0;
  long failures = 0;

  auto record_failure = [&](const std::string& axiom, std::initializer_list<int> idx) {
    ++failures;
    if (report.rows.size() >= 20) return;  // keep reports bounded
    nlohmann::ordered_json row;
    row["axiom"] = axiom;
    nlohmann::ordered_json points = nlohmann::ordered_json::array();
    for (int i : idx) points.push_back(point_str(sample[i]));
    row["points"] = points;
    report.rows.push_back(std::move(row));
  };

  for (int i = 0; i < n; ++i) {
    if (!(d[i][i] == zero)) record_failure("identity_zero", {i});
    for (int j = i + 1; j < n; ++j) {
      ++checked_pairs;
      if (!(d[i][j] == d[j][i])) record_failure("symmetry", {i, j});
      bool same = points_equal(sample[i], sample[j]);
      if (same && !(d[i][j] == zero)) record_failure("identity_zero", {i, j});
      if (!same && !(d[i][j] > zero)) record_failure("identity_positive", {i, j});
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        ++checked_triples;
        if (d[i][k] > d[i][j] + d[j][k] + slack) record_failure("triangle", {i, j, k});
      }
    }
  }

  nlohmann::ordered_json summary;
  summary["checked_pairs"] = checked_pairs;
  summary["checked_triples"] = checked_triples;
  summary["failures"] = failures;
  report.rows.insert(report.rows.begin(), std::move(summary));
  report.verdict = failures == 0 ? kBoundVerified : kViolationWitnessed;
  return report;
}

}  // namespace corona
