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

// Independent brute-force oracle for the sequence-space ball distance:
// enumerate candidate absorptions a on a fixed rational grid, supported on
// support(y) with 0 <= a_i/y_i <= 1, and minimize the penalty sum subject to
// the budget. Deliberately unaware of the production algorithm.

#ifndef CORONA_TESTS_BUDGET_ORACLE_HPP_
#define CORONA_TESTS_BUDGET_ORACLE_HPP_

#include <algorithm>
#include <vector>

#include "corona/sparse_seq.hpp"

namespace corona::testing {

struct GridCoord {
  int index;
  Rational magnitude;
  std::vector<Rational> levels;  // candidate |a_i| values, grid-aligned
};

inline std::vector<GridCoord> grid_coords(const SparseSeq& y, const Rational& step) {
  std::vector<GridCoord> coords;
  for (const auto& [idx, val] : y.entries()) {
    GridCoord c{idx, rat_abs(val), {}};
    for (Rational level(0); level < c.magnitude; level += step) c.levels.push_back(level);
    c.levels.push_back(c.magnitude);
    coords.push_back(std::move(c));
  }
  return coords;
}

// Plain exhaustive product enumeration; exponential, for tiny supports only.
inline Rational grid_min_naive(const SparseSeq& y, const Rational& t, const Rational& step) {
  std::vector<GridCoord> coords = grid_coords(y, step);
  Rational best(-1);
  std::vector<size_t> pick(coords.size(), 0);
  while (true) {
    Rational cost(0), objective(0);
    for (size_t i = 0; i < coords.size(); ++i) {
      const Rational& level = coords[i].levels[pick[i]];
      cost += phi(coords[i].index, level);
      objective += phi(coords[i].index, coords[i].magnitude - level);
    }
    if (cost <= t && (best < 0 || objective < best)) best = objective;
    size_t d = 0;
    while (d < coords.size() && ++pick[d] == coords[d].levels.size()) pick[d++] = 0;
    if (d == coords.size()) break;
  }
  return best < 0 ? Rational(0) : best;
}

// Same mathematical result as the naive product scan (verified against it on
// small cases): the last coordinate is answered from a budget-sorted
// prefix-minimum table instead of a third nested loop.
inline Rational grid_min(const SparseSeq& y, const Rational& t, const Rational& step) {
  std::vector<GridCoord> coords = grid_coords(y, step);
  if (coords.empty()) return Rational(0);

  const GridCoord& last = coords.back();
  std::vector<std::pair<Rational, Rational>> table;  // (cost, objective)
  for (const Rational& level : last.levels) {
    table.emplace_back(phi(last.index, level), phi(last.index, last.magnitude - level));
  }
  std::sort(table.begin(), table.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (size_t i = 1; i < table.size(); ++i) {
    table[i].second = rat_min(table[i].second, table[i - 1].second);
  }

  Rational best(-1);
  std::vector<size_t> pick(coords.size() - 1, 0);
  while (true) {
    Rational cost(0), objective(0);
    for (size_t i = 0; i + 1 < coords.size(); ++i) {
      const Rational& level = coords[i].levels[pick[i]];
      cost += phi(coords[i].index, level);
      objective += phi(coords[i].index, coords[i].magnitude - level);
    }
    if (cost <= t) {
      Rational remaining = t - cost;
      // Largest affordable entry of the sorted table.
      size_t lo = 0, hi = table.size();
      while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        if (table[mid].first <= remaining) {
          lo = mid + 1;
        } else {
          hi = mid;
        }
      }
      if (lo > 0) {
        Rational total = objective + table[lo - 1].second;
        if (best < 0 || total < best) best = total;
      }
    }
    if (pick.empty()) break;
    size_t d = 0;
    while (d < pick.size() && ++pick[d] == coords[d].levels.size()) pick[d++] = 0;
    if (d == pick.size()) break;
  }
  return best < 0 ? Rational(0) : best;
}

}  // namespace corona::testing

#endif  // CORONA_TESTS_BUDGET_ORACLE_HPP_
