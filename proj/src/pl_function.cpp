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

#include "corona/pl_function.hpp"

#include <algorithm>

#include "corona/error.hpp"

namespace corona {

PLFunction::PLFunction(std::vector<Breakpoint> points) : points_(std::move(points)) {
  if (points_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "piecewise-linear function needs a breakpoint");
  }
  for (size_t i = 1; i < points_.size(); ++i) {
    if (!(points_[i - 1].first < points_[i].first)) {
      throw Error(ErrorCode::kInvalidArgument, "breakpoint abscissae must strictly increase");
    }
  }
}

PLFunction PLFunction::constant(const Rational& value) {
  return PLFunction({{Rational(0), value}});
}

Rational PLFunction::eval(const Rational& x) const {
  if (x <= points_.front().first) return points_.front().second;
  if (x >= points_.back().first) return points_.back().second;
  auto it = std::upper_bound(points_.begin(), points_.end(), x,
                             [](const Rational& v, const Breakpoint& b) { return v < b.first; });
  const Breakpoint& hi = *it;
  const Breakpoint& lo = *(it - 1);
  Rational span = hi.first - lo.first;
  return lo.second + (hi.second - lo.second) * (x - lo.first) / span;
}

namespace {

std::vector<Rational> merged_abscissae(const PLFunction& a, const PLFunction& b) {
  std::vector<Rational> xs;
  for (const auto& p : a.breakpoints()) xs.push_back(p.first);
  for (const auto& p : b.breakpoints()) xs.push_back(p.first);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

PLFunction combine_linear(const PLFunction& a, const PLFunction& b, int sign_b) {
  std::vector<PLFunction::Breakpoint> pts;
  for (const Rational& x : merged_abscissae(a, b)) {
    pts.emplace_back(x, a.eval(x) + Rational(sign_b) * b.eval(x));
  }
  return PLFunction(std::move(pts));
}

// min/max need the crossings of a - b inserted as extra breakpoints.
PLFunction combine_extremum(const PLFunction& a, const PLFunction& b, bool take_min) {
  std::vector<Rational> xs = merged_abscissae(a, b);
  std::vector<PLFunction::Breakpoint> pts;
  auto push = [&](const Rational& x) {
    Rational va = a.eval(x);
    Rational vb = b.eval(x);
    Rational v = take_min ? rat_min(va, vb) : rat_max(va, vb);
    pts.emplace_back(x, v);
  };
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) {
      Rational d0 = a.eval(xs[i - 1]) - b.eval(xs[i - 1]);
      Rational d1 = a.eval(xs[i]) - b.eval(xs[i]);
      if ((d0 < 0 && d1 > 0) || (d0 > 0 && d1 < 0)) {
        Rational cross = xs[i - 1] + (xs[i] - xs[i - 1]) * d0 / (d0 - d1);
        push(cross);
      }
    }
    push(xs[i]);
  }
  return PLFunction(std::move(pts));
}

}  // namespace

PLFunction PLFunction::operator+(const PLFunction& o) const { return combine_linear(*this, o, 1); }

PLFunction PLFunction::operator-(const PLFunction& o) const { return combine_linear(*this, o, -1); }

PLFunction PLFunction::scaled(const Rational& factor) const {
  std::vector<Breakpoint> pts = points_;
  for (auto& p : pts) p.second *= factor;
  return PLFunction(std::move(pts));
}

PLFunction PLFunction::pointwise_min(const PLFunction& a, const PLFunction& b) {
  return combine_extremum(a, b, true);
}

PLFunction PLFunction::pointwise_max(const PLFunction& a, const PLFunction& b) {
  return combine_extremum(a, b, false);
}

Rational PLFunction::sup_abs() const {
  Rational best(0);
  for (const auto& p : points_) best = rat_max(best, rat_abs(p.second));
  return best;
}

Rational PLFunction::sup_abs_on(const Rational& lo, const Rational& hi) const {
  if (hi < lo) throw Error(ErrorCode::kInvalidArgument, "empty interval");
  Rational best = rat_max(rat_abs(eval(lo)), rat_abs(eval(hi)));
  for (const auto& p : points_) {
    if (lo < p.first && p.first < hi) best = rat_max(best, rat_abs(p.second));
  }
  return best;
}

Rational PLFunction::max_breakpoint_abs() const {
  return rat_max(rat_abs(points_.front().first), rat_abs(points_.back().first));
}

bool PLFunction::equals(const PLFunction& o) const { return (*this - o).sup_abs() == 0; }

PLFunction PLFunction::simplified() const {
  if (points_.size() <= 2) return *this;
  std::vector<Breakpoint> pts;
  pts.push_back(points_.front());
  for (size_t i = 1; i + 1 < points_.size(); ++i) {
    const Breakpoint& a = pts.back();
    const Breakpoint& b = points_[i];
    const Breakpoint& c = points_[i + 1];
    // b is redundant iff it lies on the segment a-c.
    Rational lhs = (b.second - a.second) * (c.first - a.first);
    Rational rhs = (c.second - a.second) * (b.first - a.first);
    if (lhs != rhs) pts.push_back(b);
  }
  pts.push_back(points_.back());
  return PLFunction(std::move(pts));
}

std::string PLFunction::str() const {
  std::string out = "[";
  for (size_t i = 0; i < points_.size(); ++i) {
    if (i) out += ", ";
    out += "(" + to_string(points_[i].first) + ", " + to_string(points_[i].second) + ")";
  }
  return out + "]";
}

}  // namespace corona
