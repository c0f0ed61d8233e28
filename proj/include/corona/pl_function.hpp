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

#ifndef CORONA_PL_FUNCTION_HPP_
#define CORONA_PL_FUNCTION_HPP_

#include <string>
#include <utility>
#include <vector>

#include "corona/rational.hpp"

namespace corona {

// Continuous piecewise-linear function over exact rationals: linear between
// strictly increasing breakpoints, constant outside the breakpoint range.
class PLFunction {
 public:
  using Breakpoint = std::pair<Rational, Rational>;  // (x, f(x))

  // Requires at least one breakpoint, strictly increasing abscissae.
  explicit PLFunction(std::vector<Breakpoint> points);

  static PLFunction constant(const Rational& value);

  const std::vector<Breakpoint>& breakpoints() const { return points_; }

  Rational eval(const Rational& x) const;

  PLFunction operator+(const PLFunction& o) const;
  PLFunction operator-(const PLFunction& o) const;
  PLFunction scaled(const Rational& factor) const;
  PLFunction negated() const { return scaled(Rational(-1)); }

  static PLFunction pointwise_min(const PLFunction& a, const PLFunction& b);
  static PLFunction pointwise_max(const PLFunction& a, const PLFunction& b);
  PLFunction abs_value() const { return pointwise_max(*this, negated()); }

  // sup over all of R of |f| (attained at a breakpoint or a constant tail).
  Rational sup_abs() const;
  // sup over [lo, hi] of |f|, lo <= hi.
  Rational sup_abs_on(const Rational& lo, const Rational& hi) const;
  // Largest |x| over breakpoints.
  Rational max_breakpoint_abs() const;

  // Equality as functions (representations may differ).
  bool equals(const PLFunction& o) const;
  bool operator==(const PLFunction& o) const { return equals(o); }

  // Drops interior breakpoints that are collinear with their neighbours.
  PLFunction simplified() const;

  std::string str() const;

 private:
  std::vector<Breakpoint> points_;
};

}  // namespace corona

#endif  // CORONA_PL_FUNCTION_HPP_
