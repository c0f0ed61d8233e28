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

#ifndef CORONA_SEMINORM_SPACE_HPP_
#define CORONA_SEMINORM_SPACE_HPP_

#include <string>
#include <vector>

#include "corona/pl_function.hpp"
#include "corona/rational.hpp"

namespace corona {

// Weight sequence c_0 >= c_1 >= ... > 0 with certified limit 0, given as a
// closed-form rule. A finite table alone cannot certify the tail, hence the
// mandatory geometric tail rule for table configs.
class CSequence {
 public:
  static CSequence harmonic();                                  // c_n = 1/(n+1)
  static CSequence geometric(Rational c0, Rational ratio);      // c_n = c0 * ratio^n
  static CSequence table(std::vector<Rational> values, Rational tail_ratio);

  Rational at(int n) const;
  // All indices with c_n > threshold; finite and downward closed.
  std::vector<int> indices_above(const Rational& threshold) const;

  const std::string& rule_name() const { return rule_name_; }

 private:
  CSequence() = default;
  std::string rule_name_;
  Rational c0_;
  Rational ratio_;
  std::vector<Rational> table_;
  Rational tail_ratio_;
};

// Metric d(f,g) = sup_n c_n * p_n(f-g) / (1 + p_n(f-g)), p_n = sup on [-n,n].
struct SeminormConfig {
  CSequence c;
};

// Shape of the closed ball B(0, t): p_k(f) <= R_k for every active k.
struct BallProfile {
  Rational t;
  bool whole_space = false;     // t >= c_0: no constraint at all
  std::vector<int> active;      // {k : c_k > t}, downward closed from 0
  std::vector<Rational> radii;  // R_k = t / (c_k - t), increasing in k
  Rational eps0;                // min over active of c_k - t; 0 when inactive

  int n0() const { return active.empty() ? -1 : active.back(); }
};

BallProfile ball_profile(const SeminormConfig& config, const Rational& t);

// max over active k of c_k * eps / ((c_k - t - eps)(c_k - t)).
// Requires 0 < eps < eps0 and a nonempty active set.
Rational m_envelope(const SeminormConfig& config, const Rational& t, const Rational& eps);

Rational seminorm_distance(const SeminormConfig& config, const PLFunction& f,
                           const PLFunction& g);

bool seminorm_in_ball(const SeminormConfig& config, const PLFunction& f, const Rational& t);

// Nearest-point style projection of f into B(0, t). The result is exactly in
// the ball. When f is in B(0, t + eps) with eps < eps0, additionally
//   sup |f - g| <= m_envelope(t, eps),
//   g == f outside [-n0 - 1/2, n0 + 1/2],
//   p_{n0+j}(f - g) == p_{n0}(f - g) for all j >= 1.
PLFunction project_into_ball(const SeminormConfig& config, const PLFunction& f,
                             const Rational& t);

struct FunctionBallDistance {
  Rational lower;  // seminorm-gap bound: max_k c_k q_k/(1+q_k), q_k = max(0, p_k(f) - R_k)
  Rational upper;  // witness bound d(f, project_into_ball(f, t))
};

FunctionBallDistance function_ball_distance(const SeminormConfig& config, const PLFunction& f,
                                            const Rational& t);

}  // namespace corona

#endif  // CORONA_SEMINORM_SPACE_HPP_
