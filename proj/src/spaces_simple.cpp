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

#include "corona/builtin_spaces.hpp"
#include "corona/error.hpp"
#include "corona/rng.hpp"

namespace corona {

namespace {

class DiscreteSpace final : public MetricSpace {
 public:
  explicit DiscreteSpace(int labels)
      : MetricSpace("discrete", PointKind::kFiniteLabel,
                    {.boundedly_compact = true, .translation_invariant = false, .is_tvs = false},
                    /*exact=*/true),
        labels_(labels) {
    if (labels < 2) throw Error(ErrorCode::kBadParams, "discrete space needs >= 2 labels");
    register_family({.name = "far_label",
                     .center = Label{0},
                     .t = Rational(1),
                     .generator = [](int) -> Point { return Label{1}; },
                     .expected = WitnessExpectation::kSatisfiesWcp});
  }

  bool contains(const Point& p) const override {
    const auto* l = std::get_if<Label>(&p);
    return l != nullptr && l->value >= 0 && l->value < labels_;
  }

  Num distance(const Point& p, const Point& q) const override {
    require_member(p);
    require_member(q);
    return Num(Rational(std::get<Label>(p) == std::get<Label>(q) ? 0 : 1));
  }

  CertifiedInterval ball_distance(const Point& x, const Rational& t,
                                  const Point& y) const override {
    check_radius_positive(t);
    if (in_closed_ball(x, t, y)) return CertifiedInterval::zero_exact(true);
    // y is outside, so t < 1 and the ball is just {x}.
    return CertifiedInterval::exact(Num(Rational(1)));
  }

  FiniteSet sample_closed_ball(const Point& x, const Rational& t, int resolution,
                               uint64_t) const override {
    check_radius_positive(t);
    require_member(x);
    if (resolution < 1) throw Error(ErrorCode::kResolutionTooLow, "resolution must be >= 1");
    FiniteSet out;
    if (t >= 1) {
      for (int v = 0; v < labels_; ++v) out.points.push_back(Label{v});
    } else {
      out.points.push_back(x);  // exhaustive: the ball is the singleton {x}
    }
    out.covering_radius = Num(Rational(0));
    return out;
  }

  std::optional<CertifiedInterval> analytic_corona_ratio(const Point&, const Rational& t,
                                                         const Rational& eps) const override {
    if (t >= 1 || t + eps < 1) return CertifiedInterval::zero_exact(true);
    // Some y at distance 1 <= t + eps lies outside the ball {x}.
    return CertifiedInterval::exact(Num(Rational(1) / eps));
  }

  Eps0Hook cp_eps0(const Rational& t) const override {
    if (t < 1) return Eps0Hook::exact(Rational(1) - t);
    return Eps0Hook::unbounded();
  }

  Point zero_point() const override { return Label{0}; }

  Point random_point(uint64_t seed, int index) const override {
    SplitMix64 rng(mix_seed(seed, static_cast<uint64_t>(index)));
    return Label{static_cast<int>(rng.next_long(0, labels_ - 1))};
  }

  int labels() const { return labels_; }

 private:
  void require_member(const Point& p) const {
    if (!contains(p)) throw Error(ErrorCode::kPointOutsideSpace, "label outside discrete space");
  }

  int labels_;
};

// The real line with d(x,y) = |x-y| / (1 + |x-y|). Balls of radius t < 1 are
// the intervals [x - t/(1-t), x + t/(1-t)]; for t >= 1 the ball is everything.
class BoundedLine final : public MetricSpace {
 public:
  BoundedLine()
      : MetricSpace("bounded_line", PointKind::kScalarPoint,
                    {.boundedly_compact = false, .translation_invariant = true, .is_tvs = false},
                    /*exact=*/true) {
    // Radii approaching 1 from below; drives the corona-ratio divergence scan.
    register_family({.name = "shrink",
                     .center = Rational(0),
                     .t = Rational(9, 10),
                     .generator =
                         [](int k) -> Point {
                           Rational eps(1, 20 * k);
                           Rational s = Rational(9, 10) + eps;
                           return Rational(s / (1 - s));
                         },
                     .expected = WitnessExpectation::kUnknown});
  }

  bool contains(const Point& p) const override { return std::holds_alternative<Rational>(p); }

  Num distance(const Point& p, const Point& q) const override {
    Rational u = rat_abs(std::get<Rational>(p) - std::get<Rational>(q));
    return Num(Rational(u / (1 + u)));
  }

  static Rational ambient_radius(const Rational& t) { return t / (1 - t); }

  CertifiedInterval ball_distance(const Point& x, const Rational& t,
                                  const Point& y) const override {
    check_radius_positive(t);
    if (t >= 1) return CertifiedInterval::zero_exact(true);
    Rational u = rat_abs(std::get<Rational>(y) - std::get<Rational>(x));
    Rational edge = ambient_radius(t);
    if (u <= edge) return CertifiedInterval::zero_exact(true);
    Rational gap = u - edge;  // nearest ball point is the interval endpoint
    return CertifiedInterval::exact(Num(Rational(gap / (1 + gap))));
  }

  FiniteSet sample_closed_ball(const Point& x, const Rational& t, int resolution,
                               uint64_t) const override {
    check_radius_positive(t);
    if (resolution < 2) throw Error(ErrorCode::kResolutionTooLow, "need at least 2 samples");
    const Rational& cx = std::get<Rational>(x);
    FiniteSet out;
    if (t >= 1) {
      // The ball is the whole line; an interval sweep cannot certify covering.
      Rational lo = cx - 50;
      Rational step = Rational(100) / (resolution - 1);
      for (int i = 0; i < resolution; ++i) out.points.push_back(Rational(lo + step * i));
      return out;
    }
    Rational edge = ambient_radius(t);
    Rational lo = cx - edge;
    Rational step = (edge * 2) / (resolution - 1);
    for (int i = 0; i < resolution; ++i) out.points.push_back(Rational(lo + step * i));
    Rational half = step / 2;
    out.covering_radius = Num(Rational(half / (1 + half)));
    return out;
  }

  std::optional<CertifiedInterval> analytic_corona_ratio(const Point&, const Rational& t,
                                                         const Rational& eps) const override {
    if (t >= 1) return CertifiedInterval::zero_exact(true);
    if (t + eps < 1) {
      // Worst y is the endpoint of the outer interval.
      Rational gap = eps / ((1 - t - eps) * (1 - t));
      Rational ratio = gap / (1 + gap) / eps;
      return CertifiedInterval::exact(Num(std::move(ratio)));
    }
    // t + eps >= 1 admits arbitrarily far y; the quotient's sup is 1/eps,
    // approached but not attained.
    Rational far = ambient_radius(t) + 100;
    Rational gap = far - ambient_radius(t);
    Rational witness = gap / (1 + gap) / eps;
    return CertifiedInterval{Num(std::move(witness)), Num(Rational(1) / eps),
                             BoundKind::kWitness, BoundKind::kAnalytic};
  }

  Point zero_point() const override { return Rational(0); }

  Point random_point(uint64_t seed, int index) const override {
    SplitMix64 rng(mix_seed(seed, static_cast<uint64_t>(index)));
    return Rational(rng.next_rational(64, 16));
  }
};

}  // namespace

SpaceHandle make_discrete_space(int labels) { return std::make_shared<DiscreteSpace>(labels); }

SpaceHandle make_bounded_line() { return std::make_shared<BoundedLine>(); }

}  // namespace corona
