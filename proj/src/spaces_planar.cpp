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

#include <algorithm>
#include <cmath>
#include <limits>

#include "corona/builtin_spaces.hpp"
#include "corona/error.hpp"
#include "corona/rng.hpp"

namespace corona {

namespace {

constexpr double kTol = MetricSpace::kPlanarTolerance;
const double kPi = std::acos(-1.0);

double planar_t(const Rational& t) { return to_double(t); }

class EuclideanPlane final : public MetricSpace {
 public:
  EuclideanPlane()
      : MetricSpace("euclidean_plane", PointKind::kPlanar,
                    {.boundedly_compact = true, .translation_invariant = true, .is_tvs = true},
                    /*exact=*/false) {
    register_family({.name = "radial",
                     .center = PlanarPoint{0, 0},
                     .t = Rational(1),
                     .generator =
                         [](int k) -> Point {
                           return PlanarPoint{1.0 + 1.0 / k, 0.0};
                         },
                     .expected = WitnessExpectation::kSatisfiesWcp});
  }

  bool contains(const Point& p) const override {
    const auto* pp = std::get_if<PlanarPoint>(&p);
    return pp != nullptr && std::isfinite(pp->x) && std::isfinite(pp->y);
  }

  Num distance(const Point& p, const Point& q) const override {
    return Num(std::get<PlanarPoint>(p).distance_to(std::get<PlanarPoint>(q)));
  }

  CertifiedInterval ball_distance(const Point& x, const Rational& t,
                                  const Point& y) const override {
    check_radius_positive(t);
    double d = std::get<PlanarPoint>(x).distance_to(std::get<PlanarPoint>(y));
    double v = std::max(0.0, d - planar_t(t));
    return CertifiedInterval::exact(Num(v));
  }

  FiniteSet sample_closed_ball(const Point& x, const Rational& t, int resolution,
                               uint64_t) const override;

  std::optional<CertifiedInterval> analytic_corona_ratio(const Point&, const Rational&,
                                                         const Rational&) const override {
    // Worst y sits on the outer sphere: ball distance eps, quotient 1.
    return CertifiedInterval::exact(Num(1.0));
  }

  Eps0Hook cp_eps0(const Rational&) const override { return Eps0Hook::unbounded(); }

  Point zero_point() const override { return PlanarPoint{0, 0}; }

  Point random_point(uint64_t seed, int index) const override {
    SplitMix64 rng(mix_seed(seed, static_cast<uint64_t>(index)));
    return PlanarPoint{rng.next_unit() * 6.0 - 3.0, rng.next_unit() * 6.0 - 3.0};
  }
};

FiniteSet EuclideanPlane::sample_closed_ball(const Point& x, const Rational& t, int resolution,
                                             uint64_t) const {
  check_radius_positive(t);
  if (resolution < 2) throw Error(ErrorCode::kResolutionTooLow, "need at least 2 samples");
  const PlanarPoint c = std::get<PlanarPoint>(x);
  const double radius = planar_t(t);
  const int rings = std::max(2, resolution / 4);
  const int angles = std::max(8, resolution);
  FiniteSet out;
  out.points.push_back(c);
  for (int i = 1; i <= rings; ++i) {
    double r = radius * i / rings;
    for (int j = 0; j < angles; ++j) {
      double a = 2.0 * kPi * j / angles;
      out.points.push_back(PlanarPoint{c.x + r * std::cos(a), c.y + r * std::sin(a)});
    }
  }
  // Radial gap <= t/(2 rings); arc chord <= t * pi / angles.
  out.covering_radius = Num(radius * (0.5 / rings + kPi / angles));
  return out;
}

// Plane with the closed unit half-disk {||p|| <= 1, p.x > 0} removed (open
// variant) or only its interior removed (closed variant, the closure of the
// open one).
class PuncturedPlane final : public MetricSpace {
 public:
  explicit PuncturedPlane(bool closed_variant)
      : MetricSpace(closed_variant ? "closed_punctured_x2" : "punctured_plane_x1",
                    PointKind::kPlanar,
                    {.boundedly_compact = false, .translation_invariant = false, .is_tvs = false},
                    /*exact=*/false),
        closed_(closed_variant) {
    register_family({.name = "tangent_spike",
                     .center = PlanarPoint{0, 0},
                     .t = Rational(1),
                     .generator =
                         [](int k) -> Point {
                           return PlanarPoint{1.0 + 1.0 / k, 0.0};
                         },
                     .expected = closed_variant ? WitnessExpectation::kSatisfiesWcp
                                                : WitnessExpectation::kViolatesWcp});
  }

  bool contains(const Point& p) const override {
    const auto* pp = std::get_if<PlanarPoint>(&p);
    if (pp == nullptr || !std::isfinite(pp->x) || !std::isfinite(pp->y)) return false;
    if (pp->x <= kTol) return true;
    double n = pp->norm();
    return closed_ ? n >= 1.0 - kTol : n > 1.0 + kTol;
  }

  Num distance(const Point& p, const Point& q) const override {
    require_member(p);
    require_member(q);
    return Num(std::get<PlanarPoint>(p).distance_to(std::get<PlanarPoint>(q)));
  }

  CertifiedInterval ball_distance(const Point& x, const Rational& t,
                                  const Point& y) const override;

  FiniteSet sample_closed_ball(const Point& x, const Rational& t, int resolution,
                               uint64_t seed) const override;

  std::vector<Point> ratio_witnesses(const Point& x, const Rational& t, const Rational& eps,
                                     int resolution, uint64_t seed) const override;

  Point zero_point() const override { return PlanarPoint{0, 0}; }

  Point random_point(uint64_t seed, int index) const override {
    SplitMix64 rng(mix_seed(seed, static_cast<uint64_t>(index)));
    for (int attempt = 0;; ++attempt) {
      PlanarPoint p{rng.next_unit() * 8.0 - 4.0, rng.next_unit() * 8.0 - 4.0};
      if (contains(Point{p})) return p;
      if (attempt > 256) return PlanarPoint{-1.0, 0.0};
    }
  }

 private:
  void require_member(const Point& p) const {
    if (!contains(p)) {
      throw Error(ErrorCode::kPointOutsideSpace, "point lies in the removed half-disk");
    }
  }

  // Is an arc point (||p|| = 1, p.x > 0) a limit of feasible points of the
  // open variant inside the ball B(x, t)?
  bool arc_reachable_x1(const PlanarPoint& p, const PlanarPoint& x, double t) const {
    double db = p.distance_to(x);
    if (db <= t - 1e-7) return true;  // interior of the ball: step radially outward
    double cross = (p.x - x.x) * p.y - (p.y - x.y) * p.x;
    if (std::abs(cross) > kTol) return true;  // transversal crossing leaves a wedge
    // Tangent circles: the wedge is empty exactly when the ball sits inside
    // the unit disk (covers the coincident case x = 0, t = 1).
    return std::abs(x.norm() + t - 1.0) > kTol;
  }

  bool accept(const PlanarPoint& p, const PlanarPoint& x, double t) const {
    if (p.x <= kTol) return true;
    double n = p.norm();
    if (closed_) return n >= 1.0 - kTol;
    if (n > 1.0 + kTol) return true;
    if (n < 1.0 - kTol) return false;
    return arc_reachable_x1(p, x, t);
  }

  bool closed_;
};

CertifiedInterval PuncturedPlane::ball_distance(const Point& xp, const Rational& tr,
                                                const Point& yp) const {
  check_radius_positive(tr);
  require_member(xp);
  require_member(yp);
  const PlanarPoint x = std::get<PlanarPoint>(xp);
  const PlanarPoint y = std::get<PlanarPoint>(yp);
  const double t = planar_t(tr);

  double best = std::numeric_limits<double>::infinity();
  auto consider = [&](const PlanarPoint& p) {
    if (p.distance_to(x) > t + kTol) return;
    if (!accept(p, x, t)) return;
    best = std::min(best, y.distance_to(p));
  };

  // Stationary points of the distance on each boundary piece plus all
  // pairwise intersections; the minimum over the feasible ones is the value.
  consider(x);
  double dxy = x.distance_to(y);
  if (dxy <= t + kTol) {
    best = 0.0;  // y itself is feasible
  } else {
    consider(PlanarPoint{x.x + t * (y.x - x.x) / dxy, x.y + t * (y.y - x.y) / dxy});
  }
  consider(PlanarPoint{0.0, std::clamp(y.y, -1.0, 1.0)});
  double ny = y.norm();
  if (ny > kTol) {
    PlanarPoint arc{y.x / ny, y.y / ny};
    if (arc.x >= -kTol) consider(arc);
  }
  // Unit circle meets the query sphere. Concentric (d ~ 0) means either no
  // intersection or coincident circles; both are handled elsewhere.
  {
    double d2 = x.x * x.x + x.y * x.y;
    double d = std::sqrt(d2);
    if (d > kTol) {
      double a = (d2 + 1.0 - t * t) / (2.0 * d);
      double h2 = 1.0 - a * a;
      if (h2 >= -kTol) {
        double h = std::sqrt(std::max(0.0, h2));
        double ux = x.x / d;
        double uy = x.y / d;
        PlanarPoint m{ux * a, uy * a};
        for (double s : {1.0, -1.0}) {
          PlanarPoint p{m.x - s * uy * h, m.y + s * ux * h};
          if (p.x >= -kTol) consider(p);
        }
      }
    }
  }
  // Query sphere meets the line {p.x = 0}.
  if (std::abs(x.x) <= t) {
    double dy = std::sqrt(std::max(0.0, t * t - x.x * x.x));
    consider(PlanarPoint{0.0, x.y + dy});
    consider(PlanarPoint{0.0, x.y - dy});
  }
  consider(PlanarPoint{0.0, 1.0});
  consider(PlanarPoint{0.0, -1.0});

  return CertifiedInterval{Num(best), Num(best), BoundKind::kAnalytic, BoundKind::kWitness};
}

FiniteSet PuncturedPlane::sample_closed_ball(const Point& xp, const Rational& tr, int resolution,
                                             uint64_t) const {
  check_radius_positive(tr);
  require_member(xp);
  if (resolution < 4) throw Error(ErrorCode::kResolutionTooLow, "need resolution >= 4");
  const PlanarPoint x = std::get<PlanarPoint>(xp);
  const double t = planar_t(tr);
  FiniteSet out;  // covering stays UNCERTIFIED: rejection sampling over holes

  auto push = [&](const PlanarPoint& p) {
    if (p.distance_to(x) > t) return;
    if (!contains(Point{p})) return;
    out.points.push_back(p);
  };

  const int grid = resolution;
  for (int i = 0; i <= grid; ++i) {
    for (int j = 0; j <= grid; ++j) {
      push(PlanarPoint{x.x - t + 2.0 * t * i / grid, x.y - t + 2.0 * t * j / grid});
    }
  }
  const int angles = 4 * resolution;
  for (int j = 0; j < angles; ++j) {
    double a = 2.0 * kPi * j / angles;
    push(PlanarPoint{x.x + t * std::cos(a), x.y + t * std::sin(a)});  // ball sphere
  }
  for (int j = 0; j < angles; ++j) {
    double a = -kPi / 2 + kPi * j / (angles - 1);
    PlanarPoint arc{std::cos(a), std::sin(a)};
    push(arc);
    // Shells just outside the unit circle keep the open variant represented
    // near its missing boundary.
    for (double eta : {1e-6, 1e-3, 1e-2}) {
      push(PlanarPoint{arc.x * (1.0 + eta), arc.y * (1.0 + eta)});
    }
  }
  for (int j = 0; j <= resolution; ++j) {
    push(PlanarPoint{0.0, -1.0 + 2.0 * j / resolution});  // segment wall
  }
  if (out.points.size() < 2) {
    throw Error(ErrorCode::kResolutionTooLow, "sampler produced fewer than 2 points");
  }
  return out;
}

std::vector<Point> PuncturedPlane::ratio_witnesses(const Point& xp, const Rational& t,
                                                   const Rational& eps, int resolution,
                                                   uint64_t) const {
  const PlanarPoint x = std::get<PlanarPoint>(xp);
  const double outer = planar_t(t + eps);
  std::vector<Point> out;
  const int angles = std::max(16, resolution);
  for (int j = 0; j < angles; ++j) {
    double a = 2.0 * kPi * j / angles;
    PlanarPoint p{x.x + outer * std::cos(a), x.y + outer * std::sin(a)};
    if (contains(Point{p})) out.push_back(p);
  }
  return out;
}

}  // namespace

SpaceHandle make_euclidean_plane() { return std::make_shared<EuclideanPlane>(); }

SpaceHandle make_punctured_plane(bool closed_variant) {
  return std::make_shared<PuncturedPlane>(closed_variant);
}

}  // namespace corona
