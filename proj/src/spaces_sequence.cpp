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

#include "corona/builtin_spaces.hpp"
#include "corona/error.hpp"
#include "corona/rng.hpp"

namespace corona {

namespace {

class PhiSequenceSpace final : public MetricSpace {
 public:
  PhiSequenceSpace()
      : MetricSpace("phi_sequence", PointKind::kSparseSeq,
                    {.boundedly_compact = false, .translation_invariant = true, .is_tvs = true},
                    /*exact=*/true) {
    register_family({.name = "spike",
                     .center = SparseSeq{},
                     .t = Rational(1),
                     .generator =
                         [](int k) -> Point {
                           return SparseSeq::spike(k, Rational(2, k));
                         },
                     .expected = WitnessExpectation::kViolatesWcp});
  }

  bool contains(const Point& p) const override {
    return std::holds_alternative<SparseSeq>(p);
  }

  Num distance(const Point& p, const Point& q) const override {
    const auto& a = std::get<SparseSeq>(p);
    const auto& b = std::get<SparseSeq>(q);
    SparseSeq diff = a - b;
    Rational sum(0);
    for (const auto& [idx, val] : diff.entries()) sum += phi(idx, val);
    return Num(std::move(sum));
  }

  CertifiedInterval ball_distance(const Point& x, const Rational& t,
                                  const Point& y) const override {
    check_radius_positive(t);
    SparseSeq z = std::get<SparseSeq>(y) - std::get<SparseSeq>(x);  // recenter to 0
    BudgetAllocation alloc = allocate_budget(z, t);
    return CertifiedInterval::exact(Num(alloc.value));
  }

  FiniteSet sample_closed_ball(const Point& x, const Rational& t, int resolution,
                               uint64_t seed) const override {
    check_radius_positive(t);
    if (resolution < 2) throw Error(ErrorCode::kResolutionTooLow, "need at least 2 samples");
    const auto& center = std::get<SparseSeq>(x);
    FiniteSet out;  // covering UNCERTIFIED: no sampling theory for these balls
    out.points.push_back(center);
    const int spikes = std::min(resolution, 20000);
    for (int j = 1; j <= spikes; ++j) {
      Rational u = phi_inverse_clamped(j, t, t + 1);  // exactly on the boundary
      out.points.push_back(center + SparseSeq::spike(j, u));
      out.points.push_back(center - SparseSeq::spike(j, u));
      if (j <= 64) out.points.push_back(center + SparseSeq::spike(j, u / 2));
    }
    SplitMix64 rng(mix_seed(seed, 0x706869ULL));
    const int randoms = std::min(resolution, 64);
    for (int i = 0; i < randoms; ++i) {
      SparseSeq s = random_sparse(rng);
      // Halve until inside; exact and terminating since the metric value
      // drops below any bound once every entry is small.
      while (distance(Point{center + s}, x).rational() > t) {
        SparseSeq halved;
        for (const auto& [idx, val] : s.entries()) halved.set(idx, val / 2);
        s = halved;
      }
      out.points.push_back(center + s);
    }
    return out;
  }

  std::vector<Point> ratio_witnesses(const Point& x, const Rational& t, const Rational& eps,
                                     int resolution, uint64_t) const override {
    const auto& center = std::get<SparseSeq>(x);
    std::vector<Point> out;
    Rational s = t + eps;
    for (int j = 1; j <= std::max(2, resolution); ++j) {
      out.push_back(center + SparseSeq::spike(j, phi_inverse_clamped(j, s, s + 1)));
    }
    return out;
  }

  Point zero_point() const override { return SparseSeq{}; }

  Point random_point(uint64_t seed, int index) const override {
    SplitMix64 rng(mix_seed(seed, static_cast<uint64_t>(index)));
    return random_sparse(rng);
  }

 private:
  static SparseSeq random_sparse(SplitMix64& rng) {
    SparseSeq s;
    int support = static_cast<int>(rng.next_long(1, 4));
    for (int i = 0; i < support; ++i) {
      int idx = static_cast<int>(rng.next_long(1, 8));
      long num = rng.next_long(-30, 30);
      if (num == 0) num = 1;
      s.set(idx, Rational(num, 12));
    }
    return s;
  }
};

// C(R) with d(f, g) = sup_n c_n p_n(f-g)/(1 + p_n(f-g)), restricted to
// piecewise-linear representatives.
class SeminormFunctionSpace final : public MetricSpace {
 public:
  explicit SeminormFunctionSpace(CSequence c)
      : MetricSpace("seminorm_function", PointKind::kPlFunction,
                    {.boundedly_compact = false, .translation_invariant = true, .is_tvs = true},
                    /*exact=*/true),
        config_{std::move(c)} {
    register_family({.name = "staircase",
                     .center = PLFunction::constant(Rational(0)),
                     .t = Rational(3, 10),
                     .generator =
                         [this](int k) -> Point {
                           BallProfile p = ball_profile(config_, Rational(3, 10));
                           if (p.whole_space) return PLFunction::constant(Rational(0));
                           Rational radius = Rational(3, 10) + p.eps0 / (k + 1);
                           return staircase(radius);
                         },
                     .expected = WitnessExpectation::kSatisfiesWcp});
  }

  const SeminormConfig& config() const { return config_; }

  // Extremal ball point: touches every active constraint of B(0, s) exactly,
  // so d(staircase(s), 0) == s.
  PLFunction staircase(const Rational& s) const {
    BallProfile p = ball_profile(config_, s);
    if (p.whole_space) {
      throw Error(ErrorCode::kInvalidArgument, "staircase needs an active constraint");
    }
    int n0 = p.n0();
    std::vector<PLFunction::Breakpoint> pts;
    for (int k = n0; k >= 1; --k) pts.emplace_back(Rational(-k), p.radii[k]);
    pts.emplace_back(Rational(0), p.radii[0]);
    for (int k = 1; k <= n0; ++k) pts.emplace_back(Rational(k), p.radii[k]);
    return PLFunction(std::move(pts));
  }

  bool contains(const Point& p) const override {
    return std::holds_alternative<PLFunction>(p);
  }

  Num distance(const Point& p, const Point& q) const override {
    return Num(seminorm_distance(config_, std::get<PLFunction>(p), std::get<PLFunction>(q)));
  }

  bool in_closed_ball(const Point& x, const Rational& t, const Point& y) const override {
    if (t < 0) throw Error(ErrorCode::kInvalidArgument, "ball radius must be nonnegative");
    return seminorm_in_ball(config_, std::get<PLFunction>(y) - std::get<PLFunction>(x), t);
  }

  CertifiedInterval ball_distance(const Point& x, const Rational& t,
                                  const Point& y) const override {
    check_radius_positive(t);
    PLFunction h = std::get<PLFunction>(y) - std::get<PLFunction>(x);  // recenter to 0
    FunctionBallDistance fbd = function_ball_distance(config_, h, t);
    if (fbd.lower == 0 && fbd.upper == 0) return CertifiedInterval::zero_exact(true);
    return CertifiedInterval{Num(fbd.lower), Num(fbd.upper), BoundKind::kAnalytic,
                             BoundKind::kWitness};
  }

  FiniteSet sample_closed_ball(const Point& x, const Rational& t, int resolution,
                               uint64_t seed) const override {
    check_radius_positive(t);
    if (resolution < 2) throw Error(ErrorCode::kResolutionTooLow, "need at least 2 samples");
    const auto& center = std::get<PLFunction>(x);
    BallProfile profile = ball_profile(config_, t);
    FiniteSet out;  // covering UNCERTIFIED
    out.points.push_back(center);
    if (!profile.whole_space) {
      PLFunction stairs = staircase(t);
      for (const Rational& scale :
           {Rational(1), Rational(-1), Rational(1, 2), Rational(3, 4)}) {
        out.points.push_back(center + stairs.scaled(scale));
      }
      // Tall bumps past the constrained window: feasible at any height.
      int n0 = profile.n0();
      for (int h : {1, 3}) {
        PLFunction bump({{Rational(n0 + 1), Rational(0)},
                         {Rational(n0 + 2), Rational(h)},
                         {Rational(n0 + 3), Rational(0)}});
        out.points.push_back(center + bump);
      }
    }
    SplitMix64 rng(mix_seed(seed, 0x706c66ULL));
    int randoms = std::min(resolution, 48);
    for (int i = 0; i < randoms; ++i) {
      out.points.push_back(center + random_in_ball(rng, profile, t));
    }
    return out;
  }

  std::vector<Point> ratio_witnesses(const Point& x, const Rational& t, const Rational& eps,
                                     int, uint64_t) const override {
    BallProfile outer = ball_profile(config_, t + eps);
    if (outer.whole_space) return {};
    const auto& center = std::get<PLFunction>(x);
    std::vector<Point> out;
    PLFunction stairs = staircase(t + eps);
    out.push_back(center + stairs);
    out.push_back(center - stairs);
    return out;
  }

  Eps0Hook cp_eps0(const Rational& t) const override {
    BallProfile p = ball_profile(config_, t);
    if (p.whole_space) return Eps0Hook::unbounded();
    return Eps0Hook::exact(p.eps0);
  }

  Point zero_point() const override { return PLFunction::constant(Rational(0)); }

  Point random_point(uint64_t seed, int index) const override {
    SplitMix64 rng(mix_seed(seed, static_cast<uint64_t>(index)));
    return random_pl(rng);
  }

  static PLFunction random_pl(SplitMix64& rng) {
    int count = static_cast<int>(rng.next_long(2, 6));
    std::vector<long> grid;
    while (static_cast<int>(grid.size()) < count) {
      long g = rng.next_long(-16, 16);
      if (std::find(grid.begin(), grid.end(), g) == grid.end()) grid.push_back(g);
    }
    std::sort(grid.begin(), grid.end());
    std::vector<PLFunction::Breakpoint> pts;
    for (long g : grid) {
      long num = rng.next_long(-24, 24);
      pts.emplace_back(Rational(g, 4), Rational(num, 8));
    }
    return PLFunction(std::move(pts));
  }

  PLFunction random_in_ball(SplitMix64& rng, const BallProfile& profile,
                            const Rational& t) const {
    PLFunction f = random_pl(rng);
    if (profile.whole_space) return f;
    Rational alpha(1);
    for (size_t i = 0; i < profile.active.size(); ++i) {
      int k = profile.active[i];
      Rational pk = f.sup_abs_on(Rational(-k), Rational(k));
      if (pk > 0) alpha = rat_min(alpha, profile.radii[i] / pk);
    }
    PLFunction g = f.scaled(alpha);
    if (!seminorm_in_ball(config_, g, t)) {
      throw Error(ErrorCode::kInvalidArgument, "scaled sample missed the ball");
    }
    return g;
  }

 private:
  SeminormConfig config_;
};

}  // namespace

SpaceHandle make_phi_sequence_space() { return std::make_shared<PhiSequenceSpace>(); }

SpaceHandle make_seminorm_function_space(CSequence c) {
  return std::make_shared<SeminormFunctionSpace>(std::move(c));
}

const SeminormConfig& seminorm_config_of(const MetricSpace& space) {
  const auto* s = dynamic_cast<const SeminormFunctionSpace*>(&space);
  if (s == nullptr) {
    throw Error(ErrorCode::kInvalidArgument, "space is not a seminorm function space");
  }
  return s->config();
}

}  // namespace corona
