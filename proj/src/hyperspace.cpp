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

#include "corona/hyperspace.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "corona/error.hpp"
#include "corona/kernels/pointset.hpp"

namespace corona {

namespace {

int worker_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("CORONA_LAB_THREADS")) {
    long v = std::atol(env);
    if (v >= 1 && static_cast<unsigned>(v) < hw) hw = static_cast<unsigned>(v);
  }
  return static_cast<int>(hw);
}

// Deterministic chunked map; results land by index, reductions stay
// schedule-independent.
template <typename F>
void parallel_for(int n, F&& body) {
  int workers = std::min(worker_count(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      for (int i = w; i < n; i += workers) body(i);
    });
  }
  for (auto& t : threads) t.join();
}

struct PlanarSoA {
  std::vector<double> xs;
  std::vector<double> ys;
};

PlanarSoA to_soa(const FiniteSet& s) {
  PlanarSoA out;
  out.xs.reserve(s.points.size());
  out.ys.reserve(s.points.size());
  for (const Point& p : s.points) {
    const auto& pp = std::get<PlanarPoint>(p);
    out.xs.push_back(pp.x);
    out.ys.push_back(pp.y);
  }
  return out;
}

Num generic_directed(const MetricSpace& space, const FiniteSet& a, const FiniteSet& b) {
  Num worst = space.exact() ? Num(Rational(0)) : Num(0.0);
  for (const Point& p : a.points) {
    bool first = true;
    Num best;
    for (const Point& q : b.points) {
      Num d = space.distance(p, q);
      if (first || d < best) best = d;
      first = false;
    }
    if (best > worst) worst = best;
  }
  return worst;
}

}  // namespace

Num hausdorff(const MetricSpace& space, const FiniteSet& a, const FiniteSet& b) {
  if (a.points.empty() || b.points.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "hausdorff needs nonempty sets");
  }
  if (space.point_kind() == PointKind::kPlanar) {
    PlanarSoA sa = to_soa(a);
    PlanarSoA sb = to_soa(b);
    double ab = kernels::directed_hausdorff_sq(sa.xs, sa.ys, sb.xs, sb.ys);
    double ba = kernels::directed_hausdorff_sq(sb.xs, sb.ys, sa.xs, sa.ys);
    return Num(std::sqrt(std::max(ab, ba)));
  }
  Num ab = generic_directed(space, a, b);
  Num ba = generic_directed(space, b, a);
  return ab > ba ? ab : ba;
}

DirectedDeviation directed_ball_deviation(const MetricSpace& space, const FiniteSet& sample,
                                          const Point& x, const Rational& t) {
  if (sample.points.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty sample");
  }
  Num zero = space.exact() ? Num(Rational(0)) : Num(0.0);
  DirectedDeviation dev{zero, zero};
  for (const Point& z : sample.points) {
    CertifiedInterval iv = space.ball_distance(x, t, z);
    if (iv.upper > dev.estimate) dev.estimate = iv.upper;
    if (iv.lower > dev.lower) dev.lower = iv.lower;
  }
  return dev;
}

std::vector<Rational> default_eps_schedule(const Rational& t) {
  std::vector<Rational> eps;
  Rational e = t;
  for (int j = 1; j <= 12; ++j) {
    e /= 2;
    eps.push_back(e);
  }
  return eps;
}

ContinuityReport continuity_probe(const MetricSpace& space, const Point& x, const Rational& t,
                                  const ContinuityParams& params) {
  if (!space.contains(x)) {
    throw Error(ErrorCode::kPointOutsideSpace, "continuity probe center outside space");
  }
  if (t <= 0) throw Error(ErrorCode::kInvalidArgument, "continuity probe needs t > 0");

  ContinuityReport report;
  report.space = space.name();
  report.t = t;
  report.direction = params.direction;
  report.resolution = params.resolution;
  report.seed = params.seed;
  report.eps_schedule =
      params.eps_schedule.empty() ? default_eps_schedule(t) : params.eps_schedule;
  for (size_t i = 1; i < report.eps_schedule.size(); ++i) {
    if (!(report.eps_schedule[i] < report.eps_schedule[i - 1])) {
      throw Error(ErrorCode::kInvalidArgument, "eps schedule must strictly decrease");
    }
  }
  if (report.eps_schedule.empty() || report.eps_schedule.back() <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "eps schedule must stay positive");
  }
  if (params.direction == Direction::kLeft && report.eps_schedule.front() >= t) {
    throw Error(ErrorCode::kInvalidArgument, "left probe needs eps < t");
  }

  // Nested balls: H(B(t'), B(t)) for t' > t is the one-sided deviation of the
  // larger ball, taken with the certified backend on every sample.
  Num threshold = space.exact() ? Num(Rational(0)) : Num(0.0);
  bool covering_known = true;
  FiniteSet left_big;
  if (params.direction == Direction::kLeft) {
    left_big = space.sample_closed_ball(x, t, params.resolution, params.seed);
    if (left_big.covering_radius) {
      if (!space.exact()) threshold = *left_big.covering_radius * Num(10.0);
    } else {
      covering_known = false;
    }
  }

  for (const Rational& eps : report.eps_schedule) {
    DirectedDeviation dev;
    if (params.direction == Direction::kRight) {
      FiniteSet big = space.sample_closed_ball(x, t + eps, params.resolution, params.seed);
      dev = directed_ball_deviation(space, big, x, t);
      if (big.covering_radius) {
        if (!space.exact()) {
          Num th = *big.covering_radius * Num(10.0);
          if (th > threshold) threshold = th;
        }
      } else {
        covering_known = false;
      }
    } else {
      dev = directed_ball_deviation(space, left_big, x, t - eps);
    }
    report.h_values.push_back(dev.estimate);
    report.h_lower.push_back(dev.lower);
  }

  if (!space.exact() && !covering_known) {
    // Uncertified samplers fall back to the float comparison floor.
    Num floor_th(1e-6);
    if (floor_th > threshold) threshold = floor_th;
  }

  Num gap = report.h_lower.front();
  Num peak = report.h_lower.front();
  for (const Num& v : report.h_lower) {
    if (v < gap) gap = v;
    if (v > peak) peak = v;
  }

  // Witnessed only if the lower bounds neither fall under the sampling
  // threshold nor decay along the shrinking schedule.
  bool witnessed = gap > threshold && gap + gap >= peak;
  report.verdict = witnessed ? kDiscontinuityWitnessed : kContinuous;
  if (witnessed) report.witness_gap = gap;
  return report;
}

Num lipschitz_estimate(const MetricSpace& space,
                       const std::vector<std::pair<BallQuery, BallQuery>>& pairs,
                       int resolution, uint64_t seed) {
  Num zero = space.exact() ? Num(Rational(0)) : Num(0.0);
  if (pairs.empty()) return zero;
  std::vector<Num> ratios(pairs.size(), zero);
  std::vector<char> valid(pairs.size(), 0);

  parallel_for(static_cast<int>(pairs.size()), [&](int i) {
    const auto& [a, b] = pairs[i];
    const auto& [xa, ta] = a;
    const auto& [xb, tb] = b;
    if (ta <= 0 || tb <= 0) return;
    Num dxy = space.distance(xa, xb);
    Rational dt = rat_abs(ta - tb);
    Num dinf = dxy;
    Num dtn = space.exact() ? Num(dt) : Num(to_double(dt));
    if (dtn > dinf) dinf = dtn;
    if (!(dinf > zero)) return;  // d_inf = 0 pairs are excluded by contract

    FiniteSet sample_a = space.sample_closed_ball(xa, ta, resolution, seed);
    FiniteSet sample_b = space.sample_closed_ball(xb, tb, resolution, seed);
    Num h = directed_ball_deviation(space, sample_a, xb, tb).estimate;
    Num h2 = directed_ball_deviation(space, sample_b, xa, ta).estimate;
    if (h2 > h) h = h2;
    ratios[i] = h / dinf;
    valid[i] = 1;
  });

  Num best = zero;
  for (size_t i = 0; i < ratios.size(); ++i) {
    if (valid[i] && ratios[i] > best) best = ratios[i];
  }
  return best;
}

}  // namespace corona
