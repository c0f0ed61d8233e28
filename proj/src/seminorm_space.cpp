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

#include "corona/seminorm_space.hpp"

#include <algorithm>

#include "corona/error.hpp"

namespace corona {

CSequence CSequence::harmonic() {
  CSequence c;
  c.rule_name_ = "harmonic";
  return c;
}

CSequence CSequence::geometric(Rational c0, Rational ratio) {
  if (c0 <= 0 || ratio <= 0 || ratio >= 1) {
    throw Error(ErrorCode::kBadParams, "geometric rule needs c0 > 0 and 0 < ratio < 1");
  }
  CSequence c;
  c.rule_name_ = "geometric";
  c.c0_ = std::move(c0);
  c.ratio_ = std::move(ratio);
  return c;
}

CSequence CSequence::table(std::vector<Rational> values, Rational tail_ratio) {
  if (values.empty()) throw Error(ErrorCode::kBadParams, "table rule needs at least one value");
  for (size_t i = 0; i < values.size(); ++i) {
    if (values[i] <= 0) throw Error(ErrorCode::kBadParams, "table values must be positive");
    if (i > 0 && values[i] > values[i - 1]) {
      throw Error(ErrorCode::kBadParams, "table values must be nonincreasing");
    }
  }
  if (tail_ratio <= 0 || tail_ratio >= 1) {
    throw Error(ErrorCode::kBadParams, "table tail ratio must be in (0, 1)");
  }
  CSequence c;
  c.rule_name_ = "table";
  c.table_ = std::move(values);
  c.tail_ratio_ = std::move(tail_ratio);
  return c;
}

Rational CSequence::at(int n) const {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative seminorm index");
  if (rule_name_ == "harmonic") return Rational(1, n + 1);
  if (rule_name_ == "geometric") {
    Rational v = c0_;
    for (int i = 0; i < n; ++i) v *= ratio_;
    return v;
  }
  if (n < static_cast<int>(table_.size())) return table_[n];
  Rational v = table_.back();
  for (int i = static_cast<int>(table_.size()); i <= n; ++i) v *= tail_ratio_;
  return v;
}

std::vector<int> CSequence::indices_above(const Rational& threshold) const {
  std::vector<int> out;
  for (int n = 0;; ++n) {
    if (at(n) > threshold) {
      out.push_back(n);
    } else {
      // Nonincreasing sequence: once at or below the threshold, always below.
      break;
    }
  }
  return out;
}

BallProfile ball_profile(const SeminormConfig& config, const Rational& t) {
  if (t <= 0) throw Error(ErrorCode::kInvalidArgument, "ball profile requires t > 0");
  BallProfile p;
  p.t = t;
  p.active = config.c.indices_above(t);
  if (p.active.empty()) {
    p.whole_space = true;
    p.eps0 = Rational(0);
    return p;
  }
  bool first = true;
  for (int k : p.active) {
    Rational margin = config.c.at(k) - t;
    p.radii.push_back(t / margin);
    p.eps0 = first ? margin : rat_min(p.eps0, margin);
    first = false;
  }
  return p;
}

Rational m_envelope(const SeminormConfig& config, const Rational& t, const Rational& eps) {
  BallProfile p = ball_profile(config, t);
  if (p.whole_space) {
    throw Error(ErrorCode::kInvalidArgument, "no active seminorm constraints at this radius");
  }
  if (eps <= 0) throw Error(ErrorCode::kInvalidArgument, "m_envelope requires eps > 0");
  if (eps >= p.eps0) throw Error(ErrorCode::kEpsTooLarge, "eps must stay below eps0(t)");
  Rational best(0);
  for (int k : p.active) {
    Rational ck = config.c.at(k);
    Rational term = ck * eps / ((ck - t - eps) * (ck - t));
    best = rat_max(best, term);
  }
  return best;
}

namespace {

long rat_ceil_long(const Rational& r) {
  BigInt num = numerator(r);
  BigInt den = denominator(r);
  BigInt q = num / den;  // truncates toward zero
  if (num > 0 && q * den != num) q += 1;
  return q.convert_to<long>();
}

}  // namespace

Rational seminorm_distance(const SeminormConfig& config, const PLFunction& f,
                           const PLFunction& g) {
  PLFunction h = f - g;
  // p_n saturates once [-n, n] covers every breakpoint; beyond that the terms
  // only shrink with c_n, so a finite max is exact.
  long sat = rat_ceil_long(h.max_breakpoint_abs());
  Rational best(0);
  for (long n = 0; n <= sat; ++n) {
    Rational pn = h.sup_abs_on(Rational(-n), Rational(n));
    best = rat_max(best, config.c.at(static_cast<int>(n)) * pn / (1 + pn));
  }
  return best;
}

bool seminorm_in_ball(const SeminormConfig& config, const PLFunction& f, const Rational& t) {
  BallProfile p = ball_profile(config, t);
  if (p.whole_space) return true;
  for (size_t i = 0; i < p.active.size(); ++i) {
    Rational pk = f.sup_abs_on(Rational(-p.active[i]), Rational(p.active[i]));
    if (pk > p.radii[i]) return false;
  }
  return true;
}

namespace {

struct Piece {
  Rational lo;
  Rational hi;
  PLFunction fn;
};

// Concatenates contiguous pieces into one function, checking value agreement
// at every seam exactly.
PLFunction stitch(const std::vector<Piece>& pieces) {
  std::vector<PLFunction::Breakpoint> pts;
  for (size_t i = 0; i < pieces.size(); ++i) {
    const Piece& piece = pieces[i];
    if (i > 0) {
      if (pieces[i - 1].hi != piece.lo) {
        throw Error(ErrorCode::kInvalidArgument, "projection pieces are not contiguous");
      }
      Rational left = pieces[i - 1].fn.eval(piece.lo);
      Rational right = piece.fn.eval(piece.lo);
      if (left != right) {
        throw Error(ErrorCode::kInvalidArgument, "projection pieces disagree at a seam");
      }
    }
    auto add = [&pts](const Rational& x, const Rational& v) {
      if (!pts.empty() && pts.back().first == x) return;  // seam point already emitted
      pts.emplace_back(x, v);
    };
    add(piece.lo, piece.fn.eval(piece.lo));
    for (const auto& bp : piece.fn.breakpoints()) {
      if (piece.lo < bp.first && bp.first < piece.hi) add(bp.first, bp.second);
    }
    add(piece.hi, piece.fn.eval(piece.hi));
  }
  return PLFunction(std::move(pts)).simplified();
}

// g(x) = sign(f(x)) * w(x). Requires w >= 0 with w == 0 wherever f == 0;
// sign flips of f are breakpoints of |f|, so the merged grid keeps the
// product piecewise linear.
PLFunction apply_sign(const PLFunction& w, const PLFunction& f) {
  PLFunction absf = f.abs_value();
  std::vector<Rational> xs;
  for (const auto& bp : w.breakpoints()) xs.push_back(bp.first);
  for (const auto& bp : absf.breakpoints()) xs.push_back(bp.first);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<PLFunction::Breakpoint> pts;
  for (const Rational& x : xs) {
    Rational fx = f.eval(x);
    Rational wx = w.eval(x);
    Rational v = fx > 0 ? wx : (fx < 0 ? Rational(-wx) : Rational(0));
    pts.emplace_back(x, v);
  }
  return PLFunction(std::move(pts));
}

}  // namespace

PLFunction project_into_ball(const SeminormConfig& config, const PLFunction& f,
                             const Rational& t) {
  BallProfile profile = ball_profile(config, t);
  if (profile.whole_space) return f;

  PLFunction zero = PLFunction::constant(Rational(0));
  Rational norm = seminorm_distance(config, f, zero);
  if (norm <= t) return f;

  const int n0 = profile.n0();
  const Rational excess = norm - t;
  const bool quality = excess < profile.eps0;

  // Shrink amounts D_k = R_k(t + excess) - R_k(t); their max is the envelope
  // bound the construction achieves.
  std::vector<Rational> shrink;
  if (quality) {
    for (int k : profile.active) {
      Rational ck = config.c.at(k);
      shrink.push_back(ck * excess / ((ck - t - excess) * (ck - t)));
    }
  }

  const Rational half(1, 2);
  PLFunction absf = f.abs_value();

  // Scalar core value at |x| = n0 (needed for the collar offsets).
  auto core_value_at = [&](const Rational& x) -> Rational {
    Rational fx = f.eval(x);
    Rational mag = rat_abs(fx);
    Rational w;
    if (quality) {
      w = rat_min(rat_max(mag - shrink[n0], Rational(0)), profile.radii[n0]);
    } else {
      w = rat_min(mag, profile.radii[n0]);
    }
    return fx > 0 ? w : (fx < 0 ? Rational(-w) : Rational(0));
  };

  std::vector<Piece> pieces;
  Rational left_edge = Rational(-n0) - half;
  Rational right_edge = Rational(n0) + half;
  Rational lo = rat_min(left_edge - 1, f.breakpoints().front().first - 1);
  Rational hi = rat_max(right_edge + 1, f.breakpoints().back().first + 1);

  pieces.push_back({lo, left_edge, f});

  // Left collar: pull |f - g| linearly down to the core offset.
  Rational delta_left = f.eval(Rational(-n0)) - core_value_at(Rational(-n0));
  PLFunction ramp_left({{left_edge, Rational(0)}, {Rational(-n0), Rational(1)}});
  pieces.push_back({left_edge, Rational(-n0), f - ramp_left.scaled(delta_left)});

  if (n0 >= 1) {
    if (quality) {
      // Per unit segment the cap is the radius of the outermost covered box;
      // the shrink profile ramps to the next D over the first half step.
      std::vector<PLFunction::Breakpoint> spts;
      for (int k = n0 - 1; k >= 0; --k) {
        spts.emplace_back(Rational(-(k + 1)), shrink[k + 1]);
        spts.emplace_back(Rational(-k) - half, shrink[k + 1]);
      }
      spts.emplace_back(Rational(0), shrink[0]);
      for (int k = 0; k < n0; ++k) {
        spts.emplace_back(Rational(k) + half, shrink[k + 1]);
        spts.emplace_back(Rational(k + 1), shrink[k + 1]);
      }
      PLFunction s(std::move(spts));
      PLFunction shrunk = PLFunction::pointwise_max(absf - s, zero);
      for (int seg = -n0; seg < n0; ++seg) {
        int cap_index = seg >= 0 ? seg + 1 : -seg;
        PLFunction capped =
            PLFunction::pointwise_min(shrunk, PLFunction::constant(profile.radii[cap_index]));
        pieces.push_back({Rational(seg), Rational(seg + 1), apply_sign(capped, f)});
      }
    } else {
      // Far outside the collar regime: squash under the continuous cap that
      // touches R_k at |x| = k.
      std::vector<PLFunction::Breakpoint> cpts;
      for (int k = n0 - 1; k >= 0; --k) {
        cpts.emplace_back(Rational(-(k + 1)), profile.radii[k + 1]);
        cpts.emplace_back(Rational(-k) - half, profile.radii[k + 1]);
      }
      cpts.emplace_back(Rational(0), profile.radii[0]);
      for (int k = 0; k < n0; ++k) {
        cpts.emplace_back(Rational(k) + half, profile.radii[k + 1]);
        cpts.emplace_back(Rational(k + 1), profile.radii[k + 1]);
      }
      PLFunction cap(std::move(cpts));
      pieces.push_back({Rational(-n0), Rational(n0),
                        apply_sign(PLFunction::pointwise_min(absf, cap), f)});
    }
  }

  Rational delta_right = f.eval(Rational(n0)) - core_value_at(Rational(n0));
  PLFunction ramp_right({{Rational(n0), Rational(1)}, {right_edge, Rational(0)}});
  pieces.push_back({Rational(n0), right_edge, f - ramp_right.scaled(delta_right)});

  pieces.push_back({right_edge, hi, f});

  PLFunction g = stitch(pieces);
  if (!seminorm_in_ball(config, g, t)) {
    throw Error(ErrorCode::kInvalidArgument, "projection left the target ball");
  }
  return g;
}

FunctionBallDistance function_ball_distance(const SeminormConfig& config, const PLFunction& f,
                                            const Rational& t) {
  BallProfile profile = ball_profile(config, t);
  FunctionBallDistance out{Rational(0), Rational(0)};
  if (profile.whole_space) return out;
  if (seminorm_in_ball(config, f, t)) return out;

  for (size_t i = 0; i < profile.active.size(); ++i) {
    int k = profile.active[i];
    Rational pk = f.sup_abs_on(Rational(-k), Rational(k));
    Rational q = rat_max(Rational(0), pk - profile.radii[i]);
    // Any g in the ball has p_k(f-g) >= p_k(f) - R_k, and u/(1+u) increases.
    out.lower = rat_max(out.lower, config.c.at(k) * q / (1 + q));
  }

  PLFunction g = project_into_ball(config, f, t);
  out.upper = seminorm_distance(config, f, g);
  if (out.upper < out.lower) {
    throw Error(ErrorCode::kInvalidArgument, "ball-distance bounds crossed");
  }
  return out;
}

}  // namespace corona
