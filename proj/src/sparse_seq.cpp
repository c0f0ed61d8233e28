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

#include "corona/sparse_seq.hpp"

#include <vector>

#include "corona/error.hpp"

namespace corona {

SparseSeq SparseSeq::spike(int index, const Rational& value) {
  SparseSeq s;
  s.set(index, value);
  return s;
}

const Rational& SparseSeq::at(int index) const {
  static const Rational kZero(0);
  auto it = entries_.find(index);
  return it == entries_.end() ? kZero : it->second;
}

void SparseSeq::set(int index, const Rational& value) {
  if (index < 1) throw Error(ErrorCode::kInvalidArgument, "sequence indices start at 1");
  if (value == 0) {
    entries_.erase(index);
  } else {
    entries_[index] = value;
  }
}

SparseSeq SparseSeq::operator+(const SparseSeq& o) const {
  SparseSeq r = *this;
  for (const auto& [idx, val] : o.entries_) r.set(idx, r.at(idx) + val);
  return r;
}

SparseSeq SparseSeq::operator-(const SparseSeq& o) const {
  SparseSeq r = *this;
  for (const auto& [idx, val] : o.entries_) r.set(idx, r.at(idx) - val);
  return r;
}

std::string SparseSeq::str() const {
  if (entries_.empty()) return "{}";
  std::string out = "{";
  bool first = true;
  for (const auto& [idx, val] : entries_) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(idx) + ": " + to_string(val);
  }
  return out + "}";
}

Rational phi(int k, const Rational& u) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "phi index must be >= 1");
  Rational a = rat_abs(u);
  Rational knee(1, k);
  if (a <= knee) return Rational(k) * a;
  return Rational(1) + a - knee;
}

Rational phi_inverse_clamped(int k, const Rational& budget, const Rational& limit) {
  if (budget <= 0) return Rational(0);
  Rational a;
  if (budget <= 1) {
    a = budget / k;
  } else {
    a = budget - 1 + Rational(1, k);
  }
  return rat_min(a, limit);
}

namespace {

struct Coord {
  int index;
  Rational magnitude;  // |y_index|
  bool negative;
  Rational full_cost;  // phi_index(|y_index|) == objective removed by full absorption
};

// Best objective reduction from spending at most `budget` on one coordinate,
// together with the absorption level used.
std::pair<Rational, Rational> best_partial_gain(const Coord& c, const Rational& budget) {
  Rational a = phi_inverse_clamped(c.index, budget, c.magnitude);
  Rational gain = c.full_cost - phi(c.index, c.magnitude - a);
  return {gain, a};
}

}  // namespace

BudgetAllocation allocate_budget(const SparseSeq& y, const Rational& t) {
  if (t <= 0) throw Error(ErrorCode::kInvalidArgument, "allocate_budget requires t > 0");

  std::vector<Coord> coords;
  Rational total(0);
  for (const auto& [idx, val] : y.entries()) {
    Coord c{idx, rat_abs(val), val < 0, Rational(0)};
    c.full_cost = phi(idx, c.magnitude);
    total += c.full_cost;
    coords.push_back(std::move(c));
  }

  // Inside the ball already: the point absorbs itself.
  if (total <= t) return {y, Rational(0)};

  const int m = static_cast<int>(coords.size());
  if (m > 24) {
    throw Error(ErrorCode::kInvalidArgument,
                "allocate_budget supports at most 24 nonzero coordinates");
  }

  const Rational floor_value = total - t;  // proven lower bound on the minimum

  Rational best_gain(-1);
  unsigned best_mask = 0;
  int best_partial = -1;
  Rational best_partial_level(0);

  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    Rational spent(0);
    bool feasible = true;
    for (int i = 0; i < m; ++i) {
      if (mask & (1u << i)) {
        spent += coords[i].full_cost;
        if (spent > t) {
          feasible = false;
          break;
        }
      }
    }
    if (!feasible) continue;

    Rational leftover = t - spent;
    // Full absorptions reduce the objective by exactly what they cost.
    if (spent > best_gain) {
      best_gain = spent;
      best_mask = mask;
      best_partial = -1;
    }
    if (leftover > 0) {
      for (int i = 0; i < m; ++i) {
        if (mask & (1u << i)) continue;
        auto [gain, level] = best_partial_gain(coords[i], leftover);
        Rational total_gain = spent + gain;
        if (total_gain > best_gain) {
          best_gain = total_gain;
          best_mask = mask;
          best_partial = i;
          best_partial_level = level;
        }
      }
    }
    if (total - best_gain == floor_value) break;  // cannot do better
  }

  BudgetAllocation out;
  out.value = total - best_gain;
  for (int i = 0; i < m; ++i) {
    Rational level(0);
    if (best_mask & (1u << i)) {
      level = coords[i].magnitude;
    } else if (i == best_partial) {
      level = best_partial_level;
    }
    if (level != 0) {
      out.point.set(coords[i].index, coords[i].negative ? Rational(-level) : level);
    }
  }
  return out;
}

}  // namespace corona
