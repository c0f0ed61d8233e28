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

#ifndef CORONA_SPARSE_SEQ_HPP_
#define CORONA_SPARSE_SEQ_HPP_

#include <map>
#include <string>

#include "corona/rational.hpp"

namespace corona {

// Finitely supported sequence of exact rationals, indexed from 1.
// No zero entries are ever stored.
class SparseSeq {
 public:
  SparseSeq() = default;

  static SparseSeq spike(int index, const Rational& value);

  const Rational& at(int index) const;  // zero for unstored indices
  void set(int index, const Rational& value);

  const std::map<int, Rational>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  int support_size() const { return static_cast<int>(entries_.size()); }

  SparseSeq operator+(const SparseSeq& o) const;
  SparseSeq operator-(const SparseSeq& o) const;

  bool operator==(const SparseSeq& o) const { return entries_ == o.entries_; }

  std::string str() const;

 private:
  std::map<int, Rational> entries_;
};

// Per-coordinate penalty: slope k up to |u| = 1/k, slope 1 beyond.
// Even in u, continuous (both branches give 1 at the knee), nondecreasing
// in |u|.
Rational phi(int k, const Rational& u);

// Largest a in [0, limit] with phi(k, a) <= budget (budget >= 0).
Rational phi_inverse_clamped(int k, const Rational& budget, const Rational& limit);

struct BudgetAllocation {
  SparseSeq point;  // the minimizer a, supported inside support(y)
  Rational value;   // min of sum phi_n(y_n - a_n) subject to sum phi_n(a_n) <= t
};

// Exact distance from y to the closed ball of radius t around the origin in
// the finite-support sequence space. The per-coordinate gain-vs-spend curves
// are convex piecewise linear (efficiencies 1/n, 1, n in spend order), so the
// minimum of the concave-separable objective over the budget box sits at a
// vertex: every support coordinate is either fully absorbed or untouched,
// except at most one partial coordinate. We enumerate full-absorption subsets
// and complete each with the best single partial coordinate, exactly.
// Exponential in the support size; intended for small supports.
BudgetAllocation allocate_budget(const SparseSeq& y, const Rational& t);

}  // namespace corona

#endif  // CORONA_SPARSE_SEQ_HPP_
