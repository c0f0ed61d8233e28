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

#include <doctest.h>

#include "budget_oracle.hpp"
#include "corona/rng.hpp"
#include "corona/sparse_seq.hpp"

using namespace corona;

TEST_CASE("phi matches its closed form") {
  // Both branches agree at the knee.
  for (int k : {1, 2, 3, 7, 50}) {
    CHECK(phi(k, Rational(1, k)) == 1);
    CHECK(phi(k, Rational(2, k)) == Rational(1) + Rational(1, k));
    CHECK(phi(k, Rational(0)) == 0);
  }
  CHECK(phi(3, Rational(0)) == 0);
  CHECK(phi(1, Rational(2)) == 2);          // slope-1 everywhere at k = 1
  CHECK(phi(4, Rational(1, 8)) == Rational(1, 2));
}

TEST_CASE("phi is even and nondecreasing in |u|, with the membership bound") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    int k = static_cast<int>(rng.next_long(1, 12));
    Rational u = rng.next_rational(48, 12);
    Rational v = rng.next_rational(48, 12);
    CHECK(phi(k, u) == phi(k, -u));
    if (rat_abs(u) <= rat_abs(v)) CHECK(phi(k, u) <= phi(k, v));
    // phi_k(u) >= min(k|u|, 1) and phi_k(u) <= 1 forces |u| <= 1/k.
    CHECK(phi(k, u) >= rat_min(Rational(k) * rat_abs(u), Rational(1)));
    if (phi(k, u) <= 1) CHECK(rat_abs(u) <= Rational(1, k));
  }
}

TEST_CASE("phi_inverse_clamped inverts the budget exactly") {
  SplitMix64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    int k = static_cast<int>(rng.next_long(1, 9));
    Rational budget(rng.next_long(0, 80), 20);
    Rational limit(rng.next_long(1, 60), 10);
    Rational a = phi_inverse_clamped(k, budget, limit);
    CHECK(a >= 0);
    CHECK(a <= limit);
    CHECK(phi(k, a) <= budget);
    if (a < limit) {
      // Maximal: one more grid notch would exceed the budget.
      CHECK(phi(k, rat_min(limit, a + Rational(1, 1000000))) >= budget);
    }
  }
}

TEST_CASE("allocate_budget reproduces the spike projection exactly") {
  for (int k = 1; k <= 100; ++k) {
    SparseSeq y = SparseSeq::spike(k, Rational(2, k));
    BudgetAllocation alloc = allocate_budget(y, Rational(1));
    CHECK(alloc.value == 1);
    CHECK(alloc.point == SparseSeq::spike(k, Rational(1, k)));
  }
}

TEST_CASE("allocate_budget trivia: center and interior points") {
  BudgetAllocation zero = allocate_budget(SparseSeq{}, Rational(1));
  CHECK(zero.value == 0);
  CHECK(zero.point.is_zero());

  for (int k : {1, 2, 5}) {
    SparseSeq y = SparseSeq::spike(k, Rational(1, 2 * k));  // phi_k = 1/2 <= t
    BudgetAllocation alloc = allocate_budget(y, Rational(1, 2));
    CHECK(alloc.value == 0);
    CHECK(alloc.point == y);
  }
}

TEST_CASE("allocate_budget beats the marginal greedy on a two-coordinate trap") {
  // Spending the whole budget to fully absorb coordinate 2 is optimal; a
  // best-marginal-efficiency greedy would start on coordinate 1 and lose.
  SparseSeq y;
  y.set(1, Rational(1, 4));
  y.set(2, Rational(1));
  BudgetAllocation alloc = allocate_budget(y, Rational(3, 2));
  CHECK(alloc.value == Rational(1, 4));
  CHECK(alloc.point == SparseSeq::spike(2, Rational(1)));
}

TEST_CASE("allocate_budget result is feasible and optimal against the grid oracle") {
  const Rational step(1, 60);
  SplitMix64 rng(12345);
  for (int trial = 0; trial < 40; ++trial) {
    SparseSeq y;
    int support = static_cast<int>(rng.next_long(1, 3));
    for (int i = 0; i < support; ++i) {
      int idx = static_cast<int>(rng.next_long(1, 6));
      long m = rng.next_long(-120, 120);
      if (m == 0) m = 60;
      y.set(idx, Rational(m, 60));
    }
    Rational t(rng.next_long(1, 3), 2);
    BudgetAllocation alloc = allocate_budget(y, t);

    Rational spent(0), objective(0);
    for (const auto& [idx, val] : alloc.point.entries()) {
      CHECK(y.at(idx) != 0);  // support containment
      spent += phi(idx, val);
    }
    for (const auto& [idx, val] : y.entries()) {
      objective += phi(idx, val - alloc.point.at(idx));
    }
    CHECK(spent <= t);
    CHECK(objective == alloc.value);

    Rational oracle = corona::testing::grid_min(y, t, step);
    CHECK(alloc.value <= oracle);  // grid candidates are feasible points
    CHECK(oracle - alloc.value <= step * 6);
  }
}

TEST_CASE("fast grid oracle agrees with the naive product scan on small cases") {
  SplitMix64 rng(99);
  const Rational step(1, 12);
  for (int trial = 0; trial < 25; ++trial) {
    SparseSeq y;
    int support = static_cast<int>(rng.next_long(1, 3));
    for (int i = 0; i < support; ++i) {
      long m = rng.next_long(-12, 12);
      if (m == 0) m = 6;
      y.set(static_cast<int>(rng.next_long(1, 4)), Rational(m, 12));
    }
    Rational t(rng.next_long(1, 4), 2);
    CHECK(corona::testing::grid_min(y, t, step) ==
          corona::testing::grid_min_naive(y, t, step));
  }
}

TEST_CASE("sparse sequence algebra strips zeros") {
  SparseSeq a = SparseSeq::spike(3, Rational(1, 2));
  SparseSeq b = SparseSeq::spike(3, Rational(-1, 2));
  CHECK((a + b).is_zero());
  CHECK((a - a).is_zero());
  SparseSeq c = a + a;
  CHECK(c.at(3) == 1);
  CHECK(c.support_size() == 1);
}
