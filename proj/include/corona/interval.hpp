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

#ifndef CORONA_INTERVAL_HPP_
#define CORONA_INTERVAL_HPP_

#include "corona/rational.hpp"

namespace corona {

// Provenance of an interval bound. ANALYTIC bounds follow from a closed-form
// argument, WITNESS bounds from an explicit feasible point, SAMPLED bounds
// only from finitely many probes (no guarantee on the untouched remainder).
enum class BoundKind { kAnalytic, kWitness, kSampled };

const char* bound_kind_name(BoundKind k);

// Enclosure [lower, upper] of a true distance value.
// Invariants: 0 <= lower <= upper; if both bounds are ANALYTIC they coincide.
struct CertifiedInterval {
  Num lower;
  Num upper;
  BoundKind lower_kind = BoundKind::kSampled;
  BoundKind upper_kind = BoundKind::kSampled;

  static CertifiedInterval exact(Num value) {
    return {value, value, BoundKind::kAnalytic, BoundKind::kAnalytic};
  }
  static CertifiedInterval zero_exact(bool exact_space) {
    return exact(exact_space ? Num(Rational(0)) : Num(0.0));
  }

  bool is_point() const { return lower == upper; }
  bool valid() const {
    Num zero = lower.is_exact() ? Num(Rational(0)) : Num(0.0);
    if (lower < zero) return false;
    if (upper < lower) return false;
    if (lower_kind == BoundKind::kAnalytic && upper_kind == BoundKind::kAnalytic &&
        !(lower == upper)) {
      return false;
    }
    return true;
  }
};

}  // namespace corona

#endif  // CORONA_INTERVAL_HPP_
