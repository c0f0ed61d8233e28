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

#ifndef CORONA_RNG_HPP_
#define CORONA_RNG_HPP_

#include <cstdint>

#include "corona/rational.hpp"

namespace corona {

// splitmix64: deterministic across platforms, which keeps seeded reports
// byte-identical everywhere.
struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi], inclusive.
  long next_long(long lo, long hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }

  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform rational m/den with |m| <= max_num.
  Rational next_rational(long max_num, long den) {
    return Rational(next_long(-max_num, max_num), den);
  }
};

inline uint64_t mix_seed(uint64_t a, uint64_t b) {
  SplitMix64 s(a ^ (0x9e3779b97f4a7c15ULL + (b << 6) + (b >> 2)));
  s.next();
  return s.next();
}

}  // namespace corona

#endif  // CORONA_RNG_HPP_
