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

// Reference kernel. Compiled with -ffp-contract=off so the AVX2 variant,
// which uses explicit mul/add, produces identical bits.

#include "corona/kernels/pointset.hpp"

namespace corona::kernels::detail {

double min_sqdist_scalar(double px, double py, std::span<const double> xs,
                         std::span<const double> ys) {
  double best = [&] {
    double dx = px - xs[0];
    double dy = py - ys[0];
    return dx * dx + dy * dy;
  }();
  for (size_t i = 1; i < xs.size(); ++i) {
    double dx = px - xs[i];
    double dy = py - ys[i];
    double d = dx * dx + dy * dy;
    if (d < best) best = d;
  }
  return best;
}

}  // namespace corona::kernels::detail
