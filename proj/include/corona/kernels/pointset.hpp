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

#ifndef CORONA_KERNELS_POINTSET_HPP_
#define CORONA_KERNELS_POINTSET_HPP_

#include <cstddef>
#include <span>

namespace corona::kernels {

// Planar point sets in structure-of-arrays form. These are the only hot
// float loops in the project; everything else is exact rational arithmetic.
// Both implementations compute (dx*dx + dy*dy) with plain mul/add (no FMA
// contraction) so the variants agree bit for bit and the equivalence tests
// can assert exact equality.

enum class Impl { kScalar, kAvx2 };

// Selected at startup from CPU support; CORONA_LAB_KERNEL=scalar|avx2
// overrides.
Impl active_impl();
void set_impl(Impl impl);
bool avx2_supported();

// min over i of squared distance from (px, py) to (xs[i], ys[i]); n >= 1.
double min_sqdist(double px, double py, std::span<const double> xs, std::span<const double> ys);

// max over a in A of min over b in B of squared distance.
double directed_hausdorff_sq(std::span<const double> ax, std::span<const double> ay,
                             std::span<const double> bx, std::span<const double> by);

namespace detail {
double min_sqdist_scalar(double px, double py, std::span<const double> xs,
                         std::span<const double> ys);
double min_sqdist_avx2(double px, double py, std::span<const double> xs,
                       std::span<const double> ys);
}  // namespace detail

}  // namespace corona::kernels

#endif  // CORONA_KERNELS_POINTSET_HPP_
