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

#include "corona/kernels/pointset.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

#include "corona/error.hpp"

namespace corona::kernels {

bool avx2_supported() {
#if defined(CORONA_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {

Impl initial_impl() {
  const char* env = std::getenv("CORONA_LAB_KERNEL");
  if (env != nullptr) {
    if (std::strcmp(env, "scalar") == 0) return Impl::kScalar;
    if (std::strcmp(env, "avx2") == 0) {
      if (!avx2_supported()) {
        throw Error(ErrorCode::kBadParams, "CORONA_LAB_KERNEL=avx2 but the CPU lacks AVX2");
      }
      return Impl::kAvx2;
    }
  }
  return avx2_supported() ? Impl::kAvx2 : Impl::kScalar;
}

std::atomic<Impl>& impl_slot() {
  static std::atomic<Impl> impl{initial_impl()};
  return impl;
}

}  // namespace

Impl active_impl() { return impl_slot().load(std::memory_order_relaxed); }

void set_impl(Impl impl) {
  if (impl == Impl::kAvx2 && !avx2_supported()) {
    throw Error(ErrorCode::kBadParams, "AVX2 kernel requested but the CPU lacks AVX2");
  }
  impl_slot().store(impl, std::memory_order_relaxed);
}

double min_sqdist(double px, double py, std::span<const double> xs,
                  std::span<const double> ys) {
  if (xs.empty() || xs.size() != ys.size()) {
    throw Error(ErrorCode::kInvalidArgument, "min_sqdist needs matching nonempty arrays");
  }
  return active_impl() == Impl::kAvx2 ? detail::min_sqdist_avx2(px, py, xs, ys)
                                      : detail::min_sqdist_scalar(px, py, xs, ys);
}

double directed_hausdorff_sq(std::span<const double> ax, std::span<const double> ay,
                             std::span<const double> bx, std::span<const double> by) {
  if (ax.empty() || bx.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "directed_hausdorff_sq needs nonempty sets");
  }
  double worst = 0.0;
  for (size_t i = 0; i < ax.size(); ++i) {
    double d = min_sqdist(ax[i], ay[i], bx, by);
    if (d > worst) worst = d;
  }
  return worst;
}

}  // namespace corona::kernels
