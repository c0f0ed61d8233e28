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

// AVX2 variant of the planar min-distance reduction. Uses explicit
// _mm256_mul_pd/_mm256_add_pd (no FMA) to stay bit-identical with the
// scalar reference.

#include "corona/kernels/pointset.hpp"

#ifdef CORONA_HAVE_AVX2
#include <immintrin.h>
#endif

namespace corona::kernels::detail {

#ifdef CORONA_HAVE_AVX2

double min_sqdist_avx2(double px, double py, std::span<const double> xs,
                       std::span<const double> ys) {
  const size_t n = xs.size();
  size_t i = 0;
  double best;
  if (n >= 4) {
    __m256d vpx = _mm256_set1_pd(px);
    __m256d vpy = _mm256_set1_pd(py);
    __m256d vbest = _mm256_set1_pd(__builtin_huge_val());
    for (; i + 4 <= n; i += 4) {
      __m256d vx = _mm256_loadu_pd(xs.data() + i);
      __m256d vy = _mm256_loadu_pd(ys.data() + i);
      __m256d dx = _mm256_sub_pd(vpx, vx);
      __m256d dy = _mm256_sub_pd(vpy, vy);
      __m256d d = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
      vbest = _mm256_min_pd(vbest, d);
    }
    __m128d lo = _mm256_castpd256_pd128(vbest);
    __m128d hi = _mm256_extractf128_pd(vbest, 1);
    __m128d m = _mm_min_pd(lo, hi);
    m = _mm_min_sd(m, _mm_unpackhi_pd(m, m));
    best = _mm_cvtsd_f64(m);
  } else {
    double dx = px - xs[0];
    double dy = py - ys[0];
    best = dx * dx + dy * dy;
    i = 1;
  }
  for (; i < n; ++i) {
    double dx = px - xs[i];
    double dy = py - ys[i];
    double d = dx * dx + dy * dy;
    if (d < best) best = d;
  }
  return best;
}

#else

double min_sqdist_avx2(double px, double py, std::span<const double> xs,
                       std::span<const double> ys) {
  return min_sqdist_scalar(px, py, xs, ys);
}

#endif  // CORONA_HAVE_AVX2

}  // namespace corona::kernels::detail
