// Copyright 2026 The Safe3Step Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <immintrin.h>

#include <cmath>
#include <cstddef>

#include "s3s/sweep_kernels.hpp"

namespace s3s::kernels {

namespace {

double horizontal_max(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d m = _mm_max_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_max_sd(m, _mm_unpackhi_pd(m, m)));
}

int horizontal_max(__m128i v) {
  v = _mm_max_epi32(v, _mm_shuffle_epi32(v, _MM_SHUFFLE(1, 0, 3, 2)));
  v = _mm_max_epi32(v, _mm_shuffle_epi32(v, _MM_SHUFFLE(2, 3, 0, 1)));
  return _mm_cvtsi128_si32(v);
}

}  // namespace

// Four teams per iteration, one per lane. Each lane walks its own game list
// in order, so the per-team sum is formed exactly as in sweep_scalar; lanes
// that run out of games are frozen with a blend rather than fed zeros, which
// would flip the sign of a -0.0 accumulator.
double sweep_avx2(const SweepArgs& a) {
  const std::size_t n = a.next.size();
  const std::int32_t* offsets = a.offsets.data();
  const std::int32_t* opponents = a.opponents.data();
  const double* ratings = a.ratings.data();
  const double* margins = a.margins.data();

  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  __m256d max_delta = _mm256_setzero_pd();

  std::size_t t = 0;
  for (; t + 4 <= n; t += 4) {
    const __m128i begin =
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(offsets + t));
    const __m128i end =
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(offsets + t + 1));
    const __m128i degree = _mm_sub_epi32(end, begin);
    const int max_degree = horizontal_max(degree);

    __m256d acc = _mm256_setzero_pd();
    for (int k = 0; k < max_degree; ++k) {
      const __m128i kv = _mm_set1_epi32(k);
      const __m128i live32 = _mm_cmpgt_epi32(degree, kv);
      const __m256d live = _mm256_castsi256_pd(_mm256_cvtepi32_epi64(live32));
      const __m128i slot = _mm_add_epi32(begin, kv);
      const __m128i opp =
          _mm_mask_i32gather_epi32(_mm_setzero_si128(), opponents, slot, live32, 4);
      const __m256d opp_rating =
          _mm256_mask_i32gather_pd(_mm256_setzero_pd(), ratings, opp, live, 8);
      const __m256d margin =
          _mm256_mask_i32gather_pd(_mm256_setzero_pd(), margins, slot, live, 8);
      const __m256d term = _mm256_add_pd(opp_rating, margin);
      acc = _mm256_blendv_pd(acc, _mm256_add_pd(acc, term), live);
    }

    const __m256d r = _mm256_loadu_pd(ratings + t);
    const __m256d has_games = _mm256_castsi256_pd(_mm256_cvtepi32_epi64(
        _mm_cmpgt_epi32(degree, _mm_setzero_si128())));
    const __m256d mean = _mm256_div_pd(acc, _mm256_cvtepi32_pd(degree));
    const __m256d relaxed = _mm256_mul_pd(half, _mm256_add_pd(r, mean));
    const __m256d next = _mm256_blendv_pd(r, relaxed, has_games);
    _mm256_storeu_pd(a.next.data() + t, next);

    const __m256d delta = _mm256_andnot_pd(sign_mask, _mm256_sub_pd(next, r));
    max_delta = _mm256_max_pd(max_delta, delta);
  }

  double result = horizontal_max(max_delta);
  if (t < n) {
    // Tail, same arithmetic as sweep_scalar.
    for (std::size_t i = t; i < n; ++i) {
      const std::int32_t b = offsets[i];
      const std::int32_t e = offsets[i + 1];
      const double r = ratings[i];
      double next = r;
      if (e > b) {
        double acc = 0.0;
        for (std::int32_t k = b; k < e; ++k) {
          const double term =
              ratings[static_cast<std::size_t>(opponents[k])] + margins[k];
          acc = acc + term;
        }
        next = 0.5 * (r + acc / static_cast<double>(e - b));
      }
      a.next[i] = next;
      const double d = std::fabs(next - r);
      if (d > result) result = d;
    }
  }
  return result;
}

}  // namespace s3s::kernels
