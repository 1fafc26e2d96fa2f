// Copyright 2026 The evenfactor Authors.
//
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

// Built with -mavx2 -mfma; only called after a runtime CPU check.

#include <immintrin.h>

#include <cmath>

#include "evenfactor/kernels.hpp"

namespace evenfactor::kernels {

namespace {

double horizontal_sum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

// Rows are zero-padded to the stride, so the x reads past n only need x to
// be padded as well; callers pass padded vectors.
void matvec_shifted(const double* a, std::size_t n, std::size_t stride, const double* x,
                    double shift, double* y) {
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = a + i * stride;
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 8 <= stride; j += 8) {
      acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(row + j), _mm256_loadu_pd(x + j), acc0);
      acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(row + j + 4), _mm256_loadu_pd(x + j + 4), acc1);
    }
    for (; j < stride; j += 4) {
      acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(row + j), _mm256_loadu_pd(x + j), acc0);
    }
    y[i] = horizontal_sum(_mm256_add_pd(acc0, acc1)) + shift * x[i];
  }
}

double dot(const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc);
  }
  double total = horizontal_sum(acc);
  for (; i < n; ++i) total += x[i] * y[i];
  return total;
}

double residual_inf(const double* y, const double* x, double lambda, std::size_t n) {
  const __m256d lam = _mm256_set1_pd(lambda);
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  __m256d worst = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d diff = _mm256_fnmadd_pd(lam, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    worst = _mm256_max_pd(worst, _mm256_andnot_pd(sign_mask, diff));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, worst);
  double out = std::fmax(std::fmax(lanes[0], lanes[1]), std::fmax(lanes[2], lanes[3]));
  for (; i < n; ++i) out = std::fmax(out, std::fabs(y[i] - lambda * x[i]));
  return out;
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{matvec_shifted, dot, residual_inf};
  return table;
}

}  // namespace evenfactor::kernels
