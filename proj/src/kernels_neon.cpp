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

#include <arm_neon.h>

#include <cmath>

#include "evenfactor/kernels.hpp"

namespace evenfactor::kernels {

namespace {

void matvec_shifted(const double* a, std::size_t n, std::size_t stride, const double* x,
                    double shift, double* y) {
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = a + i * stride;
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    for (std::size_t j = 0; j < stride; j += 4) {
      acc0 = vfmaq_f64(acc0, vld1q_f64(row + j), vld1q_f64(x + j));
      acc1 = vfmaq_f64(acc1, vld1q_f64(row + j + 2), vld1q_f64(x + j + 2));
    }
    y[i] = vaddvq_f64(vaddq_f64(acc0, acc1)) + shift * x[i];
  }
}

double dot(const double* x, const double* y, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc = vfmaq_f64(acc, vld1q_f64(x + i), vld1q_f64(y + i));
  double total = vaddvq_f64(acc);
  for (; i < n; ++i) total += x[i] * y[i];
  return total;
}

double residual_inf(const double* y, const double* x, double lambda, std::size_t n) {
  float64x2_t worst = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t diff = vfmsq_n_f64(vld1q_f64(y + i), vld1q_f64(x + i), lambda);
    worst = vmaxq_f64(worst, vabsq_f64(diff));
  }
  double out = vmaxvq_f64(worst);
  for (; i < n; ++i) out = std::fmax(out, std::fabs(y[i] - lambda * x[i]));
  return out;
}

}  // namespace

const KernelTable& neon_table() {
  static const KernelTable table{matvec_shifted, dot, residual_inf};
  return table;
}

}  // namespace evenfactor::kernels
