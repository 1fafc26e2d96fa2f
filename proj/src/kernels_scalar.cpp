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

#include <cmath>

#include "evenfactor/kernels.hpp"

namespace evenfactor::kernels {

namespace {

void matvec_shifted(const double* a, std::size_t n, std::size_t stride, const double* x,
                    double shift, double* y) {
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = a + i * stride;
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += row[j] * x[j];
    y[i] = acc + shift * x[i];
  }
}

double dot(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

double residual_inf(const double* y, const double* x, double lambda, std::size_t n) {
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) worst = std::fmax(worst, std::fabs(y[i] - lambda * x[i]));
  return worst;
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{matvec_shifted, dot, residual_inf};
  return table;
}

}  // namespace evenfactor::kernels
