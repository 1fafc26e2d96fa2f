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

// Dense inner loops of the spectral code, with a scalar reference and SIMD
// variants chosen at runtime. All variants compute the same quantities; sums
// may differ in the last bits because the SIMD paths reassociate.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace evenfactor::kernels {

enum class Isa { kScalar, kAvx2, kNeon };

// Matrices are row-major with a row stride that is a multiple of kLanePad and
// zero padding past column n.
inline constexpr std::size_t kLanePad = 4;

inline std::size_t padded(std::size_t n) { return (n + kLanePad - 1) / kLanePad * kLanePad; }

struct KernelTable {
  // y = A x + shift * x
  void (*matvec_shifted)(const double* a, std::size_t n, std::size_t stride, const double* x,
                         double shift, double* y);
  double (*dot)(const double* x, const double* y, std::size_t n);
  // max_i |y_i - lambda x_i|
  double (*residual_inf)(const double* y, const double* x, double lambda, std::size_t n);
};

const KernelTable& scalar_table();
#if defined(__x86_64__) || defined(_M_X64)
const KernelTable& avx2_table();
#endif
#if defined(__aarch64__)
const KernelTable& neon_table();
#endif

bool isa_available(Isa isa);
Isa best_available_isa();

// Table in use; defaults to best_available_isa(). The EVENFACTOR_ISA
// environment variable (scalar|avx2|neon) overrides the default.
const KernelTable& active();
Isa active_isa();
// Throws InvalidArgument if isa is not available on this machine.
void set_active_isa(Isa isa);

const KernelTable& table_for(Isa isa);
std::string to_string(Isa isa);
Isa isa_from_string(const std::string& name);

}  // namespace evenfactor::kernels
