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

#include <atomic>
#include <cstdlib>

#include "evenfactor/error.hpp"
#include "evenfactor/kernels.hpp"

namespace evenfactor::kernels {

namespace {

Isa initial_isa() {
  if (const char* forced = std::getenv("EVENFACTOR_ISA")) {
    const Isa isa = isa_from_string(forced);
    if (isa_available(isa)) return isa;
  }
  return best_available_isa();
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::kNeon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa best_available_isa() {
  if (isa_available(Isa::kAvx2)) return Isa::kAvx2;
  if (isa_available(Isa::kNeon)) return Isa::kNeon;
  return Isa::kScalar;
}

const KernelTable& table_for(Isa isa) {
  if (!isa_available(isa)) throw InvalidArgument("kernel ISA " + to_string(isa) + " unavailable");
  switch (isa) {
#if defined(__x86_64__) || defined(_M_X64)
    case Isa::kAvx2:
      return avx2_table();
#endif
#if defined(__aarch64__)
    case Isa::kNeon:
      return neon_table();
#endif
    default:
      return scalar_table();
  }
}

const KernelTable& active() { return table_for(current().load()); }

Isa active_isa() { return current().load(); }

void set_active_isa(Isa isa) {
  table_for(isa);
  current().store(isa);
}

std::string to_string(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
    case Isa::kNeon: return "neon";
  }
  return "unknown";
}

Isa isa_from_string(const std::string& name) {
  if (name == "scalar") return Isa::kScalar;
  if (name == "avx2") return Isa::kAvx2;
  if (name == "neon") return Isa::kNeon;
  throw InvalidArgument("unknown kernel ISA '" + name + "'");
}

}  // namespace evenfactor::kernels
