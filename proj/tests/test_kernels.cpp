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
#include <random>
#include <vector>

#include "doctest.h"
#include "evenfactor/constructions.hpp"
#include "evenfactor/error.hpp"
#include "evenfactor/kernels.hpp"
#include "evenfactor/spectral.hpp"
#include "support.hpp"

using namespace evenfactor;
namespace k = evenfactor::kernels;

namespace {

std::vector<k::Isa> available_simd() {
  std::vector<k::Isa> out;
  for (k::Isa isa : {k::Isa::kAvx2, k::Isa::kNeon}) {
    if (k::isa_available(isa)) out.push_back(isa);
  }
  return out;
}

struct Restore {
  k::Isa saved = k::active_isa();
  ~Restore() { k::set_active_isa(saved); }
};

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("names round trip") {
  for (k::Isa isa : {k::Isa::kScalar, k::Isa::kAvx2, k::Isa::kNeon}) {
    CHECK(k::isa_from_string(k::to_string(isa)) == isa);
  }
  CHECK_THROWS_AS(k::isa_from_string("sse9"), InvalidArgument);
  CHECK(k::isa_available(k::Isa::kScalar));
  CHECK(k::isa_available(k::best_available_isa()));
  CHECK(k::padded(1) == 4);
  CHECK(k::padded(8) == 8);
}

TEST_CASE("unavailable isa is refused") {
  for (k::Isa isa : {k::Isa::kAvx2, k::Isa::kNeon}) {
    if (!k::isa_available(isa)) CHECK_THROWS_AS(k::set_active_isa(isa), InvalidArgument);
  }
}

TEST_CASE("simd kernels match the scalar reference") {
  const k::KernelTable& ref = k::scalar_table();
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> val(-1.0, 1.0);
  for (k::Isa isa : available_simd()) {
    const k::KernelTable& simd = k::table_for(isa);
    CAPTURE(k::to_string(isa));
    for (std::size_t n : {1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 64, 100}) {
      const std::size_t stride = k::padded(n);
      std::vector<double> a(n * stride, 0.0);
      std::vector<double> x(stride, 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        x[i] = val(rng);
        for (std::size_t j = 0; j < n; ++j) a[i * stride + j] = val(rng);
      }
      for (double shift : {0.0, 1.0, -0.5}) {
        std::vector<double> y_ref(stride, 0.0);
        std::vector<double> y_simd(stride, 0.0);
        ref.matvec_shifted(a.data(), n, stride, x.data(), shift, y_ref.data());
        simd.matvec_shifted(a.data(), n, stride, x.data(), shift, y_simd.data());
        for (std::size_t i = 0; i < n; ++i) CHECK(y_simd[i] == doctest::Approx(y_ref[i]).epsilon(1e-12));
      }
      CHECK(simd.dot(x.data(), x.data(), n) == doctest::Approx(ref.dot(x.data(), x.data(), n)).epsilon(1e-12));
      std::vector<double> y(stride, 0.0);
      for (std::size_t i = 0; i < n; ++i) y[i] = val(rng);
      CHECK(simd.residual_inf(y.data(), x.data(), 0.7, n) ==
            doctest::Approx(ref.residual_inf(y.data(), x.data(), 0.7, n)).epsilon(1e-12));
    }
  }
}

TEST_CASE("lambda1 is the same under every available isa") {
  Restore restore;
  std::mt19937_64 rng(10);
  std::vector<Graph> graphs{petersen_graph(), example1(4, 12, 9), complete_bipartite(3, 7), h_na(13, 4)};
  for (int i = 0; i < 20; ++i) graphs.push_back(testing::random_graph(rng, 5 + i, 0.5));
  for (const Graph& g : graphs) {
    k::set_active_isa(k::Isa::kScalar);
    const double scalar = lambda1(g).lambda1;
    for (k::Isa isa : available_simd()) {
      k::set_active_isa(isa);
      CHECK(lambda1(g).lambda1 == doctest::Approx(scalar).epsilon(1e-9));
    }
  }
}

}  // TEST_SUITE
