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

#include <algorithm>
#include <vector>

#include "doctest.h"
#include "evenfactor/constructions.hpp"
#include "evenfactor/error.hpp"
#include "evenfactor/factor_search.hpp"
#include "evenfactor/spectral.hpp"
#include "evenfactor/sweep.hpp"
#include "support.hpp"

using namespace evenfactor;

namespace {

bool same_records(const SweepResult& x, const SweepResult& y) {
  if (x.records.size() != y.records.size()) return false;
  for (std::size_t i = 0; i < x.records.size(); ++i) {
    const SweepRecord& p = x.records[i];
    const SweepRecord& q = y.records[i];
    if (p.index != q.index || p.mask != q.mask || p.lambda1 != q.lambda1 || p.verdict != q.verdict) return false;
    if (p.factor.has_value() != q.factor.has_value()) return false;
    if (p.factor && p.factor->edges != q.factor->edges) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("sweep") {

TEST_CASE("mask encoding round trips") {
  for (const Graph& g : {petersen_graph(), h_na(7, 3), Graph::build(4, {})}) {
    CHECK(graph_from_mask(g.order(), mask_of(g)) == g);
  }
  CHECK(mask_of(complete_graph(4)) == 0x3F);
}

TEST_CASE("n = 5, a = b = 2 has no counterexample candidate") {
  const SweepResult r = conjecture_sweep(5, 2, 2, SweepSource::exhaustive());
  CHECK(r.rho == doctest::Approx(3.0861301976).epsilon(1e-9));
  CHECK(r.summary.absent == 0);
  CHECK(r.summary.budget_exhausted == 0);
  CHECK(r.summary.candidates == r.records.size());
  CHECK(r.summary.candidates > 0);
  for (const SweepRecord& rec : r.records) {
    CHECK(rec.lambda1 > r.rho);
    CHECK_FALSE(rec.counterexample_candidate());
    REQUIRE(rec.factor);
    CHECK(verify_factor(graph_from_mask(5, rec.mask), *rec.factor, 2, 2, false));
  }
  // The extremal graph sits on the boundary, so it is never recorded.
  const std::uint64_t h = mask_of(h_na(5, 2));
  CHECK(std::none_of(r.records.begin(), r.records.end(), [&](const SweepRecord& x) { return x.mask == h; }));
  CHECK(r.summary.boundary >= 1);
}

TEST_CASE("unfiltered brute force over all 5-vertex graphs agrees") {
  // For a = b = 2 an [a,b]-factor is a 2-factor, which the even-factor oracle finds.
  const double r = rho(5, 2).root;
  int above = 0;
  for (unsigned mask = 0; mask < (1U << 10); ++mask) {
    const Graph g = testing::graph_of_mask(5, mask);
    if (compare_to_threshold(lambda1(g).lambda1, r) != ThresholdVerdict::kAbove) continue;
    ++above;
    CHECK(brute_force_even_factor(g, 2, 2).has_value());
  }
  CHECK(above > 0);
}

TEST_CASE("threads do not change the result") {
  const SweepResult one = conjecture_sweep(6, 2, 3, SweepSource::exhaustive(), 1);
  const SweepResult many = conjecture_sweep(6, 2, 3, SweepSource::exhaustive(), 3);
  CHECK(same_records(one, many));
  CHECK(one.summary.scanned == many.summary.scanned);
  CHECK(one.summary.filtered_isomorph == many.summary.filtered_isomorph);

  const SweepResult r1 = conjecture_sweep(8, 2, 2, SweepSource::random(7, 300), 1);
  const SweepResult r4 = conjecture_sweep(8, 2, 2, SweepSource::random(7, 300), 4);
  CHECK(same_records(r1, r4));
  CHECK(r1.summary.scanned == 300);
  const SweepResult other = conjecture_sweep(8, 2, 2, SweepSource::random(8, 300), 1);
  CHECK_FALSE(same_records(r1, other));
}

TEST_CASE("sweep argument checks") {
  CHECK_THROWS_AS(conjecture_sweep(9, 2, 2, SweepSource::exhaustive()), ScaleError);
  CHECK_THROWS_AS(conjecture_sweep(5, 3, 3, SweepSource::exhaustive()), InvalidArgument);
  CHECK_THROWS_AS(conjecture_sweep(5, 2, 1, SweepSource::exhaustive()), InvalidArgument);
  CHECK_THROWS_AS(conjecture_sweep(12, 2, 2, SweepSource::random(1, 1)), ScaleError);
}

}  // TEST_SUITE
