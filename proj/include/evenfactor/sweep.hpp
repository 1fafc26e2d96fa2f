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

// Search for graphs whose spectral radius exceeds that of H_{n,a} but which
// have no [a,b]-factor.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "evenfactor/factor_search.hpp"
#include "evenfactor/graph.hpp"

namespace evenfactor {

inline constexpr int kSweepMaxExhaustiveOrder = 8;

// Bit k of a mask is the k-th pair (i,j), i<j, in lexicographic order.
Graph graph_from_mask(int n, std::uint64_t mask);
std::uint64_t mask_of(const Graph& g);

struct SweepSource {
  enum class Kind { kExhaustive, kRandom };
  Kind kind = Kind::kExhaustive;
  std::uint64_t seed = 0;
  std::uint64_t count = 0;

  static SweepSource exhaustive() { return {}; }
  static SweepSource random(std::uint64_t seed, std::uint64_t count) {
    return {Kind::kRandom, seed, count};
  }
};

struct SweepRecord {
  int n = 0;
  int a = 0;
  int b = 0;
  std::uint64_t index = 0;  // mask (exhaustive) or draw number (random)
  std::uint64_t mask = 0;
  double lambda1 = 0.0;
  double rho = 0.0;
  SearchStatus verdict = SearchStatus::kAbsent;
  std::optional<Factor> factor;

  bool counterexample_candidate() const { return verdict == SearchStatus::kAbsent; }
};

struct SweepSummary {
  std::uint64_t scanned = 0;
  std::uint64_t filtered_isomorph = 0;  // skipped by the degree-order filter
  std::uint64_t boundary = 0;           // |lambda1 - rho| within the guard band
  std::uint64_t candidates = 0;         // lambda1 > rho
  std::uint64_t present = 0;
  std::uint64_t absent = 0;
  std::uint64_t budget_exhausted = 0;
};

struct SweepResult {
  double rho = 0.0;
  std::vector<SweepRecord> records;  // one per candidate, in source order
  SweepSummary summary;
};

// Exhaustive sources enumerate all masks on n <= 8 vertices, keeping only
// those whose degrees are non-increasing in vertex order (every isomorphism
// class has such a labelling). Random sources draw G(n,p) with p uniform in
// [0.5, 1] per graph. Work is split over jobs threads; records are merged in
// source order.
SweepResult conjecture_sweep(int n, int a, int b, const SweepSource& source, int jobs = 1,
                             std::uint64_t budget = kDefaultSearchBudget);

}  // namespace evenfactor
