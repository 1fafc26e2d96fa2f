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

#pragma once

#include <span>
#include <utility>
#include <vector>

namespace evenfactor {

inline constexpr int kUnmatched = -1;

// Maximum-cardinality matching in a general graph (Edmonds' blossom
// algorithm, O(V^3)). Returns mate[v], or kUnmatched. Neighbour order is
// taken as given, so sorted input gives a deterministic result.
std::vector<int> max_cardinality_matching(const std::vector<std::vector<int>>& adjacency);

std::vector<int> max_cardinality_matching(int n, std::span<const std::pair<int, int>> edges);

int matching_size(std::span<const int> mate);

}  // namespace evenfactor
