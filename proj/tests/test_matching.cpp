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

#include <random>
#include <vector>

#include "doctest.h"
#include "evenfactor/constructions.hpp"
#include "evenfactor/matching.hpp"
#include "support.hpp"

using namespace evenfactor;

namespace {

std::vector<std::pair<int, int>> pairs_of(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

void check_valid(int n, const std::vector<std::pair<int, int>>& edges, const std::vector<int>& mate) {
  REQUIRE(mate.size() == static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    if (mate[v] == kUnmatched) continue;
    CHECK(mate[mate[v]] == v);
    bool edge_exists = false;
    for (auto [a, b] : edges) edge_exists |= (a == v && b == mate[v]) || (b == v && a == mate[v]);
    CHECK(edge_exists);
  }
}

}  // namespace

TEST_SUITE("matching") {

TEST_CASE("small named graphs") {
  const auto tri = pairs_of(complete_graph(3));
  CHECK(matching_size(max_cardinality_matching(3, tri)) == 1);
  const auto k4 = pairs_of(complete_graph(4));
  CHECK(matching_size(max_cardinality_matching(4, k4)) == 2);
  const auto pet = pairs_of(petersen_graph());
  const auto mate = max_cardinality_matching(10, pet);
  check_valid(10, pet, mate);
  CHECK(matching_size(mate) == 5);
  CHECK(testing::brute_matching_size(10, pet) == 5);
  CHECK(matching_size(max_cardinality_matching(0, {})) == 0);
}

TEST_CASE("odd cycles need blossoms") {
  // Two triangles joined by a path: maximum matching 3 on 7 vertices.
  const std::vector<std::pair<int, int>> e{{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 4}};
  const auto mate = max_cardinality_matching(7, e);
  check_valid(7, e, mate);
  CHECK(matching_size(mate) == 3);
}

TEST_CASE("maximum size matches exhaustive search") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 600; ++trial) {
    const int n = 1 + trial % 16;
    const Graph g = testing::random_graph(rng, n, 0.08 + 0.4 * (trial % 7) / 6.0);
    const auto edges = pairs_of(g);
    const auto mate = max_cardinality_matching(n, edges);
    check_valid(n, edges, mate);
    CAPTURE(trial);
    CHECK(matching_size(mate) == testing::brute_matching_size(n, edges));
  }
}

TEST_CASE("adjacency input with repeated neighbours") {
  std::vector<std::vector<int>> adj{{1, 1, 2}, {0, 0}, {0, 3}, {2}};
  const auto mate = max_cardinality_matching(adj);
  CHECK(matching_size(mate) == 2);
}

}  // TEST_SUITE
