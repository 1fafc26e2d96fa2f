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

// Test-only helpers: random graphs and slow, obviously-correct oracles.

#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "evenfactor/graph.hpp"

namespace evenfactor::testing {

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) pairs.emplace_back(i, j);
    }
  }
  return Graph::build(n, pairs);
}

inline Graph graph_of_mask(int n, unsigned mask) {
  std::vector<std::pair<int, int>> pairs;
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if (mask >> bit & 1U) pairs.emplace_back(i, j);
    }
  }
  return Graph::build(n, pairs);
}

inline bool connected_without(const Graph& g, unsigned removed) {
  const int n = g.order();
  int start = -1;
  int alive = 0;
  for (int v = 0; v < n; ++v) {
    if (!(removed >> v & 1U)) {
      ++alive;
      if (start < 0) start = v;
    }
  }
  if (alive <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w] && !(removed >> w & 1U)) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == alive;
}

// min over bipartitions of the crossing edge count.
inline int brute_edge_connectivity(const Graph& g) {
  const int n = g.order();
  int best = static_cast<int>(g.size());
  for (unsigned side = 1; side + 1 < (1U << n); ++side) {
    int cut = 0;
    for (const Edge& e : g.edges()) cut += ((side >> e.u) & 1U) != ((side >> e.v) & 1U);
    best = std::min(best, cut);
  }
  return best;
}

// Smallest vertex set whose removal disconnects G; n-1 for complete graphs.
inline int brute_vertex_connectivity(const Graph& g) {
  const int n = g.order();
  int best = n - 1;
  for (unsigned removed = 0; removed < (1U << n); ++removed) {
    const int k = __builtin_popcount(removed);
    if (k >= best || n - k < 2) continue;
    if (!connected_without(g, removed)) best = k;
  }
  return best;
}

// Exhaustive maximum matching by branching on the lowest free vertex.
inline int brute_matching_size(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<char> used(n, 0);
  std::function<int(int)> go = [&](int from) -> int {
    int v = from;
    while (v < n && used[v]) ++v;
    if (v >= n) return 0;
    used[v] = 1;
    int best = go(v + 1);  // leave v unmatched
    for (int w : adj[v]) {
      if (used[w]) continue;
      used[w] = 1;
      best = std::max(best, 1 + go(v + 1));
      used[w] = 0;
    }
    used[v] = 0;
    return best;
  };
  return go(0);
}

}  // namespace evenfactor::testing
