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

#include "evenfactor/matching.hpp"

#include <algorithm>
#include <queue>

#include "evenfactor/error.hpp"

namespace evenfactor {

namespace {

class Blossom {
 public:
  explicit Blossom(const std::vector<std::vector<int>>& adjacency)
      : adj_(adjacency),
        n_(static_cast<int>(adjacency.size())),
        mate_(n_, kUnmatched),
        parent_(n_),
        base_(n_),
        in_tree_(n_),
        in_blossom_(n_),
        on_path_(n_) {}

  std::vector<int> solve() {
    greedy();
    for (int root = 0; root < n_; ++root) {
      if (mate_[root] != kUnmatched) continue;
      int end = grow_tree(root);
      while (end != kUnmatched) {
        const int prev = parent_[end];
        const int next = mate_[prev];
        mate_[end] = prev;
        mate_[prev] = end;
        end = next;
      }
    }
    return std::move(mate_);
  }

 private:
  void greedy() {
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] != kUnmatched) continue;
      for (int w : adj_[v]) {
        if (w != v && mate_[w] == kUnmatched) {
          mate_[v] = w;
          mate_[w] = v;
          break;
        }
      }
    }
  }

  int lowest_common_base(int a, int b) {
    std::fill(on_path_.begin(), on_path_.end(), 0);
    while (true) {
      a = base_[a];
      on_path_[a] = 1;
      if (mate_[a] == kUnmatched) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (on_path_[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = 1;
      in_blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  // BFS over alternating paths from root, contracting odd cycles. Returns the
  // free vertex ending an augmenting path, or kUnmatched.
  int grow_tree(int root) {
    std::fill(in_tree_.begin(), in_tree_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), kUnmatched);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    in_tree_[root] = 1;
    std::queue<int> pending;
    pending.push(root);
    while (!pending.empty()) {
      const int v = pending.front();
      pending.pop();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != kUnmatched && parent_[mate_[to]] != kUnmatched)) {
          const int b = lowest_common_base(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = b;
              if (!in_tree_[i]) {
                in_tree_[i] = 1;
                pending.push(i);
              }
            }
          }
        } else if (parent_[to] == kUnmatched) {
          parent_[to] = v;
          if (mate_[to] == kUnmatched) return to;
          in_tree_[mate_[to]] = 1;
          pending.push(mate_[to]);
        }
      }
    }
    return kUnmatched;
  }

  const std::vector<std::vector<int>>& adj_;
  int n_;
  std::vector<int> mate_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> in_tree_;
  std::vector<char> in_blossom_;
  std::vector<char> on_path_;
};

}  // namespace

std::vector<int> max_cardinality_matching(const std::vector<std::vector<int>>& adjacency) {
  return Blossom(adjacency).solve();
}

std::vector<int> max_cardinality_matching(int n, std::span<const std::pair<int, int>> edges) {
  std::vector<std::vector<int>> adjacency(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw InvalidArgument("matching edge out of range");
    if (u == v) continue;
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  for (auto& nbrs : adjacency) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
  return max_cardinality_matching(adjacency);
}

int matching_size(std::span<const int> mate) {
  int matched = 0;
  for (int m : mate) matched += m != kUnmatched ? 1 : 0;
  return matched / 2;
}

}  // namespace evenfactor
