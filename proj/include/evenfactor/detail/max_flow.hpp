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

#include <algorithm>
#include <limits>
#include <queue>
#include <vector>

namespace evenfactor::detail {

// Dinic's algorithm on integer capacities. Small and allocation-light; the
// graphs it sees are at most a few thousand arcs.
class MaxFlow {
 public:
  static constexpr int kUnbounded = std::numeric_limits<int>::max() / 4;

  explicit MaxFlow(int nodes) : head_(nodes, -1) {}

  int node_count() const { return static_cast<int>(head_.size()); }

  // Returns the arc id; the reverse arc is id ^ 1.
  int add_arc(int from, int to, int capacity) {
    const int id = static_cast<int>(arcs_.size());
    arcs_.push_back({to, head_[from], capacity});
    head_[from] = id;
    arcs_.push_back({from, head_[to], 0});
    head_[to] = id + 1;
    return id;
  }

  int flow_on(int arc) const { return arcs_[arc ^ 1].capacity; }

  // Stops early once the flow reaches limit.
  int run(int source, int sink, int limit = kUnbounded) {
    int total = 0;
    while (total < limit && build_levels(source, sink)) {
      cursor_.assign(head_.begin(), head_.end());
      while (total < limit) {
        const int pushed = augment(source, sink, limit - total);
        if (pushed == 0) break;
        total += pushed;
      }
    }
    return total;
  }

 private:
  struct Arc {
    int to;
    int next;
    int capacity;
  };

  bool build_levels(int source, int sink) {
    level_.assign(head_.size(), -1);
    std::queue<int> frontier;
    level_[source] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
      const int x = frontier.front();
      frontier.pop();
      for (int a = head_[x]; a != -1; a = arcs_[a].next) {
        if (arcs_[a].capacity > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[x] + 1;
          frontier.push(arcs_[a].to);
        }
      }
    }
    return level_[sink] >= 0;
  }

  int augment(int x, int sink, int budget) {
    if (x == sink) return budget;
    for (int& a = cursor_[x]; a != -1; a = arcs_[a].next) {
      Arc& arc = arcs_[a];
      if (arc.capacity <= 0 || level_[arc.to] != level_[x] + 1) continue;
      const int pushed = augment(arc.to, sink, std::min(budget, arc.capacity));
      if (pushed > 0) {
        arc.capacity -= pushed;
        arcs_[a ^ 1].capacity += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<int> head_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<int> cursor_;
};

}  // namespace evenfactor::detail
