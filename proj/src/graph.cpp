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

#include "evenfactor/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "evenfactor/detail/max_flow.hpp"
#include "evenfactor/error.hpp"

namespace evenfactor {

ConstraintViolation::ConstraintViolation(std::vector<std::string> violations)
    : InvalidArgument([&] {
        std::string joined;
        for (const auto& v : violations) {
          if (!joined.empty()) joined += "; ";
          joined += v;
        }
        return joined;
      }()),
      violations_(std::move(violations)) {}

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

Graph Graph::build(int n, std::span<const std::pair<int, int>> edge_list) {
  if (n < 0) throw InvalidArgument("vertex count must be non-negative");
  Graph g;
  g.adjacency_.resize(n);
  for (std::size_t i = 0; i < edge_list.size(); ++i) {
    const auto [u, v] = edge_list[i];
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw InvalidArgument("edge " + std::to_string(i) + " (" + std::to_string(u) +
                            "," + std::to_string(v) + ") has a vertex outside 0.." +
                            std::to_string(n - 1));
    }
    if (u == v) {
      throw InvalidArgument("edge " + std::to_string(i) + " is a self-loop at " +
                            std::to_string(u));
    }
    g.edges_.emplace_back(u, v);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  for (const Edge& e : g.edges_) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

Graph Graph::build(int n, std::initializer_list<std::pair<int, int>> edge_list) {
  return build(n, std::span<const std::pair<int, int>>(edge_list.begin(), edge_list.size()));
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

bool Graph::is_complete() const noexcept {
  const std::size_t n = adjacency_.size();
  return edges_.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

int Graph::edge_index(Vertex u, Vertex v) const {
  const Edge e(u, v);
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

MultiGraph MultiGraph::from_graph(const Graph& g) {
  MultiGraph m(g.order());
  for (const Edge& e : g.edges()) m.multiplicity_[e] = 1;
  return m;
}

void MultiGraph::add_edge(Vertex u, Vertex v, int count) {
  if (u == v) {
    add_loops(u, count);
    return;
  }
  if (u < 0 || v < 0 || u >= order() || v >= order()) {
    throw InvalidArgument("multigraph edge endpoint out of range");
  }
  if (count <= 0) return;
  multiplicity_[Edge(u, v)] += count;
}

void MultiGraph::add_loops(Vertex v, int count) {
  if (v < 0 || v >= order()) throw InvalidArgument("loop vertex out of range");
  if (count < 0) throw InvalidArgument("negative loop count");
  loops_[v] += count;
}

int MultiGraph::multiplicity(Vertex u, Vertex v) const {
  const auto it = multiplicity_.find(Edge(u, v));
  return it == multiplicity_.end() ? 0 : it->second;
}

int MultiGraph::degree(Vertex v) const {
  int d = 2 * loops_[v];
  for (const auto& [e, count] : multiplicity_) {
    if (e.u == v || e.v == v) d += count;
  }
  return d;
}

Graph MultiGraph::to_graph() const {
  std::vector<std::pair<int, int>> pairs;
  for (Vertex v = 0; v < order(); ++v) {
    if (loops_[v] != 0) throw InvalidArgument("multigraph has loops at " + std::to_string(v));
  }
  for (const auto& [e, count] : multiplicity_) {
    if (count != 1) throw InvalidArgument("multigraph has parallel edges");
    pairs.emplace_back(e.u, e.v);
  }
  return Graph::build(order(), pairs);
}

void require_disjoint(const VertexSet& s, const VertexSet& t, int n) {
  for (Vertex v : s) {
    if (v < 0 || v >= n) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
  }
  for (Vertex v : t) {
    if (v < 0 || v >= n) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
    if (s.contains(v)) {
      throw InvalidArgument("S and T overlap at vertex " + std::to_string(v));
    }
  }
}

DegreeProfile degree_profile(const Graph& g) {
  if (g.order() == 0) throw InvalidArgument("degree profile of the empty graph is undefined");
  DegreeProfile p;
  p.degrees.resize(g.order());
  for (Vertex v = 0; v < g.order(); ++v) p.degrees[v] = g.degree(v);
  const auto [lo, hi] = std::minmax_element(p.degrees.begin(), p.degrees.end());
  p.min_degree = *lo;
  p.max_degree = *hi;
  return p;
}

int sigma2(const Graph& g) {
  int best = kInfinity;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) best = std::min(best, g.degree(u) + g.degree(v));
    }
  }
  return best;
}

std::vector<VertexSet> components_after_deletion(const Graph& g, const VertexSet& removed) {
  const int n = g.order();
  std::vector<char> seen(n, 0);
  for (Vertex x : removed) {
    if (x < 0 || x >= n) throw InvalidArgument("deleted vertex out of range");
    seen[x] = 1;
  }
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> members{root};
    seen[root] = 1;
    stack.assign(1, root);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x)) {
        if (!seen[y]) {
          seen[y] = 1;
          members.push_back(y);
          stack.push_back(y);
        }
      }
    }
    out.emplace_back(std::move(members));
  }
  return out;
}

int edge_cut(const Graph& g, const VertexSet& s, const VertexSet& t) {
  require_disjoint(s, t, g.order());
  int count = 0;
  for (Vertex u : s) {
    for (Vertex v : g.neighbors(u)) count += t.contains(v) ? 1 : 0;
  }
  return count;
}

namespace {

int local_edge_connectivity(const Graph& g, Vertex s, Vertex t, int limit) {
  detail::MaxFlow flow(g.order());
  for (const Edge& e : g.edges()) {
    flow.add_arc(e.u, e.v, 1);
    flow.add_arc(e.v, e.u, 1);
  }
  return flow.run(s, t, limit);
}

// Vertex v splits into v_in = 2v and v_out = 2v+1 joined by a unit arc.
int local_vertex_connectivity(const Graph& g, Vertex s, Vertex t, int limit) {
  const int n = g.order();
  detail::MaxFlow flow(2 * n);
  for (Vertex v = 0; v < n; ++v) {
    const int cap = (v == s || v == t) ? detail::MaxFlow::kUnbounded : 1;
    flow.add_arc(2 * v, 2 * v + 1, cap);
  }
  for (const Edge& e : g.edges()) {
    flow.add_arc(2 * e.u + 1, 2 * e.v, 1);
    flow.add_arc(2 * e.v + 1, 2 * e.u, 1);
  }
  return flow.run(2 * s + 1, 2 * t, limit);
}

}  // namespace

int edge_connectivity(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw InvalidArgument("edge connectivity needs at least 2 vertices");
  // Every global minimum cut separates vertex 0 from some other vertex.
  int best = degree_profile(g).min_degree;
  for (Vertex t = 1; t < n && best > 0; ++t) {
    best = std::min(best, local_edge_connectivity(g, 0, t, best));
  }
  return best;
}

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw InvalidArgument("vertex connectivity needs at least 2 vertices");
  if (g.is_complete()) return n - 1;
  int best = n - 2;
  // A minimum separator X has |X| = kappa, so one of the first kappa+1
  // vertices lies outside X and is separated from some non-neighbour.
  for (Vertex s = 0; s < n && s <= best; ++s) {
    for (Vertex t = s + 1; t < n; ++t) {
      if (g.adjacent(s, t)) continue;
      best = std::min(best, local_vertex_connectivity(g, s, t, best));
    }
  }
  return best;
}

}  // namespace evenfactor
