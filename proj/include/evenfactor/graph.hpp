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

// Simple undirected graphs on dense vertex ids 0..n-1, together with the
// degree, cut and connectivity quantities the factor theory is phrased in.

#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace evenfactor {

using Vertex = int;

// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(std::vector<Vertex> members);

  const std::vector<Vertex>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const;

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

// Immutable simple graph. Neighbour lists are sorted ascending.
class Graph {
 public:
  Graph() = default;

  // Deduplicates repeated pairs; rejects self-loops and out-of-range ids,
  // naming the position of the offending entry.
  static Graph build(int n, std::span<const std::pair<int, int>> edge_list);
  static Graph build(int n, std::initializer_list<std::pair<int, int>> edge_list);

  int order() const noexcept { return static_cast<int>(adjacency_.size()); }
  std::size_t size() const noexcept { return edges_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const;
  bool is_complete() const noexcept;

  // Index of edge {u,v} in edges(), or -1.
  int edge_index(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_.size() == b.adjacency_.size() && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
};

// Graph with parallel edges and loops. A loop contributes 2 to its vertex's
// degree.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(int n) : loops_(n, 0) {}
  static MultiGraph from_graph(const Graph& g);

  int order() const noexcept { return static_cast<int>(loops_.size()); }
  void add_edge(Vertex u, Vertex v, int count = 1);
  void add_loops(Vertex v, int count);

  int multiplicity(Vertex u, Vertex v) const;
  int loops(Vertex v) const { return loops_[v]; }
  int degree(Vertex v) const;
  const std::map<Edge, int>& edge_multiplicities() const noexcept {
    return multiplicity_;
  }

  // Inverse of from_graph; throws InvalidArgument if any loop or parallel
  // edge is present.
  Graph to_graph() const;

 private:
  std::map<Edge, int> multiplicity_;
  std::vector<int> loops_;
};

struct DegreeProfile {
  std::vector<int> degrees;
  int min_degree = 0;
  int max_degree = 0;
};

// Sentinel returned by sigma2 when no non-adjacent pair exists.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

DegreeProfile degree_profile(const Graph& g);

// min d(u)+d(v) over non-adjacent distinct pairs, kInfinity if complete.
int sigma2(const Graph& g);

// Connected components of G - X, ordered by smallest member.
std::vector<VertexSet> components_after_deletion(const Graph& g,
                                                 const VertexSet& removed);

// |[S,T]|. S and T must be disjoint.
int edge_cut(const Graph& g, const VertexSet& s, const VertexSet& t);

int edge_connectivity(const Graph& g);

// Complete graphs return n-1.
int vertex_connectivity(const Graph& g);

void require_disjoint(const VertexSet& s, const VertexSet& t, int n);

}  // namespace evenfactor
