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

// Finding (even) [a,b]-factors.
//
// The exact route for even factors adds (b-a)/2 loops at every vertex, so that
// b-factors of the augmented multigraph are exactly the even [a,b]-factors of
// the host (each loop taken lowers the host degree by 2), and then reduces
// the b-factor question to perfect matching:
//
//   * every edge endpoint at v becomes a "port" node of v, a loop two ports;
//   * each edge (and each loop) becomes one gadget edge joining its two ports;
//   * v gets d'(v) - b "core" nodes, each joined to every port of v.
//
// A perfect matching saturates the core, leaving exactly b ports of v to be
// matched along their edge, and conversely.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "evenfactor/graph.hpp"

namespace evenfactor {

// Spanning subgraph of a host graph, given by its edges.
struct Factor {
  std::vector<Edge> edges;  // sorted
  std::vector<int> degrees;

  // Sorts and deduplicates; throws InvalidArgument on an edge not in host.
  static Factor from_edges(const Graph& host, std::vector<Edge> chosen);
};

// True iff F's degrees match its edges and every vertex has degree in [a,b]
// (and even, if requested). Throws InvalidArgument on an edge outside G.
bool verify_factor(const Graph& g, const Factor& f, int a, int b, bool require_even);

// Exhaustive Gray-code enumeration of all 2^m edge subsets; m <= 24.
inline constexpr int kBruteForceMaxEdges = 24;
std::optional<Factor> brute_force_even_factor(const Graph& g, int a, int b);

// G with (b-a)/2 loops at every vertex.
MultiGraph loop_augment(const Graph& g, int a, int b);

enum class GadgetEdgeKind { kHostEdge, kHostLoop, kInternal };

struct GadgetEdge {
  int u = 0;
  int v = 0;
  GadgetEdgeKind kind = GadgetEdgeKind::kInternal;
  Edge host_edge;        // kHostEdge
  Vertex host_vertex = -1;  // kHostLoop: the loop's vertex; kInternal: the owner
};

struct MatchingInstance {
  int vertex_count = 0;
  int target_degree = 0;
  std::vector<GadgetEdge> edges;
  std::vector<std::vector<int>> ports;  // per host vertex
  std::vector<std::vector<int>> core;   // per host vertex
};

// Thrown by tutte_gadget when some vertex has degree below the target.
class DeficientVertex : public std::invalid_argument {
 public:
  DeficientVertex(Vertex v, int degree, int target);
  Vertex vertex() const noexcept { return vertex_; }

 private:
  Vertex vertex_;
};

MatchingInstance tutte_gadget(const MultiGraph& m, int target_degree);

// Indices into instance.edges of a maximum matching.
std::vector<int> max_matching(const MatchingInstance& instance);

// Host edges selected by a matching of the gadget.
Factor decode_matching(const MatchingInstance& instance, const Graph& host,
                       const std::vector<int>& matching);

// A perfect matching of the gadget encoding an even [a,b]-factor of host,
// as indices into instance.edges. The instance must come from
// tutte_gadget(loop_augment(host, a, b), b).
std::vector<int> encode_factor(const MatchingInstance& instance, const Graph& host,
                               const Factor& factor);

enum class SearchStatus { kPresent, kAbsent, kBudgetExhausted };

struct FactorSearchResult {
  SearchStatus status = SearchStatus::kAbsent;
  std::optional<Factor> factor;
  std::string reason;
  std::uint64_t nodes = 0;
};

// Exact; a returned factor has been re-verified.
FactorSearchResult find_even_factor(const Graph& g, int a, int b);

enum class SearchRegime {
  kAuto,            // branch-and-bound
  kExhaustive,      // 2^m enumeration, m <= 24
  kClosedForm,      // complete bipartite hosts only
  kBranchAndBound,  // edge branching with a max-flow feasibility bound
};

inline constexpr std::uint64_t kDefaultSearchBudget = 5'000'000;

// Parity-free [a,b]-factor search. Budget counts search nodes; running out is
// reported as kBudgetExhausted, never as absence.
FactorSearchResult find_ab_factor(const Graph& g, int a, int b,
                                  std::uint64_t budget = kDefaultSearchBudget,
                                  SearchRegime regime = SearchRegime::kAuto);

std::string to_string(SearchStatus s);
std::string to_string(SearchRegime r);

}  // namespace evenfactor
