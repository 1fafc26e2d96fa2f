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

#include "evenfactor/factor_search.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "evenfactor/detail/max_flow.hpp"
#include "evenfactor/error.hpp"
#include "evenfactor/matching.hpp"

namespace evenfactor {

namespace {

void require_even_pair(int a, int b) {
  if (a < 2 || a > b || a % 2 != 0 || b % 2 != 0) {
    throw InvalidArgument("need even a, b with 2 <= a <= b (got a=" + std::to_string(a) +
                          ", b=" + std::to_string(b) + ")");
  }
}

std::vector<int> degrees_of(int n, const std::vector<Edge>& edges) {
  std::vector<int> d(n, 0);
  for (const Edge& e : edges) {
    ++d[e.u];
    ++d[e.v];
  }
  return d;
}

// Gray-code walk over all edge subsets, tracking how many vertices violate
// the degree predicate. Returns the first subset with zero violations.
template <typename Accept>
std::optional<Factor> enumerate_subsets(const Graph& g, Accept accept) {
  const int m = static_cast<int>(g.size());
  if (m > kBruteForceMaxEdges) {
    throw ScaleError("exhaustive factor search: m=" + std::to_string(m) + " exceeds " +
                     std::to_string(kBruteForceMaxEdges));
  }
  const int n = g.order();
  std::vector<int> degree(n, 0);
  int bad = 0;
  for (Vertex v = 0; v < n; ++v) bad += accept(0) ? 0 : 1;
  const auto& edges = g.edges();
  const auto toggle = [&](Vertex v, int delta) {
    bad -= accept(degree[v]) ? 0 : 1;
    degree[v] += delta;
    bad += accept(degree[v]) ? 0 : 1;
  };
  std::uint32_t mask = 0;
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t i = 0;; ++i) {
    if (bad == 0) {
      std::vector<Edge> chosen;
      for (int k = 0; k < m; ++k) {
        if (mask >> k & 1U) chosen.push_back(edges[k]);
      }
      return Factor::from_edges(g, std::move(chosen));
    }
    if (i + 1 == total) break;
    const int k = std::countr_zero(i + 1);
    const std::uint32_t bit = std::uint32_t{1} << k;
    const int delta = (mask & bit) ? -1 : 1;
    mask ^= bit;
    toggle(edges[k].u, delta);
    toggle(edges[k].v, delta);
  }
  return std::nullopt;
}

std::optional<Factor> closed_form_bipartite(const Graph& g, int a, int b) {
  const int n = g.order();
  // Colour by BFS, then demand every cross pair be adjacent.
  std::vector<int> side(n, -1);
  std::vector<Vertex> stack;
  for (Vertex r = 0; r < n; ++r) {
    if (side[r] != -1) continue;
    side[r] = 0;
    stack.assign(1, r);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x)) {
        if (side[y] == -1) {
          side[y] = 1 - side[x];
          stack.push_back(y);
        } else if (side[y] == side[x]) {
          throw InvalidArgument("closed form needs a complete bipartite graph");
        }
      }
    }
  }
  std::vector<Vertex> parts[2];
  for (Vertex v = 0; v < n; ++v) parts[side[v]].push_back(v);
  if (parts[0].empty() || parts[1].empty() ||
      g.size() != parts[0].size() * parts[1].size()) {
    throw InvalidArgument("closed form needs a complete bipartite graph");
  }
  const auto& small = parts[0].size() <= parts[1].size() ? parts[0] : parts[1];
  const auto& large = parts[0].size() <= parts[1].size() ? parts[1] : parts[0];
  const long long x = static_cast<long long>(small.size());
  const long long y = static_cast<long long>(large.size());
  if (x < a || x * (a + b) < static_cast<long long>(a) * n) return std::nullopt;
  // Each large-side vertex takes a consecutive (cyclic) run of a small-side
  // vertices, so small-side degrees are floor or ceil of y*a/x <= b.
  std::vector<Edge> chosen;
  for (long long j = 0; j < y; ++j) {
    for (long long k = 0; k < a; ++k) {
      chosen.emplace_back(large[j], small[(j * a + k) % x]);
    }
  }
  return Factor::from_edges(g, std::move(chosen));
}

class BranchAndBound {
 public:
  BranchAndBound(const Graph& g, int a, int b, std::uint64_t budget)
      : g_(g), a_(a), b_(b), budget_(budget), state_(g.size(), kOpen),
        taken_(g.order(), 0), open_(g.order(), 0) {
    for (Vertex v = 0; v < g.order(); ++v) open_[v] = g.degree(v);
  }

  SearchStatus run() {
    try {
      return descend(0) ? SearchStatus::kPresent : SearchStatus::kAbsent;
    } catch (const Exhausted&) {
      return SearchStatus::kBudgetExhausted;
    }
  }

  std::uint64_t nodes() const { return nodes_; }

  Factor factor() const {
    std::vector<Edge> chosen;
    for (std::size_t i = 0; i < state_.size(); ++i) {
      if (state_[i] == kIn) chosen.push_back(g_.edges()[i]);
    }
    return Factor::from_edges(g_, std::move(chosen));
  }

 private:
  struct Exhausted {};
  static constexpr char kOpen = 0;
  static constexpr char kIn = 1;
  static constexpr char kOut = 2;

  bool locally_feasible(Vertex v) const {
    return taken_[v] <= b_ && taken_[v] + open_[v] >= a_;
  }

  // Lower-bounded flow on the bipartite double cover: v_L -> w_R and
  // w_L -> v_R for each open edge vw, with each copy of v carrying between
  // max(0, a - taken) and b - taken units. Any completion of the current
  // partial factor yields such a flow.
  bool double_cover_feasible() const {
    const int n = g_.order();
    const int src = 2 * n;
    const int snk = 2 * n + 1;
    const int super_src = 2 * n + 2;
    const int super_snk = 2 * n + 3;
    detail::MaxFlow flow(2 * n + 4);
    std::vector<int> excess(2 * n + 4, 0);
    const auto bounded = [&](int from, int to, int lo, int hi) {
      if (hi > lo) flow.add_arc(from, to, hi - lo);
      excess[to] += lo;
      excess[from] -= lo;
    };
    for (Vertex v = 0; v < n; ++v) {
      const int lo = std::max(0, a_ - taken_[v]);
      const int hi = b_ - taken_[v];
      bounded(src, v, lo, hi);
      bounded(n + v, snk, lo, hi);
    }
    for (std::size_t i = 0; i < state_.size(); ++i) {
      if (state_[i] != kOpen) continue;
      const Edge& e = g_.edges()[i];
      flow.add_arc(e.u, n + e.v, 1);
      flow.add_arc(e.v, n + e.u, 1);
    }
    flow.add_arc(snk, src, detail::MaxFlow::kUnbounded);
    int demand = 0;
    for (int x = 0; x < 2 * n + 2; ++x) {
      if (excess[x] > 0) {
        flow.add_arc(super_src, x, excess[x]);
        demand += excess[x];
      } else if (excess[x] < 0) {
        flow.add_arc(x, super_snk, -excess[x]);
      }
    }
    return flow.run(super_src, super_snk) == demand;
  }

  void set(std::size_t i, char value) {
    const Edge& e = g_.edges()[i];
    const int dir = value == kOpen ? -1 : 1;
    if (state_[i] == kIn || value == kIn) {
      taken_[e.u] += dir;
      taken_[e.v] += dir;
    }
    open_[e.u] -= dir;
    open_[e.v] -= dir;
    state_[i] = value;
  }

  bool descend(std::size_t next) {
    if (++nodes_ > budget_) throw Exhausted{};
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (!locally_feasible(v)) return false;
    }
    if (!double_cover_feasible()) return false;
    while (next < state_.size() && state_[next] != kOpen) ++next;
    if (next == state_.size()) return true;
    for (char choice : {kIn, kOut}) {
      set(next, choice);
      if (descend(next + 1)) return true;
      set(next, kOpen);
    }
    return false;
  }

  const Graph& g_;
  int a_;
  int b_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<char> state_;
  std::vector<int> taken_;
  std::vector<int> open_;
};

}  // namespace

Factor Factor::from_edges(const Graph& host, std::vector<Edge> chosen) {
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  for (const Edge& e : chosen) {
    if (e.u < 0 || e.v >= host.order() || !host.adjacent(e.u, e.v)) {
      throw InvalidArgument("factor edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            ") is not an edge of the host graph");
    }
  }
  Factor f;
  f.degrees = degrees_of(host.order(), chosen);
  f.edges = std::move(chosen);
  return f;
}

bool verify_factor(const Graph& g, const Factor& f, int a, int b, bool require_even) {
  for (const Edge& e : f.edges) {
    if (e.u < 0 || e.v >= g.order() || !g.adjacent(e.u, e.v)) {
      throw InvalidArgument("factor edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            ") is not an edge of the host graph");
    }
  }
  if (!std::is_sorted(f.edges.begin(), f.edges.end()) ||
      std::adjacent_find(f.edges.begin(), f.edges.end()) != f.edges.end()) {
    return false;
  }
  const std::vector<int> d = degrees_of(g.order(), f.edges);
  if (d != f.degrees) return false;
  return std::all_of(d.begin(), d.end(), [&](int x) {
    return a <= x && x <= b && (!require_even || x % 2 == 0);
  });
}

std::optional<Factor> brute_force_even_factor(const Graph& g, int a, int b) {
  require_even_pair(a, b);
  return enumerate_subsets(g, [a, b](int d) { return a <= d && d <= b && d % 2 == 0; });
}

MultiGraph loop_augment(const Graph& g, int a, int b) {
  require_even_pair(a, b);
  MultiGraph m = MultiGraph::from_graph(g);
  for (Vertex v = 0; v < g.order(); ++v) m.add_loops(v, (b - a) / 2);
  return m;
}

DeficientVertex::DeficientVertex(Vertex v, int degree, int target)
    : std::invalid_argument("vertex " + std::to_string(v) + " has degree " +
                            std::to_string(degree) + " < " + std::to_string(target)),
      vertex_(v) {}

MatchingInstance tutte_gadget(const MultiGraph& m, int target_degree) {
  const int n = m.order();
  MatchingInstance inst;
  inst.target_degree = target_degree;
  inst.ports.assign(n, {});
  inst.core.assign(n, {});
  int next = 0;
  for (const auto& [e, count] : m.edge_multiplicities()) {
    for (int k = 0; k < count; ++k) {
      const int pu = next++;
      const int pv = next++;
      inst.ports[e.u].push_back(pu);
      inst.ports[e.v].push_back(pv);
      inst.edges.push_back({pu, pv, GadgetEdgeKind::kHostEdge, e, -1});
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    for (int k = 0; k < m.loops(v); ++k) {
      const int p1 = next++;
      const int p2 = next++;
      inst.ports[v].push_back(p1);
      inst.ports[v].push_back(p2);
      inst.edges.push_back({p1, p2, GadgetEdgeKind::kHostLoop, Edge{}, v});
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    const int degree = static_cast<int>(inst.ports[v].size());
    if (degree < target_degree) throw DeficientVertex(v, degree, target_degree);
  }
  for (Vertex v = 0; v < n; ++v) {
    const int degree = static_cast<int>(inst.ports[v].size());
    for (int k = 0; k < degree - target_degree; ++k) {
      const int c = next++;
      inst.core[v].push_back(c);
      for (int p : inst.ports[v]) {
        inst.edges.push_back({c, p, GadgetEdgeKind::kInternal, Edge{}, v});
      }
    }
  }
  inst.vertex_count = next;
  return inst;
}

std::vector<int> max_matching(const MatchingInstance& instance) {
  std::vector<std::vector<int>> adjacency(instance.vertex_count);
  for (const GadgetEdge& e : instance.edges) {
    adjacency[e.u].push_back(e.v);
    adjacency[e.v].push_back(e.u);
  }
  for (auto& nbrs : adjacency) std::sort(nbrs.begin(), nbrs.end());
  const std::vector<int> mate = max_cardinality_matching(adjacency);
  std::vector<int> chosen;
  for (std::size_t i = 0; i < instance.edges.size(); ++i) {
    const GadgetEdge& e = instance.edges[i];
    if (mate[e.u] == e.v) chosen.push_back(static_cast<int>(i));
  }
  return chosen;
}

Factor decode_matching(const MatchingInstance& instance, const Graph& host,
                       const std::vector<int>& matching) {
  std::vector<Edge> chosen;
  for (int i : matching) {
    const GadgetEdge& e = instance.edges.at(i);
    if (e.kind == GadgetEdgeKind::kHostEdge) chosen.push_back(e.host_edge);
  }
  return Factor::from_edges(host, std::move(chosen));
}

std::vector<int> encode_factor(const MatchingInstance& instance, const Graph& host,
                               const Factor& factor) {
  const int n = host.order();
  const int b = instance.target_degree;
  std::vector<char> used(instance.vertex_count, 0);
  std::vector<int> matching;
  std::vector<int> loops_wanted(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    const int missing = b - factor.degrees.at(v);
    if (missing < 0 || missing % 2 != 0) {
      throw InvalidArgument("factor degree at " + std::to_string(v) + " cannot be padded to " +
                            std::to_string(b));
    }
    loops_wanted[v] = missing / 2;
  }
  for (std::size_t i = 0; i < instance.edges.size(); ++i) {
    const GadgetEdge& e = instance.edges[i];
    bool take = false;
    if (e.kind == GadgetEdgeKind::kHostEdge) {
      take = std::binary_search(factor.edges.begin(), factor.edges.end(), e.host_edge);
    } else if (e.kind == GadgetEdgeKind::kHostLoop && loops_wanted[e.host_vertex] > 0) {
      --loops_wanted[e.host_vertex];
      take = true;
    }
    if (take) {
      used[e.u] = used[e.v] = 1;
      matching.push_back(static_cast<int>(i));
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (loops_wanted[v] > 0) {
      throw InvalidArgument("not enough loops at " + std::to_string(v) + " to encode factor");
    }
  }
  // Remaining ports of each vertex pair up with its core nodes.
  for (std::size_t i = 0; i < instance.edges.size(); ++i) {
    const GadgetEdge& e = instance.edges[i];
    if (e.kind != GadgetEdgeKind::kInternal || used[e.u] || used[e.v]) continue;
    used[e.u] = used[e.v] = 1;
    matching.push_back(static_cast<int>(i));
  }
  std::sort(matching.begin(), matching.end());
  return matching;
}

FactorSearchResult find_even_factor(const Graph& g, int a, int b) {
  require_even_pair(a, b);
  FactorSearchResult result;
  if (g.order() == 0) {
    result.status = SearchStatus::kPresent;
    result.factor = Factor{};
    return result;
  }
  const DegreeProfile profile = degree_profile(g);
  if (profile.min_degree < a) {
    result.reason = "delta(G) = " + std::to_string(profile.min_degree) + " < a = " +
                    std::to_string(a);
    return result;
  }
  const MatchingInstance instance = tutte_gadget(loop_augment(g, a, b), b);
  const std::vector<int> matching = max_matching(instance);
  result.nodes = static_cast<std::uint64_t>(instance.vertex_count);
  if (2 * matching.size() != static_cast<std::size_t>(instance.vertex_count)) {
    result.reason = "gadget on " + std::to_string(instance.vertex_count) +
                    " vertices has maximum matching " + std::to_string(matching.size()) +
                    " (not perfect)";
    return result;
  }
  Factor f = decode_matching(instance, g, matching);
  if (!verify_factor(g, f, a, b, true)) {
    throw std::logic_error("decoded perfect matching does not verify as an even factor");
  }
  result.status = SearchStatus::kPresent;
  result.factor = std::move(f);
  return result;
}

FactorSearchResult find_ab_factor(const Graph& g, int a, int b, std::uint64_t budget,
                                  SearchRegime regime) {
  if (a < 0 || a > b) throw InvalidArgument("need 0 <= a <= b");
  FactorSearchResult result;
  std::optional<Factor> found;
  switch (regime) {
    case SearchRegime::kExhaustive:
      found = enumerate_subsets(g, [a, b](int d) { return a <= d && d <= b; });
      break;
    case SearchRegime::kClosedForm:
      found = closed_form_bipartite(g, a, b);
      break;
    case SearchRegime::kAuto:
    case SearchRegime::kBranchAndBound: {
      BranchAndBound search(g, a, b, budget);
      const SearchStatus status = search.run();
      result.nodes = search.nodes();
      if (status == SearchStatus::kBudgetExhausted) {
        result.status = status;
        result.reason = "search budget of " + std::to_string(budget) + " nodes exhausted";
        return result;
      }
      if (status == SearchStatus::kPresent) found = search.factor();
      break;
    }
  }
  if (found) {
    if (!verify_factor(g, *found, a, b, false)) {
      throw std::logic_error("factor search returned an invalid factor");
    }
    result.status = SearchStatus::kPresent;
    result.factor = std::move(found);
  } else {
    result.status = SearchStatus::kAbsent;
  }
  return result;
}

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::kPresent: return "present";
    case SearchStatus::kAbsent: return "absent";
    case SearchStatus::kBudgetExhausted: return "budget_exhausted";
  }
  return "unknown";
}

std::string to_string(SearchRegime r) {
  switch (r) {
    case SearchRegime::kAuto: return "auto";
    case SearchRegime::kExhaustive: return "exhaustive";
    case SearchRegime::kClosedForm: return "closed_form";
    case SearchRegime::kBranchAndBound: return "branch_and_bound";
  }
  return "unknown";
}

}  // namespace evenfactor
