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

#include "evenfactor/criteria.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <tuple>

#include "evenfactor/error.hpp"

namespace evenfactor {

namespace {

void require_even_pair(int a, int b) {
  if (a < 2 || a > b || a % 2 != 0 || b % 2 != 0) {
    throw InvalidArgument("need even a, b with 2 <= a <= b (got a=" + std::to_string(a) +
                          ", b=" + std::to_string(b) + ")");
  }
}

// Shared body of the even-factor deficiency; parity_check relaxes the
// evenness requirement on (a,b).
int deficiency_expression(const Graph& g, int a, int b, const VertexSet& s,
                          const VertexSet& t) {
  int value = odd_cut_q(g, s, t) - b * static_cast<int>(s.size()) +
              a * static_cast<int>(t.size());
  for (Vertex v : t) {
    for (Vertex w : g.neighbors(v)) value -= s.contains(w) ? 0 : 1;
  }
  return value;
}

using Mask = std::uint32_t;

struct MaskGraph {
  int n = 0;
  Mask all = 0;
  std::vector<Mask> nbr;
};

MaskGraph to_masks(const Graph& g) {
  MaskGraph m;
  m.n = g.order();
  m.all = m.n == 32 ? ~Mask{0} : ((Mask{1} << m.n) - 1);
  m.nbr.assign(m.n, 0);
  for (const Edge& e : g.edges()) {
    m.nbr[e.u] |= Mask{1} << e.v;
    m.nbr[e.v] |= Mask{1} << e.u;
  }
  return m;
}

std::vector<Vertex> members(Mask mask) {
  std::vector<Vertex> out;
  while (mask != 0) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

class CriterionSearch {
 public:
  CriterionSearch(const MaskGraph& g, int a, int b) : g_(g), a_(a), b_(b) {}

  void run() { visit(0, 0, 0, 0); }

  int best_value() const { return best_; }
  bool has_witness() const { return found_; }
  Mask best_s() const { return best_s_; }
  Mask best_t() const { return best_t_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  int leaf_value(Mask s, Mask t) const {
    const Mask rest = g_.all & ~(s | t);
    int q = 0;
    Mask unvisited = rest;
    while (unvisited != 0) {
      Mask comp = unvisited & (~unvisited + 1);
      Mask frontier = comp;
      while (frontier != 0) {
        Mask grow = 0;
        for (Mask f = frontier; f != 0; f &= f - 1) grow |= g_.nbr[std::countr_zero(f)];
        frontier = grow & rest & ~comp;
        comp |= frontier;
      }
      unvisited &= ~comp;
      int cut = 0;
      for (Mask c = comp; c != 0; c &= c - 1) cut += std::popcount(g_.nbr[std::countr_zero(c)] & t);
      q += cut & 1;
    }
    int value = q - b_ * std::popcount(s) + a_ * std::popcount(t);
    for (Mask x = t; x != 0; x &= x - 1) value -= std::popcount(g_.nbr[std::countr_zero(x)] & ~s);
    return value;
  }

  // Upper bound on the value of any completion of a partial assignment of
  // vertices 0..next-1.
  int bound(Mask s, Mask t, Mask neither, int next) const {
    const Mask kept = t | neither;
    int value = -b_ * std::popcount(s) + std::popcount(neither);
    for (Mask x = t; x != 0; x &= x - 1) {
      value += a_ - std::popcount(g_.nbr[std::countr_zero(x)] & kept);
    }
    for (int v = next; v < g_.n; ++v) {
      value += std::max(1, a_ - std::popcount(g_.nbr[v] & kept));
    }
    return value;
  }

  bool better(int value, Mask s, Mask t) const {
    if (!found_ || value > best_) return true;
    if (value < best_) return false;
    const auto key = [](Mask ms, Mask mt) {
      return std::make_tuple(std::popcount(ms), std::popcount(mt), members(ms), members(mt));
    };
    return key(s, t) < key(best_s_, best_t_);
  }

  void visit(int next, Mask s, Mask t, Mask neither) {
    ++nodes_;
    if (next == g_.n) {
      const int value = leaf_value(s, t);
      if (value > 0 && better(value, s, t)) {
        best_ = value;
        best_s_ = s;
        best_t_ = t;
        found_ = true;
      }
      return;
    }
    const int ub = bound(s, t, neither, next);
    // Values share the parity of a (even), so ub <= 1 means no positive value.
    if (ub <= 1 || (found_ && ub < best_)) return;
    const Mask bit = Mask{1} << next;
    visit(next + 1, s, t, neither | bit);
    visit(next + 1, s, t | bit, neither);
    visit(next + 1, s | bit, t, neither);
  }

  const MaskGraph& g_;
  int a_;
  int b_;
  int best_ = 0;
  bool found_ = false;
  Mask best_s_ = 0;
  Mask best_t_ = 0;
  std::uint64_t nodes_ = 0;
};

Condition compare_at_least(std::string name, const Rational& lhs, const Rational& rhs) {
  Condition c;
  c.name = std::move(name);
  c.lhs = lhs;
  c.rhs = rhs;
  c.holds = lhs >= rhs;
  return c;
}

}  // namespace

bool ConditionReport::all_hold() const {
  return std::all_of(conditions.begin(), conditions.end(),
                     [](const Condition& c) { return c.holds; });
}

int odd_cut_q(const Graph& g, const VertexSet& s, const VertexSet& t) {
  require_disjoint(s, t, g.order());
  std::vector<Vertex> removed(s.begin(), s.end());
  removed.insert(removed.end(), t.begin(), t.end());
  int q = 0;
  for (const VertexSet& comp : components_after_deletion(g, VertexSet(removed))) {
    int cut = 0;
    for (Vertex v : comp) {
      for (Vertex w : g.neighbors(v)) cut += t.contains(w) ? 1 : 0;
    }
    q += cut % 2;
  }
  return q;
}

int even_factor_deficiency(const Graph& g, int a, int b, const VertexSet& s,
                           const VertexSet& t) {
  require_even_pair(a, b);
  return deficiency_expression(g, a, b, s, t);
}

int lovasz_deficiency(const Graph& g, std::span<const int> lower,
                      std::span<const int> upper, const VertexSet& s,
                      const VertexSet& t) {
  const int n = g.order();
  if (static_cast<int>(lower.size()) != n || static_cast<int>(upper.size()) != n) {
    throw InvalidArgument("g and f must have one entry per vertex");
  }
  std::vector<std::string> violations;
  for (Vertex v = 0; v < n; ++v) {
    if (!(0 <= lower[v] && lower[v] <= upper[v] && upper[v] <= g.degree(v))) {
      violations.push_back("vertex " + std::to_string(v) + ": need 0 <= g=" +
                           std::to_string(lower[v]) + " <= f=" + std::to_string(upper[v]) +
                           " <= d=" + std::to_string(g.degree(v)));
    }
  }
  if (!violations.empty()) throw ConstraintViolation(std::move(violations));
  require_disjoint(s, t, n);

  int value = 0;
  for (Vertex v : t) value += g.degree(v) - lower[v];
  for (Vertex u : s) value += upper[u];
  value -= edge_cut(g, s, t);

  std::vector<Vertex> removed(s.begin(), s.end());
  removed.insert(removed.end(), t.begin(), t.end());
  for (const VertexSet& comp : components_after_deletion(g, VertexSet(removed))) {
    bool tight = true;
    int parity = 0;
    for (Vertex v : comp) {
      tight = tight && lower[v] == upper[v];
      parity += upper[v];
      for (Vertex w : g.neighbors(v)) parity += t.contains(w) ? 1 : 0;
    }
    if (tight && parity % 2 == 1) --value;
  }
  return value;
}

CriterionResult criterion_decide(const Graph& g, int a, int b, int max_order) {
  require_even_pair(a, b);
  if (max_order < 0 || max_order > 31) {
    throw InvalidArgument("criterion max order must lie in 0..31");
  }
  if (g.order() > max_order) {
    throw ScaleError("criterion_decide: n=" + std::to_string(g.order()) +
                     " exceeds the exhaustive limit " + std::to_string(max_order));
  }
  const MaskGraph masks = to_masks(g);
  CriterionSearch search(masks, a, b);
  search.run();
  CriterionResult result;
  result.nodes_visited = search.nodes();
  if (search.has_witness()) {
    result.holds = false;
    result.witness = CriterionWitness{VertexSet(members(search.best_s())),
                                      VertexSet(members(search.best_t())),
                                      search.best_value()};
  }
  return result;
}

bool parity_check(const Graph& g, int a, int b, const VertexSet& s, const VertexSet& t) {
  if (a < 1 || b < 1 || (a - b) % 2 != 0) {
    throw InvalidArgument("parity check needs positive a, b of the same parity");
  }
  const int value = deficiency_expression(g, a, b, s, t);
  return ((value - a) % 2 + 2) % 2 == 0;
}

Rational order_bound(int a, int b) {
  return Rational(2 * a + b - 2) + Rational(a * a - 3 * a, b);
}

ConditionReport main_theorem_conditions(const Graph& g, int a, int b) {
  require_even_pair(a, b);
  const int n = g.order();
  ConditionReport report;
  report.statement = "main-theorem";
  report.a = a;
  report.b = b;
  const int kappa = n < 2 ? 0 : vertex_connectivity(g);
  const int delta = n == 0 ? 0 : degree_profile(g).min_degree;
  report.conditions.push_back(compare_at_least("(i) kappa >= a", kappa, a));
  if (a == 2) {
    report.conditions.push_back(compare_at_least("(ii) n >= b+3", n, b + 3));
  } else {
    report.conditions.push_back(
        compare_at_least("(ii) n >= 2a+b+(a^2-3a)/b-2", n, order_bound(a, b)));
  }
  report.conditions.push_back(
      compare_at_least("(iii) delta >= an/(a+b)", delta, Rational(a * n, a + b)));
  return report;
}

ConditionReport conjecture_conditions(const Graph& g, int a, int b) {
  require_even_pair(a, b);
  const int n = g.order();
  ConditionReport report;
  report.statement = "conjecture";
  report.a = a;
  report.b = b;
  const int kappa_edge = n < 2 ? 0 : edge_connectivity(g);
  const int delta = n == 0 ? 0 : degree_profile(g).min_degree;
  report.conditions.push_back(compare_at_least("(i) kappa' >= 2", kappa_edge, 2));
  report.conditions.push_back(
      compare_at_least("(ii) n >= 2a+b+(a^2-3a)/b-2", n, order_bound(a, b)));
  report.conditions.push_back(compare_at_least("(iii) delta >= a", delta, a));
  const int s2 = sigma2(g);
  Condition c4 = compare_at_least("(iv) sigma2 >= 2an/(a+b)", s2 == kInfinity ? 0 : s2,
                                  Rational(2 * a * n, a + b));
  if (s2 == kInfinity) {
    c4.lhs_infinite = true;
    c4.holds = true;
  }
  report.conditions.push_back(c4);
  return report;
}

Rational prop_f_eval(std::int64_t a, std::int64_t b, std::int64_t n, std::int64_t p,
                     std::int64_t x) {
  if (a < 4 || a > b || p <= 0) {
    throw InvalidArgument("f(x) needs 4 <= a <= b and p > 0");
  }
  const Rational slope = Rational(a - 1) - Rational(a * n, a + b);
  return Rational(n) + slope * x + Rational((x - 1 - b) * (a * x - p), b);
}

}  // namespace evenfactor
