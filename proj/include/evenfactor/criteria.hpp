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

// Deficiency expressions from (g,f)-factor theory, specialised to even
// [a,b]-factors, plus exact checkers for the hypotheses of the sufficient
// condition and of the conjecture it answers.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "evenfactor/graph.hpp"
#include "evenfactor/rational.hpp"

namespace evenfactor {

struct CriterionWitness {
  VertexSet s;
  VertexSet t;
  int value = 0;
};

struct CriterionResult {
  bool holds = true;
  // Set iff !holds: the lexicographically smallest (|S|,|T|,S,T) among the
  // maximisers of the deficiency.
  std::optional<CriterionWitness> witness;
  std::uint64_t nodes_visited = 0;
};

// One hypothesis "lhs relation rhs", evaluated exactly.
struct Condition {
  std::string name;
  Rational lhs;
  Rational rhs;
  bool lhs_infinite = false;
  bool holds = false;
};

struct ConditionReport {
  std::string statement;
  int a = 0;
  int b = 0;
  std::vector<Condition> conditions;

  bool all_hold() const;
};

// Components Q of G-(S u T) with |[Q,T]| odd.
int odd_cut_q(const Graph& g, const VertexSet& s, const VertexSet& t);

// q(S,T) - b|S| + a|T| - sum_{v in T} d_{G-S}(v). Requires 2 <= a <= b, both
// even. A positive value for some (S,T) is the only way the even factor
// criterion can fail.
int even_factor_deficiency(const Graph& g, int a, int b, const VertexSet& s,
                           const VertexSet& t);

// sum_T (d(v)-g(v)) + sum_S f(u) - |[S,T]| - q(S,T), where q counts
// components Q of G-(S u T) on which g = f and |[Q,T]| + f(Q) is odd.
// Throws ConstraintViolation listing every vertex with g/f out of
// 0 <= g <= f <= d.
int lovasz_deficiency(const Graph& g, std::span<const int> lower,
                      std::span<const int> upper, const VertexSet& s,
                      const VertexSet& t);

inline constexpr int kCriterionMaxOrder = 18;

// Exhaustive search over disjoint (S,T) for a positive even-factor
// deficiency. Throws ScaleError when n > max_order.
CriterionResult criterion_decide(const Graph& g, int a, int b,
                                 int max_order = kCriterionMaxOrder);

// True iff the deficiency expression has the parity of a. Only requires
// a = b (mod 2).
bool parity_check(const Graph& g, int a, int b, const VertexSet& s,
                  const VertexSet& t);

// 2a + b + (a^2 - 3a)/b - 2.
Rational order_bound(int a, int b);

// kappa >= a, n >= order_bound (n >= b+3 when a = 2), delta >= an/(a+b).
ConditionReport main_theorem_conditions(const Graph& g, int a, int b);

// kappa' >= 2, n >= order_bound, delta >= a, sigma2 >= 2an/(a+b).
ConditionReport conjecture_conditions(const Graph& g, int a, int b);

// n + (a - 1 - an/(a+b)) x + (x - 1 - b)(ax - p)/b.
Rational prop_f_eval(std::int64_t a, std::int64_t b, std::int64_t n,
                     std::int64_t p, std::int64_t x);

}  // namespace evenfactor
