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
#include "evenfactor/criteria.hpp"
#include "evenfactor/error.hpp"
#include "support.hpp"

using namespace evenfactor;

namespace {

std::vector<int> constant(int n, int value) { return std::vector<int>(n, value); }

// Largest deficiency by plain enumeration of all 3^n assignments.
int brute_max_deficiency(const Graph& g, int a, int b) {
  const int n = g.order();
  int total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  int best = 0;
  for (int code = 0; code < total; ++code) {
    std::vector<Vertex> s;
    std::vector<Vertex> t;
    int c = code;
    for (Vertex v = 0; v < n; ++v, c /= 3) {
      if (c % 3 == 1) s.push_back(v);
      if (c % 3 == 2) t.push_back(v);
    }
    best = std::max(best, even_factor_deficiency(g, a, b, VertexSet(s), VertexSet(t)));
  }
  return best;
}

}  // namespace

TEST_SUITE("criteria") {

TEST_CASE("odd cut count") {
  CHECK(odd_cut_q(star_graph(3), {}, {0}) == 3);
  CHECK(odd_cut_q(petersen_graph(), {0, 1}, {}) == 0);
  CHECK(odd_cut_q(cycle_graph(4), {}, {0}) == 0);
  CHECK(odd_cut_q(cycle_graph(4), {}, {0, 2}) == 0);
  CHECK(odd_cut_q(path_graph(3), {}, {0}) == 1);
}

TEST_CASE("even factor deficiency values") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const Graph g = testing::random_graph(rng, 1 + i % 8, 0.5);
    CHECK(even_factor_deficiency(g, 2, 4, {}, {}) == 0);
  }
  CHECK(even_factor_deficiency(star_graph(3), 2, 2, {}, {0}) == 2);
  CHECK(even_factor_deficiency(complete_graph(5), 4, 4, {}, {3}) == 0);
  CHECK_THROWS_AS(even_factor_deficiency(star_graph(3), 3, 3, {}, {}), InvalidArgument);
  CHECK_THROWS_AS(even_factor_deficiency(star_graph(3), 4, 2, {}, {}), InvalidArgument);
  CHECK_THROWS_AS(even_factor_deficiency(star_graph(3), 2, 2, {0}, {0}), InvalidArgument);
}

TEST_CASE("lovasz deficiency values") {
  const Graph c4 = cycle_graph(4);
  CHECK(lovasz_deficiency(c4, constant(4, 2), constant(4, 2), {}, {0}) == 0);
  const Graph k4 = complete_graph(4);
  CHECK(lovasz_deficiency(k4, constant(4, 1), constant(4, 1), {}, {}) == 0);
  const Graph k3 = complete_graph(3);
  CHECK(lovasz_deficiency(k3, constant(3, 1), constant(3, 1), {}, {}) == -1);
  // g = 0 everywhere: only components where f = 0 too can count.
  CHECK(lovasz_deficiency(k3, constant(3, 0), constant(3, 1), {}, {}) == 0);
  CHECK(lovasz_deficiency(k3, constant(3, 0), constant(3, 0), {}, {}) == 0);
}

TEST_CASE("lovasz deficiency reports every bad vertex") {
  const Graph p = path_graph(3);
  const std::vector<int> lower{2, 0, 1};
  const std::vector<int> upper{1, 3, 1};
  try {
    (void)lovasz_deficiency(p, lower, upper, {}, {});
    FAIL("expected ConstraintViolation");
  } catch (const ConstraintViolation& e) {
    CHECK(e.violations().size() == 2);
  }
}

TEST_CASE("even specialisation agrees with the general formula") {
  // For a = b even the even-factor expression and the (g,f) expression with
  // g = f = a are negatives of each other.
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> role(0, 2);
  int compared = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 2 + trial % 8;
    const Graph g = testing::random_graph(rng, n, 0.7);
    const int a = trial % 2 == 0 ? 2 : 4;
    if (degree_profile(g).min_degree < a) continue;
    std::vector<Vertex> s;
    std::vector<Vertex> t;
    for (Vertex v = 0; v < n; ++v) {
      const int r = role(rng);
      if (r == 1) s.push_back(v);
      if (r == 2) t.push_back(v);
    }
    const VertexSet ss(s);
    const VertexSet ts(t);
    const int even = even_factor_deficiency(g, a, a, ss, ts);
    const int general = lovasz_deficiency(g, constant(n, a), constant(n, a), ss, ts);
    CHECK(even == -general);
    ++compared;
  }
  CHECK(compared > 500);
}

TEST_CASE("criterion decisions and witnesses") {
  CHECK(criterion_decide(complete_graph(5), 4, 4).holds);
  CHECK(criterion_decide(cycle_graph(6), 2, 2).holds);
  const CriterionResult star = criterion_decide(star_graph(3), 2, 2);
  REQUIRE_FALSE(star.holds);
  REQUIRE(star.witness);
  // (empty, {centre}) already has value 2; the leaves give the maximum 4,
  // tied with ({centre}, leaves), and the smaller |S| wins.
  CHECK(even_factor_deficiency(star_graph(3), 2, 2, {}, {0}) == 2);
  CHECK(star.witness->s.empty());
  CHECK(star.witness->t == VertexSet{1, 2, 3});
  CHECK(star.witness->value == 4);
  CHECK(even_factor_deficiency(star_graph(3), 2, 2, {0}, {1, 2, 3}) == 4);
  CHECK_THROWS_AS(criterion_decide(complete_graph(19), 2, 2), ScaleError);
  CHECK_THROWS_AS(criterion_decide(complete_graph(8), 2, 2, 7), ScaleError);
}

TEST_CASE("criterion search matches plain enumeration") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + trial % 7;
    const Graph g = testing::random_graph(rng, n, 0.65);
    for (auto [a, b] : {std::pair{2, 2}, std::pair{2, 4}, std::pair{4, 4}}) {
      const int best = brute_max_deficiency(g, a, b);
      const CriterionResult r = criterion_decide(g, a, b);
      CHECK(r.holds == (best <= 0));
      if (!r.holds) {
        REQUIRE(r.witness);
        CHECK(r.witness->value == best);
        CHECK(even_factor_deficiency(g, a, b, r.witness->s, r.witness->t) == best);
      }
    }
  }
}

TEST_CASE("parity of the deficiency") {
  CHECK(parity_check(star_graph(3), 2, 2, {}, {0}));
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> role(0, 2);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 1 + trial % 10;
    const Graph g = testing::random_graph(rng, n, 0.5);
    std::vector<Vertex> s;
    std::vector<Vertex> t;
    for (Vertex v = 0; v < n; ++v) {
      const int r = role(rng);
      if (r == 1) s.push_back(v);
      if (r == 2) t.push_back(v);
    }
    CHECK(parity_check(g, 4, 4, VertexSet(s), VertexSet(t)));
    CHECK(parity_check(g, 2, 6, VertexSet(s), VertexSet(t)));
  }
  CHECK_THROWS_AS(parity_check(star_graph(3), 2, 3, {}, {}), InvalidArgument);
}

TEST_CASE("order bound is exact") {
  CHECK(order_bound(4, 12) == Rational(55, 3));
  CHECK(order_bound(4, 24) == Rational(181, 6));
  CHECK(order_bound(4, 4) == Rational(11));
}

TEST_CASE("main theorem conditions") {
  const ConditionReport l = main_theorem_conditions(example2(4, 24, 6), 4, 24);
  REQUIRE(l.conditions.size() == 3);
  CHECK_FALSE(l.conditions[0].holds);
  CHECK(l.conditions[0].lhs == Rational(3));
  CHECK(l.conditions[1].holds);
  CHECK(l.conditions[2].holds);
  CHECK(l.conditions[2].rhs == Rational(132, 28));
  CHECK_FALSE(l.all_hold());

  const ConditionReport k9 = main_theorem_conditions(complete_graph(9), 4, 4);
  CHECK(k9.conditions[0].holds);
  CHECK_FALSE(k9.conditions[1].holds);
  CHECK_FALSE(k9.all_hold());

  CHECK(main_theorem_conditions(complete_graph(12), 4, 4).all_hold());

  // a = 2 uses n >= b + 3.
  const ConditionReport c = main_theorem_conditions(complete_graph(7), 2, 4);
  CHECK(c.conditions[1].rhs == Rational(7));
  CHECK(c.all_hold());
  CHECK_FALSE(main_theorem_conditions(complete_graph(6), 2, 4).all_hold());
}

TEST_CASE("conditions (ii) and (iii) force delta >= a+1") {
  std::mt19937_64 rng(41);
  int seen = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 11 + trial % 8;
    const Graph g = testing::random_graph(rng, n, 0.6 + 0.35 * (trial % 3) / 2.0);
    for (auto [a, b] : {std::pair{4, 4}, std::pair{4, 6}, std::pair{6, 6}}) {
      const ConditionReport r = main_theorem_conditions(g, a, b);
      if (r.conditions[1].holds && r.conditions[2].holds) {
        ++seen;
        CHECK(degree_profile(g).min_degree >= a + 1);
      }
    }
  }
  CHECK(seen > 100);
}

TEST_CASE("conjecture conditions") {
  CHECK(conjecture_conditions(example1(4, 12, 9), 4, 12).all_hold());
  const ConditionReport l = conjecture_conditions(example2(4, 24, 6), 4, 24);
  CHECK(l.all_hold());
  CHECK(l.conditions[3].rhs == Rational(2 * 4 * 33, 28));
  CHECK_FALSE(conjecture_conditions(star_graph(3), 2, 2).conditions[0].holds);
  const ConditionReport k = conjecture_conditions(complete_graph(12), 4, 4);
  CHECK(k.conditions[3].lhs_infinite);
  CHECK(k.conditions[3].holds);
}

TEST_CASE("quadratic bound evaluation") {
  CHECK(prop_f_eval(4, 12, 19, 1, 13) == Rational(-15, 4));
  CHECK(prop_f_eval(4, 4, 11, 1, 5) < 0);
  // The third term vanishes at x = b+1.
  for (int p = 1; p <= 5; ++p) CHECK(prop_f_eval(6, 10, 30, p, 11) == prop_f_eval(6, 10, 30, 1, 11));
  CHECK_THROWS_AS(prop_f_eval(2, 4, 10, 1, 5), InvalidArgument);
  CHECK_THROWS_AS(prop_f_eval(4, 4, 10, 0, 5), InvalidArgument);
}

}  // TEST_SUITE
