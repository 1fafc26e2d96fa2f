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

// Named graph families with frozen vertex layouts.
//
// example1(a, b, t), n = 2t + 2:
//   x_{1,j} = j - 1          (j = 1..t, clique H1)
//   x_{2,j} = t + j - 1      (j = 1..t, clique H2)
//   y = 2t, z = 2t + 1       (edge yz)
//   y ~ x_{1,1..a/2-1}, x_{2,a/2..a-1};  z ~ x_{2,1..a/2-1}, x_{1,a/2..a-1}
//
// example2(a, b, t), n = (a-1) + a(a+2) + t:
//   y_j = j - 1                          (j = 1..a-1, independent)
//   x_{i,k} = (a-1) + (i-1)(a+2) + k-1   (i = 1..a, k = 1..a+2, cliques L_i)
//   x_{a+1,k} = (a-1) + a(a+2) + k-1     (k = 1..t, clique L_{a+1})
//   y_j ~ x_{i,j} for i = 1..a+1
//
// h_na(n, a): vertex 0 joined to 1..a-1; 1..n-1 form a clique.
// complete_bipartite(x, y): parts 0..x-1 and x..x+y-1.

#pragma once

#include <optional>
#include <utility>

#include "evenfactor/graph.hpp"
#include "evenfactor/rational.hpp"

namespace evenfactor {

struct Example1Layout {
  int t = 0;
  Vertex x(int i, int j) const { return (i - 1) * t + (j - 1); }
  Vertex y() const { return 2 * t; }
  Vertex z() const { return 2 * t + 1; }
};

struct Example2Layout {
  int a = 0;
  int t = 0;
  Vertex y(int j) const { return j - 1; }
  Vertex x(int i, int k) const { return (a - 1) + (i - 1) * (a + 2) + (k - 1); }
  int clique_size(int i) const { return i <= a ? a + 2 : t; }
};

// ((a+b)^2 - 3a - 4b) / (2b).
Rational example1_min_t(int a, int b);

// Printed t-interval of the second family, before the extra t >= a+2.
std::pair<Rational, Rational> example2_t_interval(int a, int b);

// Integer t range admitted by the second family, t >= a+2 included; nullopt
// when empty (e.g. small b, where the printed interval lies below a+2).
std::optional<std::pair<int, int>> example2_feasible_t(int a, int b);

// b >= (a^2 - 3a + a sqrt((a-3)(a+1))) / 2, decided in integers.
bool example2_b_admissible(int a, int b);

// Each throws ConstraintViolation listing every violated constraint.
Graph example1(int a, int b, int t);
Graph example2(int a, int b, int t);
Graph h_na(int n, int a);
Graph complete_bipartite(int x, int y);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
Graph petersen_graph();

// Circulant a-regular graph on n vertices (needs a <= n-1 and a*n even).
Graph regular_circulant(int n, int a);

}  // namespace evenfactor
