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

#include "evenfactor/constructions.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "evenfactor/error.hpp"

namespace evenfactor {

namespace {

using Pairs = std::vector<std::pair<int, int>>;

void add_clique(Pairs& out, const std::vector<Vertex>& members) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) out.emplace_back(members[i], members[j]);
  }
}

std::string str(long long v) { return std::to_string(v); }

}  // namespace

Rational example1_min_t(int a, int b) {
  return Rational((a + b) * (a + b) - 3 * a - 4 * b, 2 * b);
}

std::pair<Rational, Rational> example2_t_interval(int a, int b) {
  const Rational lower = Rational(-a * a - a + b - 1) + Rational(a * a - 3 * a, b);
  const Rational upper = Rational(-a * a - 2 * a + b + 2) + Rational(b, a);
  return {lower, upper};
}

std::optional<std::pair<int, int>> example2_feasible_t(int a, int b) {
  const auto [lower, upper] = example2_t_interval(a, b);
  const long long lo = std::max<long long>(ceil(lower), a + 2);
  const long long hi = floor(upper);
  if (lo > hi) return std::nullopt;
  return std::make_pair(static_cast<int>(lo), static_cast<int>(hi));
}

bool example2_b_admissible(int a, int b) {
  // 2b - a^2 + 3a >= a sqrt((a-3)(a+1))
  const long long lhs = 2LL * b - 1LL * a * a + 3LL * a;
  const long long radicand = (a - 3LL) * (a + 1LL);
  if (radicand < 0) return false;
  return lhs >= 0 && lhs * lhs >= 1LL * a * a * radicand;
}

Graph example1(int a, int b, int t) {
  std::vector<std::string> bad;
  if (a % 2 != 0) bad.push_back("a=" + str(a) + " must be even");
  if (b % 2 != 0) bad.push_back("b=" + str(b) + " must be even");
  if (3 * a < 12) bad.push_back("need 12 <= 3a, got 3a=" + str(3 * a));
  if (3 * a > b) bad.push_back("need 3a <= b, got 3a=" + str(3 * a) + " > b=" + str(b));
  if (b > 0) {
    const Rational min_t = example1_min_t(a, b);
    if (Rational(t) < min_t) {
      bad.push_back("need t >= ((a+b)^2-3a-4b)/(2b) = " + to_string(min_t) + ", got t=" + str(t));
    }
  }
  if (t < a - 1) bad.push_back("need t >= a-1 so x_{i,a-1} exists, got t=" + str(t));
  if (!bad.empty()) throw ConstraintViolation(std::move(bad));

  const Example1Layout at{t};
  Pairs edges;
  for (int i = 1; i <= 2; ++i) {
    std::vector<Vertex> clique;
    for (int j = 1; j <= t; ++j) clique.push_back(at.x(i, j));
    add_clique(edges, clique);
  }
  edges.emplace_back(at.y(), at.z());
  for (int j = 1; j <= a / 2 - 1; ++j) {
    edges.emplace_back(at.y(), at.x(1, j));
    edges.emplace_back(at.z(), at.x(2, j));
  }
  for (int j = a / 2; j <= a - 1; ++j) {
    edges.emplace_back(at.y(), at.x(2, j));
    edges.emplace_back(at.z(), at.x(1, j));
  }
  return Graph::build(2 * t + 2, edges);
}

Graph example2(int a, int b, int t) {
  std::vector<std::string> bad;
  if (a % 2 != 0 || a < 4) bad.push_back("a=" + str(a) + " must be even and >= 4");
  if (b % 2 != 0 || b < 4) bad.push_back("b=" + str(b) + " must be even and >= 4");
  if (a >= 3 && !example2_b_admissible(a, b)) {
    bad.push_back("need b >= (a^2-3a+a*sqrt((a-3)(a+1)))/2 ~ " +
                  std::to_string((a * a - 3.0 * a + a * std::sqrt((a - 3.0) * (a + 1.0))) / 2) +
                  ", got b=" + str(b));
  }
  if (a > 0 && b > 0) {
    const auto [lower, upper] = example2_t_interval(a, b);
    if (Rational(t) < lower) {
      bad.push_back("need t >= -a^2-a+b+(a^2-3a)/b-1 = " + to_string(lower) + ", got t=" + str(t));
    }
    if (Rational(t) > upper) {
      bad.push_back("need t <= -a^2-2a+b+b/a+2 = " + to_string(upper) + ", got t=" + str(t));
    }
  }
  if (t < a + 2) bad.push_back("need t >= a+2 = " + str(a + 2) + " for delta = a+1, got t=" + str(t));
  if (!bad.empty()) throw ConstraintViolation(std::move(bad));

  const Example2Layout at{a, t};
  Pairs edges;
  for (int i = 1; i <= a + 1; ++i) {
    std::vector<Vertex> clique;
    for (int k = 1; k <= at.clique_size(i); ++k) clique.push_back(at.x(i, k));
    add_clique(edges, clique);
  }
  for (int i = 1; i <= a + 1; ++i) {
    for (int j = 1; j <= a - 1; ++j) edges.emplace_back(at.y(j), at.x(i, j));
  }
  return Graph::build(a - 1 + a * (a + 2) + t, edges);
}

Graph h_na(int n, int a) {
  std::vector<std::string> bad;
  if (a < 1) bad.push_back("need a >= 1, got a=" + str(a));
  if (n < a + 1) bad.push_back("need n >= a+1, got n=" + str(n) + ", a=" + str(a));
  if (!bad.empty()) throw ConstraintViolation(std::move(bad));
  Pairs edges;
  std::vector<Vertex> clique;
  for (Vertex v = 1; v < n; ++v) clique.push_back(v);
  add_clique(edges, clique);
  for (Vertex v = 1; v <= a - 1; ++v) edges.emplace_back(0, v);
  return Graph::build(n, edges);
}

Graph complete_bipartite(int x, int y) {
  std::vector<std::string> bad;
  if (x < 1) bad.push_back("need x >= 1, got " + str(x));
  if (y < 1) bad.push_back("need y >= 1, got " + str(y));
  if (!bad.empty()) throw ConstraintViolation(std::move(bad));
  Pairs edges;
  for (Vertex u = 0; u < x; ++u) {
    for (Vertex v = x; v < x + y; ++v) edges.emplace_back(u, v);
  }
  return Graph::build(x + y, edges);
}

Graph complete_graph(int n) {
  Pairs edges;
  std::vector<Vertex> all;
  for (Vertex v = 0; v < n; ++v) all.push_back(v);
  add_clique(edges, all);
  return Graph::build(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidArgument("cycle needs n >= 3");
  Pairs edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::build(n, edges);
}

Graph path_graph(int n) {
  Pairs edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::build(n, edges);
}

Graph star_graph(int leaves) {
  Pairs edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::build(leaves + 1, edges);
}

Graph petersen_graph() {
  Pairs edges;
  for (Vertex v = 0; v < 5; ++v) {
    edges.emplace_back(v, (v + 1) % 5);
    edges.emplace_back(v, v + 5);
    edges.emplace_back(5 + v, 5 + (v + 2) % 5);
  }
  return Graph::build(10, edges);
}

Graph regular_circulant(int n, int a) {
  if (a < 0 || a > n - 1 || (a * n) % 2 != 0) {
    throw InvalidArgument("circulant needs 0 <= a <= n-1 and a*n even");
  }
  Pairs edges;
  for (Vertex v = 0; v < n; ++v) {
    for (int k = 1; k <= a / 2; ++k) edges.emplace_back(v, (v + k) % n);
    // Odd a forces even n; add the antipodal matching.
    if (a % 2 == 1) edges.emplace_back(v, (v + n / 2) % n);
  }
  return Graph::build(n, edges);
}

}  // namespace evenfactor
