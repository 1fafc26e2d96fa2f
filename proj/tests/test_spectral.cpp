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

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "doctest.h"
#include "evenfactor/constructions.hpp"
#include "evenfactor/error.hpp"
#include "evenfactor/spectral.hpp"
#include "support.hpp"

using namespace evenfactor;

namespace {

// Largest eigenvalue by cyclic Jacobi rotations; independent of the power
// iteration and of the kernels.
double jacobi_lambda_max(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (const Edge& e : g.edges()) m[e.u][e.v] = m[e.v][e.u] = 1.0;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) off += m[p][q] * m[p][q];
    }
    if (off < 1e-26) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::fabs(m[p][q]) < 1e-300) continue;
        const double theta = (m[q][q] - m[p][p]) / (2 * m[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double mkp = m[k][p];
          const double mkq = m[k][q];
          m[k][p] = c * mkp - s * mkq;
          m[k][q] = s * mkp + c * mkq;
        }
        for (int k = 0; k < n; ++k) {
          const double mpk = m[p][k];
          const double mqk = m[q][k];
          m[p][k] = c * mpk - s * mqk;
          m[q][k] = s * mpk + c * mqk;
        }
      }
    }
  }
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) best = std::max(best, m[i][i]);
  return best;
}

}  // namespace

TEST_SUITE("spectral") {

TEST_CASE("lambda1 on regular and bipartite graphs") {
  for (int n = 2; n <= 12; ++n) CHECK(lambda1(complete_graph(n)).lambda1 == doctest::Approx(n - 1).epsilon(1e-9));
  CHECK(lambda1(complete_bipartite(3, 3)).lambda1 == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(lambda1(complete_bipartite(2, 6)).lambda1 == doctest::Approx(std::sqrt(12.0)).epsilon(1e-9));
  CHECK(lambda1(cycle_graph(6)).lambda1 == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(lambda1(petersen_graph()).lambda1 == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(lambda1(Graph::build(3, {})).lambda1 == 0.0);
  CHECK_THROWS_AS(lambda1(Graph()), InvalidArgument);
  CHECK_THROWS_AS(lambda1(cycle_graph(4), 0.0), InvalidArgument);
}

TEST_CASE("residual meets the tolerance") {
  const SpectralResult r = lambda1(example2(4, 24, 6));
  CHECK(r.residual <= kLambdaTolerance);
  CHECK(r.iterations > 0);
}

TEST_CASE("disconnected graphs take the largest component") {
  const Graph g = Graph::build(7, {{0, 1}, {2, 3}, {3, 4}, {4, 5}, {5, 2}, {2, 4}});
  CHECK(lambda1(g).lambda1 == doctest::Approx(jacobi_lambda_max(g)).epsilon(1e-9));
}

TEST_CASE("power iteration agrees with Jacobi and the Rayleigh bounds") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 14;
    const Graph g = testing::random_graph(rng, n, 0.15 + 0.7 * (trial % 4) / 3.0);
    const double l1 = lambda1(g).lambda1;
    CAPTURE(trial);
    CHECK(l1 == doctest::Approx(jacobi_lambda_max(g)).epsilon(1e-8));
    const auto p = degree_profile(g);
    double avg = 0.0;
    for (int d : p.degrees) avg += d;
    avg /= n;
    CHECK(l1 >= avg - 1e-9);
    CHECK(l1 >= p.min_degree - 1e-9);
    CHECK(l1 <= p.max_degree + 1e-9);
  }
}

TEST_CASE("adding an edge to a connected graph raises lambda1") {
  std::mt19937_64 rng(32);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 150; ++trial) {
    const int n = 4 + trial % 9;
    const Graph g = testing::random_graph(rng, n, 0.4);
    if (g.is_complete() || components_after_deletion(g, {}).size() != 1) continue;
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::pair<int, int>> missing;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) (g.adjacent(u, v) ? pairs : missing).emplace_back(u, v);
    }
    pairs.push_back(missing[rng() % missing.size()]);
    const Graph bigger = Graph::build(n, pairs);
    CHECK(lambda1(bigger).lambda1 > lambda1(g).lambda1 + 1e-6);
    ++checked;
  }
  CHECK(checked >= 100);
}

TEST_CASE("bipartite threshold") {
  CHECK(bipartite_threshold(2, 4, 6) == doctest::Approx(std::sqrt(8.0)));
  CHECK(bipartite_threshold(2, 4, 5) == doctest::Approx(std::sqrt(6.0)));
  for (int a = 1; a <= 10; ++a) CHECK(bipartite_threshold(a, a, 2 * a) == doctest::Approx(a));
  CHECK(std::isinf(bipartite_threshold(4, 4, 3)));
  CHECK_THROWS_AS(bipartite_threshold(3, 2, 6), InvalidArgument);
}

TEST_CASE("closed-form bipartite decision") {
  CHECK(observation_decide(3, 3, 2, 4));
  CHECK_FALSE(observation_decide(2, 6, 2, 2));
  CHECK_FALSE(observation_decide(1, 3, 2, 2));
  CHECK(observation_decide(6, 2, 1, 3) == observation_decide(2, 6, 1, 3));
}

TEST_CASE("threshold verdicts") {
  CHECK(compare_to_threshold(2.0, 2.0 + 5e-10) == ThresholdVerdict::kBoundary);
  CHECK(compare_to_threshold(2.0, 1.9) == ThresholdVerdict::kAbove);
  CHECK(compare_to_threshold(2.0, 2.1) == ThresholdVerdict::kBelow);
  CHECK(compare_to_threshold(1e6, std::numeric_limits<double>::infinity()) == ThresholdVerdict::kBelow);
  CHECK(to_string(ThresholdVerdict::kBoundary) == "boundary");
}

TEST_CASE("rho against an independent root finder") {
  // Newton from the right of every root converges monotonically to the
  // largest one for a cubic with positive leading coefficient.
  const auto newton = [](int n, int a) {
    double x = n + 1.0;
    for (int i = 0; i < 200; ++i) {
      const double p = h_na_cubic(n, a, x);
      const double dp = 3 * x * x - 2 * (n - 3.0) * x - (a + n - 3.0);
      x -= p / dp;
    }
    return x;
  };
  const CubicRoot r = rho(5, 2);
  CHECK(r.root == doctest::Approx(3.0861301976).epsilon(1e-9));
  CHECK(r.lo <= r.root);
  CHECK(r.root <= r.hi);
  CHECK(h_na_cubic(5, 2, 3.0) < 0);
  CHECK(h_na_cubic(5, 2, 3.2) > 0);
  for (int n = 3; n <= 40; ++n) {
    for (int a = 1; a <= n - 1; ++a) {
      if ((a * n) % 2 != 0) continue;
      CAPTURE(n);
      CAPTURE(a);
      CHECK(rho(n, a).root == doctest::Approx(newton(n, a)).epsilon(1e-10));
      if (a <= n - 2) CHECK(rho(n, a).root < n - 1);
    }
  }
  CHECK_THROWS_AS(rho(5, 5), InvalidArgument);
  CHECK_THROWS_AS(rho(5, 3), InvalidArgument);
}

TEST_CASE("lambda1 of h_na is rho") {
  for (int n = 5; n <= 20; ++n) {
    for (int a = 1; a <= n - 1; ++a) {
      if ((a * n) % 2 != 0) continue;
      const double l1 = lambda1(h_na(n, a)).lambda1;
      CHECK(std::fabs(l1 - rho(n, a).root) <= 1e-6);
      CHECK(std::fabs(h_na_cubic(n, a, l1)) <= 1e-6);
    }
  }
}

}  // TEST_SUITE
