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

#pragma once

#include <string>

#include "evenfactor/graph.hpp"

namespace evenfactor {

struct SpectralResult {
  double lambda1 = 0.0;
  int iterations = 0;
  double residual = 0.0;  // max_i |(A v)_i - lambda1 v_i| for the unit Perron vector
};

inline constexpr double kLambdaTolerance = 1e-10;
inline constexpr double kCubicTolerance = 1e-12;
inline constexpr double kThresholdGuard = 1e-9;
inline constexpr int kPowerIterationCap = 2'000'000;

// Largest adjacency eigenvalue: power iteration on A + I per connected
// component, started from the all-ones vector; the maximum over components
// is returned. Throws ConvergenceError past max_iterations.
SpectralResult lambda1(const Graph& g, double tolerance = kLambdaTolerance,
                       int max_iterations = kPowerIterationCap);

// sqrt(a(n-a)) if n < a+b, else sqrt(ab) n / (a+b). Infinite when n < a.
double bipartite_threshold(int a, int b, int n);

// Whether K_{x,y} has an [a,b]-factor, from the part sizes alone:
// min(x,y) >= a and min(x,y) (a+b) >= a (x+y).
bool observation_decide(int x, int y, int a, int b);

enum class ThresholdVerdict { kBelow, kBoundary, kAbove };

// kBoundary when |value - threshold| <= guard.
ThresholdVerdict compare_to_threshold(double value, double threshold,
                                      double guard = kThresholdGuard);
std::string to_string(ThresholdVerdict v);

// x^3 - (n-3)x^2 - (a+n-3)x - a^2 + (a-1)n + 1
double h_na_cubic(int n, int a, double x);

struct CubicRoot {
  double root = 0.0;
  double lo = 0.0;  // final bracket
  double hi = 0.0;
};

// Largest real root of h_na_cubic by bisection, starting from [n-3, n-1] and
// widening as needed. Requires n >= a+1, a >= 1 and a*n even.
CubicRoot rho(int n, int a, double tolerance = kCubicTolerance);

}  // namespace evenfactor
