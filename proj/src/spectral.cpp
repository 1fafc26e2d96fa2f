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

#include "evenfactor/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "evenfactor/error.hpp"
#include "evenfactor/kernels.hpp"

namespace evenfactor {

namespace {

SpectralResult component_lambda1(const Graph& g, const VertexSet& members, double tolerance,
                                 int max_iterations) {
  const std::size_t k = members.size();
  if (k == 1) return {0.0, 0, 0.0};
  const std::size_t stride = kernels::padded(k);
  std::vector<double> matrix(k * stride, 0.0);
  std::vector<int> local(g.order(), -1);
  for (std::size_t i = 0; i < k; ++i) local[members.members()[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < k; ++i) {
    for (Vertex w : g.neighbors(members.members()[i])) matrix[i * stride + local[w]] = 1.0;
  }

  const kernels::KernelTable& kt = kernels::active();
  std::vector<double> v(stride, 0.0);
  std::vector<double> av(stride, 0.0);
  std::fill(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k), 1.0 / std::sqrt(double(k)));
  // The +I shift keeps -lambda1 (bipartite components) from competing with
  // lambda1 for dominance.
  constexpr double kShift = 1.0;
  SpectralResult out;
  for (int it = 1; it <= max_iterations; ++it) {
    kt.matvec_shifted(matrix.data(), k, stride, v.data(), 0.0, av.data());
    const double theta = kt.dot(v.data(), av.data(), k);
    const double residual = kt.residual_inf(av.data(), v.data(), theta, k);
    out = {theta, it, residual};
    if (residual <= tolerance) return out;
    for (std::size_t i = 0; i < k; ++i) av[i] += kShift * v[i];
    const double norm = std::sqrt(kt.dot(av.data(), av.data(), k));
    for (std::size_t i = 0; i < k; ++i) v[i] = av[i] / norm;
  }
  throw ConvergenceError("power iteration: residual " + std::to_string(out.residual) +
                         " above tolerance after " + std::to_string(max_iterations) +
                         " iterations");
}

}  // namespace

SpectralResult lambda1(const Graph& g, double tolerance, int max_iterations) {
  if (g.order() < 1) throw InvalidArgument("lambda1 needs at least one vertex");
  if (!(tolerance > 0)) throw InvalidArgument("tolerance must be positive");
  SpectralResult best{-1.0, 0, 0.0};
  int iterations = 0;
  for (const VertexSet& comp : components_after_deletion(g, {})) {
    const SpectralResult r = component_lambda1(g, comp, tolerance, max_iterations);
    iterations = std::max(iterations, r.iterations);
    if (r.lambda1 > best.lambda1) best = r;
  }
  best.iterations = iterations;
  return best;
}

double bipartite_threshold(int a, int b, int n) {
  if (a <= 0 || a > b || n < 2) throw InvalidArgument("threshold needs 0 < a <= b and n >= 2");
  if (n < a + b) {
    if (n < a) return std::numeric_limits<double>::infinity();
    return std::sqrt(double(a) * double(n - a));
  }
  return std::sqrt(double(a) * double(b)) / double(a + b) * double(n);
}

bool observation_decide(int x, int y, int a, int b) {
  if (x > y) std::swap(x, y);
  const long long n = static_cast<long long>(x) + y;
  return x >= a && static_cast<long long>(x) * (a + b) >= static_cast<long long>(a) * n;
}

ThresholdVerdict compare_to_threshold(double value, double threshold, double guard) {
  if (std::isinf(threshold)) return threshold > 0 ? ThresholdVerdict::kBelow : ThresholdVerdict::kAbove;
  if (std::fabs(value - threshold) <= guard) return ThresholdVerdict::kBoundary;
  return value > threshold ? ThresholdVerdict::kAbove : ThresholdVerdict::kBelow;
}

std::string to_string(ThresholdVerdict v) {
  switch (v) {
    case ThresholdVerdict::kBelow: return "below";
    case ThresholdVerdict::kBoundary: return "boundary";
    case ThresholdVerdict::kAbove: return "above";
  }
  return "unknown";
}

double h_na_cubic(int n, int a, double x) {
  const double nn = n;
  const double aa = a;
  return ((x - (nn - 3)) * x - (aa + nn - 3)) * x - aa * aa + (aa - 1) * nn + 1;
}

CubicRoot rho(int n, int a, double tolerance) {
  if (a < 1 || n < a + 1 || (a * n) % 2 != 0) {
    throw InvalidArgument("rho needs a >= 1, n >= a+1 and a*n even");
  }
  if (!(tolerance > 0)) throw InvalidArgument("tolerance must be positive");
  const auto p = [&](double x) { return h_na_cubic(n, a, x); };
  // Larger critical point; p is increasing to its right.
  const double m = n - 3.0;
  const double crit_hi = (m + std::sqrt(m * m + 3.0 * (a + m))) / 3.0;
  const double crit_lo = (m - std::sqrt(m * m + 3.0 * (a + m))) / 3.0;
  double lo = std::max(n - 3.0, crit_hi);
  double hi = std::max(n - 1.0, lo + 1.0);
  if (p(lo) > 0) {
    if (p(crit_hi) <= 0) {
      lo = crit_hi;
    } else {
      // Single real root, left of the local maximum.
      hi = crit_lo;
      lo = crit_lo - 1.0;
      for (int widen = 0; widen < 64 && p(lo) >= 0; ++widen) lo -= std::ldexp(1.0, widen);
    }
  }
  for (int widen = 0; widen < 64 && p(hi) <= 0; ++widen) hi += std::ldexp(1.0, widen);
  if (!(p(lo) <= 0 && p(hi) > 0)) {
    throw ConvergenceError("rho: no sign change on [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "]");
  }
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (p(mid) <= 0 ? lo : hi) = mid;
  }
  return {0.5 * (lo + hi), lo, hi};
}

}  // namespace evenfactor
