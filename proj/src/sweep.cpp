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

#include "evenfactor/sweep.hpp"

#include <algorithm>
#include <random>
#include <thread>

#include "evenfactor/error.hpp"
#include "evenfactor/spectral.hpp"

namespace evenfactor {

namespace {

struct Partial {
  std::vector<SweepRecord> records;
  SweepSummary summary;
};

void merge(SweepSummary& into, const SweepSummary& from) {
  into.scanned += from.scanned;
  into.filtered_isomorph += from.filtered_isomorph;
  into.boundary += from.boundary;
  into.candidates += from.candidates;
  into.present += from.present;
  into.absent += from.absent;
  into.budget_exhausted += from.budget_exhausted;
}

bool degrees_non_increasing(int n, std::uint64_t mask) {
  int degree[kSweepMaxExhaustiveOrder] = {};
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if (mask >> bit & 1U) {
        ++degree[i];
        ++degree[j];
      }
    }
  }
  for (int i = 0; i + 1 < n; ++i) {
    if (degree[i] < degree[i + 1]) return false;
  }
  return true;
}

class Evaluator {
 public:
  Evaluator(int n, int a, int b, double rho_value, std::uint64_t budget)
      : n_(n), a_(a), b_(b), rho_(rho_value), budget_(budget) {}

  void evaluate(std::uint64_t index, std::uint64_t mask, Partial& out) const {
    ++out.summary.scanned;
    const Graph g = graph_from_mask(n_, mask);
    // lambda1 <= Delta, so sparse graphs never beat rho.
    if (g.order() == 0 || degree_profile(g).max_degree + kThresholdGuard < rho_) return;
    const double l1 = lambda1(g).lambda1;
    const ThresholdVerdict v = compare_to_threshold(l1, rho_);
    if (v == ThresholdVerdict::kBoundary) {
      ++out.summary.boundary;
      return;
    }
    if (v == ThresholdVerdict::kBelow) return;
    ++out.summary.candidates;
    SweepRecord rec;
    rec.n = n_;
    rec.a = a_;
    rec.b = b_;
    rec.index = index;
    rec.mask = mask;
    rec.lambda1 = l1;
    rec.rho = rho_;
    const FactorSearchResult found = find_ab_factor(g, a_, b_, budget_);
    rec.verdict = found.status;
    rec.factor = found.factor;
    switch (found.status) {
      case SearchStatus::kPresent: ++out.summary.present; break;
      case SearchStatus::kAbsent: ++out.summary.absent; break;
      case SearchStatus::kBudgetExhausted: ++out.summary.budget_exhausted; break;
    }
    out.records.push_back(std::move(rec));
  }

 private:
  int n_;
  int a_;
  int b_;
  double rho_;
  std::uint64_t budget_;
};

template <typename Work>
SweepResult run_chunks(std::uint64_t total, int jobs, Work work) {
  jobs = std::max(1, jobs);
  const std::uint64_t chunks = std::min<std::uint64_t>(total == 0 ? 1 : total,
                                                       static_cast<std::uint64_t>(jobs));
  std::vector<Partial> partials(chunks);
  const auto range = [&](std::uint64_t c) {
    return std::make_pair(total * c / chunks, total * (c + 1) / chunks);
  };
  if (chunks == 1) {
    work(0, total, partials[0]);
  } else {
    std::vector<std::thread> workers;
    for (std::uint64_t c = 0; c < chunks; ++c) {
      workers.emplace_back([&, c] {
        const auto [lo, hi] = range(c);
        work(lo, hi, partials[c]);
      });
    }
    for (auto& w : workers) w.join();
  }
  SweepResult out;
  for (auto& p : partials) {
    merge(out.summary, p.summary);
    std::move(p.records.begin(), p.records.end(), std::back_inserter(out.records));
  }
  return out;
}

}  // namespace

Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<std::pair<int, int>> pairs;
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if (mask >> bit & 1U) pairs.emplace_back(i, j);
    }
  }
  return Graph::build(n, pairs);
}

std::uint64_t mask_of(const Graph& g) {
  const int n = g.order();
  if (n * (n - 1) / 2 > 64) throw InvalidArgument("graph too large for a 64-bit edge mask");
  std::uint64_t mask = 0;
  for (const Edge& e : g.edges()) {
    const int bit = e.u * n - e.u * (e.u + 1) / 2 + (e.v - e.u - 1);
    mask |= std::uint64_t{1} << bit;
  }
  return mask;
}

SweepResult conjecture_sweep(int n, int a, int b, const SweepSource& source, int jobs,
                             std::uint64_t budget) {
  if (a < 1 || b < a) throw InvalidArgument("sweep needs 1 <= a <= b");
  if (n < a + 1 || (a * n) % 2 != 0) throw InvalidArgument("sweep needs n >= a+1 and a*n even");
  const int pairs = n * (n - 1) / 2;
  const double rho_value = rho(n, a).root;
  const Evaluator eval(n, a, b, rho_value, budget);

  SweepResult out;
  if (source.kind == SweepSource::Kind::kExhaustive) {
    if (n > kSweepMaxExhaustiveOrder) {
      throw ScaleError("exhaustive sweep limited to n <= " +
                       std::to_string(kSweepMaxExhaustiveOrder));
    }
    const std::uint64_t total = std::uint64_t{1} << pairs;
    out = run_chunks(total, jobs, [&](std::uint64_t lo, std::uint64_t hi, Partial& part) {
      for (std::uint64_t mask = lo; mask < hi; ++mask) {
        if (!degrees_non_increasing(n, mask)) {
          ++part.summary.filtered_isomorph;
          continue;
        }
        eval.evaluate(mask, mask, part);
      }
    });
  } else {
    if (pairs > 64) throw ScaleError("random sweep limited to n <= 11 (64-bit masks)");
    std::mt19937_64 rng(source.seed);
    std::uniform_real_distribution<double> density(0.5, 1.0);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::uint64_t> masks(source.count);
    for (auto& mask : masks) {
      const double p = density(rng);
      mask = 0;
      for (int bit = 0; bit < pairs; ++bit) {
        if (coin(rng) < p) mask |= std::uint64_t{1} << bit;
      }
    }
    out = run_chunks(masks.size(), jobs, [&](std::uint64_t lo, std::uint64_t hi, Partial& part) {
      for (std::uint64_t i = lo; i < hi; ++i) eval.evaluate(i, masks[i], part);
    });
  }
  out.rho = rho_value;
  return out;
}

}  // namespace evenfactor
