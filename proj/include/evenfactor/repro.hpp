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

// Reproduction checks for every computable claim about even factors that the
// toolkit covers: the two connectivity counterexample families, the parity of
// the deficiency, the sign grid of the quadratic bound, the bipartite spectral
// threshold, the cubic for lambda1(H_{n,a}), the spectral sweep, and the
// sufficiency of the degree/connectivity conditions.

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace evenfactor {

struct ClaimRow {
  std::string claim;     // claim id
  std::string check;     // what is compared
  std::string params;
  std::string expected;
  std::string observed;
  bool pass = false;
  std::vector<std::string> details;  // mismatches, capped
};

struct ReproOptions {
  std::uint64_t seed = 0x5eed2026;
  int oracle_max_order = 6;
  int parity_samples = 10'000;
  int parity_max_order = 10;
  int bipartite_max_order = 14;
  int cubic_max_order = 20;
  int smoke_graphs = 200;  // per (a,b) pair
  int smoke_min_order = 14;
  int smoke_max_order = 18;
};

struct ClaimInfo {
  std::string id;
  std::string title;
  std::function<std::vector<ClaimRow>(const ReproOptions&)> run;
};

// In a fixed order; ids are stable.
const std::vector<ClaimInfo>& claims();
const ClaimInfo& claim(const std::string& id);

std::vector<ClaimRow> run_claim(const std::string& id, const ReproOptions& options = {});

std::vector<ClaimRow> oracle_equivalence(const ReproOptions& options);
std::vector<ClaimRow> deficiency_parity(const ReproOptions& options);
std::vector<ClaimRow> edge_connectivity_counterexample(const ReproOptions& options);
std::vector<ClaimRow> vertex_connectivity_counterexample(const ReproOptions& options);
std::vector<ClaimRow> quadratic_sign_grid(const ReproOptions& options);
std::vector<ClaimRow> bipartite_spectral_threshold(const ReproOptions& options);
std::vector<ClaimRow> cubic_consistency(const ReproOptions& options);
std::vector<ClaimRow> spectral_sweep_smoke(const ReproOptions& options);
std::vector<ClaimRow> sufficiency_smoke(const ReproOptions& options);

std::string format_table(const std::vector<ClaimRow>& rows);

}  // namespace evenfactor
