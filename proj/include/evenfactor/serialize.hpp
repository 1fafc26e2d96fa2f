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

// Stable JSON forms: vertex sets and edge lists as sorted arrays, rationals
// as {"num": p, "den": q}. Objects keep insertion order so output is
// byte-reproducible.

#pragma once

#include "json.hpp"

#include "evenfactor/criteria.hpp"
#include "evenfactor/factor_search.hpp"
#include "evenfactor/graph.hpp"
#include "evenfactor/rational.hpp"
#include "evenfactor/spectral.hpp"
#include "evenfactor/sweep.hpp"

namespace evenfactor {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "evenfactor";
inline constexpr const char* kToolVersion = "1.0.0";

Json to_json(const Rational& r);
Json to_json(const VertexSet& s);
Json edges_to_json(const std::vector<Edge>& edges);
Json to_json(const Graph& g);
Json to_json(const Factor& f);
Json to_json(const CriterionWitness& w);
Json to_json(const CriterionResult& r);
Json to_json(const ConditionReport& r);
Json to_json(const SpectralResult& r);
Json to_json(const SweepRecord& r);
Json to_json(const SweepSummary& s);

// Accepts {"edges": [[u,v],...]} or a find-factor output carrying "factor".
Factor factor_from_json(const Graph& host, const Json& j);

}  // namespace evenfactor
