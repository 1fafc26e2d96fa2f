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

#include "evenfactor/serialize.hpp"

#include "evenfactor/error.hpp"

namespace evenfactor {

Json to_json(const Rational& r) {
  return Json{{"num", r.numerator()}, {"den", r.denominator()}};
}

Json to_json(const VertexSet& s) {
  Json out = Json::array();
  for (Vertex v : s) out.push_back(v);
  return out;
}

Json edges_to_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back(Json::array({e.u, e.v}));
  return out;
}

Json to_json(const Graph& g) {
  return Json{{"n", g.order()}, {"m", g.size()}, {"edges", edges_to_json(g.edges())}};
}

Json to_json(const Factor& f) {
  return Json{{"edges", edges_to_json(f.edges)}, {"degrees", f.degrees}};
}

Json to_json(const CriterionWitness& w) {
  return Json{{"S", to_json(w.s)}, {"T", to_json(w.t)}, {"value", w.value}};
}

Json to_json(const CriterionResult& r) {
  Json out{{"holds", r.holds}};
  out["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  out["nodes_visited"] = r.nodes_visited;
  return out;
}

Json to_json(const ConditionReport& r) {
  Json conditions = Json::array();
  for (const Condition& c : r.conditions) {
    Json lhs = c.lhs_infinite ? Json("infinity") : to_json(c.lhs);
    conditions.push_back(
        Json{{"name", c.name}, {"lhs", lhs}, {"rhs", to_json(c.rhs)}, {"holds", c.holds}});
  }
  return Json{{"statement", r.statement},
              {"a", r.a},
              {"b", r.b},
              {"conditions", conditions},
              {"all_hold", r.all_hold()}};
}

Json to_json(const SpectralResult& r) {
  return Json{{"lambda1", r.lambda1}, {"iterations", r.iterations}, {"residual", r.residual}};
}

Json to_json(const SweepRecord& r) {
  Json out{{"n", r.n},         {"a", r.a},
           {"b", r.b},         {"index", r.index},
           {"mask", r.mask},   {"lambda1", r.lambda1},
           {"rho", r.rho},     {"verdict", to_string(r.verdict)},
           {"counterexample_candidate", r.counterexample_candidate()}};
  if (r.counterexample_candidate()) {
    out["graph"] = to_json(graph_from_mask(r.n, r.mask));
  }
  out["factor"] = r.factor ? to_json(*r.factor) : Json(nullptr);
  return out;
}

Json to_json(const SweepSummary& s) {
  return Json{{"scanned", s.scanned},
              {"filtered_isomorph", s.filtered_isomorph},
              {"boundary", s.boundary},
              {"candidates", s.candidates},
              {"present", s.present},
              {"absent", s.absent},
              {"budget_exhausted", s.budget_exhausted}};
}

Factor factor_from_json(const Graph& host, const Json& j) {
  const Json* node = &j;
  if (j.contains("factor")) node = &j.at("factor");
  if (!node->is_object() || !node->contains("edges") || !node->at("edges").is_array()) {
    throw InvalidArgument("factor JSON needs an \"edges\" array");
  }
  std::vector<Edge> edges;
  for (const Json& e : node->at("edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw InvalidArgument("factor edges must be [u, v] integer pairs");
    }
    const int u = e[0].get<int>();
    const int v = e[1].get<int>();
    if (u == v) throw InvalidArgument("factor edge is a self-loop");
    edges.emplace_back(u, v);
  }
  return Factor::from_edges(host, std::move(edges));
}

}  // namespace evenfactor
