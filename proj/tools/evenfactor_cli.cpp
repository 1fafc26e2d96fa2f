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

// evenfactor: construct, check, decide, search and sweep from the shell.
//
// Exit codes: 0 decided/constructed, 1 the answer is "absent" or "fails",
// 2 usage or input error, 3 scale or budget error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "evenfactor/constructions.hpp"
#include "evenfactor/criteria.hpp"
#include "evenfactor/error.hpp"
#include "evenfactor/factor_search.hpp"
#include "evenfactor/graph_io.hpp"
#include "evenfactor/kernels.hpp"
#include "evenfactor/repro.hpp"
#include "evenfactor/serialize.hpp"
#include "evenfactor/spectral.hpp"
#include "evenfactor/sweep.hpp"

namespace ef = evenfactor;
using ef::Json;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kScale = 3;

Json envelope(const std::string& command, Json params) {
  return Json{{"tool", ef::kToolName},
              {"version", ef::kToolVersion},
              {"command", command},
              {"params", std::move(params)}};
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

ef::Graph load_graph(const std::string& path) {
  if (ends_with(path, ".dot") || ends_with(path, ".gv")) {
    std::ifstream in(path);
    if (!in) throw ef::InvalidArgument("cannot open graph file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return ef::parse_dot(buf.str());
  }
  return ef::read_edge_list_file(path);
}

struct ConstructArgs {
  std::string family;
  int a = 0, b = 0, t = 0, n = 0, x = 0, y = 0;
  std::string out;
  bool dot = false;
};

int run_construct(const ConstructArgs& c) {
  Json params{{"family", c.family}};
  ef::Graph g;
  if (c.family == "example1" || c.family == "example2") {
    params["a"] = c.a;
    params["b"] = c.b;
    params["t"] = c.t;
    g = c.family == "example1" ? ef::example1(c.a, c.b, c.t) : ef::example2(c.a, c.b, c.t);
  } else if (c.family == "hna") {
    params["n"] = c.n;
    params["a"] = c.a;
    g = ef::h_na(c.n, c.a);
  } else {
    params["x"] = c.x;
    params["y"] = c.y;
    g = ef::complete_bipartite(c.x, c.y);
  }
  Json out = envelope("construct", params);
  out["graph"] = ef::to_json(g);
  const std::string provenance = Json{{"tool", ef::kToolName}, {"version", ef::kToolVersion},
                                      {"params", params}}.dump();
  if (!c.out.empty()) {
    std::ofstream file(c.out);
    if (!file) throw ef::InvalidArgument("cannot write " + c.out);
    file << "# " << provenance << '\n';
    ef::write_edge_list(file, g);
    out["written"] = c.out;
  }
  if (c.dot) {
    std::cout << ef::to_dot(g, c.family, provenance);
  } else {
    emit(out);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Even [a,b]-factor toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ef::kToolVersion);

  ConstructArgs cons;
  auto* construct = app.add_subcommand("construct", "Build a named graph family");
  construct->add_option("family", cons.family, "example1 | example2 | hna | kxy")
      ->required()
      ->check(CLI::IsMember({"example1", "example2", "hna", "kxy"}));
  construct->add_option("--a", cons.a);
  construct->add_option("--b", cons.b);
  construct->add_option("--t", cons.t);
  construct->add_option("--n", cons.n);
  construct->add_option("--x", cons.x);
  construct->add_option("--y", cons.y);
  construct->add_option("--out", cons.out, "Write an edge list here");
  construct->add_flag("--dot", cons.dot, "Print DOT instead of JSON");

  std::string graph_path;
  int a = 0;
  int b = 0;
  const auto graph_ab = [&](CLI::App* sub) {
    sub->add_option("--graph", graph_path, "Edge list or .dot file")->required();
    sub->add_option("--a", a)->required();
    sub->add_option("--b", b)->required();
  };

  auto* check = app.add_subcommand("check-conditions", "Evaluate the sufficient conditions");
  graph_ab(check);
  bool theorem = false;
  bool conjecture = false;
  auto* theorem_flag = check->add_flag("--theorem", theorem);
  auto* conjecture_flag = check->add_flag("--conjecture", conjecture);
  theorem_flag->excludes(conjecture_flag);

  auto* criterion = app.add_subcommand("criterion", "Decide the deficiency criterion exhaustively");
  graph_ab(criterion);
  int max_n = ef::kCriterionMaxOrder;
  criterion->add_option("--max-n", max_n, "Refuse larger graphs")->capture_default_str();

  auto* find = app.add_subcommand("find-factor", "Search for an [a,b]-factor");
  graph_ab(find);
  bool even = false;
  std::uint64_t budget = ef::kDefaultSearchBudget;
  find->add_flag("--even", even, "Require every degree even");
  find->add_option("--budget", budget, "Node budget for the parity-free search")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Check a factor file against a graph");
  graph_ab(verify);
  std::string factor_path;
  verify->add_option("--factor", factor_path, "JSON with an edges array")->required();
  verify->add_flag("--even", even);

  auto* spectral = app.add_subcommand("spectral", "Largest adjacency eigenvalue");
  spectral->add_option("--graph", graph_path)->required();
  double tol = ef::kLambdaTolerance;
  spectral->add_option("--tol", tol)->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "Spectral conjecture sweep");
  int sweep_n = 0;
  int jobs = 1;
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
  bool exhaustive = false;
  bool random = false;
  sweep->add_option("--n", sweep_n)->required();
  sweep->add_option("--a", a)->required();
  sweep->add_option("--b", b)->required();
  auto* ex_flag = sweep->add_flag("--exhaustive", exhaustive);
  auto* rnd_flag = sweep->add_flag("--random", random);
  auto* count_opt = sweep->add_option("--count", count);
  auto* seed_opt = sweep->add_option("--seed", seed);
  ex_flag->excludes(rnd_flag);
  count_opt->needs(rnd_flag);
  seed_opt->needs(rnd_flag);
  rnd_flag->needs(count_opt)->needs(seed_opt);
  sweep->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  auto* repro = app.add_subcommand("repro", "Re-run the reproducible claims");
  bool all = false;
  std::string claim_id;
  bool as_json = false;
  auto* all_flag = repro->add_flag("--all", all);
  auto* claim_opt = repro->add_option("--claim", claim_id);
  repro->add_flag("--json", as_json, "JSON rows instead of a table");
  all_flag->excludes(claim_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (construct->parsed()) return run_construct(cons);

    if (check->parsed()) {
      if (!theorem && !conjecture) throw ef::InvalidArgument("pass --theorem or --conjecture");
      const ef::Graph g = load_graph(graph_path);
      const ef::ConditionReport r = theorem ? ef::main_theorem_conditions(g, a, b)
                                            : ef::conjecture_conditions(g, a, b);
      Json out = envelope("check-conditions", {{"graph", graph_path}, {"a", a}, {"b", b},
                                               {"set", theorem ? "theorem" : "conjecture"}});
      out["report"] = ef::to_json(r);
      emit(out);
      return r.all_hold() ? kOk : kNegative;
    }

    if (criterion->parsed()) {
      const ef::Graph g = load_graph(graph_path);
      const ef::CriterionResult r = ef::criterion_decide(g, a, b, max_n);
      Json out = envelope("criterion", {{"graph", graph_path}, {"a", a}, {"b", b}, {"max_n", max_n}});
      out["result"] = ef::to_json(r);
      emit(out);
      return r.holds ? kOk : kNegative;
    }

    if (find->parsed()) {
      const ef::Graph g = load_graph(graph_path);
      const ef::FactorSearchResult r = even ? ef::find_even_factor(g, a, b)
                                            : ef::find_ab_factor(g, a, b, budget);
      Json params{{"graph", graph_path}, {"a", a}, {"b", b}, {"even", even}};
      if (!even) params["budget"] = budget;
      Json out = envelope("find-factor", params);
      out["status"] = ef::to_string(r.status);
      out["factor"] = r.factor ? ef::to_json(*r.factor) : Json(nullptr);
      if (!r.reason.empty()) out["reason"] = r.reason;
      out["nodes"] = r.nodes;
      emit(out);
      switch (r.status) {
        case ef::SearchStatus::kPresent: return kOk;
        case ef::SearchStatus::kAbsent: return kNegative;
        case ef::SearchStatus::kBudgetExhausted: return kScale;
      }
    }

    if (verify->parsed()) {
      const ef::Graph g = load_graph(graph_path);
      std::ifstream in(factor_path);
      if (!in) throw ef::InvalidArgument("cannot open factor file " + factor_path);
      Json parsed;
      try {
        parsed = Json::parse(in);
      } catch (const Json::parse_error& e) {
        throw ef::InvalidArgument(factor_path + ": " + e.what());
      }
      const ef::Factor f = ef::factor_from_json(g, parsed);
      const bool ok = ef::verify_factor(g, f, a, b, even);
      Json out = envelope("verify", {{"graph", graph_path}, {"factor", factor_path}, {"a", a},
                                     {"b", b}, {"even", even}});
      out["valid"] = ok;
      emit(out);
      return ok ? kOk : kNegative;
    }

    if (spectral->parsed()) {
      const ef::Graph g = load_graph(graph_path);
      Json out = envelope("spectral", {{"graph", graph_path}, {"tol", tol}});
      out["result"] = ef::to_json(ef::lambda1(g, tol));
      out["kernel"] = ef::kernels::to_string(ef::kernels::active_isa());
      emit(out);
      return kOk;
    }

    if (sweep->parsed()) {
      if (!exhaustive && !random) throw ef::InvalidArgument("pass --exhaustive or --random");
      const ef::SweepSource source =
          exhaustive ? ef::SweepSource::exhaustive() : ef::SweepSource::random(seed, count);
      const ef::SweepResult r = ef::conjecture_sweep(sweep_n, a, b, source, jobs);
      Json params{{"n", sweep_n}, {"a", a}, {"b", b},
                  {"source", exhaustive ? "exhaustive" : "random"}};
      if (random) {
        params["count"] = count;
        params["seed"] = seed;
      }
      params["jobs"] = jobs;
      for (const ef::SweepRecord& rec : r.records) std::cout << ef::to_json(rec).dump() << '\n';
      Json summary = envelope("sweep", params);
      summary["rho"] = r.rho;
      summary["summary"] = ef::to_json(r.summary);
      std::cout << summary.dump() << '\n';
      if (r.summary.budget_exhausted > 0) return kScale;
      return r.summary.absent > 0 ? kNegative : kOk;
    }

    if (repro->parsed()) {
      if (!all && claim_id.empty()) throw ef::InvalidArgument("pass --all or --claim ID");
      std::vector<ef::ClaimRow> rows;
      for (const ef::ClaimInfo& c : ef::claims()) {
        if (!all && c.id != claim_id) continue;
        auto part = c.run(ef::ReproOptions{});
        rows.insert(rows.end(), part.begin(), part.end());
      }
      if (rows.empty()) (void)ef::claim(claim_id);  // throws with the unknown id
      bool pass = true;
      for (const auto& r : rows) pass = pass && r.pass;
      if (as_json) {
        Json out = envelope("repro", {{"claim", all ? "all" : claim_id}});
        Json arr = Json::array();
        for (const auto& r : rows) {
          arr.push_back(Json{{"claim", r.claim}, {"check", r.check}, {"params", r.params},
                             {"expected", r.expected}, {"observed", r.observed},
                             {"pass", r.pass}, {"details", r.details}});
        }
        out["rows"] = arr;
        out["pass"] = pass;
        emit(out);
      } else {
        std::cout << ef::format_table(rows);
      }
      return pass ? kOk : kNegative;
    }
  } catch (const ef::ScaleError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kScale;
  } catch (const ef::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kScale;
  } catch (const ef::ConstraintViolation& e) {
    std::cerr << "error: invalid parameters\n";
    for (const auto& v : e.violations()) std::cerr << "  - " << v << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
