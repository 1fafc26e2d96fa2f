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

#include <sstream>

#include "doctest.h"
#include "evenfactor/constructions.hpp"
#include "evenfactor/error.hpp"
#include "evenfactor/graph_io.hpp"

using namespace evenfactor;

TEST_SUITE("graph_io") {

TEST_CASE("edge list round trip") {
  for (const Graph& g : {petersen_graph(), example1(4, 12, 9), Graph::build(3, {})}) {
    std::istringstream in(to_edge_list(g));
    CHECK(read_edge_list(in) == g);
  }
}

TEST_CASE("comments and blank lines are skipped") {
  std::istringstream in("# provenance\n\n3 2\n0 1\n  # inner\n1 2\n\n");
  const Graph g = read_edge_list(in);
  CHECK(g.order() == 3);
  CHECK(g.size() == 2);
}

TEST_CASE("malformed input names the line") {
  std::istringstream short_row("3 2\n0 1\n1\n");
  CHECK_THROWS_WITH_AS(read_edge_list(short_row), doctest::Contains("line 3"), InvalidArgument);
  std::istringstream missing("3 2\n0 1\n");
  CHECK_THROWS_AS(read_edge_list(missing), InvalidArgument);
  std::istringstream trailing("2 1\n0 1\n1 0\n");
  CHECK_THROWS_WITH_AS(read_edge_list(trailing), doctest::Contains("line 3"), InvalidArgument);
  std::istringstream loop("2 1\n1 1\n");
  CHECK_THROWS_AS(read_edge_list(loop), InvalidArgument);
  std::istringstream empty("");
  CHECK_THROWS_AS(read_edge_list(empty), InvalidArgument);
  CHECK_THROWS_AS(read_edge_list_file("/nonexistent/graph.edges"), InvalidArgument);
}

TEST_CASE("dot round trip keeps isolated vertices") {
  const Graph g = Graph::build(5, {{0, 3}, {1, 3}});
  const std::string dot = to_dot(g, "G", "{\"family\":\"test\"}");
  CHECK(dot.rfind("// ", 0) == 0);
  CHECK(parse_dot(dot) == g);
  CHECK(parse_dot(to_dot(example2(4, 24, 6))) == example2(4, 24, 6));
}

}  // TEST_SUITE
