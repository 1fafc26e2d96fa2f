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

#include <iosfwd>
#include <string>

#include "evenfactor/graph.hpp"

namespace evenfactor {

// Edge-list text: "n m" then m lines "u v", 0-based. Blank lines and lines
// starting with '#' are skipped on read.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

// Undirected DOT. comment, when non-empty, is emitted as a leading // line.
std::string to_dot(const Graph& g, const std::string& name = "G",
                   const std::string& comment = "");

// Inverse of to_dot for the subset of DOT that to_dot emits.
Graph parse_dot(const std::string& text);

}  // namespace evenfactor
