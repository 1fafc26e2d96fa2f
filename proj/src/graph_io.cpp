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

#include "evenfactor/graph_io.hpp"

#include <fstream>
#include <istream>
#include <regex>
#include <sstream>

#include "evenfactor/error.hpp"

namespace evenfactor {

namespace {

bool next_content_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!next_content_line(in, line, line_no)) {
    throw InvalidArgument("edge list: missing header line \"n m\"");
  }
  long long n = -1;
  long long m = -1;
  {
    std::istringstream header(line);
    if (!(header >> n >> m) || n < 0 || m < 0) {
      throw InvalidArgument("edge list line " + std::to_string(line_no) +
                            ": expected \"n m\" with non-negative integers");
    }
  }
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_content_line(in, line, line_no)) {
      throw InvalidArgument("edge list: expected " + std::to_string(m) + " edges, found " +
                            std::to_string(i));
    }
    std::istringstream row(line);
    int u = 0;
    int v = 0;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra)) {
      throw InvalidArgument("edge list line " + std::to_string(line_no) +
                            ": expected two vertex ids");
    }
    pairs.emplace_back(u, v);
  }
  if (next_content_line(in, line, line_no)) {
    throw InvalidArgument("edge list line " + std::to_string(line_no) +
                          ": content after the declared " + std::to_string(m) + " edges");
  }
  return Graph::build(static_cast<int>(n), pairs);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open graph file " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

std::string to_dot(const Graph& g, const std::string& name, const std::string& comment) {
  std::ostringstream out;
  if (!comment.empty()) out << "// " << comment << '\n';
  out << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

Graph parse_dot(const std::string& text) {
  static const std::regex node_re(R"(^\s*(\d+)\s*;\s*$)");
  static const std::regex edge_re(R"(^\s*(\d+)\s*--\s*(\d+)\s*;\s*$)");
  std::istringstream in(text);
  std::string line;
  int n = 0;
  std::vector<std::pair<int, int>> pairs;
  std::smatch m;
  while (std::getline(in, line)) {
    if (std::regex_match(line, m, edge_re)) {
      pairs.emplace_back(std::stoi(m[1]), std::stoi(m[2]));
      n = std::max({n, pairs.back().first + 1, pairs.back().second + 1});
    } else if (std::regex_match(line, m, node_re)) {
      n = std::max(n, std::stoi(m[1]) + 1);
    }
  }
  return Graph::build(n, pairs);
}

}  // namespace evenfactor
