// Copyright 2026 The distk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DISTK_GRAPH_IO_HPP
#define DISTK_GRAPH_IO_HPP

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "distk/errors.hpp"
#include "distk/graph.hpp"

namespace distk {

// Rooted-graph text format, one declaration per line, '#' starts a comment:
//   v <n>        vertex count, required first
//   root <r>     root index, required second
//   e <u> <v>    one edge per line, 0-based indices
//
// Duplicate edges collapse silently; a declared self-loop is an error.

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

inline bool parse_number(std::string_view s, unsigned long long& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

[[noreturn]] inline void fail(std::size_t line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace detail

inline RootedGraph parse_graph(std::string_view text) {
  std::size_t line_no = 0;
  bool have_n = false, have_root = false;
  unsigned long long n = 0, root = 0;
  std::vector<Edge> edges;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto fields = detail::split_fields(line);
    if (fields.empty()) continue;
    if (fields[0] == "v") {
      if (have_n) detail::fail(line_no, "duplicate 'v' declaration");
      unsigned long long value = 0;
      if (fields.size() != 2 || !detail::parse_number(fields[1], value) || value == 0) {
        detail::fail(line_no, "malformed line: expected 'v <n>' with n >= 1");
      }
      n = value;
      have_n = true;
    } else if (fields[0] == "root") {
      if (!have_n) detail::fail(line_no, "'root' before 'v'");
      if (have_root) detail::fail(line_no, "duplicate 'root' declaration");
      unsigned long long value = 0;
      if (fields.size() != 2 || !detail::parse_number(fields[1], value)) {
        detail::fail(line_no, "malformed line: expected 'root <r>'");
      }
      if (value >= n) detail::fail(line_no, "root out of range");
      root = value;
      have_root = true;
    } else if (fields[0] == "e") {
      if (!have_n || !have_root) detail::fail(line_no, "'e' before 'v'/'root'");
      unsigned long long u = 0, v = 0;
      if (fields.size() != 3 || !detail::parse_number(fields[1], u) ||
          !detail::parse_number(fields[2], v)) {
        detail::fail(line_no, "malformed line: expected 'e <u> <v>'");
      }
      if (u == v) detail::fail(line_no, "self-loop declared");
      if (u >= n || v >= n) detail::fail(line_no, "vertex index out of range");
      edges.push_back(make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)));
    } else {
      detail::fail(line_no, "malformed line: unknown declaration");
    }
  }
  if (!have_n) throw ParseError("missing 'v' declaration");
  if (!have_root) throw ParseError("missing 'root' declaration");
  return RootedGraph::from_edges(static_cast<std::size_t>(n),
                                 static_cast<Vertex>(root), edges);
}

/// Emits the same format, edges sorted lexicographically.
inline std::string write_graph(const RootedGraph& g) {
  std::ostringstream out;
  out << "v " << g.vertex_count() << "\n";
  out << "root " << g.root() << "\n";
  for (const auto& [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
  return out.str();
}

inline RootedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open graph file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

inline void write_graph_file(const RootedGraph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open output file: " + path);
  out << write_graph(g);
}

}  // namespace distk

#endif  // DISTK_GRAPH_IO_HPP
