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

#ifndef DISTK_GRAPH_HPP
#define DISTK_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "distk/errors.hpp"

namespace distk {

using Vertex = std::uint32_t;

/// Unordered edge, canonically stored with first < second.
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Simple undirected graph with a distinguished root vertex.
///
/// Immutable after construction. Neighbor lists are sorted and deduplicated;
/// self-loops are rejected. Connectivity is not an invariant of the type
/// (distance-k graphs may be disconnected); operations that need connected
/// inputs check it themselves.
class RootedGraph {
 public:
  RootedGraph() = default;

  /// Builds a validated graph from an edge list. Duplicate edges collapse
  /// silently; a self-loop is a hard error.
  static RootedGraph from_edges(std::size_t n, Vertex root,
                                const std::vector<Edge>& edges) {
    check_header(n, root);
    RootedGraph g;
    g.root_ = root;
    g.adj_.assign(n, {});
    for (const auto& [u, v] : edges) {
      if (u == v) {
        throw PreconditionError("self-loop on vertex " + std::to_string(u));
      }
      if (u >= n || v >= n) {
        throw PreconditionError("edge endpoint out of range");
      }
      g.adj_[u].push_back(v);
      g.adj_[v].push_back(u);
    }
    for (auto& nbrs : g.adj_) {
      std::sort(nbrs.begin(), nbrs.end());
      nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    return g;
  }

  /// Fast path for construction code that already produced sorted, symmetric,
  /// duplicate-free adjacency lists. Sortedness and ranges are still checked.
  static RootedGraph from_sorted_adjacency(Vertex root,
                                           std::vector<std::vector<Vertex>> adj) {
    check_header(adj.size(), root);
    const std::size_t n = adj.size();
    for (std::size_t v = 0; v < n; ++v) {
      const auto& nbrs = adj[v];
      if (!std::is_sorted(nbrs.begin(), nbrs.end()) ||
          std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
        throw PreconditionError("adjacency list not sorted/unique");
      }
      if (!nbrs.empty() && nbrs.back() >= n) {
        throw PreconditionError("edge endpoint out of range");
      }
      if (std::binary_search(nbrs.begin(), nbrs.end(), static_cast<Vertex>(v))) {
        throw PreconditionError("self-loop on vertex " + std::to_string(v));
      }
    }
    RootedGraph g;
    g.root_ = root;
    g.adj_ = std::move(adj);
    return g;
  }

  std::size_t vertex_count() const { return adj_.size(); }
  Vertex root() const { return root_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& nbrs : adj_) twice += nbrs.size();
    return twice / 2;
  }

  /// All edges, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (Vertex u = 0; u < adj_.size(); ++u) {
      for (Vertex v : adj_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  bool has_edge(Vertex u, Vertex v) const {
    if (u >= adj_.size() || v >= adj_.size()) return false;
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
  }

  bool operator==(const RootedGraph&) const = default;

 private:
  static void check_header(std::size_t n, Vertex root) {
    if (n == 0) throw PreconditionError("graph needs at least one vertex");
    if (root >= n) throw PreconditionError("root index out of range");
  }

  std::vector<std::vector<Vertex>> adj_;
  Vertex root_ = 0;
};

}  // namespace distk

#endif  // DISTK_GRAPH_HPP
