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

#ifndef DISTK_DISTANCES_HPP
#define DISTK_DISTANCES_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "distk/errors.hpp"
#include "distk/graph.hpp"

namespace distk {

/// Sentinel distance for unreachable vertices.
inline constexpr std::uint32_t kUnreachable = 0xffffffffu;

/// Single-source shortest-path distances. dist[source] = 0, kUnreachable
/// where no path exists; |dist[u] - dist[v]| <= 1 across every edge.
struct DistanceVector {
  Vertex source = 0;
  std::vector<std::uint32_t> dist;
};

inline DistanceVector bfs_distances(const RootedGraph& g, Vertex source) {
  const std::size_t n = g.vertex_count();
  if (source >= n) throw PreconditionError("BFS source out of range");
  DistanceVector out;
  out.source = source;
  out.dist.assign(n, kUnreachable);
  out.dist[source] = 0;
  std::vector<Vertex> queue;
  queue.reserve(n);
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    const std::uint32_t dx = out.dist[x];
    for (Vertex y : g.neighbors(x)) {
      if (out.dist[y] == kUnreachable) {
        out.dist[y] = dx + 1;
        queue.push_back(y);
      }
    }
  }
  return out;
}

inline bool is_connected(const RootedGraph& g) {
  const DistanceVector d = bfs_distances(g, 0);
  return std::none_of(d.dist.begin(), d.dist.end(),
                      [](std::uint32_t x) { return x == kUnreachable; });
}

/// Vertices at distance exactly `depth` from `source`, via BFS truncated at
/// `depth`. Returned list is sorted.
inline std::vector<Vertex> vertices_at_distance(const RootedGraph& g, Vertex source,
                                                std::uint32_t depth) {
  if (source >= g.vertex_count()) throw PreconditionError("BFS source out of range");
  std::vector<std::uint32_t> dist(g.vertex_count(), kUnreachable);
  std::vector<Vertex> queue;
  queue.push_back(source);
  dist[source] = 0;
  std::vector<Vertex> hits;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    const std::uint32_t dx = dist[x];
    if (dx == depth) {
      hits.push_back(x);
      continue;
    }
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] == kUnreachable) {
        dist[y] = dx + 1;
        queue.push_back(y);
      }
    }
  }
  std::sort(hits.begin(), hits.end());
  return hits;
}

/// Distance k-graph: same vertex set and root, an edge (x, y) exactly when
/// the graph distance in g equals k. k = 1 reproduces g's edge set.
///
/// Per-source BFS truncated at depth k; adjacency assembled in canonical
/// sorted order, so the result is deterministic.
inline RootedGraph distance_k_graph(const RootedGraph& g, unsigned k) {
  if (k == 0) throw PreconditionError("distance-k graph needs k >= 1");
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Vertex>> adj(n);
  std::vector<std::uint32_t> dist(n, kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(n);
  std::vector<Vertex> hits;
  for (Vertex u = 0; u < n; ++u) {
    queue.clear();
    hits.clear();
    queue.push_back(u);
    dist[u] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      const std::uint32_t dx = dist[x];
      if (dx == k) {
        // Collected but not expanded: only pairs at distance exactly k matter.
        if (x > u) hits.push_back(x);
        continue;
      }
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] == kUnreachable) {
          dist[y] = dx + 1;
          queue.push_back(y);
        }
      }
    }
    std::sort(hits.begin(), hits.end());
    // Scanning sources in increasing order keeps every list sorted: adj[u]
    // already holds smaller partners, adj[v] receives u in increasing order.
    for (Vertex v : hits) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    for (Vertex x : queue) dist[x] = kUnreachable;
  }
  return RootedGraph::from_sorted_adjacency(g.root(), std::move(adj));
}

}  // namespace distk

#endif  // DISTK_DISTANCES_HPP
