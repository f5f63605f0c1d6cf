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

#ifndef DISTK_PRODUCTS_HPP
#define DISTK_PRODUCTS_HPP

#include <cstddef>
#include <limits>
#include <vector>

#include "distk/distances.hpp"
#include "distk/errors.hpp"
#include "distk/graph.hpp"

namespace distk {

/// Vertex cap for cartesian products.
inline constexpr std::size_t kDefaultProductCap = std::size_t{1} << 22;

/// Star product: glue two rooted graphs at their roots.
///
/// Deterministic indexing: the glued root is vertex 0, then the non-root
/// vertices of g1 in index order, then those of g2. Result has
/// n1 + n2 - 1 vertices and |E1| + |E2| edges, and with this indexing the
/// product is exactly associative (not just up to isomorphism).
inline RootedGraph star_product(const RootedGraph& g1, const RootedGraph& g2) {
  const Vertex r1 = g1.root(), r2 = g2.root();
  const std::size_t n1 = g1.vertex_count();
  const auto map1 = [&](Vertex v) -> Vertex {
    return v == r1 ? 0 : 1 + (v < r1 ? v : v - 1);
  };
  const auto map2 = [&](Vertex v) -> Vertex {
    return v == r2 ? 0 : static_cast<Vertex>(n1) + (v < r2 ? v : v - 1);
  };
  std::vector<Edge> edges;
  edges.reserve(g1.edge_count() + g2.edge_count());
  for (const auto& [u, v] : g1.edges()) edges.push_back(make_edge(map1(u), map1(v)));
  for (const auto& [u, v] : g2.edges()) edges.push_back(make_edge(map2(u), map2(v)));
  return RootedGraph::from_edges(n1 + g2.vertex_count() - 1, 0, edges);
}

/// Vertex index of g-vertex v inside copy `copy` of the N-fold star power.
/// The shared root is index 0; copy i occupies the contiguous block
/// [1 + i(n-1), 1 + (i+1)(n-1)).
inline Vertex star_power_index(const RootedGraph& g, unsigned copy, Vertex v) {
  const Vertex r = g.root();
  if (v == r) return 0;
  const std::size_t block = g.vertex_count() - 1;
  return static_cast<Vertex>(1 + copy * block + (v < r ? v : v - 1));
}

/// Copy index (0-based) of a non-root star-power vertex.
inline unsigned star_copy_of(std::size_t factor_n, Vertex v) {
  return static_cast<unsigned>((v - 1) / (factor_n - 1));
}

/// N-fold star power: N copies of g glued at the root. Requires a connected
/// factor with at least two vertices. N(n-1) + 1 vertices, N|E| edges,
/// root degree N * deg(root).
inline RootedGraph star_power(const RootedGraph& g, unsigned n_copies) {
  if (n_copies == 0) throw PreconditionError("star power needs N >= 1");
  if (g.vertex_count() < 2) {
    throw PreconditionError("star power needs a factor with >= 2 vertices");
  }
  if (!is_connected(g)) throw PreconditionError("star power needs a connected factor");
  const std::size_t n = g.vertex_count();
  // N(n-1) + 1 must stay a valid vertex index.
  if (n_copies > (std::numeric_limits<Vertex>::max() - 1) / (n - 1)) {
    throw SizeCapError("star power exceeds the vertex index range");
  }
  const Vertex r = g.root();
  std::vector<std::vector<Vertex>> adj(n_copies * (n - 1) + 1);
  adj[0].reserve(n_copies * g.degree(r));
  for (unsigned i = 0; i < n_copies; ++i) {
    for (Vertex w : g.neighbors(r)) adj[0].push_back(star_power_index(g, i, w));
  }
  for (unsigned i = 0; i < n_copies; ++i) {
    for (Vertex v = 0; v < n; ++v) {
      if (v == r) continue;
      auto& out = adj[star_power_index(g, i, v)];
      out.reserve(g.degree(v));
      if (g.has_edge(v, r)) out.push_back(0);
      for (Vertex w : g.neighbors(v)) {
        if (w != r) out.push_back(star_power_index(g, i, w));
      }
    }
  }
  return RootedGraph::from_sorted_adjacency(0, std::move(adj));
}

/// Cartesian product on V1 x V2 in row-major index order; root (r1, r2).
inline RootedGraph cartesian_product(const RootedGraph& g1, const RootedGraph& g2,
                                     std::size_t max_vertices = kDefaultProductCap) {
  const std::size_t n1 = g1.vertex_count(), n2 = g2.vertex_count();
  if (n1 > max_vertices / n2) {
    throw SizeCapError("cartesian product exceeds the vertex cap");
  }
  const auto index = [n2](Vertex u, Vertex w) {
    return static_cast<Vertex>(u * n2 + w);
  };
  std::vector<std::vector<Vertex>> adj(n1 * n2);
  for (Vertex u = 0; u < n1; ++u) {
    for (Vertex w = 0; w < n2; ++w) {
      auto& out = adj[index(u, w)];
      out.reserve(g1.degree(u) + g2.degree(w));
      const auto& vert = g1.neighbors(u);
      auto it = vert.begin();
      for (; it != vert.end() && *it < u; ++it) out.push_back(index(*it, w));
      for (Vertex y : g2.neighbors(w)) out.push_back(index(u, y));
      for (; it != vert.end(); ++it) out.push_back(index(*it, w));
    }
  }
  return RootedGraph::from_sorted_adjacency(index(g1.root(), g2.root()),
                                            std::move(adj));
}

/// N-fold cartesian power, guarded by the vertex cap at every fold.
inline RootedGraph cartesian_power(const RootedGraph& g, unsigned n_factors,
                                   std::size_t max_vertices = kDefaultProductCap) {
  if (n_factors == 0) throw PreconditionError("cartesian power needs N >= 1");
  RootedGraph acc = g;
  for (unsigned i = 1; i < n_factors; ++i) acc = cartesian_product(acc, g, max_vertices);
  return acc;
}

}  // namespace distk

#endif  // DISTK_PRODUCTS_HPP
