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

// Test-only oracles: brute-force and closed-form routes kept independent of
// the library implementations they check (Floyd-Warshall instead of BFS,
// explicit walk enumeration instead of matrix powers, closed-form spectra).

#ifndef DISTK_TESTS_ORACLES_HPP
#define DISTK_TESTS_ORACLES_HPP

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "distk/graph.hpp"
#include "distk/moments.hpp"
#include "distk/products.hpp"

namespace oracles {

using distk::BigInt;
using distk::Edge;
using distk::RootedGraph;
using distk::Vertex;

inline constexpr std::uint32_t kFar = 1000000;

// All-pairs distances by Floyd-Warshall (deliberately not BFS).
inline std::vector<std::vector<std::uint32_t>> floyd_warshall(const RootedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, kFar));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u)) d[u][v] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
      }
    }
  }
  return d;
}

// Number of closed walks of the given length at `start`, by explicit
// depth-first enumeration (exponential, fine for the small fixtures used in
// tests; deliberately not the matrix-power route).
inline void walk_dfs(const RootedGraph& g, Vertex at, Vertex target,
                     unsigned remaining, BigInt& acc) {
  if (remaining == 0) {
    if (at == target) ++acc;
    return;
  }
  for (Vertex w : g.neighbors(at)) walk_dfs(g, w, target, remaining - 1, acc);
}

inline BigInt count_closed_walks(const RootedGraph& g, Vertex start, unsigned len) {
  BigInt acc = 0;
  walk_dfs(g, start, start, len, acc);
  return acc;
}

// Every closed 4-walk (root, x, y, z, root), materialized, for instrumented
// checks of the walk classification.
inline std::vector<std::array<Vertex, 3>> enumerate_root_4walks(const RootedGraph& g) {
  std::vector<std::array<Vertex, 3>> walks;
  const Vertex e = g.root();
  for (Vertex x : g.neighbors(e)) {
    for (Vertex y : g.neighbors(x)) {
      for (Vertex z : g.neighbors(y)) {
        if (g.has_edge(z, e)) walks.push_back({x, y, z});
      }
    }
  }
  return walks;
}

// Dyck-path count: closed +-1 paths of length 2m staying >= 0 (Catalan).
inline std::uint64_t dyck_count(unsigned height, unsigned len) {
  if (len == 0) return height == 0 ? 1 : 0;
  std::uint64_t acc = 0;
  acc += dyck_count(height + 1, len - 1);
  if (height > 0) acc += dyck_count(height - 1, len - 1);
  return acc;
}

// --- builders ---------------------------------------------------------------

inline RootedGraph path_graph(unsigned n, Vertex root = 0) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return RootedGraph::from_edges(n, root, edges);
}

inline RootedGraph cycle_graph(unsigned n, Vertex root = 0) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  edges.push_back(distk::make_edge(0, n - 1));
  return RootedGraph::from_edges(n, root, edges);
}

inline RootedGraph complete_graph(unsigned n, Vertex root = 0) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return RootedGraph::from_edges(n, root, edges);
}

// Star K_{1,leaves} rooted at the center (vertex 0).
inline RootedGraph star_graph(unsigned leaves) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return RootedGraph::from_edges(leaves + 1, 0, edges);
}

inline RootedGraph complete_bipartite(unsigned a, unsigned b, Vertex root = 0) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < a; ++i) {
    for (Vertex j = 0; j < b; ++j) edges.push_back({i, static_cast<Vertex>(a + j)});
  }
  return RootedGraph::from_edges(a + b, root, edges);
}

// d-dimensional hypercube on bitmask vertices; independent of the library's
// cartesian product.
inline RootedGraph hypercube(unsigned d, Vertex root = 0) {
  const Vertex n = Vertex{1} << d;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    for (unsigned bit = 0; bit < d; ++bit) {
      const Vertex w = v ^ (Vertex{1} << bit);
      if (v < w) edges.push_back({v, w});
    }
  }
  return RootedGraph::from_edges(n, root, edges);
}

// N-fold star gluing by repeated star_product. Unlike star_power this allows
// disconnected factors (distance-k graphs may be disconnected), which is what
// the within-copy reference construction needs.
inline RootedGraph star_glue(const RootedGraph& g, unsigned n) {
  RootedGraph acc = g;
  for (unsigned i = 1; i < n; ++i) acc = distk::star_product(acc, g);
  return acc;
}

inline std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::uint64_t acc = 1;
  for (unsigned i = 0; i < k; ++i) acc = acc * (n - i) / (i + 1);
  return acc;
}

// --- corpora ----------------------------------------------------------------

inline bool mask_connected(unsigned n, unsigned mask,
                           const std::vector<Edge>& all_edges) {
  std::vector<std::vector<unsigned>> adj(n);
  for (std::size_t i = 0; i < all_edges.size(); ++i) {
    if (mask & (1u << i)) {
      adj[all_edges[i].first].push_back(all_edges[i].second);
      adj[all_edges[i].second].push_back(all_edges[i].first);
    }
  }
  std::vector<char> seen(n, 0);
  std::vector<unsigned> stack = {0};
  seen[0] = 1;
  unsigned reached = 1;
  while (!stack.empty()) {
    const unsigned v = stack.back();
    stack.pop_back();
    for (unsigned w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

// All connected labeled graphs on n vertices (n <= 5 is practical), root 0.
inline std::vector<RootedGraph> labeled_connected_graphs(unsigned n) {
  std::vector<Edge> all_edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) all_edges.push_back({i, j});
  }
  std::vector<RootedGraph> out;
  for (unsigned mask = 0; mask < (1u << all_edges.size()); ++mask) {
    if (!mask_connected(n, mask, all_edges)) continue;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < all_edges.size(); ++i) {
      if (mask & (1u << i)) edges.push_back(all_edges[i]);
    }
    out.push_back(RootedGraph::from_edges(n, 0, edges));
  }
  return out;
}

inline RootedGraph random_connected_graph(std::mt19937& rng, unsigned n,
                                          double edge_prob, Vertex root = 0) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = i + 1; j < n; ++j) {
        if (coin(rng) < edge_prob) edges.push_back({i, j});
      }
    }
    std::vector<std::vector<unsigned>> adj(n);
    for (const auto& e : edges) {
      adj[e.first].push_back(e.second);
      adj[e.second].push_back(e.first);
    }
    std::vector<char> seen(n, 0);
    std::vector<unsigned> stack = {0};
    seen[0] = 1;
    unsigned reached = 1;
    while (!stack.empty()) {
      const unsigned v = stack.back();
      stack.pop_back();
      for (unsigned w : adj[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    if (reached == n) return RootedGraph::from_edges(n, root, edges);
  }
  // Fall back to a path so the generator never loops forever.
  return path_graph(n, root);
}

struct NamedGraph {
  std::string name;
  RootedGraph graph;
};

// Fixed corpus of small graphs with n <= 64 for spectral cross-checks.
inline std::vector<NamedGraph> standard_test_graphs() {
  std::vector<NamedGraph> out;
  out.push_back({"K2", complete_graph(2)});
  out.push_back({"P3_end", path_graph(3, 0)});
  out.push_back({"P3_mid", path_graph(3, 1)});
  out.push_back({"P7_end", path_graph(7, 0)});
  out.push_back({"C5", cycle_graph(5)});
  out.push_back({"C6", cycle_graph(6)});
  out.push_back({"C7", cycle_graph(7)});
  out.push_back({"K4", complete_graph(4)});
  out.push_back({"K7", complete_graph(7)});
  out.push_back({"star5", star_graph(5)});
  out.push_back({"star9", star_graph(9)});
  out.push_back({"K23", complete_bipartite(2, 3)});
  out.push_back({"K33", complete_bipartite(3, 3)});
  out.push_back({"Q3", hypercube(3)});
  out.push_back({"Q4", hypercube(4)});
  out.push_back({"Q6", hypercube(6)});
  std::mt19937 rng(20260808u);
  out.push_back({"rand10", random_connected_graph(rng, 10, 0.3)});
  out.push_back({"rand16", random_connected_graph(rng, 16, 0.2)});
  out.push_back({"rand33", random_connected_graph(rng, 33, 0.1)});
  out.push_back({"rand64", random_connected_graph(rng, 64, 0.06)});
  return out;
}

// Corpus for the decomposition/census sweeps: >= 50 connected rooted graphs
// with n <= 7 (all labeled connected graphs on <= 4 vertices, structured
// families on 5..7, seeded randoms with varied roots).
inline std::vector<NamedGraph> decomposition_corpus() {
  std::vector<NamedGraph> out;
  unsigned idx = 0;
  for (unsigned n = 2; n <= 4; ++n) {
    for (auto& g : labeled_connected_graphs(n)) {
      out.push_back({"lab" + std::to_string(n) + "_" + std::to_string(idx++), g});
    }
  }
  out.push_back({"C5", cycle_graph(5)});
  out.push_back({"C6", cycle_graph(6)});
  out.push_back({"C7", cycle_graph(7)});
  out.push_back({"P5_end", path_graph(5, 0)});
  out.push_back({"P5_mid", path_graph(5, 2)});
  out.push_back({"P6_end", path_graph(6, 0)});
  out.push_back({"P7_end", path_graph(7, 0)});
  out.push_back({"P7_mid", path_graph(7, 3)});
  out.push_back({"K5", complete_graph(5)});
  out.push_back({"K7", complete_graph(7)});
  out.push_back({"star4", star_graph(4)});
  out.push_back({"star6", star_graph(6)});
  out.push_back({"star6_leaf", RootedGraph::from_edges(7, 1, star_graph(6).edges())});
  out.push_back({"K23", complete_bipartite(2, 3)});
  out.push_back({"K33", complete_bipartite(3, 3)});
  out.push_back({"K34", complete_bipartite(3, 4)});
  std::mt19937 rng(987654u);
  for (unsigned n = 5; n <= 7; ++n) {
    for (unsigned rep = 0; rep < 3; ++rep) {
      const double prob = 0.3 + 0.15 * rep;
      const Vertex root = static_cast<Vertex>(rep % n);
      out.push_back({"rand" + std::to_string(n) + "_" + std::to_string(rep),
                     random_connected_graph(rng, n, prob, root)});
    }
  }
  return out;
}

}  // namespace oracles

#endif  // DISTK_TESTS_ORACLES_HPP
