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

#ifndef DISTK_CENSUS_HPP
#define DISTK_CENSUS_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "distk/distances.hpp"
#include "distk/errors.hpp"
#include "distk/graph.hpp"
#include "distk/moments.hpp"
#include "distk/products.hpp"

namespace distk {

/// sigma = number of vertices at distance exactly k from the root: the
/// root's degree in the distance-k graph.
inline std::uint64_t sigma_count(const RootedGraph& g, unsigned k) {
  if (k == 0) throw PreconditionError("sigma needs k >= 1");
  return vertices_at_distance(g, g.root(), k).size();
}

/// M = max over all vertices x of the number of vertices at distance
/// exactly k from x: the maximum degree of the distance-k graph.
inline std::uint64_t big_m(const RootedGraph& g, unsigned k) {
  if (k == 0) throw PreconditionError("M needs k >= 1");
  std::uint64_t best = 0;
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    best = std::max<std::uint64_t>(best, vertices_at_distance(g, x, k).size());
  }
  return best;
}

/// The distance-k graph of the N-fold star power: the operator whose vacuum
/// law the convergence scans study.
inline RootedGraph star_distance_k_graph(const RootedGraph& g, unsigned n_copies,
                                         unsigned k) {
  return distance_k_graph(star_power(g, n_copies), k);
}

/// Closed length-4 root walks, split by whether the walk returns to the
/// root at step 2 (e x e y e, "type 1") or not (e x y z e with y != root,
/// "type 2"). Counted combinatorially, independent of the matrix-power
/// moment route: type1 = deg(root)^2 and type2 enumerates neighborhoods.
struct WalkCensus {
  BigInt type1;
  BigInt type2;
};

/// Census on a prebuilt operator graph (root walks in `dk`).
inline WalkCensus walk_census_graph(const RootedGraph& dk) {
  const Vertex e = dk.root();
  const BigInt deg_e = dk.degree(e);
  WalkCensus out{deg_e * deg_e, 0};
  // Mark the root's neighborhood once; |N(y) & N(e)| then costs deg(y).
  std::vector<char> near_root(dk.vertex_count(), 0);
  for (Vertex x : dk.neighbors(e)) near_root[x] = 1;
  BigInt type2 = 0;
  for (Vertex x : dk.neighbors(e)) {
    for (Vertex y : dk.neighbors(x)) {
      if (y == e) continue;
      std::uint64_t closing = 0;
      for (Vertex z : dk.neighbors(y)) closing += near_root[z];
      type2 += closing;
    }
  }
  out.type2 = type2;
  return out;
}

inline WalkCensus walk_census(const RootedGraph& g, unsigned k, unsigned n_copies) {
  return walk_census_graph(star_distance_k_graph(g, n_copies, k));
}

/// Exact vacuum moments of the normalized operator A / sqrt(N sigma):
/// raw integer counts plus their scaled double images. raw[1] = 0 and
/// raw[2] = scale always hold (no loops; the root has N sigma neighbors),
/// so m1 = 0 and m2 = 1 are exact.
struct NormalizedMoments {
  std::uint64_t scale = 0;      // N * sigma
  std::vector<BigInt> raw;      // unnormalized counts m_0..m_p
  std::vector<double> values;   // raw[j] / scale^{j/2}
};

namespace detail {

inline NormalizedMoments normalize_counts(std::vector<BigInt> raw,
                                          std::uint64_t scale) {
  NormalizedMoments out;
  out.scale = scale;
  out.raw = std::move(raw);
  out.values.reserve(out.raw.size());
  BigInt even_den = 1;  // scale^{j/2} for even j
  const double sqrt_scale = std::sqrt(static_cast<double>(scale));
  for (std::size_t j = 0; j < out.raw.size(); ++j) {
    if (j % 2 == 0) {
      if (j > 0) even_den *= scale;
      out.values.push_back(BigInt(out.raw[j] / even_den).convert_to<double>() +
                           BigInt(out.raw[j] % even_den).convert_to<double>() /
                               even_den.convert_to<double>());
    } else {
      out.values.push_back(out.raw[j].convert_to<double>() /
                           std::pow(sqrt_scale, static_cast<double>(j)));
    }
  }
  return out;
}

}  // namespace detail

/// Moments of the prebuilt operator graph, normalized by the given scale.
inline NormalizedMoments normalized_vacuum_moments_graph(const RootedGraph& dk,
                                                         std::uint64_t scale,
                                                         unsigned p) {
  if (scale == 0) throw PreconditionError("normalization scale is zero");
  MomentSequence m = vacuum_moments(dk, p);
  return detail::normalize_counts(std::move(m.counts), scale);
}

inline NormalizedMoments normalized_vacuum_moments(const RootedGraph& g, unsigned k,
                                                   unsigned n_copies, unsigned p) {
  const std::uint64_t sigma = sigma_count(g, k);
  if (sigma == 0) {
    throw PreconditionError("root has no distance-k neighbors (sigma = 0)");
  }
  const RootedGraph dk = star_distance_k_graph(g, n_copies, k);
  return normalized_vacuum_moments_graph(dk, static_cast<std::uint64_t>(n_copies) * sigma, p);
}

}  // namespace distk

#endif  // DISTK_CENSUS_HPP
