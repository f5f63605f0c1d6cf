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

#ifndef DISTK_DECOMPOSITION_HPP
#define DISTK_DECOMPOSITION_HPP

#include <vector>

#include "distk/distances.hpp"
#include "distk/errors.hpp"
#include "distk/graph.hpp"
#include "distk/products.hpp"

namespace distk {

/// Splits the edge set of the distance-k graph of a star power into the
/// within-copy part (the image of the star power of the factor's distance-k
/// graph) and the cross-copy part. Every cross edge (x, y) joins vertices in
/// distinct copies with dist(x, root) + dist(y, root) = k, both positive.
struct EdgeDecomposition {
  std::vector<Edge> star_power_edges;
  std::vector<Edge> cross_edges;
};

inline EdgeDecomposition decompose_star_distance_k(const RootedGraph& g,
                                                   unsigned n_copies, unsigned k) {
  if (k == 0) throw PreconditionError("distance-k decomposition needs k >= 1");
  if (distance_k_graph(g, k).edge_count() == 0) {
    throw PreconditionError("distance-k graph of the factor is trivial");
  }
  const RootedGraph power = star_power(g, n_copies);
  const RootedGraph dk = distance_k_graph(power, k);
  const std::size_t factor_n = g.vertex_count();
  EdgeDecomposition out;
  for (const auto& e : dk.edges()) {
    const auto [x, y] = e;
    // The root belongs to every copy, so root edges are within-copy.
    if (x == 0 || y == 0 || star_copy_of(factor_n, x) == star_copy_of(factor_n, y)) {
      out.star_power_edges.push_back(e);
    } else {
      out.cross_edges.push_back(e);
    }
  }
  return out;
}

}  // namespace distk

#endif  // DISTK_DECOMPOSITION_HPP
