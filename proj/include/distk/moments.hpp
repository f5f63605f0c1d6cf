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

#ifndef DISTK_MOMENTS_HPP
#define DISTK_MOMENTS_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "distk/errors.hpp"
#include "distk/graph.hpp"

namespace distk {

/// Arbitrary-precision integer for exact walk counts.
using BigInt = boost::multiprecision::cpp_int;

/// Moments m_0, ..., m_p with m_0 = 1. When `exact` is set, `counts` holds
/// the walk counts as exact integers and `values` their double images.
struct MomentSequence {
  std::vector<double> values;
  bool exact = false;
  std::vector<BigInt> counts;

  std::size_t order() const { return values.empty() ? 0 : values.size() - 1; }
};

inline MomentSequence make_moments(std::vector<double> values) {
  MomentSequence m;
  m.values = std::move(values);
  return m;
}

/// Guard against runaway exact-arithmetic requests; the counts themselves
/// never overflow (arbitrary precision).
inline constexpr unsigned kDefaultMomentBudget = 64;

/// Vacuum moments: m_j = (A^j)_{root,root}, the number of closed walks of
/// length j at the root, computed exactly by sparse matrix-vector products
/// from the root indicator vector.
inline MomentSequence vacuum_moments(const RootedGraph& g, unsigned p,
                                     unsigned max_order = kDefaultMomentBudget) {
  if (p == 0) throw PreconditionError("moment order must be >= 1");
  if (p > max_order) {
    throw PreconditionError("requested order exceeds the exact-arithmetic budget");
  }
  const std::size_t n = g.vertex_count();
  std::vector<BigInt> x(n), y(n);
  x[g.root()] = 1;
  MomentSequence out;
  out.exact = true;
  out.counts.reserve(p + 1);
  out.counts.emplace_back(1);
  for (unsigned j = 1; j <= p; ++j) {
    for (Vertex v = 0; v < n; ++v) {
      BigInt acc = 0;
      for (Vertex u : g.neighbors(v)) acc += x[u];
      y[v] = std::move(acc);
    }
    x.swap(y);
    out.counts.push_back(x[g.root()]);
  }
  out.values.reserve(p + 1);
  for (const BigInt& c : out.counts) out.values.push_back(c.convert_to<double>());
  return out;
}

}  // namespace distk

#endif  // DISTK_MOMENTS_HPP
