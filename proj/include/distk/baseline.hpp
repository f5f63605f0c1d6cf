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

#ifndef DISTK_BASELINE_HPP
#define DISTK_BASELINE_HPP

#include <cmath>
#include <cstdint>
#include <vector>

#include "distk/distances.hpp"
#include "distk/errors.hpp"
#include "distk/graph.hpp"
#include "distk/hermite.hpp"
#include "distk/moments.hpp"
#include "distk/products.hpp"
#include "distk/spectral.hpp"

namespace distk {

/// Cartesian-power comparison table: empirical spectral moments of
/// N^{-k/2} A^{[N,k]} next to the limit moments of
/// (2|E|/|V|)^{k/2} H_k(gaussian) / k!. No convergence assertion at fixed N;
/// the asymptotics are not reproducible at these sizes.
struct BaselineReport {
  unsigned k = 0;
  unsigned n_factors = 0;
  std::size_t vertex_count = 0;
  std::vector<BigInt> trace_raw;   // sum_v (A^j)_{vv}, exact
  std::vector<double> empirical;   // trace_raw[j] / (n * N^{jk/2})
  std::vector<double> limit;       // Gauss-Hermite moments of the limit law
};

namespace detail {

/// Exact closed-walk traces sum_v (A^j)_{vv} for j = 0..p, via half-power
/// dot products per vertex: (A^j)_{vv} = <A^{ceil(j/2)} e_v, A^{floor(j/2)} e_v>.
/// uint64 fast path when n * maxdeg^p cannot overflow; BigInt otherwise.
template <typename Int>
inline std::vector<BigInt> walk_traces_typed(const RootedGraph& g, unsigned p) {
  const std::size_t n = g.vertex_count();
  const unsigned half = (p + 1) / 2;
  std::vector<std::vector<Int>> powers(half + 1, std::vector<Int>(n));
  std::vector<BigInt> traces(p + 1);
  traces[0] = n;
  for (Vertex v = 0; v < n; ++v) {
    for (auto& row : powers) std::fill(row.begin(), row.end(), Int(0));
    powers[0][v] = 1;
    for (unsigned t = 1; t <= half; ++t) {
      const auto& prev = powers[t - 1];
      auto& cur = powers[t];
      for (Vertex x = 0; x < n; ++x) {
        Int acc = 0;
        for (Vertex y : g.neighbors(x)) acc += prev[y];
        cur[x] = acc;
      }
    }
    for (unsigned j = 1; j <= p; ++j) {
      const auto& a = powers[(j + 1) / 2];
      const auto& b = powers[j / 2];
      Int dot = 0;
      for (std::size_t i = 0; i < n; ++i) dot += a[i] * b[i];
      traces[j] += BigInt(dot);
    }
  }
  return traces;
}

inline std::vector<BigInt> walk_traces(const RootedGraph& g, unsigned p) {
  std::size_t maxdeg = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) maxdeg = std::max(maxdeg, g.degree(v));
  // n * maxdeg^p bounds every trace; stay well under 2^63 for the fast path.
  long double bound = static_cast<long double>(g.vertex_count());
  for (unsigned j = 0; j < p; ++j) bound *= static_cast<long double>(std::max<std::size_t>(maxdeg, 1));
  if (bound < 4.0e18L) return walk_traces_typed<std::uint64_t>(g, p);
  return walk_traces_typed<BigInt>(g, p);
}

}  // namespace detail

inline BaselineReport cartesian_baseline(const RootedGraph& g, unsigned k,
                                         unsigned n_factors, unsigned p,
                                         std::size_t cap = kDefaultDenseCap) {
  if (k == 0) throw PreconditionError("baseline needs k >= 1");
  if (p < 4) throw PreconditionError("baseline needs p >= 4");
  // Guard n^N against the dense cap before building anything.
  long double grown = 1.0L;
  for (unsigned i = 0; i < n_factors; ++i) {
    grown *= static_cast<long double>(g.vertex_count());
    if (grown > static_cast<long double>(cap)) {
      throw SizeCapError("cartesian power exceeds the dense cap");
    }
  }
  const RootedGraph power = cartesian_power(g, n_factors, cap);
  const RootedGraph dk = distance_k_graph(power, k);

  BaselineReport out;
  out.k = k;
  out.n_factors = n_factors;
  out.vertex_count = dk.vertex_count();
  out.trace_raw = detail::walk_traces(dk, p);

  const double n = static_cast<double>(dk.vertex_count());
  out.empirical.reserve(p + 1);
  for (unsigned j = 0; j <= p; ++j) {
    // N^{jk/2} is an exact integer for even jk; keep it exact so values the
    // scaling cancels (like m2 of K2 powers) come out exactly.
    const unsigned e = j * k;
    double den = n;
    if (e % 2 == 0) {
      den *= boost::multiprecision::pow(BigInt(n_factors), e / 2).convert_to<double>();
    } else {
      den *= std::pow(static_cast<double>(n_factors), static_cast<double>(e) / 2.0);
    }
    out.empirical.push_back(out.trace_raw[j].convert_to<double>() / den);
  }

  // Limit law: (2|E|/|V|)^{k/2} H_k(x) / k! under the standard Gaussian.
  const double c = 2.0 * static_cast<double>(g.edge_count()) /
                   static_cast<double>(g.vertex_count());
  double kfact = 1.0;
  for (unsigned i = 2; i <= k; ++i) kfact *= static_cast<double>(i);
  const double front = std::pow(c, static_cast<double>(k) / 2.0) / kfact;
  const QuadratureRule rule = gauss_hermite_rule(std::max(32u, (k * p) / 2 + 2));
  out.limit.assign(p + 1, 0.0);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double f = front * hermite_monic(k, rule.nodes[i]);
    double fpow = 1.0;
    for (unsigned j = 0; j <= p; ++j) {
      out.limit[j] += rule.weights[i] * fpow;
      fpow *= f;
    }
  }
  out.limit[0] = 1.0;  // definitionally, not a quadrature value
  return out;
}

}  // namespace distk

#endif  // DISTK_BASELINE_HPP
