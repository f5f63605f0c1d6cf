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

#ifndef DISTK_LANCZOS_HPP
#define DISTK_LANCZOS_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "distk/errors.hpp"
#include "distk/graph.hpp"
#include "distk/jacobi.hpp"

namespace distk {

/// Jacobi parameters of the vacuum distribution: tridiagonalizes the
/// adjacency operator from the root indicator vector.
///
/// Full reorthogonalization (two passes) keeps the basis orthogonal at the
/// modest sizes used here. Stops early with the terminated flag when the
/// next gamma falls below breakdown_tol * (running gamma scale); the vacuum
/// measure is then supported on exactly betas.size() points. Otherwise
/// returns `depth` betas and depth - 1 gammas.
inline JacobiParams lanczos_jacobi(const RootedGraph& g, unsigned depth,
                                   double breakdown_tol = 1e-12) {
  if (depth == 0) throw PreconditionError("Lanczos depth must be >= 1");
  const std::size_t n = g.vertex_count();
  if (depth > n) depth = static_cast<unsigned>(n);

  std::vector<std::vector<double>> basis;
  basis.reserve(depth);
  std::vector<double> v(n, 0.0), w(n, 0.0);
  v[g.root()] = 1.0;
  basis.push_back(v);

  JacobiParams out;
  double gamma_scale = 1.0;
  double off_prev = 0.0;

  for (unsigned j = 0; j < depth; ++j) {
    const std::vector<double>& vj = basis[j];
    for (Vertex x = 0; x < n; ++x) {
      double acc = 0.0;
      for (Vertex y : g.neighbors(x)) acc += vj[y];
      w[x] = acc;
    }
    double beta = 0.0;
    for (std::size_t i = 0; i < n; ++i) beta += w[i] * vj[i];
    out.betas.push_back(beta);
    if (j + 1 == depth) break;

    for (std::size_t i = 0; i < n; ++i) w[i] -= beta * vj[i];
    if (j > 0) {
      const std::vector<double>& vp = basis[j - 1];
      for (std::size_t i = 0; i < n; ++i) w[i] -= off_prev * vp[i];
    }
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& u : basis) {
        double dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += w[i] * u[i];
        for (std::size_t i = 0; i < n; ++i) w[i] -= dot * u[i];
      }
    }
    double norm2 = 0.0;
    for (double x : w) norm2 += x * x;
    const double gamma = norm2;
    if (gamma <= breakdown_tol * gamma_scale) {
      out.terminated = true;
      break;
    }
    out.gammas.push_back(gamma);
    gamma_scale = std::max(gamma_scale, gamma);
    off_prev = std::sqrt(gamma);
    std::vector<double> next(n);
    for (std::size_t i = 0; i < n; ++i) next[i] = w[i] / off_prev;
    basis.push_back(std::move(next));
  }
  // Completing n levels exhausts the space: the vacuum measure is exactly
  // the n-point measure of these parameters.
  if (!out.terminated && out.betas.size() == n) out.terminated = true;
  out.validate();
  return out;
}

}  // namespace distk

#endif  // DISTK_LANCZOS_HPP
