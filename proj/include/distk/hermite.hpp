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

#ifndef DISTK_HERMITE_HPP
#define DISTK_HERMITE_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "distk/errors.hpp"

namespace distk {

/// Monic Hermite polynomial (standard normal weight):
/// H_0 = 1, H_1 = x, H_{k+1} = x H_k - k H_{k-1}.
inline double hermite_monic(unsigned k, double x) {
  if (k == 0) return 1.0;
  double prev = 1.0, cur = x;
  for (unsigned i = 1; i < k; ++i) {
    const double next = x * cur - static_cast<double>(i) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;  // sums to 1
};

/// Gauss-Hermite rule for the standard normal weight, by eigendecomposition
/// of the Jacobi matrix of the monic Hermite recurrence (gamma_m = m + 1):
/// nodes are eigenvalues, weights squared first eigenvector components.
/// Exact for polynomials of degree <= 2n - 1.
inline QuadratureRule gauss_hermite_rule(unsigned n) {
  if (n == 0) throw PreconditionError("quadrature needs >= 1 node");
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(n > 1 ? n - 1 : 0);
  for (unsigned i = 0; i + 1 < n; ++i) sub(i) = std::sqrt(static_cast<double>(i + 1));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub);
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (unsigned i = 0; i < n; ++i) {
    rule.nodes[i] = es.eigenvalues()(i);
    const double c = es.eigenvectors()(0, i);
    rule.weights[i] = c * c;
  }
  return rule;
}

}  // namespace distk

#endif  // DISTK_HERMITE_HPP
