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

#ifndef DISTK_SPECTRAL_HPP
#define DISTK_SPECTRAL_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "distk/errors.hpp"
#include "distk/graph.hpp"
#include "distk/measure.hpp"

namespace distk {

/// Dense-eigensolver budget. The star-power pipeline never needs this; only
/// full spectral decompositions do.
inline constexpr std::size_t kDefaultDenseCap = 4096;

inline Eigen::MatrixXd adjacency_matrix(const RootedGraph& g) {
  const std::size_t n = g.vertex_count();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u)) a(u, v) = 1.0;
  }
  return a;
}

namespace detail {

inline void check_dense_cap(const RootedGraph& g, std::size_t cap) {
  if (g.vertex_count() > cap) {
    throw SizeCapError("graph exceeds the dense-eigensolver cap");
  }
}

}  // namespace detail

/// Vacuum distribution: the spectral measure of the adjacency matrix at the
/// root indicator vector. Atom positions are eigenvalues; the weight of an
/// eigenvalue is the squared norm of the root vector's projection onto its
/// eigenspace. Atoms lighter than 1e-14 are dropped and the rest
/// renormalized.
inline DiscreteMeasure vacuum_distribution(const RootedGraph& g,
                                           std::size_t cap = kDefaultDenseCap) {
  detail::check_dense_cap(g, cap);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(adjacency_matrix(g));
  const auto& values = es.eigenvalues();
  const auto& vectors = es.eigenvectors();
  std::vector<Atom> atoms;
  atoms.reserve(values.size());
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    const double c = vectors(g.root(), i);
    atoms.push_back({values(i), c * c});
  }
  return make_measure(std::move(atoms), {1e-12, 1e-14, true});
}

/// Empirical spectral distribution: every eigenvalue with weight 1/n,
/// numerically equal eigenvalues merged.
inline DiscreteMeasure empirical_spectral_distribution(
    const RootedGraph& g, std::size_t cap = kDefaultDenseCap) {
  detail::check_dense_cap(g, cap);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(adjacency_matrix(g),
                                                    Eigen::EigenvaluesOnly);
  const auto& values = es.eigenvalues();
  const double w = 1.0 / static_cast<double>(g.vertex_count());
  std::vector<Atom> atoms;
  atoms.reserve(values.size());
  for (Eigen::Index i = 0; i < values.size(); ++i) atoms.push_back({values(i), w});
  return make_measure(std::move(atoms), {1e-9, 0.0, true});
}

/// Equal-width histogram of all eigenvalues over [lambda_min, lambda_max].
/// masses[i] is the fraction of eigenvalues in [edges[i], edges[i+1]), the
/// last bin closed on the right.
struct Histogram {
  std::vector<double> edges;   // bins + 1 boundaries
  std::vector<double> masses;  // sums to 1
};

inline Histogram eigenvalue_histogram(const RootedGraph& g, unsigned bins,
                                      std::size_t cap = kDefaultDenseCap) {
  if (bins == 0) throw PreconditionError("histogram needs >= 1 bin");
  detail::check_dense_cap(g, cap);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(adjacency_matrix(g),
                                                    Eigen::EigenvaluesOnly);
  const auto& values = es.eigenvalues();
  const double lo = values.minCoeff();
  const double hi = values.maxCoeff();
  Histogram out;
  out.edges.resize(bins + 1);
  out.masses.assign(bins, 0.0);
  const double span = hi - lo;
  for (unsigned i = 0; i <= bins; ++i) {
    out.edges[i] = lo + span * static_cast<double>(i) / static_cast<double>(bins);
  }
  const double w = 1.0 / static_cast<double>(values.size());
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    std::size_t bin = 0;
    if (span > 0.0) {
      bin = static_cast<std::size_t>((values(i) - lo) / span * bins);
      if (bin >= bins) bin = bins - 1;
    }
    out.masses[bin] += w;
  }
  return out;
}

}  // namespace distk

#endif  // DISTK_SPECTRAL_HPP
