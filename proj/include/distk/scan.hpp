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

#ifndef DISTK_SCAN_HPP
#define DISTK_SCAN_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "distk/census.hpp"
#include "distk/errors.hpp"
#include "distk/graph.hpp"
#include "distk/jacobi.hpp"
#include "distk/lanczos.hpp"
#include "distk/metric.hpp"

namespace distk {

/// One N in a convergence scan of the normalized operator
/// A^{[*N,k]} / sqrt(N sigma). Raw counts are exact integers; m1 = 0 and
/// m2 = 1 hold exactly, type1 = (N sigma)^2, and the fourth moment obeys
/// 1 <= m4 <= 1 + M/N as rationals.
struct ScanPoint {
  std::uint64_t n_copies = 0;
  std::uint64_t sigma = 0;
  std::uint64_t big_m = 0;
  std::uint64_t scale = 0;          // N * sigma
  std::vector<BigInt> raw;          // exact counts m_0..m_4
  double m1 = 0.0, m2 = 0.0, m3 = 0.0, m4 = 0.0;
  BigInt type1;
  BigInt type2;
  double d_to_bernoulli = 0.0;
  double bound_4sqrt = 0.0;
};

struct ScanConfig {
  unsigned lanczos_depth = 6;
  MetricOptions metric;
};

struct ScanReport {
  std::string graph_description;
  unsigned k = 0;
  ScanConfig config;
  std::vector<ScanPoint> points;
  // Verdicts over the whole schedule.
  double max_residual_times_n = 0.0;   // max over points of N * (m4 - 1)
  bool residual_bound_holds = true;    // N * (m4 - 1) <= M at every point, exact
  bool d_monotone_nonincreasing = true;
  bool bound_holds = true;             // d <= 4 sqrt(m4 - 1) at every point
};

/// Runs the scan: for each N in the schedule, exact moments and walk census
/// of the normalized operator, the transform distance to the centered
/// Bernoulli law (depth-truncated continued fraction on the metric grid),
/// and the certified fourth-moment bound.
inline ScanReport convergence_scan(const RootedGraph& g, unsigned k,
                                   const std::vector<std::uint64_t>& schedule,
                                   const ScanConfig& config = {},
                                   std::string description = "") {
  if (schedule.empty()) throw PreconditionError("scan schedule is empty");
  if (!std::is_sorted(schedule.begin(), schedule.end()) ||
      std::adjacent_find(schedule.begin(), schedule.end()) != schedule.end()) {
    throw PreconditionError("scan schedule must be strictly increasing");
  }
  if (schedule.front() == 0) throw PreconditionError("scan needs N >= 1");

  const std::uint64_t sigma = sigma_count(g, k);
  if (sigma == 0) {
    throw PreconditionError("root has no distance-k neighbors (sigma = 0)");
  }
  const std::uint64_t m_cap = big_m(g, k);

  ScanReport report;
  report.graph_description = std::move(description);
  report.k = k;
  report.config = config;

  const JacobiParams bernoulli = bernoulli_jacobi();
  for (std::uint64_t n_copies : schedule) {
    ScanPoint pt;
    pt.n_copies = n_copies;
    pt.sigma = sigma;
    pt.big_m = m_cap;
    pt.scale = n_copies * sigma;

    const RootedGraph dk = star_distance_k_graph(g, static_cast<unsigned>(n_copies), k);
    const NormalizedMoments nm = normalized_vacuum_moments_graph(dk, pt.scale, 4);
    pt.raw = nm.raw;
    pt.m1 = nm.values[1];
    pt.m2 = nm.values[2];
    pt.m3 = nm.values[3];
    pt.m4 = nm.values[4];

    const WalkCensus census = walk_census_graph(dk);
    pt.type1 = census.type1;
    pt.type2 = census.type2;

    // Ledger identities from the walk classification; these hold identically
    // for the construction, so a violation is an internal error.
    const BigInt scale_big = BigInt(pt.scale);
    if (pt.raw[1] != 0 || pt.raw[2] != scale_big ||
        pt.type1 != scale_big * scale_big || pt.type1 + pt.type2 != pt.raw[4]) {
      throw std::logic_error("walk census disagrees with exact moments");
    }

    // m4 - 1 computed from the exact integer residual, not by cancellation.
    const double residual = pt.type2.convert_to<double>() /
                            (static_cast<double>(pt.scale) * static_cast<double>(pt.scale));
    pt.bound_4sqrt = bernoulli_bound_check(1.0 + residual);

    const JacobiParams unscaled = lanczos_jacobi(dk, config.lanczos_depth);
    const JacobiParams mu_n = scale_jacobi(unscaled, 1.0 / std::sqrt(static_cast<double>(pt.scale)));
    pt.d_to_bernoulli = metric_d(mu_n, bernoulli, config.metric).value;

    report.max_residual_times_n =
        std::max(report.max_residual_times_n, static_cast<double>(n_copies) * residual);
    // N * (m4 - 1) <= M exactly: N * type2 <= M * (N sigma)^2.
    if (BigInt(n_copies) * pt.type2 > BigInt(m_cap) * scale_big * scale_big) {
      report.residual_bound_holds = false;
    }
    // Allowance for the numerical floor: exactly-Bernoulli points have a
    // zero bound but a ~1e-16 grid distance.
    if (pt.d_to_bernoulli > pt.bound_4sqrt + 1e-9) report.bound_holds = false;
    if (!report.points.empty() &&
        pt.d_to_bernoulli > report.points.back().d_to_bernoulli + 1e-15) {
      report.d_monotone_nonincreasing = false;
    }
    report.points.push_back(std::move(pt));
  }
  return report;
}

}  // namespace distk

#endif  // DISTK_SCAN_HPP
