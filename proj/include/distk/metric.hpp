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

#ifndef DISTK_METRIC_HPP
#define DISTK_METRIC_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>

#include "distk/cauchy.hpp"
#include "distk/errors.hpp"
#include "distk/jacobi.hpp"
#include "distk/measure.hpp"

namespace distk {

/// Grid for the sup over { Im z >= 1 }. The difference of two Cauchy
/// transforms is analytic there and vanishes at infinity, so its modulus
/// peaks on the boundary line Im z = 1; the grid walks Re z in [-radius,
/// radius] with the given step.
struct MetricOptions {
  double radius = 20.0;
  double step = 0.01;
};

/// Grid estimate of d(mu1, mu2) = sup |G_1(z) - G_2(z)| over Im z >= 1.
/// `value` (the grid max) is a lower bound on d; value + tail_bound is a
/// certified upper estimate. The tail uses
///   |G(z) - 1/z - m1/z^2| <= m2 / |z|^2   (|1/(z - x)| <= 1 on Im z >= 1),
/// so beyond the grid |G_1 - G_2| <= (|m1_1 - m1_2| + m2_1 + m2_2)/(R^2+1).
struct MetricResult {
  double value = 0.0;
  double tail_bound = 0.0;
  MetricOptions grid;
  std::size_t grid_points = 0;

  double upper_estimate() const { return value + tail_bound; }
};

namespace detail {

struct TransformView {
  std::function<Complex(Complex)> eval;
  double m1 = 0.0;
  double m2 = 0.0;
};

inline TransformView transform_view(const DiscreteMeasure& mu) {
  return {[mu](Complex z) { return cauchy_from_measure(mu, z); }, mu.moment(1),
          mu.moment(2)};
}

inline TransformView transform_view(const JacobiParams& j) {
  j.validate();
  const double b0 = j.betas[0];
  const double g0 = j.gammas.empty() ? 0.0 : j.gammas[0];
  return {[j](Complex z) { return cauchy_from_jacobi(j, z); }, b0, b0 * b0 + g0};
}

inline MetricResult metric_d_impl(const TransformView& a, const TransformView& b,
                                  const MetricOptions& opt) {
  if (!(opt.radius > 0.0) || !(opt.step > 0.0)) {
    throw PreconditionError("metric grid needs positive radius and step");
  }
  MetricResult out;
  out.grid = opt;
  const std::size_t count = static_cast<std::size_t>(2.0 * opt.radius / opt.step) + 1;
  out.grid_points = count;
  double best = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const Complex z(-opt.radius + static_cast<double>(i) * opt.step, 1.0);
    const double diff = std::abs(a.eval(z) - b.eval(z));
    if (diff > best) best = diff;
  }
  out.value = best;
  out.tail_bound =
      (std::abs(a.m1 - b.m1) + a.m2 + b.m2) / (opt.radius * opt.radius + 1.0);
  return out;
}

}  // namespace detail

inline MetricResult metric_d(const DiscreteMeasure& a, const DiscreteMeasure& b,
                             const MetricOptions& opt = {}) {
  return detail::metric_d_impl(detail::transform_view(a), detail::transform_view(b), opt);
}

inline MetricResult metric_d(const JacobiParams& a, const JacobiParams& b,
                             const MetricOptions& opt = {}) {
  return detail::metric_d_impl(detail::transform_view(a), detail::transform_view(b), opt);
}

inline MetricResult metric_d(const JacobiParams& a, const DiscreteMeasure& b,
                             const MetricOptions& opt = {}) {
  return detail::metric_d_impl(detail::transform_view(a), detail::transform_view(b), opt);
}

inline MetricResult metric_d(const DiscreteMeasure& a, const JacobiParams& b,
                             const MetricOptions& opt = {}) {
  return detail::metric_d_impl(detail::transform_view(a), detail::transform_view(b), opt);
}

/// Certified bound 4 * sqrt(m4 - 1) on the distance to the centered
/// Bernoulli law, valid for any standardized measure with fourth moment m4.
/// Values of m4 slightly below 1 (rounding) clamp to a zero bound.
inline double bernoulli_bound_check(double m4) {
  if (m4 < 1.0 - 1e-9) {
    throw PreconditionError("fourth moment below 1: not a standardized measure");
  }
  return 4.0 * std::sqrt(std::max(m4 - 1.0, 0.0));
}

}  // namespace distk

#endif  // DISTK_METRIC_HPP
