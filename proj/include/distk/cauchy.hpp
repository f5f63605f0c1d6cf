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

#ifndef DISTK_CAUCHY_HPP
#define DISTK_CAUCHY_HPP

#include <cmath>
#include <complex>
#include <functional>

#include "distk/jacobi.hpp"
#include "distk/measure.hpp"

namespace distk {

using Complex = std::complex<double>;

/// Tail transform G_nu for the bottom of a continued fraction.
using CauchyTail = std::function<Complex(Complex)>;

/// G_mu(z) = sum_i w_i / (z - x_i).
inline Complex cauchy_from_measure(const DiscreteMeasure& mu, Complex z) {
  Complex acc = 0.0;
  for (const Atom& a : mu.atoms) acc += a.weight / (z - a.position);
  return acc;
}

/// Continued-fraction Cauchy transform
///   G(z) = 1 / (z - b0 - g0 / (z - b1 - g1 / (...)))
/// evaluated bottom-up. A dangling gamma (gammas.size() == betas.size())
/// multiplies the tail transform; the default tail is identically zero,
/// which for terminated parameters gives the exact rational transform of
/// the finite measure. Denominators stay away from zero on Im z >= 1;
/// elsewhere division is guarded Lentz-style.
inline Complex cauchy_from_jacobi(const JacobiParams& j, Complex z,
                                  const CauchyTail& tail = {}) {
  j.validate();
  const std::size_t d = j.betas.size();
  constexpr double kTiny = 1e-30;
  Complex frac = 0.0;
  if (j.gammas.size() == d && tail) frac = j.gammas[d - 1] * tail(z);
  for (std::size_t i = d; i-- > 1;) {
    Complex den = z - j.betas[i] - frac;
    if (std::abs(den) < kTiny) den = kTiny;
    frac = j.gammas[i - 1] / den;
  }
  Complex den = z - j.betas[0] - frac;
  if (std::abs(den) < kTiny) den = kTiny;
  return 1.0 / den;
}

/// Transform of the centered Bernoulli law: 1 / (z - 1/z).
inline Complex bernoulli_cauchy(Complex z) { return 1.0 / (z - 1.0 / z); }

/// Transform of the standard semicircle law, branch chosen so that
/// G maps the upper half-plane into the lower one and G ~ 1/z at infinity.
inline Complex semicircle_cauchy(Complex z) {
  const Complex s = std::sqrt(z - 2.0) * std::sqrt(z + 2.0);
  return (z - s) / 2.0;
}

}  // namespace distk

#endif  // DISTK_CAUCHY_HPP
