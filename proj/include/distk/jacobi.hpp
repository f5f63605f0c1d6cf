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

#ifndef DISTK_JACOBI_HPP
#define DISTK_JACOBI_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "distk/errors.hpp"
#include "distk/moments.hpp"

namespace distk {

/// Coefficients of the three-term recurrence of a measure's monic orthogonal
/// polynomials: x P_m = P_{m+1} + beta_m P_m + gamma_{m-1} P_{m-1}.
///
/// Layouts: `gammas` has either betas.size() - 1 entries (plain truncation)
/// or betas.size() entries (orthogonalization level n with a dangling
/// gamma_n that multiplies a continued-fraction tail). When `terminated` is
/// set, the first vanishing gamma was detected and dropped: the measure is
/// supported on exactly betas.size() points and all stored gammas are > 0.
struct JacobiParams {
  std::vector<double> betas;
  std::vector<double> gammas;
  bool terminated = false;

  std::size_t levels() const { return betas.size(); }
  std::size_t support_size() const { return betas.size(); }  // when terminated

  void validate() const {
    if (betas.empty()) throw PreconditionError("Jacobi parameters need beta_0");
    if (gammas.size() + 1 != betas.size() && gammas.size() != betas.size()) {
      throw PreconditionError("gamma count must be beta count or one less");
    }
    if (terminated && gammas.size() + 1 != betas.size()) {
      throw PreconditionError("terminated parameters carry exactly one gamma less");
    }
    for (double gm : gammas) {
      if (!(gm >= 0.0)) throw PreconditionError("gamma coefficients must be >= 0");
      if (terminated && gm == 0.0) {
        throw PreconditionError("terminated parameters keep only positive gammas");
      }
    }
  }
};

/// Centered Bernoulli law 1/2 dirac(-1) + 1/2 dirac(+1):
/// beta_0 = 0, gamma_0 = 1, everything after vanishes.
inline JacobiParams bernoulli_jacobi() { return {{0.0, 0.0}, {1.0}, true}; }

/// Parameters of s*X given parameters of X: betas scale by s, gammas by s^2.
inline JacobiParams scale_jacobi(const JacobiParams& j, double s) {
  JacobiParams out = j;
  for (double& b : out.betas) b *= s;
  for (double& gm : out.gammas) gm *= s * s;
  return out;
}

namespace detail {

inline constexpr double kSupportTol = 1e-12;
inline constexpr double kHankelTol = 1e-10;

// <x^shift * P, Q> against the moment list. Extended precision: the norms
// n_j shrink like products of standardized gammas, so the sums cancel.
inline long double moment_inner(const std::vector<long double>& m,
                                const std::vector<long double>& p,
                                const std::vector<long double>& q,
                                std::size_t shift) {
  long double acc = 0.0L;
  for (std::size_t a = 0; a < p.size(); ++a) {
    if (p[a] == 0.0L) continue;
    for (std::size_t b = 0; b < q.size(); ++b) {
      acc += p[a] * q[b] * m[a + b + shift];
    }
  }
  return acc;
}

inline void check_hankel_psd(const std::vector<double>& m) {
  const std::size_t q = m.empty() ? 0 : (m.size() - 1) / 2;
  Eigen::MatrixXd h(q + 1, q + 1);
  for (std::size_t i = 0; i <= q; ++i) {
    for (std::size_t j = 0; j <= q; ++j) h(i, j) = m[i + j];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  if (lo < -kHankelTol * std::max(1.0, hi)) {
    throw PreconditionError("Hankel matrix indefinite: not a moment sequence");
  }
}

}  // namespace detail

/// Orthogonalizes the monomial basis against the moment functional and reads
/// off the recurrence coefficients. Extracts the maximal prefix the supplied
/// moments determine: beta_j needs m_{2j+1}, gamma_j needs m_{2j+2}.
/// Terminates with the flag when a gamma falls below the support-detection
/// tolerance (finite support). Internally the measure is shifted by m_1 and
/// scaled by its standard deviation, which keeps the recursion conditioned at
/// the small depths used here.
inline JacobiParams moments_to_jacobi(const MomentSequence& m) {
  const std::vector<double>& raw = m.values;
  if (raw.size() < 2) throw PreconditionError("need m_0 and m_1 at least");
  if (std::abs(raw[0] - 1.0) > 1e-9) {
    throw PreconditionError("moment sequence must start with m_0 = 1");
  }
  detail::check_hankel_psd(raw);
  const std::size_t p = raw.size() - 1;

  const double center = raw[1];
  if (p < 2) return {{center}, {}, false};
  const double spread2 = raw[2] - raw[1] * raw[1];
  if (spread2 < detail::kSupportTol * std::max(1.0, std::abs(raw[2]))) {
    // Degenerate at level one: point mass at m_1.
    return {{center}, {}, true};
  }
  // Scale by the top-moment root: every standardized moment then lies in
  // [-1, 1] (log-convexity of even moments), which keeps the recursion's
  // cancellation as mild as this formulation allows.
  const std::size_t top = p - (p % 2);
  long double s = std::sqrt(static_cast<long double>(spread2));
  const long double centered_top = [&] {
    // Rough centered top moment to pick the scale; exactness is irrelevant.
    long double acc = 0.0L, binom_i = 1.0L, cpow = 1.0L;
    for (std::size_t i = 0; i <= top; ++i) {
      acc += binom_i * static_cast<long double>(raw[top - i]) * cpow;
      cpow *= -static_cast<long double>(center);
      binom_i = binom_i * static_cast<long double>(top - i) / static_cast<long double>(i + 1);
    }
    return acc;
  }();
  if (centered_top > 0.0L) {
    s = std::max(s, std::pow(centered_top, 1.0L / static_cast<long double>(top)));
  }

  // Standardized moments of (x - center)/s via binomial expansion.
  std::vector<long double> sm(p + 1, 0.0L);
  std::vector<long double> binom(p + 1, 0.0L);
  for (std::size_t j = 0; j <= p; ++j) {
    binom[0] = 1.0L;
    for (std::size_t i = 1; i <= j; ++i) {
      binom[i] = binom[i - 1] * static_cast<long double>(j - i + 1) /
                 static_cast<long double>(i);
    }
    long double acc = 0.0L, cpow = 1.0L;
    for (std::size_t i = 0; i <= j; ++i) {
      acc += binom[i] * static_cast<long double>(raw[j - i]) * cpow;
      cpow *= -static_cast<long double>(center);
    }
    sm[j] = acc / std::pow(s, static_cast<long double>(j));
  }

  std::vector<long double> p_before;           // P_{j-1}
  std::vector<long double> p_cur = {1.0L};     // P_j, starting at P_0
  std::vector<long double> p_next;             // P_{j+1}
  long double norm_cur = 1.0L;                 // <P_0, P_0> = m_0
  std::vector<long double> betas = {sm[1]};
  std::vector<long double> gammas;
  bool terminated = false;
  long double gamma_scale = 1.0L;

  std::size_t j = 0;
  while (2 * j + 2 <= p) {
    // P_{j+1} = (x - beta_j) P_j - gamma_{j-1} P_{j-1}
    p_next.assign(p_cur.size() + 1, 0.0L);
    for (std::size_t i = 0; i < p_cur.size(); ++i) {
      p_next[i + 1] += p_cur[i];
      p_next[i] -= betas[j] * p_cur[i];
    }
    if (j > 0) {
      for (std::size_t i = 0; i < p_before.size(); ++i) {
        p_next[i] -= gammas[j - 1] * p_before[i];
      }
    }
    const long double norm_next = detail::moment_inner(sm, p_next, p_next, 0);
    const long double gamma_j = norm_next / norm_cur;
    if (gamma_j < -detail::kHankelTol * gamma_scale) {
      throw PreconditionError("Hankel matrix indefinite: not a moment sequence");
    }
    if (gamma_j <= detail::kSupportTol * gamma_scale) {
      terminated = true;
      break;
    }
    gammas.push_back(gamma_j);
    gamma_scale = std::max(gamma_scale, gamma_j);
    if (2 * j + 3 > p) break;
    betas.push_back(detail::moment_inner(sm, p_next, p_next, 1) / norm_next);
    p_before = p_cur;
    p_cur = p_next;
    norm_cur = norm_next;
    ++j;
  }

  // De-standardize: beta = c + s*beta', gamma = s^2 * gamma'.
  JacobiParams out;
  out.terminated = terminated;
  out.betas.reserve(betas.size());
  for (long double b : betas) {
    out.betas.push_back(static_cast<double>(center + s * b));
  }
  out.gammas.reserve(gammas.size());
  for (long double gm : gammas) {
    out.gammas.push_back(static_cast<double>(s * s * gm));
  }
  out.validate();
  return out;
}

/// Moments of the measure encoded by Jacobi parameters, read off powers of
/// the (monic-form) Jacobi matrix at the first basis vector. Closed forms
/// for p <= 4:
///   m1 = b0, m2 = b0^2 + g0, m3 = b0^3 + 2 b0 g0 + b1 g0,
///   m4 = b0^4 + 3 b0^2 g0 + 2 b1 b0 g0 + b1^2 g0 + g0^2 + g0 g1.
inline MomentSequence jacobi_to_moments(const JacobiParams& j, unsigned p) {
  j.validate();
  const std::size_t b = j.betas.size();
  const std::size_t g = j.gammas.size();
  if (!j.terminated) {
    const unsigned max_p = g == b ? static_cast<unsigned>(2 * g)
                                  : static_cast<unsigned>(2 * b - 1);
    if (p > max_p) {
      throw PreconditionError("insufficient Jacobi depth for requested moments");
    }
  }
  // One extra node when a dangling gamma is present; its beta never enters
  // walks of length <= 2g, so a zero placeholder is exact.
  const std::size_t size = b + (g == b ? 1 : 0);
  std::vector<double> x(size, 0.0), y(size, 0.0);
  x[0] = 1.0;
  MomentSequence out;
  out.values.reserve(p + 1);
  out.values.push_back(1.0);
  for (unsigned step = 1; step <= p; ++step) {
    for (std::size_t i = 0; i < size; ++i) {
      double acc = (i < b ? j.betas[i] : 0.0) * x[i];
      if (i > 0) acc += j.gammas[i - 1] * x[i - 1];
      if (i + 1 < size) acc += x[i + 1];
      y[i] = acc;
    }
    x.swap(y);
    out.values.push_back(x[0]);
  }
  return out;
}

}  // namespace distk

#endif  // DISTK_JACOBI_HPP
