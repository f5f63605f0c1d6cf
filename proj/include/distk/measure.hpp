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

#ifndef DISTK_MEASURE_HPP
#define DISTK_MEASURE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "distk/errors.hpp"

namespace distk {

struct Atom {
  double position = 0.0;
  double weight = 0.0;
};

/// Finite atomic probability measure. Canonical form: positions strictly
/// increasing, weights nonnegative and summing to 1 within 1e-12.
struct DiscreteMeasure {
  std::vector<Atom> atoms;

  double total_mass() const {
    double acc = 0.0;
    for (const Atom& a : atoms) acc += a.weight;
    return acc;
  }

  double moment(unsigned j) const {
    double acc = 0.0;
    for (const Atom& a : atoms) acc += a.weight * std::pow(a.position, static_cast<double>(j));
    return acc;
  }
};

struct MeasureOptions {
  double merge_tol = 1e-12;   // relative to the position scale
  double drop_below = 0.0;    // discard atoms lighter than this
  bool renormalize = false;   // rescale weights to total mass 1
};

/// Canonicalizes raw atoms: sorts, merges positions closer than the merge
/// tolerance, drops negligible weights, optionally renormalizes, and
/// validates the probability-measure invariants.
inline DiscreteMeasure make_measure(std::vector<Atom> atoms,
                                    const MeasureOptions& opt = {}) {
  for (const Atom& a : atoms) {
    if (a.weight < -1e-12) throw PreconditionError("negative atom weight");
  }
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return a.position < b.position; });
  double scale = 1.0;
  for (const Atom& a : atoms) scale = std::max(scale, std::abs(a.position));
  const double tol = opt.merge_tol * scale;

  DiscreteMeasure out;
  for (const Atom& a : atoms) {
    if (!out.atoms.empty() && a.position - out.atoms.back().position <= tol) {
      // Weighted merge keeps the position consistent for near-degenerate atoms.
      Atom& last = out.atoms.back();
      const double w = last.weight + a.weight;
      if (w > 0.0) {
        last.position = (last.position * last.weight + a.position * a.weight) / w;
      }
      last.weight = w;
    } else {
      out.atoms.push_back(a);
    }
  }
  std::erase_if(out.atoms, [&](const Atom& a) { return a.weight <= opt.drop_below; });
  if (opt.renormalize) {
    const double mass = out.total_mass();
    if (mass <= 0.0) throw PreconditionError("measure has no mass");
    for (Atom& a : out.atoms) a.weight /= mass;
  }
  for (Atom& a : out.atoms) a.weight = std::max(a.weight, 0.0);
  if (std::abs(out.total_mass() - 1.0) > 1e-9) {
    throw PreconditionError("atom weights do not sum to 1");
  }
  return out;
}

inline DiscreteMeasure bernoulli_measure() {
  return {{{-1.0, 0.5}, {1.0, 0.5}}};
}

inline DiscreteMeasure point_mass(double c) { return {{{c, 1.0}}}; }

}  // namespace distk

#endif  // DISTK_MEASURE_HPP
