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

#ifndef DISTK_SERIALIZE_HPP
#define DISTK_SERIALIZE_HPP

#include <charconv>
#include <string>

#include <json.hpp>

#include "distk/census.hpp"
#include "distk/jacobi.hpp"
#include "distk/measure.hpp"
#include "distk/metric.hpp"
#include "distk/moments.hpp"
#include "distk/scan.hpp"
#include "distk/spectral.hpp"
#include "distk/baseline.hpp"

namespace distk {

using Json = nlohmann::ordered_json;

/// Shortest round-trip decimal representation (at most 17 significant
/// digits); keeps every emitted file byte-deterministic.
inline std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

// --- CSV ------------------------------------------------------------------

inline std::string to_csv(const DiscreteMeasure& mu) {
  std::string out = "position,weight\n";
  for (const Atom& a : mu.atoms) {
    out += format_double(a.position);
    out += ',';
    out += format_double(a.weight);
    out += '\n';
  }
  return out;
}

/// "order,value"; exact integer counts are rendered in full.
inline std::string to_csv(const MomentSequence& m) {
  std::string out = "order,value\n";
  for (std::size_t j = 0; j < m.values.size(); ++j) {
    out += std::to_string(j);
    out += ',';
    out += m.exact ? m.counts[j].str() : format_double(m.values[j]);
    out += '\n';
  }
  return out;
}

inline std::string to_csv(const NormalizedMoments& m) {
  std::string out = "order,value\n";
  for (std::size_t j = 0; j < m.values.size(); ++j) {
    out += std::to_string(j);
    out += ',';
    out += format_double(m.values[j]);
    out += '\n';
  }
  return out;
}

/// "level,beta,gamma", gamma left blank on the last level when absent.
inline std::string to_csv(const JacobiParams& j) {
  std::string out = "level,beta,gamma\n";
  for (std::size_t i = 0; i < j.betas.size(); ++i) {
    out += std::to_string(i);
    out += ',';
    out += format_double(j.betas[i]);
    out += ',';
    if (i < j.gammas.size()) out += format_double(j.gammas[i]);
    out += '\n';
  }
  return out;
}

inline std::string to_csv(const Histogram& h) {
  std::string out = "lower,upper,mass\n";
  for (std::size_t i = 0; i < h.masses.size(); ++i) {
    out += format_double(h.edges[i]);
    out += ',';
    out += format_double(h.edges[i + 1]);
    out += ',';
    out += format_double(h.masses[i]);
    out += '\n';
  }
  return out;
}

inline std::string to_csv(const ScanReport& r) {
  std::string out =
      "N,sigma,M,m1,m2,m3,m4,type1,type2,d_to_bernoulli,bound_4sqrt\n";
  for (const ScanPoint& pt : r.points) {
    out += std::to_string(pt.n_copies);
    out += ',';
    out += std::to_string(pt.sigma);
    out += ',';
    out += std::to_string(pt.big_m);
    out += ',';
    out += format_double(pt.m1);
    out += ',';
    out += format_double(pt.m2);
    out += ',';
    out += format_double(pt.m3);
    out += ',';
    out += format_double(pt.m4);
    out += ',';
    out += pt.type1.str();
    out += ',';
    out += pt.type2.str();
    out += ',';
    out += format_double(pt.d_to_bernoulli);
    out += ',';
    out += format_double(pt.bound_4sqrt);
    out += '\n';
  }
  return out;
}

inline std::string to_csv(const BaselineReport& r) {
  std::string out = "order,empirical,limit\n";
  for (std::size_t j = 0; j < r.empirical.size(); ++j) {
    out += std::to_string(j);
    out += ',';
    out += format_double(r.empirical[j]);
    out += ',';
    out += format_double(r.limit[j]);
    out += '\n';
  }
  return out;
}

// --- JSON -----------------------------------------------------------------

inline Json to_json(const MetricResult& m) {
  return Json{{"value", m.value},
              {"tail_bound", m.tail_bound},
              {"upper_estimate", m.upper_estimate()},
              {"grid", Json{{"radius", m.grid.radius},
                            {"step", m.grid.step},
                            {"points", m.grid_points}}}};
}

inline Json to_json(const ScanPoint& pt) {
  return Json{{"N", pt.n_copies},
              {"sigma", pt.sigma},
              {"M", pt.big_m},
              {"scale", pt.scale},
              {"m1", pt.m1},
              {"m2", pt.m2},
              {"m3", pt.m3},
              {"m4", pt.m4},
              {"m4_numerator", pt.raw.size() > 4 ? pt.raw[4].str() : "0"},
              {"m4_denominator", (BigInt(pt.scale) * BigInt(pt.scale)).str()},
              {"type1", pt.type1.str()},
              {"type2", pt.type2.str()},
              {"d_to_bernoulli", pt.d_to_bernoulli},
              {"bound_4sqrt", pt.bound_4sqrt}};
}

inline Json to_json(const ScanReport& r) {
  Json points = Json::array();
  for (const ScanPoint& pt : r.points) points.push_back(to_json(pt));
  return Json{{"graph", r.graph_description},
              {"k", r.k},
              {"config", Json{{"lanczos_depth", r.config.lanczos_depth},
                              {"grid_radius", r.config.metric.radius},
                              {"grid_step", r.config.metric.step}}},
              {"points", points},
              {"verdict", Json{{"max_residual_times_N", r.max_residual_times_n},
                               {"residual_bound_holds", r.residual_bound_holds},
                               {"d_monotone_nonincreasing", r.d_monotone_nonincreasing},
                               {"bound_holds", r.bound_holds}}}};
}

inline Json to_json(const WalkCensus& c, unsigned k, unsigned n_copies,
                    std::uint64_t sigma, std::uint64_t m_cap) {
  return Json{{"k", k},
              {"N", n_copies},
              {"sigma", sigma},
              {"M", m_cap},
              {"type1", c.type1.str()},
              {"type2", c.type2.str()},
              {"m4_unnormalized", BigInt(c.type1 + c.type2).str()}};
}

}  // namespace distk

#endif  // DISTK_SERIALIZE_HPP
