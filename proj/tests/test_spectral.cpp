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

#include <catch2/catch.hpp>

#include <cmath>
#include <random>

#include "distk/jacobi.hpp"
#include "distk/lanczos.hpp"
#include "distk/moments.hpp"
#include "distk/spectral.hpp"
#include "oracles.hpp"

using namespace distk;

namespace {

bool close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

std::vector<BigInt> counts_of(const RootedGraph& g, unsigned p) {
  return vacuum_moments(g, p).counts;
}

}  // namespace

TEST_CASE("vacuum_moments fixtures") {
  REQUIRE(counts_of(oracles::star_graph(3), 4) ==
          std::vector<BigInt>{1, 0, 3, 0, 9});
  REQUIRE(counts_of(oracles::complete_graph(2), 4) ==
          std::vector<BigInt>{1, 0, 1, 0, 1});
  REQUIRE(counts_of(oracles::cycle_graph(5), 4) ==
          std::vector<BigInt>{1, 0, 2, 0, 6});
}

TEST_CASE("vacuum_moments equals the walk-enumeration oracle") {
  std::vector<RootedGraph> graphs;
  for (auto& g : oracles::labeled_connected_graphs(4)) graphs.push_back(g);
  graphs.push_back(oracles::cycle_graph(5));
  graphs.push_back(oracles::hypercube(3));
  graphs.push_back(oracles::star_graph(5));
  graphs.push_back(oracles::path_graph(7, 0));
  std::mt19937 rng(31u);
  graphs.push_back(oracles::random_connected_graph(rng, 8, 0.35, 3));
  for (const auto& g : graphs) {
    const auto m = vacuum_moments(g, 6);
    REQUIRE(m.exact);
    for (unsigned j = 0; j <= 6; ++j) {
      REQUIRE(m.counts[j] == oracles::count_closed_walks(g, g.root(), j));
    }
  }
}

TEST_CASE("vacuum_moments guards its budget") {
  const auto k2 = oracles::complete_graph(2);
  REQUIRE_THROWS_AS(vacuum_moments(k2, 0), PreconditionError);
  REQUIRE_THROWS_AS(vacuum_moments(k2, 65), PreconditionError);
  REQUIRE_NOTHROW(vacuum_moments(k2, 10, 10));
  REQUIRE_THROWS_AS(vacuum_moments(k2, 11, 10), PreconditionError);
}

TEST_CASE("bipartite graphs have exactly zero odd vacuum moments") {
  for (const auto& g : {oracles::complete_graph(2), oracles::path_graph(3, 0),
                        oracles::hypercube(3), oracles::complete_bipartite(3, 3),
                        oracles::star_graph(7)}) {
    const auto m = vacuum_moments(g, 9);
    for (unsigned j = 1; j <= 9; j += 2) REQUIRE(m.counts[j] == 0);
  }
}

TEST_CASE("m2 equals the root degree exactly") {
  for (const auto& [name, g] : oracles::standard_test_graphs()) {
    INFO(name);
    REQUIRE(vacuum_moments(g, 2).counts[2] == g.degree(g.root()));
  }
}

TEST_CASE("lanczos_jacobi fixtures") {
  SECTION("stars break down after one level with gamma_0 = N") {
    for (unsigned leaves : {3u, 5u, 9u}) {
      const auto j = lanczos_jacobi(oracles::star_graph(leaves), 6);
      REQUIRE(j.terminated);
      REQUIRE(j.betas.size() == 2);
      REQUIRE(j.gammas.size() == 1);
      REQUIRE(j.betas[0] == Approx(0.0).margin(1e-14));
      REQUIRE(j.betas[1] == Approx(0.0).margin(1e-14));
      REQUIRE(j.gammas[0] == Approx(static_cast<double>(leaves)).margin(1e-12));
    }
  }
  SECTION("K2 gives the Bernoulli parameters") {
    const auto j = lanczos_jacobi(oracles::complete_graph(2), 6);
    REQUIRE(j.terminated);
    REQUIRE(j.betas == std::vector<double>{0.0, 0.0});
    REQUIRE(j.gammas == std::vector<double>{1.0});
  }
  SECTION("C5 agrees with moment orthogonalization to 1e-10") {
    const auto lz = lanczos_jacobi(oracles::cycle_graph(5), 3);
    const auto mo = moments_to_jacobi(vacuum_moments(oracles::cycle_graph(5), 6));
    for (std::size_t i = 0; i < lz.betas.size(); ++i) {
      REQUIRE(lz.betas[i] == Approx(mo.betas[i]).margin(1e-10));
    }
    for (std::size_t i = 0; i < lz.gammas.size(); ++i) {
      REQUIRE(lz.gammas[i] == Approx(mo.gammas[i]).margin(1e-10));
    }
  }
  SECTION("isolated root terminates immediately with a point mass") {
    const RootedGraph lonely = RootedGraph::from_edges(3, 0, {{1, 2}});
    const auto j = lanczos_jacobi(lonely, 4);
    REQUIRE(j.terminated);
    REQUIRE(j.betas == std::vector<double>{0.0});
    REQUIRE(j.gammas.empty());
  }
  REQUIRE_THROWS_AS(lanczos_jacobi(oracles::complete_graph(2), 0), PreconditionError);
}

TEST_CASE("lanczos agrees with moment orthogonalization on the n <= 64 corpus") {
  for (const auto& [name, g] : oracles::standard_test_graphs()) {
    INFO(name);
    const auto lz = lanczos_jacobi(g, 6);
    const auto mo = moments_to_jacobi(vacuum_moments(g, 12));
    const std::size_t nb = std::min(lz.betas.size(), mo.betas.size());
    const std::size_t ng = std::min(lz.gammas.size(), mo.gammas.size());
    for (std::size_t i = 0; i < nb; ++i) {
      INFO("beta level " << i);
      REQUIRE(close(lz.betas[i], mo.betas[i], 1e-8));
    }
    for (std::size_t i = 0; i < ng; ++i) {
      INFO("gamma level " << i);
      REQUIRE(close(lz.gammas[i], mo.gammas[i], 1e-8));
    }
    if (lz.terminated && lz.betas.size() < 6) {
      // Both routes must detect the same finite support.
      REQUIRE(mo.terminated);
      REQUIRE(mo.betas.size() == lz.betas.size());
    }
  }
}

TEST_CASE("vacuum_distribution fixtures") {
  SECTION("K2 is the centered Bernoulli law") {
    const auto mu = vacuum_distribution(oracles::complete_graph(2));
    REQUIRE(mu.atoms.size() == 2);
    REQUIRE(mu.atoms[0].position == Approx(-1.0).margin(1e-12));
    REQUIRE(mu.atoms[1].position == Approx(1.0).margin(1e-12));
    REQUIRE(mu.atoms[0].weight == Approx(0.5).margin(1e-12));
    REQUIRE(mu.atoms[1].weight == Approx(0.5).margin(1e-12));
  }
  SECTION("stars are two-point laws at +-sqrt(N)") {
    for (unsigned leaves : {4u, 6u}) {
      const auto mu = vacuum_distribution(oracles::star_graph(leaves));
      REQUIRE(mu.atoms.size() == 2);
      const double r = std::sqrt(static_cast<double>(leaves));
      REQUIRE(mu.atoms[0].position == Approx(-r).margin(1e-10));
      REQUIRE(mu.atoms[1].position == Approx(r).margin(1e-10));
      REQUIRE(mu.atoms[0].weight == Approx(0.5).margin(1e-10));
      REQUIRE(mu.atoms[1].weight == Approx(0.5).margin(1e-10));
    }
  }
  SECTION("C5 has three atoms with circulant positions") {
    const auto mu = vacuum_distribution(oracles::cycle_graph(5));
    REQUIRE(mu.atoms.size() == 3);
    REQUIRE(mu.atoms[2].position == Approx(2.0).margin(1e-10));
    REQUIRE(mu.atoms[1].position == Approx(2.0 * std::cos(2.0 * M_PI / 5.0)).margin(1e-10));
    REQUIRE(mu.atoms[0].position == Approx(2.0 * std::cos(4.0 * M_PI / 5.0)).margin(1e-10));
    REQUIRE(mu.atoms[2].weight == Approx(0.2).margin(1e-10));
    REQUIRE(mu.atoms[1].weight == Approx(0.4).margin(1e-10));
    REQUIRE(mu.atoms[0].weight == Approx(0.4).margin(1e-10));
  }
  SECTION("size cap") {
    REQUIRE_THROWS_AS(vacuum_distribution(oracles::cycle_graph(5), 4), SizeCapError);
  }
}

TEST_CASE("vacuum_distribution moments match exact walk counts on the corpus") {
  for (const auto& [name, g] : oracles::standard_test_graphs()) {
    INFO(name);
    const auto mu = vacuum_distribution(g);
    REQUIRE(std::abs(mu.total_mass() - 1.0) <= 1e-12);
    const auto m = vacuum_moments(g, 8);
    for (unsigned j = 0; j <= 8; ++j) {
      INFO("moment " << j);
      REQUIRE(close(mu.moment(j), m.values[j], 1e-8));
    }
  }
}

TEST_CASE("empirical spectral distribution and histogram") {
  SECTION("K2") {
    const auto esd = empirical_spectral_distribution(oracles::complete_graph(2));
    REQUIRE(esd.atoms.size() == 2);
    REQUIRE(esd.atoms[0].weight == Approx(0.5));
    const auto h = eigenvalue_histogram(oracles::complete_graph(2), 2);
    REQUIRE(h.masses == std::vector<double>{0.5, 0.5});
    REQUIRE(h.edges.front() == Approx(-1.0));
    REQUIRE(h.edges.back() == Approx(1.0));
  }
  SECTION("Q3 in four bins: 1/8, 3/8, 3/8, 1/8") {
    const auto h = eigenvalue_histogram(oracles::hypercube(3), 4);
    REQUIRE(h.masses.size() == 4);
    REQUIRE(h.masses[0] == Approx(0.125).margin(1e-12));
    REQUIRE(h.masses[1] == Approx(0.375).margin(1e-12));
    REQUIRE(h.masses[2] == Approx(0.375).margin(1e-12));
    REQUIRE(h.masses[3] == Approx(0.125).margin(1e-12));
  }
  SECTION("C5 spectrum is circulant with uniform weights") {
    const auto esd = empirical_spectral_distribution(oracles::cycle_graph(5));
    REQUIRE(esd.atoms.size() == 3);  // double eigenvalues merge
    REQUIRE(esd.atoms[2].position == Approx(2.0).margin(1e-10));
    REQUIRE(esd.atoms[2].weight == Approx(0.2).margin(1e-12));
    REQUIRE(esd.atoms[0].weight == Approx(0.4).margin(1e-12));
  }
  SECTION("masses always sum to one") {
    const auto h = eigenvalue_histogram(oracles::cycle_graph(7), 13);
    double total = 0.0;
    for (double mass : h.masses) total += mass;
    REQUIRE(total == Approx(1.0).margin(1e-12));
  }
  REQUIRE_THROWS_AS(eigenvalue_histogram(oracles::cycle_graph(5), 0), PreconditionError);
}

TEST_CASE("hypercube spectra against the binomial oracle") {
  for (unsigned d : {3u, 4u}) {
    const auto esd = empirical_spectral_distribution(oracles::hypercube(d));
    REQUIRE(esd.atoms.size() == d + 1);
    for (unsigned i = 0; i <= d; ++i) {
      const double expected_pos = static_cast<double>(d) - 2.0 * i;
      const double expected_w = static_cast<double>(oracles::binomial(d, i)) /
                                static_cast<double>(1u << d);
      REQUIRE(esd.atoms[d - i].position == Approx(expected_pos).margin(1e-10));
      REQUIRE(esd.atoms[d - i].weight == Approx(expected_w).margin(1e-12));
    }
  }
}
