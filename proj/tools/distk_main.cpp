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

#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "distk/distk.hpp"

namespace {

using distk::Json;

void write_output(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw distk::ParseError("cannot open output file: " + out_path);
  out << payload;
}

std::string graph_summary(const std::string& path, const distk::RootedGraph& g) {
  return path + " (n=" + std::to_string(g.vertex_count()) +
         ", m=" + std::to_string(g.edge_count()) +
         ", root=" + std::to_string(g.root()) + ")";
}

std::vector<std::uint64_t> parse_schedule(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string item =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (item.empty()) throw distk::PreconditionError("empty entry in schedule");
    std::size_t used = 0;
    const unsigned long long value = std::stoull(item, &used);
    if (used != item.size()) {
      throw distk::PreconditionError("malformed schedule entry: " + item);
    }
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

struct CommonOptions {
  std::string out_path;
  std::uint64_t seed = 0;  // reserved; recorded in JSON outputs
};

int run(int argc, char** argv) {
  CLI::App app{"distance-k graphs of star/cartesian graph powers: exact vacuum "
               "moments, Jacobi parameters, Cauchy transforms, Bernoulli "
               "convergence scans"};
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 ok, 2 usage error, 3 graph parse error, 4 precondition "
      "violation, 5 size cap exceeded.");

  CommonOptions common;
  app.add_option("--seed", common.seed,
                 "Reserved for future randomized features; recorded in JSON outputs");

  // ---- build ----
  auto* build = app.add_subcommand("build", "Combine graphs with a product, write the result");
  std::vector<std::string> build_inputs;
  std::string build_product = "star";
  unsigned build_power = 1;
  build->add_option("--graph", build_inputs, "Input graph file(s)")->required()->expected(-1);
  build->add_option("--product", build_product, "star or cartesian")
      ->check(CLI::IsMember({"star", "cartesian"}));
  build->add_option("--N", build_power, "Raise the combined graph to the N-th power");
  build->add_option("--out", common.out_path, "Output path (default stdout)");

  // ---- distk ----
  auto* dk_cmd = app.add_subcommand("distk", "Distance-k graph of a graph");
  std::string dk_graph;
  unsigned dk_k = 1;
  dk_cmd->add_option("--graph", dk_graph, "Input graph file")->required();
  dk_cmd->add_option("--k", dk_k, "Distance")->required();
  dk_cmd->add_option("--out", common.out_path, "Output path (default stdout)");

  // ---- moments ----
  auto* mom_cmd = app.add_subcommand("moments", "Vacuum moments (exact counts), or normalized star-power moments");
  std::string mom_graph;
  unsigned mom_p = 8, mom_k = 1, mom_n = 1;
  bool mom_normalized = false;
  mom_cmd->add_option("--graph", mom_graph, "Input graph file")->required();
  mom_cmd->add_option("--p", mom_p, "Highest moment order");
  auto* mom_k_opt = mom_cmd->add_option("--k", mom_k, "Distance (with --normalized)");
  auto* mom_n_opt =
      mom_cmd->add_option("--N", mom_n, "Star-power fold count (with --normalized)");
  mom_cmd
      ->add_flag("--normalized", mom_normalized,
                 "Moments of A^{[*N,k]} / sqrt(N sigma); needs --k and --N")
      ->needs(mom_k_opt)
      ->needs(mom_n_opt);
  mom_cmd->add_option("--out", common.out_path, "Output path (default stdout)");

  // ---- jacobi ----
  auto* jac_cmd = app.add_subcommand("jacobi", "Jacobi parameters of the vacuum distribution");
  std::string jac_graph;
  unsigned jac_depth = 6, jac_k = 1, jac_n = 1;
  bool jac_normalized = false;
  jac_cmd->add_option("--graph", jac_graph, "Input graph file")->required();
  jac_cmd->add_option("--depth", jac_depth, "Tridiagonalization depth");
  auto* jac_k_opt = jac_cmd->add_option("--k", jac_k, "Distance (with --normalized)");
  auto* jac_n_opt =
      jac_cmd->add_option("--N", jac_n, "Star-power fold count (with --normalized)");
  jac_cmd
      ->add_flag("--normalized", jac_normalized,
                 "Parameters of A^{[*N,k]} / sqrt(N sigma); needs --k and --N")
      ->needs(jac_k_opt)
      ->needs(jac_n_opt);
  jac_cmd->add_option("--out", common.out_path, "Output path (default stdout)");

  // ---- cauchy ----
  auto* cau_cmd = app.add_subcommand("cauchy", "Cauchy transform on a grid along Im z = const");
  std::string cau_graph;
  unsigned cau_depth = 6, cau_k = 1, cau_n = 1;
  bool cau_normalized = false;
  double cau_r = 20.0, cau_h = 0.01, cau_im = 1.0;
  cau_cmd->add_option("--graph", cau_graph, "Input graph file")->required();
  cau_cmd->add_option("--depth", cau_depth, "Tridiagonalization depth");
  auto* cau_k_opt = cau_cmd->add_option("--k", cau_k, "Distance (with --normalized)");
  auto* cau_n_opt =
      cau_cmd->add_option("--N", cau_n, "Star-power fold count (with --normalized)");
  cau_cmd
      ->add_flag("--normalized", cau_normalized,
                 "Transform of A^{[*N,k]} / sqrt(N sigma); needs --k and --N")
      ->needs(cau_k_opt)
      ->needs(cau_n_opt);
  cau_cmd->add_option("--grid-r", cau_r, "Grid half-width on Re z");
  cau_cmd->add_option("--grid-h", cau_h, "Grid step");
  cau_cmd->add_option("--im", cau_im, "Imaginary part of the evaluation line");
  cau_cmd->add_option("--out", common.out_path, "Output path (default stdout)");

  // ---- census ----
  auto* cen_cmd = app.add_subcommand("census", "Type-1/Type-2 closed 4-walk census (JSON)");
  std::string cen_graph;
  unsigned cen_k = 1, cen_n = 1;
  cen_cmd->add_option("--graph", cen_graph, "Input graph file")->required();
  cen_cmd->add_option("--k", cen_k, "Distance")->required();
  cen_cmd->add_option("--N", cen_n, "Star-power fold count")->required();
  cen_cmd->add_option("--out", common.out_path, "Output path (default stdout)");

  // ---- scan ----
  auto* scan_cmd = app.add_subcommand("scan", "Convergence scan over an N-schedule");
  std::string scan_graph;
  unsigned scan_k = 1, scan_depth = 6;
  std::string scan_schedule = "1,2,5,10,20,50,100,200,500,1000";
  double scan_r = 20.0, scan_h = 0.01;
  bool scan_json = false;
  scan_cmd->add_option("--graph", scan_graph, "Input graph file")->required();
  scan_cmd->add_option("--k", scan_k, "Distance")->required();
  scan_cmd->add_option("--schedule", scan_schedule, "Comma-separated increasing N values");
  scan_cmd->add_option("--depth", scan_depth, "Lanczos depth for the transform");
  scan_cmd->add_option("--grid-r", scan_r, "Metric grid half-width");
  scan_cmd->add_option("--grid-h", scan_h, "Metric grid step");
  scan_cmd->add_flag("--json", scan_json, "Emit JSON instead of CSV");
  scan_cmd->add_option("--out", common.out_path, "Output path (default stdout)");

  // ---- baseline ----
  auto* base_cmd = app.add_subcommand("baseline", "Cartesian-power comparison table");
  std::string base_graph;
  unsigned base_k = 1, base_n = 1, base_p = 4;
  base_cmd->add_option("--graph", base_graph, "Input graph file")->required();
  base_cmd->add_option("--k", base_k, "Distance")->required();
  base_cmd->add_option("--N", base_n, "Cartesian fold count")->required();
  base_cmd->add_option("--p", base_p, "Highest moment order");
  base_cmd->add_option("--out", common.out_path, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Usage problems (unknown verb, missing/invalid options) exit 2;
    // --help exits 0.
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (build->parsed()) {
    std::vector<distk::RootedGraph> graphs;
    for (const auto& path : build_inputs) graphs.push_back(distk::read_graph_file(path));
    distk::RootedGraph acc = graphs.front();
    for (std::size_t i = 1; i < graphs.size(); ++i) {
      acc = build_product == "star" ? distk::star_product(acc, graphs[i])
                                    : distk::cartesian_product(acc, graphs[i]);
    }
    if (build_power > 1) {
      acc = build_product == "star" ? distk::star_power(acc, build_power)
                                    : distk::cartesian_power(acc, build_power);
    }
    write_output(distk::write_graph(acc), common.out_path);
  } else if (dk_cmd->parsed()) {
    const auto g = distk::read_graph_file(dk_graph);
    write_output(distk::write_graph(distk::distance_k_graph(g, dk_k)), common.out_path);
  } else if (mom_cmd->parsed()) {
    const auto g = distk::read_graph_file(mom_graph);
    if (mom_normalized) {
      const auto nm = distk::normalized_vacuum_moments(g, mom_k, mom_n, mom_p);
      write_output(distk::to_csv(nm), common.out_path);
    } else {
      write_output(distk::to_csv(distk::vacuum_moments(g, mom_p)), common.out_path);
    }
  } else if (jac_cmd->parsed()) {
    const auto g = distk::read_graph_file(jac_graph);
    distk::JacobiParams params;
    if (jac_normalized) {
      const std::uint64_t sigma = distk::sigma_count(g, jac_k);
      if (sigma == 0) throw distk::PreconditionError("sigma = 0: no distance-k neighbors");
      const auto dk = distk::star_distance_k_graph(g, jac_n, jac_k);
      params = distk::scale_jacobi(distk::lanczos_jacobi(dk, jac_depth),
                                   1.0 / std::sqrt(static_cast<double>(jac_n * sigma)));
    } else {
      params = distk::lanczos_jacobi(g, jac_depth);
    }
    write_output(distk::to_csv(params), common.out_path);
  } else if (cau_cmd->parsed()) {
    const auto g = distk::read_graph_file(cau_graph);
    distk::JacobiParams params;
    if (cau_normalized) {
      const std::uint64_t sigma = distk::sigma_count(g, cau_k);
      if (sigma == 0) throw distk::PreconditionError("sigma = 0: no distance-k neighbors");
      const auto dk = distk::star_distance_k_graph(g, cau_n, cau_k);
      params = distk::scale_jacobi(distk::lanczos_jacobi(dk, cau_depth),
                                   1.0 / std::sqrt(static_cast<double>(cau_n * sigma)));
    } else {
      params = distk::lanczos_jacobi(g, cau_depth);
    }
    std::string csv = "re,im,g_re,g_im\n";
    const std::size_t count = static_cast<std::size_t>(2.0 * cau_r / cau_h) + 1;
    for (std::size_t i = 0; i < count; ++i) {
      const std::complex<double> z(-cau_r + static_cast<double>(i) * cau_h, cau_im);
      const std::complex<double> value = distk::cauchy_from_jacobi(params, z);
      csv += distk::format_double(z.real());
      csv += ',';
      csv += distk::format_double(z.imag());
      csv += ',';
      csv += distk::format_double(value.real());
      csv += ',';
      csv += distk::format_double(value.imag());
      csv += '\n';
    }
    write_output(csv, common.out_path);
  } else if (cen_cmd->parsed()) {
    const auto g = distk::read_graph_file(cen_graph);
    if (distk::distance_k_graph(g, cen_k).edge_count() == 0) {
      throw distk::PreconditionError("distance-k graph of the factor is trivial");
    }
    const auto census = distk::walk_census(g, cen_k, cen_n);
    Json j = distk::to_json(census, cen_k, cen_n, distk::sigma_count(g, cen_k),
                            distk::big_m(g, cen_k));
    j["seed"] = common.seed;
    write_output(j.dump(2) + "\n", common.out_path);
  } else if (scan_cmd->parsed()) {
    const auto g = distk::read_graph_file(scan_graph);
    distk::ScanConfig config;
    config.lanczos_depth = scan_depth;
    config.metric.radius = scan_r;
    config.metric.step = scan_h;
    const auto report = distk::convergence_scan(g, scan_k, parse_schedule(scan_schedule),
                                                config, graph_summary(scan_graph, g));
    if (scan_json) {
      Json j = distk::to_json(report);
      j["config"]["seed"] = common.seed;
      write_output(j.dump(2) + "\n", common.out_path);
    } else {
      write_output(distk::to_csv(report), common.out_path);
    }
  } else if (base_cmd->parsed()) {
    const auto g = distk::read_graph_file(base_graph);
    write_output(distk::to_csv(distk::cartesian_baseline(g, base_k, base_n, base_p)),
                 common.out_path);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const distk::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const distk::PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 4;
  } catch (const distk::SizeCapError& e) {
    std::cerr << "size cap exceeded: " << e.what() << "\n";
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
