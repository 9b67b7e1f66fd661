// Copyright 2026 The mopdim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Exit codes: 0 ok, 1 negative answer or invalid
// graph, 2 I/O or parse failure, 3 internal invariant failure.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "mopdim/dim2.hpp"
#include "mopdim/families.hpp"
#include "mopdim/io.hpp"
#include "mopdim/resolving_set.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitIo = 2;
constexpr int kExitInternal = 3;

int classify_error(const mopdim::Error& e) {
  switch (e.code()) {
    case mopdim::Errc::io_error:
    case mopdim::Errc::parse_error:
      return kExitIo;
    case mopdim::Errc::invariant_violation:
    case mopdim::Errc::construction_failed:
      return kExitInternal;
    default:
      return kExitNegative;
  }
}

mopdim::MopGraph load(const std::string& path, bool edges) {
  if (edges) return mopdim::read_edge_list_file(path).graph;
  return mopdim::read_mop_file(path);
}

long long micros_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() -
                                                               t0)
      .count();
}

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(xs[i]);
  }
  return s;
}

void emit_record(const std::string& path, const mopdim::ResultRecord& r) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::app);
  if (!out) throw mopdim::Error(mopdim::Errc::io_error, "cannot open " + path);
  out << mopdim::to_json_line(r) << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"metric dimension toolkit for maximal outerplanar graphs"};
  app.require_subcommand(1);

  std::string path, out_path, record_path;
  bool edges = false, cross_check = false, no_verify = false;
  std::string family;
  int n = 0;
  uint64_t seed = 1;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("path", path, "graph file")->required();
    cmd->add_flag("--edges", edges, "input is a generic edge list");
    cmd->add_option("--records", record_path, "append one JSON result line here");
  };

  CLI::App* validate = app.add_subcommand("validate", "check a graph file");
  add_input(validate);

  CLI::App* dim2 = app.add_subcommand("dim2", "decide whether the metric dimension is 2");
  add_input(dim2);
  dim2->add_flag("--cross-check", cross_check,
                 "also run the quadratic decider and, for n <= 16, the exhaustive oracle");

  CLI::App* resolve = app.add_subcommand("resolve", "build a resolving set of size ceil(2n/5)");
  add_input(resolve);
  resolve->add_flag("--no-verify", no_verify, "skip the final BFS verification (timing runs)");

  CLI::App* beta = app.add_subcommand("beta", "exhaustive metric dimension (n <= 16)");
  add_input(beta);

  CLI::App* embed_cmd = app.add_subcommand("embed", "grid drawing of a dimension-2 graph (DOT)");
  add_input(embed_cmd);
  embed_cmd->add_option("--out", out_path, "write DOT here instead of stdout");

  CLI::App* gen = app.add_subcommand("gen", "generate graphs");
  gen->add_option("family", family, "fan | zigzag | random | enumerate")->required();
  gen->add_option("n", n, "order")->required();
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--out", out_path, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  using namespace mopdim;
  auto t0 = std::chrono::steady_clock::now();

  if (validate->parsed()) {
    try {
      MopGraph g = load(path, edges);
      std::cout << "valid maximal outerplanar graph, n=" << g.order()
                << ", diagonals=" << g.diagonals().size() << "\n";
      return kExitOk;
    } catch (const Error& e) {
      if (e.code() == Errc::io_error || e.code() == Errc::parse_error) throw;
      std::cout << "invalid: " << e.what() << "\n";
      return kExitNegative;
    }
  }

  if (dim2->parsed()) {
    MopGraph g = load(path, edges);
    auto basis = decide_dim_two(g);
    if (cross_check) {
      DistanceTable t = distance_table(g);
      auto simple = decide_dim_two_simple(g, t);
      if (basis.has_value() != simple.has_value())
        throw Error(Errc::invariant_violation, "structural and quadratic deciders disagree");
      if (g.order() <= 16) {
        auto oracle = brute_force_beta(g, t);
        if ((oracle.beta == 2) != basis.has_value())
          throw Error(Errc::invariant_violation, "decider disagrees with the exhaustive oracle");
      }
    }
    ResultRecord rec{path, g.order(), "dim2", basis ? "YES" : "NO",
                     basis ? basis->members() : std::vector<int>{}, micros_since(t0)};
    emit_record(record_path, rec);
    if (basis) {
      std::cout << "YES  basis: " << join(basis->members()) << "\n";
      return kExitOk;
    }
    std::cout << "NO\n";
    return kExitNegative;
  }

  if (resolve->parsed()) {
    MopGraph g = load(path, edges);
    BuildOptions opts;
    opts.verify = !no_verify;
    VertexSet s = build_resolving_set(g, opts);
    long long us = micros_since(t0);
    ResultRecord rec{path, g.order(), "resolve", std::to_string(s.size()), s.members(), us};
    emit_record(record_path, rec);
    std::cout << "size " << s.size() << (no_verify ? " (unverified)" : " (verified resolving)")
              << " in " << us << " us\n";
    std::cout << "set: " << join(s.members()) << "\n";
    return kExitOk;
  }

  if (beta->parsed()) {
    MopGraph g = load(path, edges);
    auto res = brute_force_beta(g);
    ResultRecord rec{path, g.order(), "beta", std::to_string(res.beta), res.basis.members(),
                     micros_since(t0)};
    emit_record(record_path, rec);
    std::cout << "beta " << res.beta << "  basis: " << join(res.basis.members()) << "\n";
    return kExitOk;
  }

  if (embed_cmd->parsed()) {
    MopGraph g = load(path, edges);
    auto basis = decide_dim_two(g);
    if (!basis) {
      std::cout << "NO_DIM2_BASIS\n";
      return kExitNegative;
    }
    DistanceTable t = distance_table(g);
    GridEmbedding e = embed(g, *basis, t);
    auto report = verify_grid_representation(e, g);
    if (!report.ok)
      throw Error(Errc::invariant_violation,
                  "embedding failed structural rule " + std::to_string(report.failed_rule) + ": " +
                      report.detail);
    std::string dot = embedding_to_dot(g, e);
    if (out_path.empty()) {
      std::cout << dot;
    } else {
      std::ofstream out(out_path);
      if (!out) throw Error(Errc::io_error, "cannot open " + out_path);
      out << dot;
    }
    return kExitOk;
  }

  if (gen->parsed()) {
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
      file.open(out_path);
      if (!file) throw Error(Errc::io_error, "cannot open " + out_path);
      out = &file;
    }
    if (family == "fan") {
      write_mop(*out, fan(n));
    } else if (family == "zigzag") {
      write_mop(*out, zigzag(n));
    } else if (family == "random") {
      write_mop(*out, random_mop(n, seed));
    } else if (family == "enumerate") {
      if (n > 16)
        throw Error(Errc::too_large,
                    "enumerate is exponential; guarded at n <= 16, got " + std::to_string(n));
      long long count = 0;
      enumerate_mops(n, [&](const MopGraph& g) {
        *out << "# graph " << count++ << "\n";
        write_mop(*out, g);
      });
    } else {
      throw Error(Errc::parse_error, "unknown family " + family);
    }
    return kExitOk;
  }

  return kExitIo;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const mopdim::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return classify_error(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
}
