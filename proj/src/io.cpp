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

#include "mopdim/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mopdim {

namespace {

// Token stream over the text formats: whitespace-separated integers, '#'
// comments to end of line.
class Tokens {
 public:
  explicit Tokens(std::istream& in) : in_(in) {}

  std::optional<long long> next() {
    for (;;) {
      int c = in_.peek();
      if (c == EOF) return std::nullopt;
      if (c == '#') {
        std::string line;
        std::getline(in_, line);
        continue;
      }
      if (std::isspace(c)) {
        in_.get();
        continue;
      }
      long long v = 0;
      if (!(in_ >> v)) throw Error(Errc::parse_error, "expected an integer");
      return v;
    }
  }

  long long require(const char* what) {
    auto v = next();
    if (!v) throw Error(Errc::parse_error, std::string("unexpected end of input, expected ") + what);
    return *v;
  }

 private:
  std::istream& in_;
};

}  // namespace

std::optional<MopGraph> try_read_mop(std::istream& in) {
  Tokens toks(in);
  auto first = toks.next();
  if (!first) return std::nullopt;
  long long n = *first;
  if (n < 3 || n > (1LL << 30)) throw Error(Errc::parse_error, "implausible order " + std::to_string(n));
  std::vector<std::pair<int, int>> diags;
  diags.reserve(static_cast<size_t>(n - 3));
  for (long long k = 0; k < n - 3; ++k) {
    int a = static_cast<int>(toks.require("diagonal endpoint"));
    int b = static_cast<int>(toks.require("diagonal endpoint"));
    diags.emplace_back(a, b);
  }
  return MopGraph::from_diagonals(static_cast<int>(n), std::move(diags));
}

MopGraph read_mop(std::istream& in) {
  auto g = try_read_mop(in);
  if (!g) throw Error(Errc::parse_error, "empty input");
  return *std::move(g);
}

MopGraph read_mop_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open " + path);
  return read_mop(in);
}

void write_mop(std::ostream& out, const MopGraph& g) {
  out << g.order() << "\n";
  for (auto [a, b] : g.diagonals()) out << a << " " << b << "\n";
}

std::string to_text(const MopGraph& g) {
  std::ostringstream ss;
  write_mop(ss, g);
  return ss.str();
}

Recognized read_edge_list(std::istream& in) {
  Tokens toks(in);
  std::vector<std::pair<int, int>> edges;
  for (;;) {
    auto u = toks.next();
    if (!u) break;
    int v = static_cast<int>(toks.require("edge endpoint"));
    edges.emplace_back(static_cast<int>(*u), v);
  }
  if (edges.empty()) throw Error(Errc::parse_error, "empty edge list");
  return recognize(edges);
}

Recognized read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open " + path);
  return read_edge_list(in);
}

std::string to_json_line(const ResultRecord& r) {
  nlohmann::json j;
  j["graph"] = r.graph_id;
  j["n"] = r.n;
  j["op"] = r.op;
  j["answer"] = r.answer;
  j["witness"] = r.witness;
  j["micros"] = r.micros;
  return j.dump();
}

ResultRecord parse_json_line(const std::string& line) {
  nlohmann::json j = nlohmann::json::parse(line);
  ResultRecord r;
  r.graph_id = j.at("graph").get<std::string>();
  r.n = j.at("n").get<int>();
  r.op = j.at("op").get<std::string>();
  r.answer = j.at("answer").get<std::string>();
  r.witness = j.at("witness").get<std::vector<int>>();
  r.micros = j.at("micros").get<long long>();
  return r;
}

std::string embedding_to_dot(const MopGraph& g, const GridEmbedding& e) {
  std::ostringstream ss;
  ss << "graph mop {\n  node [shape=circle];\n";
  for (int v = 1; v <= g.order(); ++v) {
    auto [i, j] = e.coords[v];
    ss << "  " << v << " [pos=\"" << i << "," << j << "!\"";
    if (e.basis.contains(v)) ss << " style=filled fillcolor=black fontcolor=white";
    ss << "];\n";
  }
  for (auto [a, b] : g.edges()) ss << "  " << a << " -- " << b << ";\n";
  ss << "}\n";
  return ss.str();
}

}  // namespace mopdim
