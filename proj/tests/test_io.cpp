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

#include <doctest.h>

#include <random>
#include <sstream>

#include "helpers.hpp"
#include "mopdim/dim2.hpp"
#include "mopdim/families.hpp"
#include "mopdim/io.hpp"

using namespace mopdim;

TEST_CASE("graph files round-trip") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 25; ++trial) {
    MopGraph g = random_mop(4 + static_cast<int>(rng() % 40), rng());
    std::string text = to_text(g);
    std::istringstream in(text);
    MopGraph back = read_mop(in);
    CHECK(back.diagonals() == g.diagonals());
    CHECK(to_text(back) == text);
  }
}

TEST_CASE("comments and whitespace are ignored") {
  std::istringstream in("# a fan of order five\n5\n # hub edges\n 2 5\n3 5 # trailing\n");
  MopGraph g = read_mop(in);
  CHECK(g.order() == 5);
  CHECK(g.diagonals() == std::vector<std::pair<int, int>>{{2, 5}, {3, 5}});
}

TEST_CASE("a stream of graphs is self-delimiting") {
  std::ostringstream out;
  write_mop(out, fan(6));
  write_mop(out, zigzag(8));
  std::istringstream in(out.str());
  auto first = try_read_mop(in);
  auto second = try_read_mop(in);
  auto third = try_read_mop(in);
  REQUIRE(first.has_value());
  REQUIRE(second.has_value());
  CHECK_FALSE(third.has_value());
  CHECK(first->order() == 6);
  CHECK(second->order() == 8);
}

TEST_CASE("malformed files are rejected with parse or validity errors") {
  std::istringstream truncated("6\n1 3\n");
  CHECK_THROWS_AS(read_mop(truncated), Error);
  std::istringstream junk("6\n1 x\n");
  CHECK_THROWS_AS(read_mop(junk), Error);
  std::istringstream crossing("5\n1 3\n2 4\n");
  try {
    read_mop(crossing);
    FAIL("expected a crossing error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::crossing_diagonals);
  }
  CHECK_THROWS_AS(read_mop_file("/nonexistent/x.mop"), Error);
}

TEST_CASE("edge lists route through recognition") {
  std::ostringstream out;
  for (auto [a, b] : zigzag(9).edges()) out << a << " " << b << "\n";
  std::istringstream in(out.str());
  Recognized r = read_edge_list(in);
  CHECK(r.graph.order() == 9);
  CHECK(is_mop_zigzag(r.graph));
}

TEST_CASE("result records round-trip through JSON lines") {
  ResultRecord r{"graphs/f15.mop", 15, "resolve", "6", {2, 4, 7, 9, 12, 14}, 532};
  std::string line = to_json_line(r);
  ResultRecord back = parse_json_line(line);
  CHECK(back.graph_id == r.graph_id);
  CHECK(back.n == r.n);
  CHECK(back.op == r.op);
  CHECK(back.answer == r.answer);
  CHECK(back.witness == r.witness);
  CHECK(back.micros == r.micros);
  CHECK(to_json_line(back) == line);
}

TEST_CASE("embeddings export grid positions") {
  MopGraph tri = MopGraph::from_diagonals(3, {});
  GridEmbedding e = embed(tri, VertexSet({1, 2}), distance_table(tri));
  std::string dot = embedding_to_dot(tri, e);
  CHECK(dot.find("graph mop") != std::string::npos);
  CHECK(dot.find("pos=\"0,1!\"") != std::string::npos);
  CHECK(dot.find("pos=\"1,0!\"") != std::string::npos);
  CHECK(dot.find("pos=\"1,1!\"") != std::string::npos);
  CHECK(dot.find("1 -- 2") != std::string::npos);
}
