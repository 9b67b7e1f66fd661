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

#include <cstdlib>
#include <random>
#include <set>
#include <map>

#include "helpers.hpp"
#include "mopdim/families.hpp"
#include "mopdim/metric.hpp"

using namespace mopdim;
using testutil::all_mops;

TEST_CASE("distance table on a triangle is all ones off the diagonal") {
  DistanceTable t = distance_table(MopGraph::from_diagonals(3, {}));
  for (int u = 1; u <= 3; ++u)
    for (int v = 1; v <= 3; ++v) CHECK(t.at(u, v) == (u == v ? 0 : 1));
}

TEST_CASE("fan distances route through the hub") {
  DistanceTable t = distance_table(fan(8));
  CHECK(t.at(1, 5) == 2);
  CHECK(t.at(1, 8) == 1);
  CHECK(t.diameter() == 2);
}

TEST_CASE("distance table equals an independent recomputation") {
  MopGraph g = random_mop(12, 7);
  DistanceTable t = distance_table(g);
  auto fw = testutil::floyd_warshall(g);
  for (int u = 1; u <= 12; ++u)
    for (int v = 1; v <= 12; ++v) CHECK(t.at(u, v) == fw[u][v]);
}

TEST_CASE("distance table invariants on random graphs") {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 3 + static_cast<int>(rng() % 48);
    MopGraph g = random_mop(n, rng());
    DistanceTable t = distance_table(g);
    auto fw = testutil::floyd_warshall(g);
    for (int u = 1; u <= n; ++u) {
      CHECK(t.at(u, u) == 0);
      for (int v = 1; v <= n; ++v) {
        CHECK(t.at(u, v) == fw[u][v]);
        CHECK(t.at(u, v) == t.at(v, u));
        CHECK((t.at(u, v) == 1) == g.has_edge(u, v));
        for (int w = 1; w <= n; ++w) CHECK(t.at(u, v) <= t.at(u, w) + t.at(w, v));
      }
    }
  }
}

TEST_CASE("row-parallel table matches the serial one") {
  MopGraph g = random_mop(300, 5);
  DistanceTable serial = distance_table(g);
  setenv("MOPDIM_THREADS", "3", 1);
  DistanceTable parallel = distance_table(g);
  unsetenv("MOPDIM_THREADS");
  CHECK(serial.d == parallel.d);
}

TEST_CASE("metric vectors") {
  MopGraph tri = MopGraph::from_diagonals(3, {});
  DistanceTable t = distance_table(tri);
  CHECK(metric_vector(t, 3, VertexSet({1, 2})) == std::vector<int>{1, 1});
  CHECK(metric_vector(t, 2, VertexSet({2})) == std::vector<int>{0});

  MopGraph f = fan(8);
  DistanceTable tf = distance_table(f);
  VertexSet s({2, 4, 7});
  for (int u = 1; u <= 8; ++u) {
    auto vec = metric_vector(tf, u, s);
    std::vector<int> oracle;
    for (int x : s.members()) oracle.push_back(bfs_distances(f, x)[u]);
    CHECK(vec == oracle);
  }
}

TEST_CASE("resolves basics") {
  DistanceTable t = distance_table(MopGraph::from_diagonals(3, {}));
  CHECK_FALSE(resolves(t, 2, 1, 1));
  CHECK(resolves(t, 1, 1, 2));
}

TEST_CASE("one of the two outer neighbors separates any vertex pair") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 5 + static_cast<int>(rng() % 30);
    MopGraph g = random_mop(n, rng());
    DistanceTable t = distance_table(g);
    Cycle c = g.cycle();
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        int il = c.prev(i), jr = c.next(j);
        std::set<int> four{i, j, il, jr};
        if (four.size() != 4) continue;
        CHECK((resolves(t, il, i, j) || resolves(t, jr, i, j)));
      }
  }
}

TEST_CASE("is_resolving basics and witnesses") {
  MopGraph f7 = fan(7);
  DistanceTable t7 = distance_table(f7);
  for (int a = 1; a <= 7; ++a)
    for (int b = a + 1; b <= 7; ++b) CHECK_FALSE(is_resolving(t7, VertexSet({a, b})).resolving);

  MopGraph f15 = fan(15);
  DistanceTable t15 = distance_table(f15);
  CHECK(is_resolving(t15, VertexSet({2, 4, 7, 9, 12, 14})).resolving);

  // Whole vertex set always resolves.
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 3 + static_cast<int>(rng() % 12);
    MopGraph g = random_mop(n, rng());
    std::vector<int> all(n);
    for (int v = 1; v <= n; ++v) all[v - 1] = v;
    DistanceTable t = distance_table(g);
    CHECK(is_resolving(t, VertexSet(all)).resolving);
  }
}

TEST_CASE("reported collision is the lexicographically first one") {
  std::mt19937_64 rng(11);
  int seen = 0;
  for (int trial = 0; trial < 200 && seen < 40; ++trial) {
    int n = 5 + static_cast<int>(rng() % 8);
    MopGraph g = random_mop(n, rng());
    DistanceTable t = distance_table(g);
    int a = 1 + static_cast<int>(rng() % n);
    int b = 1 + static_cast<int>(rng() % n);
    if (a == b) continue;
    VertexSet s(a < b ? std::vector<int>{a, b} : std::vector<int>{b, a});
    auto res = is_resolving(t, s);
    if (res.resolving) continue;
    ++seen;
    auto vec = [&](int v) { return metric_vector(t, v, s); };
    std::optional<std::pair<int, int>> brute;
    for (int x = 1; x <= n && !brute; ++x)
      for (int y = x + 1; y <= n; ++y)
        if (vec(x) == vec(y)) {
          brute = {x, y};
          break;
        }
    REQUIRE(brute.has_value());
    CHECK(*res.collision == *brute);
  }
  CHECK(seen > 0);
}

TEST_CASE("supersets of resolving sets stay resolving") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 4 + static_cast<int>(rng() % 10);
    MopGraph g = random_mop(n, rng());
    DistanceTable t = distance_table(g);
    auto beta = brute_force_beta(g, t);
    std::vector<int> grow = beta.basis.members();
    for (int v = 1; v <= n; ++v) {
      if (std::find(grow.begin(), grow.end(), v) != grow.end()) continue;
      grow.push_back(v);
      CHECK(is_resolving(t, VertexSet(grow)).resolving);
    }
  }
}

TEST_CASE("locating-dominating basics on paths") {
  CHECK(is_locating_dominating(SimpleGraph::path(2), VertexSet({1})));
  CHECK(is_locating_dominating(SimpleGraph::path(5), VertexSet({2, 4})));
  CHECK_FALSE(is_locating_dominating(SimpleGraph::path(5), VertexSet({1})));
}

TEST_CASE("locating-dominating sets resolve, on paths and small graphs") {
  auto subsets_resolve = [](const SimpleGraph& sg, const DistanceTable& t) {
    int n = sg.n;
    for (int mask = 1; mask < (1 << n); ++mask) {
      std::vector<int> members;
      for (int v = 1; v <= n; ++v)
        if (mask & (1 << (v - 1))) members.push_back(v);
      VertexSet s(members);
      if (!is_locating_dominating(sg, s)) continue;
      CHECK(is_resolving(t, s).resolving);
    }
  };
  for (int n = 1; n <= 8; ++n) {
    SimpleGraph p = SimpleGraph::path(n);
    subsets_resolve(p, distance_table(p));
  }
  for (int n = 3; n <= 8; ++n)
    for (const MopGraph& g : all_mops(n))
      subsets_resolve(SimpleGraph::from_mop(g), distance_table(g));
}

TEST_CASE("vertex sets are sorted and duplicate-free") {
  VertexSet s({5, 2, 9});
  CHECK(s.members() == std::vector<int>{2, 5, 9});
  CHECK(s.contains(5));
  CHECK_FALSE(s.contains(3));
  CHECK_THROWS_AS(VertexSet({2, 2}), Error);
  CHECK_THROWS_AS(VertexSet({0, 1}), Error);
}

TEST_CASE("separator pairs only lengthen distances across a diagonal") {
  // For a diagonal xy, vertices in different components of G - {x,y} sit on
  // the two boundary arcs; crossing costs at least min(d(u,x), d(u,y)) + 1.
  for (int n = 4; n <= 10; ++n)
    for (const MopGraph& g : all_mops(n)) {
      DistanceTable t = distance_table(g);
      Cycle c = g.cycle();
      for (auto [x, y] : g.diagonals()) {
        for (int u = c.next(x); u != y; u = c.next(u))
          for (int z = c.next(y); z != x; z = c.next(z))
            CHECK(t.at(u, z) >= std::min(t.at(u, x), t.at(u, y)) + 1);
      }
    }
}
