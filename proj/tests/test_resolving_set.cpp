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

#include "helpers.hpp"
#include "mopdim/families.hpp"
#include "mopdim/resolving_set.hpp"

using namespace mopdim;
using testutil::all_mops;

TEST_CASE("initial coloring patterns") {
  ColorState s10 = initial_coloring(10);
  std::vector<int> blacks;
  for (int v = 1; v <= 10; ++v)
    if (s10.is_black(v)) blacks.push_back(v);
  CHECK(blacks == std::vector<int>{1, 3, 6, 8});
  CHECK(s10.black_count() == resolving_bound(10));

  ColorState s9 = initial_coloring(9);
  blacks.clear();
  for (int v = 1; v <= 9; ++v)
    if (s9.is_black(v)) blacks.push_back(v);
  CHECK(blacks == std::vector<int>{1, 3, 5, 8});

  ColorState s3 = initial_coloring(3);
  CHECK(s3.is_black(1));
  CHECK_FALSE(s3.is_black(2));
  CHECK(s3.is_black(3));

  for (int n = 10; n <= 40; ++n) CHECK(initial_coloring(n).black_count() == resolving_bound(n));
}

namespace {

// n=9 instance carrying the first unseparated pattern at frontier 4: the
// ear 4 sits in a singleton white run and the run {6,7} hooks back to the
// black anchor 3 through (3,6),(3,7),(3,8), with (3,5) closing the shape.
MopGraph pattern_a_instance() {
  return MopGraph::from_diagonals(9, {{3, 5}, {3, 6}, {3, 7}, {3, 8}, {1, 3}, {1, 8}});
}

// n=12 instance where the frontier run {4,5} and the far run {9,10} carry
// identical coordinates: edges (4,8),(3,9),(3,10),(3,11),(5,8),(6,8) plus
// the separating edge (4,9).
MopGraph pattern_e_instance() {
  return MopGraph::from_diagonals(
      12, {{4, 8}, {5, 8}, {6, 8}, {4, 9}, {3, 9}, {3, 10}, {3, 11}, {1, 11}, {1, 3}});
}

}  // namespace

TEST_CASE("detection and recoloring of a singleton-run pattern") {
  MopGraph g = pattern_a_instance();
  ColorState st = initial_coloring(9);
  REQUIRE(st.frontier == 4);
  DetectResult det = detect_unarranged(g, st, /*cross_check=*/true);
  REQUIRE_FALSE(det.arranged);
  CHECK(det.pattern.id == CaseId::a);
  CHECK(det.pattern.anchor == 4);
  CHECK(det.pattern.partner == 6);

  int before = st.black_count();
  apply_case(g, st, det.pattern);
  CHECK(st.black_count() == before);
  CHECK_FALSE(st.is_black(3));
  CHECK(st.is_black(4));
  CHECK_FALSE(st.is_black(5));
  CHECK(st.is_black(6));
  CHECK(st.frontier == 9);
}

TEST_CASE("detection and recoloring of a two-run pattern") {
  MopGraph g = pattern_e_instance();
  ColorState st = initial_coloring(12);
  REQUIRE(st.frontier == 4);
  DetectResult det = detect_unarranged(g, st, /*cross_check=*/true);
  REQUIRE_FALSE(det.arranged);
  CHECK(det.pattern.id == CaseId::e);
  CHECK(det.pattern.anchor == 4);
  CHECK(det.pattern.partner == 9);

  int before = st.black_count();
  apply_case(g, st, det.pattern);
  CHECK(st.black_count() == before);
  CHECK(st.is_black(4));       // run head turned black
  CHECK_FALSE(st.is_black(3)); // anchor released
  CHECK(st.frontier == 7);
}

TEST_CASE("two-run pattern with the anchor-side closing edge") {
  // Partner run {14,15} ten labels out (closer runs are blocked by the
  // planarity of the hook edges); the variant edge (3,13) runs between the
  // two anchors instead of between the run heads.
  MopGraph g = MopGraph::from_diagonals(
      16, {{4, 13}, {3, 14}, {3, 15}, {3, 16}, {5, 13}, {6, 13}, {3, 13},
           {6, 8}, {6, 9}, {6, 10}, {6, 11}, {6, 12}, {1, 3}});
  ColorState st = initial_coloring(16);
  DetectResult det = detect_unarranged(g, st, /*cross_check=*/true);
  REQUIRE_FALSE(det.arranged);
  CHECK(det.pattern.id == CaseId::f);
  CHECK(det.pattern.anchor == 4);
  CHECK(det.pattern.partner == 14);

  BuildOptions opts;
  opts.check_invariants = true;
  ScanStats stats;
  opts.stats = &stats;
  VertexSet s = build_resolving_set(g, opts);
  CHECK(s.size() == resolving_bound(16));
  CHECK(stats.cases[static_cast<int>(CaseId::f)] >= 1);
}

TEST_CASE("two-run pattern whose second swap reaches the next runs") {
  // Case with partner {14,15} plus the enclosed pattern at {7}..{9,10}
  // behind the anchor 6: after the first swap the vertex 7 still pairs with
  // 9, so the colors of 8 and 9 swap as well and the frontier jumps to 12.
  MopGraph g = MopGraph::from_diagonals(
      17, {{5, 16}, {6, 15}, {6, 14}, {6, 13}, {4, 16}, {3, 16}, {5, 15},
           {6, 8}, {6, 9}, {6, 10}, {6, 11}, {11, 13}, {1, 16}, {1, 3}});
  ColorState st = initial_coloring(17);
  DetectResult det = detect_unarranged(g, st, /*cross_check=*/true);
  REQUIRE_FALSE(det.arranged);
  CHECK(det.pattern.id == CaseId::g);
  CHECK(det.pattern.anchor == 4);
  CHECK(det.pattern.partner == 14);
  CHECK(det.pattern.extended);

  apply_case(g, st, det.pattern);
  CHECK(st.is_black(5));
  CHECK_FALSE(st.is_black(6));
  CHECK(st.is_black(9));
  CHECK_FALSE(st.is_black(8));
  CHECK(st.frontier == 12);

  BuildOptions opts;
  opts.check_invariants = true;
  ScanStats stats;
  opts.stats = &stats;
  VertexSet s = build_resolving_set(g, opts);
  CHECK(s.size() == resolving_bound(17));
  CHECK(stats.extended[static_cast<int>(CaseId::g)] >= 1);
}

TEST_CASE("overlapping patterns resolve by case order") {
  // Both the short pattern at the frontier run {4,5} (partner 7) and the
  // two-run pattern with partner 9 match here; pattern uniqueness is per
  // vertex, not per run. The scan must pick the singleton-partner case and
  // its swap also separates the other pair.
  MopGraph g = MopGraph::from_diagonals(
      12, {{3, 8}, {4, 8}, {5, 8}, {6, 8}, {3, 9}, {3, 10}, {3, 11}, {1, 11}, {1, 3}});
  ColorState st = initial_coloring(12);
  DetectResult det = detect_unarranged(g, st, /*cross_check=*/true);
  REQUIRE_FALSE(det.arranged);
  CHECK(det.pattern.id == CaseId::c);
  CHECK(det.pattern.anchor == 4);
  CHECK_FALSE(det.pattern.extended);

  BuildOptions opts;
  opts.check_invariants = true;
  VertexSet s = build_resolving_set(g, opts);
  CHECK(s.size() == resolving_bound(12));
}

TEST_CASE("first-run relabeling kicks in for hub-at-one fans") {
  // With the hub at label 1 the base coloring leaves the run {2} paired to
  // {4,5}; the scan restarts one label over and still lands the bound.
  BuildOptions opts;
  opts.check_invariants = true;
  for (int n = 10; n <= 26; ++n) {
    std::vector<std::pair<int, int>> diags;
    for (int j = 3; j <= n - 1; ++j) diags.emplace_back(1, j);
    MopGraph hub_fan = MopGraph::from_diagonals(n, std::move(diags));
    VertexSet s = build_resolving_set(hub_fan, opts);
    CHECK(s.size() == resolving_bound(n));
  }
}

TEST_CASE("construction on the named examples") {
  VertexSet s15 = build_resolving_set(fan(15));
  CHECK(s15.size() == 6);
  CHECK(is_resolving(fan(15), s15).resolving);

  VertexSet s3 = build_resolving_set(MopGraph::from_diagonals(3, {}));
  CHECK(s3.size() == 2);

  for (int n = 10; n <= 60; ++n) {
    MopGraph z = zigzag(n);
    VertexSet s = build_resolving_set(z);
    CHECK(s.size() == resolving_bound(n));
  }
}

TEST_CASE("construction is exact and invariant-clean exhaustively") {
  BuildOptions opts;
  opts.check_invariants = true;
  for (int n = 3; n <= 11; ++n) {
    for (const MopGraph& g : all_mops(n)) {
      VertexSet s = build_resolving_set(g, opts);
      CHECK(s.size() == resolving_bound(n));
    }
  }
}

TEST_CASE("construction under the distance oracle on random graphs") {
  std::mt19937_64 rng(2468);
  BuildOptions opts;
  opts.check_invariants = true;
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 10 + static_cast<int>(rng() % 51);
    MopGraph g = random_mop(n, rng());
    VertexSet s = build_resolving_set(g, opts);
    CHECK(s.size() == resolving_bound(n));
  }
}

TEST_CASE("verification survives sizes past the dense-matrix budget") {
  // ceil(2n/5) BFS sources at this order would need a multi-gigabyte row
  // matrix; the hashed verification path must still answer exactly.
  MopGraph g = random_mop(20000, 31);
  VertexSet s = build_resolving_set(g);  // verified inside
  CHECK(s.size() == resolving_bound(20000));
  // And a non-resolving set is still caught with a witness.
  auto res = is_resolving(g, VertexSet({1, 2, 3}));
  CHECK_FALSE(res.resolving);
  CHECK(res.collision.has_value());
}

TEST_CASE("construction scales to mid-size random graphs") {
  std::mt19937_64 rng(13579);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 500 + static_cast<int>(rng() % 1500);
    MopGraph g = random_mop(n, rng());
    VertexSet s = build_resolving_set(g);
    CHECK(s.size() == resolving_bound(n));
  }
}
