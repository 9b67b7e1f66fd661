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

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mopdim/metric.hpp"
#include "mopdim/mop_graph.hpp"

namespace mopdim {

/// Coordinates of a graph with a 2-element resolving set inside the strong
/// product of two paths: vertex x sits at (d(x,u), d(x,v)). The basis maps
/// to (0,d) and (d,0); every cell lies in the diamond
/// A_d = { (i,j) : i+j >= d, |j-i| <= d }.
struct GridEmbedding {
  int d = 0;                                // distance between basis vertices
  VertexSet basis;                          // two vertices
  std::vector<std::pair<int, int>> coords;  // index by label, [0] unused
};

/// Throws Error{not_resolving} (with the colliding pair) if the claimed
/// basis does not resolve the graph.
GridEmbedding embed(const MopGraph& g, const VertexSet& basis, const DistanceTable& t);

struct GridCheckReport {
  bool ok = true;
  int failed_rule = 0;  // 1..4, first violated structural rule
  std::string detail;
};

/// Structural characterization of dimension-2 embeddings:
///  (1) the full anti-diagonal layer i+j = d with its path edges,
///  (2) the full layer i+j = d+1 with both down-edges per cell,
///  (3) per adjacent layer-(d+1) pair, a (-1)-slope edge or a filled unit
///      square (with the two-triangle refinement),
///  (4) everything else hanging as edge-disjoint vertical/horizontal strip
///      zigzags on the allowed base edges.
GridCheckReport verify_grid_representation(const GridEmbedding& e, const MopGraph& g);

/// Consecutive pairs (clockwise, including the wrap pair) of the vertices of
/// degree 2 or 3.
std::vector<std::pair<int, int>> candidate_pairs(const MopGraph& g);

/// Decider for metric dimension 2. Returns a verified basis, or nullopt
/// when the dimension exceeds 2. Structure: zigzag graphs answer directly
/// from their degree-2/3 vertices; otherwise each candidate pair is checked
/// by building the two base layers between them in O(gap) and walking the
/// far arc, where every maximal run of outside vertices must induce a strip
/// hanging off an allowed base edge. Accepted candidates are re-verified
/// with is_resolving before being returned.
std::optional<VertexSet> decide_dim_two(const MopGraph& g);

/// Quadratic reference: is_resolving on every candidate pair. Used to
/// cross-check the structural decider.
std::optional<VertexSet> decide_dim_two_simple(const MopGraph& g, const DistanceTable& t);

}  // namespace mopdim
