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

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mopdim/cycle.hpp"
#include "mopdim/errors.hpp"

namespace mopdim {

/// A maximal outerplanar graph given as n boundary vertices in clockwise
/// order (labels 1..n, boundary cycle implicit) plus the n-3 noncrossing
/// diagonals of its triangulation. Immutable after construction.
class MopGraph {
 public:
  /// Validates and builds. Throws Error with code wrong_diagonal_count,
  /// bad_label, duplicate_or_boundary or crossing_diagonals (the latter two
  /// carry a witness pair / diagonal).
  static MopGraph from_diagonals(int n, std::vector<std::pair<int, int>> diagonals);

  int order() const { return n_; }
  Cycle cycle() const { return Cycle{n_}; }

  /// Diagonals normalized (a < b) and sorted.
  const std::vector<std::pair<int, int>>& diagonals() const { return diagonals_; }

  std::span<const int> neighbors(int v) const {
    return {adj_.data() + off_[v], adj_.data() + off_[v + 1]};
  }
  int degree(int v) const { return off_[v + 1] - off_[v]; }
  bool has_edge(int u, int v) const;
  bool is_boundary_edge(int u, int v) const;
  long long edge_count() const { return 2LL * n_ - 3; }

  /// Vertices of degree 2, ascending. Every valid graph has at least two.
  std::vector<int> degree_two_vertices() const;

  /// The at most two common neighbors of an edge's endpoints, ascending.
  /// Boundary edges have exactly one (the apex of their triangle, for n > 3),
  /// diagonals exactly two.
  std::vector<int> common_neighbors(int u, int v) const;

  std::vector<std::pair<int, int>> edges() const;

 private:
  MopGraph() = default;
  int n_ = 0;
  std::vector<std::pair<int, int>> diagonals_;
  std::vector<int> off_;  // CSR offsets, 1-based vertices
  std::vector<int> adj_;  // sorted neighbor lists
};

/// Plain adjacency-list graph for the operations that must also run on
/// paths and arbitrary simple graphs (location-domination, recognition).
struct SimpleGraph {
  int n = 0;
  std::vector<std::vector<int>> adj;  // index 0 unused, labels 1..n

  static SimpleGraph path(int n);
  static SimpleGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  static SimpleGraph from_mop(const MopGraph& g);
  bool has_edge(int u, int v) const;
};

struct Recognized {
  MopGraph graph;
  std::vector<int> relabel;  // relabel[old] = new clockwise label, index 0 unused
};

/// Canonicalizes a simple undirected edge list into the clockwise-labeled
/// diagonal form. Boundary edges are identified as the edges whose endpoints
/// have exactly one common neighbor (valid once the 2n-3 edge count holds).
/// Throws Error{not_mop} with the failing reason otherwise.
Recognized recognize(const std::vector<std::pair<int, int>>& edge_list);

/// All n-2 triangular faces, each an ascending triple, sorted.
std::vector<std::array<int, 3>> triangles(const MopGraph& g);

/// Degree test for the strip-shaped graphs: two vertices of degree 2, two of
/// degree 3 each adjacent to a degree-2 vertex, rest degree 4. A triangle and
/// a quadrilateral with a diagonal count as well.
bool is_mop_zigzag(const MopGraph& g);

/// Same test on the subgraph induced by the clockwise interval [a..b]
/// (requires the closing edge ab unless the interval is the whole circle).
bool interval_is_zigzag(const MopGraph& g, int a, int b);

struct Zigzag {
  Interval vertices;             // [u..w] clockwise
  std::pair<int, int> base_edge; // (u, w), an edge of the graph
};

/// Interval of consecutive boundary vertices around a degree-2 vertex v
/// whose induced subgraph passes interval_is_zigzag, grown one vertex at a
/// time (alternating the preceding and following side) until neither side
/// extends. The fixpoint is independent of the exploration order; growing
/// by single vertices, not to the globally largest strip interval, is what
/// the dimension-2 decider's accounting needs.
Zigzag maximal_zigzag_around(const MopGraph& g, int v);

}  // namespace mopdim
