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

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mopdim/mop_graph.hpp"

namespace mopdim {

/// Ordered set of vertex labels, strictly increasing.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<int> members);  // sorts; rejects duplicates

  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool contains(int v) const;
  bool operator==(const VertexSet&) const = default;

 private:
  std::vector<int> members_;
};

/// Dense all-pairs hop-count table. Distances in a MOP are small, so a flat
/// n x n int array keeps resolution queries O(1).
struct DistanceTable {
  int n = 0;
  std::vector<int32_t> d;  // row-major, 1-based both axes

  int32_t at(int u, int v) const { return d[static_cast<size_t>(u) * (n + 1) + v]; }
  int32_t& at(int u, int v) { return d[static_cast<size_t>(u) * (n + 1) + v]; }
  int diameter() const;
};

/// Per-source BFS rows. Honors the MOPDIM_THREADS bound for row-parallel
/// computation on larger graphs; output is identical either way.
DistanceTable distance_table(const MopGraph& g);
DistanceTable distance_table(const SimpleGraph& g);

/// Single-source hop counts (index 0 unused).
std::vector<int32_t> bfs_distances(const MopGraph& g, int source);
std::vector<int32_t> bfs_distances(const SimpleGraph& g, int source);

/// Distances from u to the members of s, in members order.
std::vector<int> metric_vector(const DistanceTable& t, int u, const VertexSet& s);

/// Whether v tells x and y apart by distance.
inline bool resolves(const DistanceTable& t, int v, int x, int y) {
  return t.at(v, x) != t.at(v, y);
}

struct ResolvingCheck {
  bool resolving = false;
  /// Lexicographically first pair of vertices with identical distance
  /// vectors, when not resolving.
  std::optional<std::pair<int, int>> collision;
};

ResolvingCheck is_resolving(const DistanceTable& t, const VertexSet& s);

/// Table-free variant (|s| BFS runs); for graphs too large for a dense table.
ResolvingCheck is_resolving(const MopGraph& g, const VertexSet& s);

/// Dominating set whose S-neighborhood traces are pairwise distinct over the
/// vertices outside S.
bool is_locating_dominating(const SimpleGraph& g, const VertexSet& s);
bool is_locating_dominating(const MopGraph& g, const VertexSet& s);

/// Parallelism bound from the MOPDIM_THREADS environment variable (>= 1).
int thread_budget();

}  // namespace mopdim
