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

#include <algorithm>
#include <set>
#include <vector>

#include "mopdim/families.hpp"
#include "mopdim/metric.hpp"
#include "mopdim/mop_graph.hpp"

namespace testutil {

using mopdim::MopGraph;

// Independent all-pairs oracle, deliberately not BFS.
inline std::vector<std::vector<int>> floyd_warshall(const MopGraph& g) {
  int n = g.order();
  const int inf = 1 << 28;
  std::vector<std::vector<int>> d(n + 1, std::vector<int>(n + 1, inf));
  for (int v = 1; v <= n; ++v) d[v][v] = 0;
  for (auto [a, b] : g.edges()) d[a][b] = d[b][a] = 1;
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline MopGraph relabel(const MopGraph& g, int shift, bool reflect) {
  int n = g.order();
  auto map = [&](int v) {
    if (reflect) v = n + 1 - v;
    return (v - 1 + shift) % n + 1;
  };
  std::vector<std::pair<int, int>> diags;
  for (auto [a, b] : g.diagonals()) diags.emplace_back(map(a), map(b));
  return MopGraph::from_diagonals(n, std::move(diags));
}

// Canonical diagonal list modulo rotation and reflection.
inline std::vector<std::pair<int, int>> canonical(const MopGraph& g) {
  std::vector<std::pair<int, int>> best;
  for (int refl = 0; refl < 2; ++refl)
    for (int shift = 0; shift < g.order(); ++shift) {
      auto d = relabel(g, shift, refl != 0).diagonals();
      if (best.empty() || d < best) best = d;
    }
  return best;
}

// Reference for the zigzag interval around v: explores EVERY order of
// one-vertex extensions and returns the set of stuck states. The production
// routine alternates sides; this confirms the fixpoint does not depend on
// the exploration order.
inline std::set<std::pair<int, int>> zigzag_fixpoints(const MopGraph& g, int v) {
  mopdim::Cycle c = g.cycle();
  std::set<std::pair<int, int>> seen, stuck;
  std::vector<std::pair<int, int>> todo{{c.prev(v), c.next(v)}};
  seen.insert(todo[0]);
  while (!todo.empty()) {
    auto [lo, hi] = todo.back();
    todo.pop_back();
    bool extended = false;
    if (c.interval_size(lo, hi) < g.order()) {
      for (auto [nlo, nhi] : {std::pair<int, int>{c.prev(lo), hi},
                              std::pair<int, int>{lo, c.next(hi)}}) {
        if (!g.has_edge(nlo, nhi) || !mopdim::interval_is_zigzag(g, nlo, nhi)) continue;
        extended = true;
        if (seen.insert({nlo, nhi}).second) todo.push_back({nlo, nhi});
      }
    }
    if (!extended)
      stuck.insert(c.interval_size(lo, hi) == g.order() ? std::pair<int, int>{0, 0}
                                                        : std::pair<int, int>{lo, hi});
  }
  return stuck;
}

inline std::vector<MopGraph> all_mops(int n) {
  std::vector<MopGraph> out;
  mopdim::enumerate_mops(n, [&](const MopGraph& g) { out.push_back(g); });
  return out;
}

}  // namespace testutil
