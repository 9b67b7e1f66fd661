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

#include "mopdim/families.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace mopdim {

MopGraph fan(int n) {
  std::vector<std::pair<int, int>> diags;
  for (int j = 2; j <= n - 2; ++j) diags.emplace_back(j, n);
  return MopGraph::from_diagonals(n, std::move(diags));
}

MopGraph zigzag(int n) {
  // Triangle strip 1, 2, n, 3, n-1, 4, ...: alternate advancing the low and
  // high ends, so the diagonals snake between the two sides.
  std::vector<std::pair<int, int>> diags;
  int a = 2, b = n;
  bool move_low = true;
  while (static_cast<int>(diags.size()) < n - 3) {
    diags.emplace_back(a, b);
    if (move_low)
      ++a;
    else
      --b;
    move_low = !move_low;
  }
  return MopGraph::from_diagonals(n, std::move(diags));
}

VertexSet fan_basis(int n) {
  if (n < 8)
    throw Error(Errc::unsupported_order,
                "closed-form fan basis needs n >= 8, got " + std::to_string(n));
  std::vector<int> s;
  for (int r = 0; r < n / 5; ++r) {
    s.push_back(2 + 5 * r);
    s.push_back(4 + 5 * r);
  }
  int t = n % 5;
  if (t == 3 || t == 4) s.push_back(n - 1);
  return VertexSet(std::move(s));
}

int fan_dimension(int n) {
  if (n <= 2) throw Error(Errc::unsupported_order, "fan needs n >= 3");
  if (n <= 6) return 2;
  if (n == 7) return 3;
  return ceil_div(2LL * (n - 2), 5);
}

namespace {

// Regions are sub-polygons [a..b] still to triangulate (closing chord ab
// implied). Choice point: the apex of the triangle resting on that chord.
void enumerate_rec(std::vector<std::pair<int, int>>& work,
                   std::vector<std::pair<int, int>>& diags, int n,
                   const std::function<void(const MopGraph&)>& fn) {
  if (work.empty()) {
    fn(MopGraph::from_diagonals(n, diags));
    return;
  }
  auto [a, b] = work.back();
  work.pop_back();
  if (b - a < 2) {
    enumerate_rec(work, diags, n, fn);
  } else {
    for (int m = a + 1; m < b; ++m) {
      size_t dmark = diags.size(), wmark = work.size();
      if (m - a > 1) {
        diags.emplace_back(a, m);
        work.emplace_back(a, m);
      }
      if (b - m > 1) {
        diags.emplace_back(m, b);
        work.emplace_back(m, b);
      }
      enumerate_rec(work, diags, n, fn);
      diags.resize(dmark);
      work.resize(wmark);
    }
  }
  work.emplace_back(a, b);
}

}  // namespace

void enumerate_mops(int n, const std::function<void(const MopGraph&)>& fn) {
  if (n < 3) throw Error(Errc::bad_label, "order must be at least 3");
  std::vector<std::pair<int, int>> work{{1, n}};
  std::vector<std::pair<int, int>> diags;
  diags.reserve(n);
  enumerate_rec(work, diags, n, fn);
}

long long count_mops(int n) {
  long long c = 1;  // Catalan(n-2)
  for (long long i = 0; i < n - 2; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

namespace {

// Remy's algorithm: uniform full binary tree with a given number of leaves.
// Nodes are encoded as internal index+1 (positive) or -(leaf index+1).
struct FullBinaryTree {
  std::vector<int> left, right;  // by internal index
  int root_enc = -1;             // single leaf when no internals
};

FullBinaryTree remy_tree(int leaves, std::mt19937_64& rng) {
  FullBinaryTree t;
  if (leaves == 1) return t;
  struct Pos {
    int parent = -1;  // internal index, -1 at root
    int side = 0;
  };
  std::vector<Pos> pos_internal, pos_leaf;
  std::vector<int> nodes;  // encodings of all current nodes
  t.left = {-1};
  t.right = {-2};
  t.root_enc = 1;
  pos_internal = {{-1, 0}};
  pos_leaf = {{0, 0}, {0, 1}};
  nodes = {1, -1, -2};
  while (static_cast<int>(pos_leaf.size()) < leaves) {
    std::uniform_int_distribution<size_t> pick(0, nodes.size() - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    int displaced = nodes[pick(rng)];
    int side = coin(rng);
    int w = static_cast<int>(t.left.size());
    int enc_w = w + 1;
    int enc_x = -(static_cast<int>(pos_leaf.size()) + 1);
    Pos at = displaced > 0 ? pos_internal[displaced - 1] : pos_leaf[-displaced - 1];
    t.left.push_back(side == 0 ? displaced : enc_x);
    t.right.push_back(side == 0 ? enc_x : displaced);
    if (at.parent < 0)
      t.root_enc = enc_w;
    else if (at.side == 0)
      t.left[at.parent] = enc_w;
    else
      t.right[at.parent] = enc_w;
    pos_internal.push_back(at);
    Pos displaced_pos{w, side == 0 ? 0 : 1};
    if (displaced > 0)
      pos_internal[displaced - 1] = displaced_pos;
    else
      pos_leaf[-displaced - 1] = displaced_pos;
    pos_leaf.push_back({w, side == 0 ? 1 : 0});
    nodes.push_back(enc_w);
    nodes.push_back(enc_x);
  }
  return t;
}

}  // namespace

MopGraph random_mop(int n, uint64_t seed) {
  if (n < 3) throw Error(Errc::bad_label, "order must be at least 3");
  if (n == 3) return MopGraph::from_diagonals(3, {});
  std::mt19937_64 rng(seed);
  FullBinaryTree t = remy_tree(n - 1, rng);

  // Leaves in left-to-right order are the boundary edges (1,2)..(n-1,n); an
  // internal node spanning leaves i..j is the sub-polygon closed by (i, j+1).
  // Closing chords of the non-root internal nodes are the diagonals.
  std::vector<std::pair<int, int>> diags;
  diags.reserve(n - 3);
  struct Frame {
    int enc;
    int stage;
  };
  std::vector<Frame> todo{{t.root_enc, 0}};
  std::vector<std::pair<int, int>> vals;
  int next_leaf = 0;
  while (!todo.empty()) {
    Frame f = todo.back();
    if (f.enc < 0) {
      ++next_leaf;
      vals.push_back({next_leaf, next_leaf});
      todo.pop_back();
      continue;
    }
    int node = f.enc - 1;
    if (f.stage == 0) {
      todo.back().stage = 1;
      todo.push_back({t.left[node], 0});
    } else if (f.stage == 1) {
      todo.back().stage = 2;
      todo.push_back({t.right[node], 0});
    } else {
      auto r = vals.back();
      vals.pop_back();
      auto l = vals.back();
      vals.pop_back();
      std::pair<int, int> span{l.first, r.second};
      if (f.enc != t.root_enc) diags.emplace_back(span.first, span.second + 1);
      vals.push_back(span);
      todo.pop_back();
    }
  }
  return MopGraph::from_diagonals(n, std::move(diags));
}

namespace {

// Lexicographic k-combination successor over 1..n.
bool next_combination(std::vector<int>& c, int n) {
  int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - (k - 1 - i)) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool subset_resolves(const DistanceTable& t, const std::vector<int>& s) {
  std::set<std::vector<int32_t>> seen;
  for (int v = 1; v <= t.n; ++v) {
    std::vector<int32_t> key(s.size());
    for (size_t i = 0; i < s.size(); ++i) key[i] = t.at(v, s[i]);
    if (!seen.insert(std::move(key)).second) return false;  // first collision kills the subset
  }
  return true;
}

}  // namespace

BetaResult brute_force_beta(const MopGraph& g, const DistanceTable& t) {
  int n = g.order();
  if (n > 16) throw Error(Errc::too_large, "oracle guarded at n <= 16, got " + std::to_string(n));
  for (int k = 1; k <= n; ++k) {
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i + 1;
    do {
      if (subset_resolves(t, comb)) return {k, VertexSet(comb)};
    } while (next_combination(comb, n));
  }
  throw Error(Errc::invariant_violation, "no resolving set found");  // unreachable: V resolves
}

BetaResult brute_force_beta(const MopGraph& g) {
  return brute_force_beta(g, distance_table(g));
}

int brute_force_lambda(int n) {
  if (n < 1) throw Error(Errc::bad_label, "path order must be >= 1");
  if (n > 18) throw Error(Errc::too_large, "oracle guarded at n <= 18");
  SimpleGraph p = SimpleGraph::path(n);
  for (int k = 1; k <= n; ++k) {
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i + 1;
    do {
      if (is_locating_dominating(p, VertexSet(comb))) return k;
    } while (next_combination(comb, n));
  }
  return n;
}

}  // namespace mopdim
