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

#include "mopdim/resolving_set.hpp"

#include <algorithm>
#include <string>

#include "mopdim/families.hpp"

namespace mopdim {

const char* case_name(CaseId c) {
  static const char* names[] = {"a", "b", "c", "d", "e", "f", "g", "h"};
  return names[static_cast<int>(c)];
}

int ColorState::black_count() const {
  int k = 0;
  for (int v = 1; v <= n; ++v) k += black[v];
  return k;
}

int ColorState::to_graph(int scan_label) const {
  long long z = (static_cast<long long>(scan_label) - 1 + rotation) % n;
  return static_cast<int>(z) + 1;
}

int ColorState::to_scan(int graph_label) const {
  long long z = ((static_cast<long long>(graph_label) - 1 - rotation) % n + n) % n;
  return static_cast<int>(z) + 1;
}

ColorState initial_coloring(int n) {
  if (n < 3) throw Error(Errc::bad_label, "order must be at least 3");
  ColorState st;
  st.n = n;
  st.black.assign(n + 1, 0);
  st.frontier = 4;
  st.rotation = 0;
  if (n % 5 == 4) {
    st.black[1] = 1;
    for (int v = 3; v <= n; v += 5) st.black[v] = 1;
    for (int v = 5; v <= n; v += 5) st.black[v] = 1;
  } else {
    for (int v = 1; v <= n; v += 5) st.black[v] = 1;
    for (int v = 3; v <= n; v += 5) st.black[v] = 1;
  }
  return st;
}

namespace {

// Pattern tests work on raw scan labels. Whites must lie at raw labels
// <= n (a white wrapping past the cut would belong to the explored prefix,
// which the invariant already arranges); only a trailing black may wrap,
// and only onto scan label 1.
struct ScanView {
  const MopGraph& g;
  const ColorState& st;

  int n() const { return st.n; }
  bool white(int raw) const { return raw >= 1 && raw <= st.n && !st.black[raw]; }
  bool black_mid(int raw) const { return raw >= 1 && raw <= st.n && st.black[raw]; }
  bool black_end(int raw) const {
    if (raw <= st.n) return st.black[raw] != 0;
    return raw == st.n + 1 && st.black[1] != 0;
  }
  bool edge(int raw_a, int raw_b) const {
    return g.has_edge(st.to_graph(norm(raw_a)), st.to_graph(norm(raw_b)));
  }
  int norm(int raw) const { return raw > st.n ? raw - st.n : raw; }
};

// BFS coordinate rows with respect to the current black set, in scan space.
std::vector<std::vector<int32_t>> black_rows(const MopGraph& g, const ColorState& st) {
  std::vector<std::vector<int32_t>> rows(st.n + 1);
  for (int v = 1; v <= st.n; ++v) rows[v] = {};
  std::vector<int> blacks;
  for (int v = 1; v <= st.n; ++v)
    if (st.black[v]) blacks.push_back(v);
  std::vector<std::vector<int32_t>> per_source;
  per_source.reserve(blacks.size());
  for (int b : blacks) per_source.push_back(bfs_distances(g, st.to_graph(b)));
  for (int v = 1; v <= st.n; ++v) {
    rows[v].resize(blacks.size());
    int gv = st.to_graph(v);
    for (size_t i = 0; i < blacks.size(); ++i) rows[v][i] = per_source[i][gv];
  }
  return rows;
}

// All white partners of the frontier run with identical coordinates.
std::vector<std::pair<int, int>> oracle_unresolved(const MopGraph& g, const ColorState& st) {
  auto rows = black_rows(g, st);
  int i = st.frontier;
  std::vector<int> run{i};
  if (i + 1 <= st.n && !st.black[i + 1]) run.push_back(i + 1);
  std::vector<std::pair<int, int>> out;
  for (int x : run)
    for (int y = 1; y <= st.n; ++y) {
      if (y == x || st.black[y]) continue;
      if (rows[x] == rows[y]) out.emplace_back(std::min(x, y), std::max(x, y));
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<CasePattern> match_structural(const MopGraph& g, const ColorState& st) {
  ScanView v{g, st};
  const int i = st.frontier;
  const int n = st.n;
  bool singleton = (i == n) || v.black_mid(i + 1);

  if (singleton) {
    // Partner is the run {i+2, i+3} hooked to the black anchor i-1.
    if (i + 3 <= n && v.white(i + 2) && v.white(i + 3) && v.black_end(i + 4) &&
        v.edge(i - 1, i + 2) && v.edge(i - 1, i + 3) && v.edge(i - 1, i + 4)) {
      if (v.edge(i - 1, i + 1)) return CasePattern{CaseId::a, i, i + 2, false};
      if (v.edge(i, i + 2)) return CasePattern{CaseId::b, i, i + 2, false};
    }
    return std::nullopt;
  }

  // Run {i, i+1}. Partner singleton {i+3} hooked to the black anchor i+4.
  if (i + 3 <= n && v.white(i + 3) && v.black_end(i + 4) && v.edge(i + 4, i + 1) &&
      v.edge(i + 4, i) && v.edge(i + 4, i - 1)) {
    if (v.edge(i + 4, i + 2)) {
      bool ext = i + 6 <= n && v.white(i + 5) && v.white(i + 6) && v.black_end(i + 7) &&
                 v.edge(i + 4, i + 6) && v.edge(i + 4, i + 7);
      return CasePattern{CaseId::c, i, i + 3, ext};
    }
    if (v.edge(i + 3, i + 1)) return CasePattern{CaseId::d, i, i + 3, false};
  }

  // Partner run {j, j+1} of size two, hooked through the anchor i-1.
  for (int gnb : g.neighbors(st.to_graph(i - 1))) {
    int j = st.to_scan(gnb);
    if (j < i + 3 || j + 1 > n) continue;
    if (!v.white(j) || !v.white(j + 1) || !v.black_mid(j - 1) || !v.black_end(j + 2)) continue;
    if (!(v.edge(i, j - 1) && v.edge(i - 1, j + 1) && v.edge(i - 1, j + 2) &&
          v.edge(j - 1, i + 1) && v.edge(j - 1, i + 2)))
      continue;
    if (v.edge(i, j)) return CasePattern{CaseId::e, i, j, false};
    if (v.edge(i - 1, j - 1)) return CasePattern{CaseId::f, i, j, false};
  }

  // Partner run {j, j+1} hooked through the anchor i+2.
  if (i + 2 <= n) {
    auto sub_variant = [&]() {
      return i + 6 <= n && v.white(i + 3) && v.black_mid(i + 4) && v.white(i + 5) &&
             v.white(i + 6) && v.black_end(i + 7) && v.edge(i + 2, i + 5) &&
             v.edge(i + 2, i + 6) && v.edge(i + 2, i + 7);
    };
    for (int gnb : g.neighbors(st.to_graph(i + 2))) {
      int s = st.to_scan(gnb);
      for (int j : {s - 1, s, s + 1}) {
        if (j < i + 3 || j + 1 > n) continue;
        if (!v.white(j) || !v.white(j + 1) || !v.black_mid(j - 1) || !v.black_end(j + 2)) continue;
        if (!(v.edge(i + 1, j + 2) && v.edge(j + 1, i + 2) && v.edge(i + 2, j) &&
              v.edge(i + 2, j - 1) && v.edge(i, j + 2) && v.edge(i - 1, j + 2)))
          continue;
        if (v.edge(i + 1, j + 1)) return CasePattern{CaseId::g, i, j, sub_variant()};
        if (v.edge(i + 2, j + 2)) return CasePattern{CaseId::h, i, j, sub_variant()};
      }
    }
  }
  return std::nullopt;
}

std::pair<int, int> claimed_pair(const CasePattern& p) {
  switch (p.id) {
    case CaseId::a:
    case CaseId::b:
      return {p.anchor, p.partner};
    case CaseId::c:
    case CaseId::d:
      return {p.anchor + 1, p.partner};
    case CaseId::e:
    case CaseId::f:
      return {p.anchor, p.partner};
    case CaseId::g:
    case CaseId::h:
      return {p.anchor + 1, p.partner + 1};
  }
  return {0, 0};
}

}  // namespace

DetectResult detect_unarranged(const MopGraph& g, const ColorState& st, bool cross_check) {
  auto pat = match_structural(g, st);
  if (cross_check) {
    auto pairs = oracle_unresolved(g, st);
    if (pat.has_value() != !pairs.empty()) {
      throw Error(Errc::invariant_violation,
                  std::string("structural detector disagrees with the distance oracle at "
                              "frontier ") +
                      std::to_string(st.frontier) + " (structural " +
                      (pat ? std::string("case ") + case_name(pat->id) : "arranged") +
                      ", oracle " + (pairs.empty() ? "arranged" : "unarranged") + ")");
    }
    if (pat) {
      auto want = claimed_pair(*pat);
      if (std::find(pairs.begin(), pairs.end(), want) == pairs.end())
        throw Error(Errc::invariant_violation,
                    std::string("detected case ") + case_name(pat->id) +
                        " names a pair the oracle does not confirm");
    }
  }
  if (!pat) return DetectResult{true, {}};
  return DetectResult{false, *pat};
}

void apply_case(const MopGraph& g, ColorState& st, const CasePattern& pat) {
  (void)g;
  const int i = pat.anchor;
  auto swap_colors = [&](int x, int y) {
    if (x < 1 || y < 1 || x > st.n || y > st.n || st.black[x] == st.black[y])
      throw Error(Errc::invariant_violation, "bad color swap");
    std::swap(st.black[x], st.black[y]);
  };
  int advance = 0;
  switch (pat.id) {
    case CaseId::a:
      swap_colors(i - 1, i);
      swap_colors(i + 1, i + 2);
      advance = 5;
      break;
    case CaseId::b:
    case CaseId::d:
      swap_colors(i + 1, i + 2);
      advance = 5;
      break;
    case CaseId::c:
      swap_colors(i + 1, i + 2);
      if (pat.extended) {
        swap_colors(i + 3, i + 4);
        advance = 8;
      } else {
        advance = 5;
      }
      break;
    case CaseId::e:
    case CaseId::f:
      swap_colors(i - 1, i);
      advance = 3;
      break;
    case CaseId::g:
    case CaseId::h:
      swap_colors(i + 1, i + 2);
      if (pat.extended) {
        swap_colors(i + 4, i + 5);
        advance = 8;
      } else {
        advance = 5;
      }
      break;
  }
  st.frontier = std::min(i + advance, st.n + 1);
}

namespace {

// Base-coloring patterns around the starting run {2}: present exactly when
// the first run is not yet distance-separated, in which case the whole
// coloring is restarted one label over.
bool first_run_pattern(const MopGraph& g, const ColorState& st) {
  ScanView v{g, st};
  int n = st.n;
  bool fwd = v.white(4) && v.white(5) && v.black_mid(6) && v.edge(1, 4) && v.edge(1, 5) &&
             v.edge(1, 6);
  bool bwd = v.white(n - 1) && v.white(n) && v.black_mid(n - 2) && v.edge(3, n) &&
             v.edge(3, n - 1) && v.edge(3, n - 2);
  return fwd || bwd;
}

void check_alternating(const ColorState& st) {
  // [frontier, n]: black runs of size 1, white runs of size 1 or 2, and no
  // two consecutive white runs of equal size.
  int prev_white = -1;
  int x = st.frontier;
  while (x <= st.n) {
    if (st.black[x]) {
      if (x + 1 <= st.n && st.black[x + 1])
        throw Error(Errc::invariant_violation, "black run of size 2 in the unexplored interval");
      ++x;
      continue;
    }
    int len = 0;
    while (x <= st.n && !st.black[x]) {
      ++len;
      ++x;
    }
    if (len > 2) throw Error(Errc::invariant_violation, "white run longer than 2");
    if (len == prev_white)
      throw Error(Errc::invariant_violation, "consecutive white runs of equal size");
    prev_white = len;
  }
}

void check_invariants(const MopGraph& g, const ColorState& st) {
  int n = st.n;
  if (st.black_count() != resolving_bound(n))
    throw Error(Errc::invariant_violation, "black count drifted");
  if (!st.black[1]) throw Error(Errc::invariant_violation, "scan label 1 not black");
  if (st.frontier <= n) {
    if (st.black[st.frontier]) throw Error(Errc::invariant_violation, "frontier not white");
    if (!st.black[st.frontier - 1])
      throw Error(Errc::invariant_violation, "label before frontier not black");
    check_alternating(st);
  }

  // Every pair with an explored white member is distance-separated.
  auto rows = black_rows(g, st);
  std::vector<int> order;
  for (int x = 1; x <= n; ++x)
    if (!st.black[x]) order.push_back(x);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return rows[x] < rows[y]; });
  for (size_t a = 0; a < order.size();) {
    size_t b = a + 1;
    while (b < order.size() && rows[order[a]] == rows[order[b]]) ++b;
    if (b - a >= 2) {
      for (size_t q = a; q < b; ++q)
        if (order[q] < st.frontier)
          throw Error(Errc::invariant_violation,
                      "explored white " + std::to_string(order[q]) +
                          " shares coordinates with " + std::to_string(order[q == a ? a + 1 : a]));
    }
    a = b;
  }

  // Unexplored special vertices (the enclosed singleton of a would-be case
  // c) stay separated from every explored white by a black other than
  // frontier-1.
  ScanView v{g, st};
  std::vector<int> blacks;
  for (int x = 1; x <= n; ++x)
    if (st.black[x]) blacks.push_back(x);
  for (int l = st.frontier + 3; l <= n; ++l) {
    if (!(v.white(l) && l - 4 >= st.frontier - 1 && v.black_mid(l - 1) && v.white(l - 2) &&
          v.white(l - 3) && v.black_mid(l - 4) && v.black_end(l + 1) && v.edge(l + 1, l - 1) &&
          v.edge(l + 1, l - 2) && v.edge(l + 1, l - 3) && v.edge(l + 1, l - 4)))
      continue;
    for (int w = 1; w < st.frontier; ++w) {
      if (st.black[w] || w == st.frontier - 2) continue;
      bool resolved = false;
      for (size_t bi = 0; bi < blacks.size() && !resolved; ++bi) {
        if (blacks[bi] >= st.frontier - 1) continue;  // only I \ {frontier-1}
        resolved = rows[w][bi] != rows[l][bi];
      }
      if (!resolved)
        throw Error(Errc::invariant_violation,
                    "special vertex " + std::to_string(l) +
                        " not separated from explored white " + std::to_string(w));
    }
  }
}

VertexSet collect(const ColorState& st) {
  std::vector<int> out;
  for (int vtx = 1; vtx <= st.n; ++vtx)
    if (st.black[vtx]) out.push_back(st.to_graph(vtx));
  return VertexSet(std::move(out));
}

VertexSet small_resolving_set(const MopGraph& g) {
  int n = g.order();
  int k = resolving_bound(n);
  DistanceTable t = distance_table(g);
  std::vector<int> comb(k);
  for (int i = 0; i < k; ++i) comb[i] = i + 1;
  while (true) {
    if (is_resolving(t, VertexSet(comb)).resolving) return VertexSet(comb);
    int idx = k - 1;
    while (idx >= 0 && comb[idx] == n - (k - 1 - idx)) --idx;
    if (idx < 0) break;
    ++comb[idx];
    for (int j = idx + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
  throw Error(Errc::construction_failed, "no resolving set of the bound size at order " +
                                             std::to_string(n));
}

}  // namespace

VertexSet build_resolving_set(const MopGraph& g) { return build_resolving_set(g, BuildOptions{}); }

VertexSet build_resolving_set(const MopGraph& g, const BuildOptions& opts) {
  const int n = g.order();
  if (n <= 9) {
    if (opts.stats) ++opts.stats->small_orders;
    return small_resolving_set(g);
  }

  ColorState st = initial_coloring(n);
  if (n % 5 != 4 && first_run_pattern(g, st)) {
    st = initial_coloring(n);
    st.rotation = n - 1;
    if (opts.stats) ++opts.stats->relabeled;
    if (first_run_pattern(g, st))
      throw Error(Errc::invariant_violation, "first run still unseparated after relabeling");
  }
  if (opts.check_invariants) check_invariants(g, st);

  int steps = 0;
  while (st.frontier <= n) {
    if (++steps > n) throw Error(Errc::invariant_violation, "scan failed to make progress");
    DetectResult det = detect_unarranged(g, st, opts.check_invariants);
    if (det.arranged) {
      if (opts.stats) ++opts.stats->arranged_runs;
      int run = (st.frontier == n || st.black[st.frontier + 1]) ? 1 : 2;
      st.frontier = std::min(st.frontier + run + 1, n + 1);
    } else {
      if (opts.stats) {
        ++opts.stats->cases[static_cast<int>(det.pattern.id)];
        if (det.pattern.extended) ++opts.stats->extended[static_cast<int>(det.pattern.id)];
      }
      apply_case(g, st, det.pattern);
    }
    if (opts.check_invariants) check_invariants(g, st);
  }

  VertexSet result = collect(st);
  if (result.size() != resolving_bound(n))
    throw Error(Errc::invariant_violation, "result size is not the bound");
  if (opts.verify) {
    auto check = is_resolving(g, result);
    if (!check.resolving)
      throw Error(Errc::construction_failed,
                  "final verification rejected the set: " +
                      std::to_string(check.collision->first) + " and " +
                      std::to_string(check.collision->second) + " collide",
                  *check.collision);
  }
  return result;
}

}  // namespace mopdim
