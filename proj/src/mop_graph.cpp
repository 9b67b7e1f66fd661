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

#include "mopdim/mop_graph.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <string>

namespace mopdim {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::wrong_diagonal_count: return "WrongDiagonalCount";
    case Errc::crossing_diagonals: return "CrossingDiagonals";
    case Errc::duplicate_or_boundary: return "DuplicateOrBoundary";
    case Errc::bad_label: return "BadLabel";
    case Errc::not_mop: return "NotMop";
    case Errc::not_resolving: return "NotResolving";
    case Errc::unsupported_order: return "UnsupportedOrder";
    case Errc::too_large: return "TooLarge";
    case Errc::invariant_violation: return "InvariantViolation";
    case Errc::construction_failed: return "ConstructionFailed";
    case Errc::parse_error: return "ParseError";
    case Errc::io_error: return "IoError";
  }
  return "UnknownError";
}

namespace {

bool chords_cross(std::pair<int, int> p, std::pair<int, int> q) {
  // Normalized a < b. Two chords cross iff exactly one endpoint of one lies
  // strictly inside the other's interval.
  auto [a, b] = p;
  auto [c, d] = q;
  bool c_in = a < c && c < b;
  bool d_in = a < d && d < b;
  return c_in != d_in;
}

}  // namespace

MopGraph MopGraph::from_diagonals(int n, std::vector<std::pair<int, int>> diagonals) {
  if (n < 3) throw Error(Errc::bad_label, "order must be at least 3, got " + std::to_string(n));
  if (static_cast<long long>(diagonals.size()) != n - 3) {
    throw Error(Errc::wrong_diagonal_count,
                "need " + std::to_string(n - 3) + " diagonals, got " +
                    std::to_string(diagonals.size()));
  }
  for (auto& [a, b] : diagonals) {
    if (a < 1 || a > n || b < 1 || b > n)
      throw Error(Errc::bad_label,
                  "label out of range in (" + std::to_string(a) + "," + std::to_string(b) + ")",
                  {a, b});
    if (a > b) std::swap(a, b);
    if (a == b || b - a == 1 || (a == 1 && b == n))
      throw Error(Errc::duplicate_or_boundary,
                  "(" + std::to_string(a) + "," + std::to_string(b) +
                      ") is not a diagonal of the n-gon",
                  {a, b});
  }
  std::sort(diagonals.begin(), diagonals.end());
  for (size_t i = 1; i < diagonals.size(); ++i) {
    if (diagonals[i] == diagonals[i - 1])
      throw Error(Errc::duplicate_or_boundary,
                  "duplicate diagonal (" + std::to_string(diagonals[i].first) + "," +
                      std::to_string(diagonals[i].second) + ")",
                  diagonals[i]);
  }

  // Noncrossing check via nesting stack: sorted by (a asc, b desc), a new
  // chord crosses iff the innermost still-open chord ends strictly before it.
  {
    std::vector<std::pair<int, int>> order = diagonals;
    std::sort(order.begin(), order.end(), [](auto x, auto y) {
      if (x.first != y.first) return x.first < y.first;
      return x.second > y.second;
    });
    std::vector<std::pair<int, int>> open;
    for (auto [a, b] : order) {
      while (!open.empty() && open.back().second <= a) open.pop_back();
      if (!open.empty() && open.back().second < b) {
        // Recover an exact witness pair (slow path, error only).
        for (auto other : order) {
          if (other != std::make_pair(a, b) && chords_cross({a, b}, other))
            throw Error(Errc::crossing_diagonals,
                        "(" + std::to_string(other.first) + "," + std::to_string(other.second) +
                            ") crosses (" + std::to_string(a) + "," + std::to_string(b) + ")",
                        other);
        }
        throw Error(Errc::crossing_diagonals, "crossing diagonals", {a, b});
      }
      open.emplace_back(a, b);
    }
  }

  MopGraph g;
  g.n_ = n;
  g.diagonals_ = std::move(diagonals);
  std::vector<int> deg(n + 1, 2);
  for (auto [a, b] : g.diagonals_) {
    ++deg[a];
    ++deg[b];
  }
  g.off_.assign(n + 2, 0);
  for (int v = 1; v <= n; ++v) g.off_[v + 1] = g.off_[v] + deg[v];
  g.adj_.assign(g.off_[n + 1], 0);
  std::vector<int> cursor(g.off_.begin(), g.off_.end());
  auto put = [&](int u, int v) { g.adj_[cursor[u]++] = v; };
  Cycle c{n};
  for (int v = 1; v <= n; ++v) {
    put(v, c.prev(v));
    put(v, c.next(v));
  }
  for (auto [a, b] : g.diagonals_) {
    put(a, b);
    put(b, a);
  }
  for (int v = 1; v <= n; ++v)
    std::sort(g.adj_.begin() + g.off_[v], g.adj_.begin() + g.off_[v + 1]);
  return g;
}

bool MopGraph::has_edge(int u, int v) const {
  if (u == v) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

bool MopGraph::is_boundary_edge(int u, int v) const {
  Cycle c{n_};
  return c.next(u) == v || c.next(v) == u;
}

std::vector<int> MopGraph::degree_two_vertices() const {
  std::vector<int> out;
  for (int v = 1; v <= n_; ++v)
    if (degree(v) == 2) out.push_back(v);
  return out;
}

std::vector<int> MopGraph::common_neighbors(int u, int v) const {
  std::vector<int> out;
  auto a = neighbors(u), b = neighbors(v);
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<std::pair<int, int>> MopGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(edge_count()));
  for (int v = 1; v < n_; ++v) out.emplace_back(v, v + 1);
  out.emplace_back(1, n_);
  out.insert(out.end(), diagonals_.begin(), diagonals_.end());
  return out;
}

SimpleGraph SimpleGraph::path(int n) {
  SimpleGraph g;
  g.n = n;
  g.adj.assign(n + 1, {});
  for (int v = 1; v < n; ++v) {
    g.adj[v].push_back(v + 1);
    g.adj[v + 1].push_back(v);
  }
  return g;
}

SimpleGraph SimpleGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  SimpleGraph g;
  g.n = n;
  g.adj.assign(n + 1, {});
  for (auto [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n || u == v)
      throw Error(Errc::bad_label, "bad edge endpoint", {u, v});
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& list : g.adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return g;
}

SimpleGraph SimpleGraph::from_mop(const MopGraph& g) {
  SimpleGraph s;
  s.n = g.order();
  s.adj.assign(s.n + 1, {});
  for (int v = 1; v <= s.n; ++v) {
    auto nb = g.neighbors(v);
    s.adj[v].assign(nb.begin(), nb.end());
  }
  return s;
}

bool SimpleGraph::has_edge(int u, int v) const {
  const auto& list = adj[u];
  return std::binary_search(list.begin(), list.end(), v);
}

Recognized recognize(const std::vector<std::pair<int, int>>& edge_list) {
  int n = 0;
  for (auto [u, v] : edge_list) {
    if (u < 1 || v < 1 || u == v) throw Error(Errc::not_mop, "invalid edge in list", {u, v});
    n = std::max({n, u, v});
  }
  if (n < 3) throw Error(Errc::not_mop, "fewer than 3 vertices");
  SimpleGraph g = SimpleGraph::from_edges(n, edge_list);
  long long m = 0;
  for (int v = 1; v <= n; ++v) {
    if (g.adj[v].empty()) throw Error(Errc::not_mop, "vertex " + std::to_string(v) + " is isolated");
    m += static_cast<long long>(g.adj[v].size());
  }
  m /= 2;
  if (m != 2LL * n - 3)
    throw Error(Errc::not_mop, "edge count " + std::to_string(m) + " != 2n-3 = " +
                                   std::to_string(2LL * n - 3));

  // Boundary edges are those whose endpoints share exactly one neighbor.
  std::vector<std::vector<int>> boundary(n + 1);
  for (int u = 1; u <= n; ++u) {
    for (int v : g.adj[u]) {
      if (v < u) continue;
      int common = 0;
      const auto& small = g.adj[u].size() <= g.adj[v].size() ? g.adj[u] : g.adj[v];
      int other = g.adj[u].size() <= g.adj[v].size() ? v : u;
      for (int w : small)
        if (w != u && w != v && g.has_edge(other, w)) ++common;
      if (common == 0) throw Error(Errc::not_mop, "edge in no triangle", {u, v});
      if (common == 1) {
        boundary[u].push_back(v);
        boundary[v].push_back(u);
      }
    }
  }
  for (int v = 1; v <= n; ++v)
    if (boundary[v].size() != 2)
      throw Error(Errc::not_mop,
                  "boundary edges do not form a Hamiltonian cycle at vertex " + std::to_string(v));

  // Walk the cycle. Orientation is arbitrary; start at old label 1 toward
  // its smaller boundary neighbor for determinism.
  std::vector<int> relabel(n + 1, 0);
  int start = 1;
  int cur = start, prev = 0;
  for (int step = 1; step <= n; ++step) {
    if (relabel[cur] != 0) throw Error(Errc::not_mop, "boundary edges form a short cycle");
    relabel[cur] = step;
    int a = boundary[cur][0], b = boundary[cur][1];
    int nxt = (a == prev) ? b : (b == prev ? a : std::min(a, b));
    prev = cur;
    cur = nxt;
  }
  if (cur != start) throw Error(Errc::not_mop, "boundary walk did not close");

  std::vector<std::pair<int, int>> diagonals;
  for (int u = 1; u <= n; ++u)
    for (int v : g.adj[u]) {
      if (v < u) continue;
      bool on_boundary = std::find(boundary[u].begin(), boundary[u].end(), v) != boundary[u].end();
      if (!on_boundary) diagonals.emplace_back(relabel[u], relabel[v]);
    }
  try {
    MopGraph mop = MopGraph::from_diagonals(n, std::move(diagonals));
    return Recognized{std::move(mop), std::move(relabel)};
  } catch (const Error& e) {
    throw Error(Errc::not_mop, std::string("crossing structure: ") + e.what());
  }
}

std::vector<std::array<int, 3>> triangles(const MopGraph& g) {
  std::set<std::array<int, 3>> out;
  for (auto [u, v] : g.edges()) {
    auto smaller = g.degree(u) <= g.degree(v) ? u : v;
    int other = smaller == u ? v : u;
    for (int w : g.neighbors(smaller))
      if (w != other && g.has_edge(other, w)) {
        std::array<int, 3> t{u, v, w};
        std::sort(t.begin(), t.end());
        out.insert(t);
      }
  }
  return {out.begin(), out.end()};
}

bool is_mop_zigzag(const MopGraph& g) {
  int n = g.order();
  if (n <= 4) return true;
  int deg2 = 0, deg3 = 0;
  for (int v = 1; v <= n; ++v) {
    int d = g.degree(v);
    if (d == 2)
      ++deg2;
    else if (d == 3)
      ++deg3;
    else if (d != 4)
      return false;
  }
  if (deg2 != 2 || deg3 != 2) return false;
  for (int v = 1; v <= n; ++v) {
    if (g.degree(v) != 3) continue;
    bool ok = false;
    for (int w : g.neighbors(v)) ok |= g.degree(w) == 2;
    if (!ok) return false;
  }
  return true;
}

namespace {

// Induced degree of x within the clockwise interval [a..b].
int induced_degree(const MopGraph& g, const Cycle& c, int a, int b, int x) {
  int d = 0;
  for (int w : g.neighbors(x))
    if (c.in_interval(w, a, b)) ++d;
  return d;
}

}  // namespace

bool interval_is_zigzag(const MopGraph& g, int a, int b) {
  Cycle c = g.cycle();
  int k = c.interval_size(a, b);
  if (k < 3) return false;
  if (k == g.order()) return is_mop_zigzag(g);
  if (!g.has_edge(a, b)) return false;
  // The interval plus its closing edge is automatically a triangulated
  // sub-polygon; zigzag-ness reduces to the induced degree profile.
  long long degsum = 0;
  int deg2 = 0, deg3 = 0;
  std::vector<int> deg3_vertices;
  int x = a;
  for (int i = 0; i < k; ++i, x = c.next(x)) {
    int d = induced_degree(g, c, a, b, x);
    degsum += d;
    if (d == 2)
      ++deg2;
    else if (d == 3) {
      ++deg3;
      deg3_vertices.push_back(x);
    } else if (d != 4)
      return false;
  }
  if (degsum != 4LL * k - 6) return false;  // not a full triangulation
  if (k == 3) return true;
  if (k == 4) return deg2 == 2 && deg3 == 2;
  if (deg2 != 2 || deg3 != 2) return false;
  for (int v : deg3_vertices) {
    bool ok = false;
    for (int w : g.neighbors(v))
      if (c.in_interval(w, a, b) && induced_degree(g, c, a, b, w) == 2) ok = true;
    if (!ok) return false;
  }
  return true;
}

Zigzag maximal_zigzag_around(const MopGraph& g, int v) {
  if (g.degree(v) != 2)
    throw Error(Errc::bad_label, "vertex " + std::to_string(v) + " does not have degree 2");
  Cycle c = g.cycle();
  int lo = c.prev(v), hi = c.next(v);  // ear triangle; (lo,hi) is an edge
  // Grow one boundary vertex at a time, alternating between the preceding
  // and the following side; a side extends only while the new closing edge
  // exists and the induced subgraph stays a strip.
  bool try_low = true;
  int stuck = 0;
  while (stuck < 2 && c.interval_size(lo, hi) < g.order()) {
    int nlo = c.prev(lo), nhi = c.next(hi);
    bool ok;
    if (try_low)
      ok = g.has_edge(nlo, hi) && interval_is_zigzag(g, nlo, hi);
    else
      ok = g.has_edge(lo, nhi) && interval_is_zigzag(g, lo, nhi);
    if (ok) {
      (try_low ? lo : hi) = try_low ? nlo : nhi;
      stuck = 0;
    } else {
      ++stuck;
    }
    try_low = !try_low;
  }
  return Zigzag{Interval{lo, hi}, {lo, hi}};
}

}  // namespace mopdim
