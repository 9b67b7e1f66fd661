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

#include "mopdim/metric.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <thread>

namespace mopdim {

VertexSet::VertexSet(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  for (size_t i = 1; i < members_.size(); ++i)
    if (members_[i] == members_[i - 1])
      throw Error(Errc::bad_label, "duplicate member " + std::to_string(members_[i]));
  if (!members_.empty() && members_.front() < 1)
    throw Error(Errc::bad_label, "label " + std::to_string(members_.front()) + " below 1");
}

bool VertexSet::contains(int v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

int DistanceTable::diameter() const {
  int32_t best = 0;
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v) best = std::max(best, at(u, v));
  return best;
}

int thread_budget() {
  if (const char* env = std::getenv("MOPDIM_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

namespace {

template <typename NeighborFn>
void bfs_into(int n, int source, NeighborFn&& nbrs, int32_t* dist) {
  std::fill(dist, dist + n + 1, -1);
  std::vector<int> queue;
  queue.reserve(n);
  queue.push_back(source);
  dist[source] = 0;
  for (size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int w : nbrs(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
}

template <typename NeighborFn>
DistanceTable all_pairs(int n, NeighborFn&& nbrs) {
  DistanceTable t;
  t.n = n;
  t.d.assign(static_cast<size_t>(n + 1) * (n + 1), 0);
  int threads = std::min(thread_budget(), n);
  auto run_rows = [&](int from, int to) {
    for (int s = from; s < to; ++s) bfs_into(n, s, nbrs, &t.d[static_cast<size_t>(s) * (n + 1)]);
  };
  if (threads <= 1 || n < 128) {
    run_rows(1, n + 1);
  } else {
    std::vector<std::thread> pool;
    int chunk = (n + threads - 1) / threads;
    for (int k = 0; k < threads; ++k) {
      int from = 1 + k * chunk, to = std::min(n + 1, from + chunk);
      if (from < to) pool.emplace_back(run_rows, from, to);
    }
    for (auto& th : pool) th.join();
  }
  return t;
}

}  // namespace

DistanceTable distance_table(const MopGraph& g) {
  return all_pairs(g.order(), [&](int u) { return g.neighbors(u); });
}

DistanceTable distance_table(const SimpleGraph& g) {
  return all_pairs(g.n, [&](int u) -> const std::vector<int>& { return g.adj[u]; });
}

std::vector<int32_t> bfs_distances(const MopGraph& g, int source) {
  std::vector<int32_t> d(g.order() + 1);
  bfs_into(g.order(), source, [&](int u) { return g.neighbors(u); }, d.data());
  return d;
}

std::vector<int32_t> bfs_distances(const SimpleGraph& g, int source) {
  std::vector<int32_t> d(g.n + 1);
  bfs_into(g.n, source, [&](int u) -> const std::vector<int>& { return g.adj[u]; }, d.data());
  return d;
}

std::vector<int> metric_vector(const DistanceTable& t, int u, const VertexSet& s) {
  if (s.empty()) throw Error(Errc::bad_label, "empty vertex set");
  std::vector<int> out;
  out.reserve(s.members().size());
  for (int x : s.members()) out.push_back(t.at(u, x));
  return out;
}

namespace {

// Shared collision scan over per-vertex coordinate rows. rows is n x k,
// vertex v at rows[(v-1)*k .. ). Returns lexicographically first colliding
// pair or nullopt.
std::optional<std::pair<int, int>> first_collision(int n, int k, const std::vector<int32_t>& rows) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  auto row = [&](int v) { return rows.data() + static_cast<size_t>(v - 1) * k; };
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    const int32_t* a = row(x);
    const int32_t* b = row(y);
    for (int i = 0; i < k; ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return x < y;
  });
  std::optional<std::pair<int, int>> best;
  for (int i = 0; i + 1 < n;) {
    int j = i + 1;
    while (j < n && std::equal(row(order[i]), row(order[i]) + k, row(order[j]))) ++j;
    if (j - i >= 2) {
      // Group sorted ties by label, so (order[i], order[i+1]) is the group's
      // lexicographically first pair.
      std::pair<int, int> cand{order[i], order[i + 1]};
      if (!best || cand < *best) best = cand;
    }
    i = j;
  }
  return best;
}

}  // namespace

ResolvingCheck is_resolving(const DistanceTable& t, const VertexSet& s) {
  if (s.empty()) throw Error(Errc::bad_label, "empty vertex set");
  int n = t.n, k = s.size();
  std::vector<int32_t> rows(static_cast<size_t>(n) * k);
  for (int v = 1; v <= n; ++v) {
    int32_t* r = rows.data() + static_cast<size_t>(v - 1) * k;
    for (int i = 0; i < k; ++i) r[i] = t.at(v, s.members()[i]);
  }
  auto clash = first_collision(n, k, rows);
  return {!clash.has_value(), clash};
}

namespace {

uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

ResolvingCheck is_resolving(const MopGraph& g, const VertexSet& s) {
  if (s.empty()) throw Error(Errc::bad_label, "empty vertex set");
  int n = g.order(), k = s.size();
  std::vector<int32_t> dist(n + 1);
  auto run_source = [&](int i) {
    bfs_into(n, s.members()[i], [&](int u) { return g.neighbors(u); }, dist.data());
  };

  constexpr size_t kMatrixCap = size_t{1} << 25;  // entries; beyond this, stream hashes
  if (static_cast<size_t>(n) * k <= kMatrixCap) {
    std::vector<int32_t> rows(static_cast<size_t>(n) * k);
    for (int i = 0; i < k; ++i) {
      run_source(i);
      for (int v = 1; v <= n; ++v) rows[static_cast<size_t>(v - 1) * k + i] = dist[v];
    }
    auto clash = first_collision(n, k, rows);
    return {!clash.has_value(), clash};
  }

  // Large graphs: fold each vertex's distance stream into a 64-bit hash.
  // Distinct hashes prove distinct vectors; equal hashes get an exact
  // recheck over a second BFS pass, so the answer stays exact.
  std::vector<uint64_t> h(n + 1, 0x243f6a8885a308d3ULL);
  for (int i = 0; i < k; ++i) {
    run_source(i);
    for (int v = 1; v <= n; ++v)
      h[v] = mix64(h[v] ^ mix64((static_cast<uint64_t>(i) << 32) | static_cast<uint32_t>(dist[v])));
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return h[a] < h[b]; });
  std::vector<int> suspects;
  for (int i = 0; i + 1 < n; ++i)
    if (h[order[i]] == h[order[i + 1]]) {
      suspects.push_back(order[i]);
      suspects.push_back(order[i + 1]);
    }
  if (suspects.empty()) return {true, std::nullopt};
  std::sort(suspects.begin(), suspects.end());
  suspects.erase(std::unique(suspects.begin(), suspects.end()), suspects.end());
  int m = static_cast<int>(suspects.size());
  std::vector<int32_t> rows(static_cast<size_t>(m) * k);
  for (int i = 0; i < k; ++i) {
    run_source(i);
    for (int j = 0; j < m; ++j) rows[static_cast<size_t>(j) * k + i] = dist[suspects[j]];
  }
  auto clash = first_collision(m, k, rows);
  if (!clash) return {true, std::nullopt};
  return {false, std::pair<int, int>{suspects[clash->first - 1], suspects[clash->second - 1]}};
}

bool is_locating_dominating(const SimpleGraph& g, const VertexSet& s) {
  std::vector<char> in_s(g.n + 1, 0);
  for (int v : s.members()) {
    if (v < 1 || v > g.n) throw Error(Errc::bad_label, "member out of range");
    in_s[v] = 1;
  }
  std::vector<std::vector<int>> traces;
  traces.reserve(g.n);
  for (int v = 1; v <= g.n; ++v) {
    if (in_s[v]) continue;
    std::vector<int> trace;
    for (int w : g.adj[v])
      if (in_s[w]) trace.push_back(w);
    if (trace.empty()) return false;  // not dominated
    traces.push_back(std::move(trace));
  }
  std::sort(traces.begin(), traces.end());
  return std::adjacent_find(traces.begin(), traces.end()) == traces.end();
}

bool is_locating_dominating(const MopGraph& g, const VertexSet& s) {
  return is_locating_dominating(SimpleGraph::from_mop(g), s);
}

}  // namespace mopdim
