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
#include <functional>

#include "mopdim/metric.hpp"
#include "mopdim/mop_graph.hpp"

namespace mopdim {

/// Fan graph of order n: vertex n adjacent to all of 1..n-1.
MopGraph fan(int n);

/// Strip triangulation of order n: dual tree of triangles is a path,
/// diagonal endpoints alternate sides.
MopGraph zigzag(int n);

/// Closed-form metric basis of fan(n) for n >= 8:
///   {2+5r} u {4+5r} for r < floor(n/5), plus {n-1} when n = 3,4 (mod 5).
/// Throws Error{unsupported_order} below 8.
VertexSet fan_basis(int n);

/// Metric dimension of fan(n): 2 for n in 3..6, 3 for n = 7,
/// ceil(2(n-2)/5) from 8 on.
int fan_dimension(int n);

/// Every triangulation of the convex n-gon exactly once (Catalan(n-2) of
/// them), via recursive ear choice over the boundary edge (1, n). Practical
/// up to n around 14.
void enumerate_mops(int n, const std::function<void(const MopGraph&)>& fn);

/// Count without building (Catalan number), for test bookkeeping.
long long count_mops(int n);

/// Uniform random triangulation: a uniform full binary tree with n-1 leaves
/// (Remy's algorithm) mapped to the polygon triangulation. Deterministic per
/// seed.
MopGraph random_mop(int n, uint64_t seed);

struct BetaResult {
  int beta = 0;
  VertexSet basis;  // lexicographically first minimum resolving set
};

/// Exhaustive metric-dimension oracle: ascending k, lexicographic k-subsets,
/// early exit per subset on the first vector collision. Guarded at n <= 16
/// (Error{too_large}).
BetaResult brute_force_beta(const MopGraph& g);
BetaResult brute_force_beta(const MopGraph& g, const DistanceTable& t);

/// Exhaustive location-domination number of the path on n vertices.
/// Guarded at n <= 18.
int brute_force_lambda(int n);

inline int ceil_div(long long a, long long b) {
  return static_cast<int>((a + b - 1) / b);
}

/// The upper-bound size ceil(2n/5).
inline int resolving_bound(int n) { return ceil_div(2LL * n, 5); }

}  // namespace mopdim
