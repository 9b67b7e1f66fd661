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
#include <vector>

#include "mopdim/metric.hpp"
#include "mopdim/mop_graph.hpp"

namespace mopdim {

/// Black/white coloring over the boundary circle driving the clockwise scan.
/// Black = in the candidate resolving set. The scan works in a rotated label
/// space: scan label v corresponds to graph label ((v-1+rotation) mod n)+1,
/// so the one-step relabeling needed by the initial coloring never touches
/// the graph. Invariants while scanning:
///   - exactly ceil(2n/5) blacks,
///   - scan labels 1 and frontier-1 black, frontier white,
///   - [frontier, n] is (1,2)-alternating: black runs of size 1, white runs
///     of size 1 or 2, no two consecutive white runs of equal size.
struct ColorState {
  int n = 0;
  std::vector<uint8_t> black;  // index by scan label, [0] unused
  int frontier = 0;            // first unexplored scan label
  int rotation = 0;            // additive label offset into graph space

  bool is_black(int scan_label) const { return black[scan_label] != 0; }
  int black_count() const;
  int to_graph(int scan_label) const;
  int to_scan(int graph_label) const;
};

/// The base coloring: for n = 5k+t, t in 0..3, blacks at 5j+1 and 5j+3;
/// for t = 4, black 1 plus 5j+3 and 5j+5. Frontier starts at 4.
ColorState initial_coloring(int n);

enum class CaseId { a, b, c, d, e, f, g, h };
const char* case_name(CaseId c);

/// One of the eight local configurations in which the frontier run is not
/// yet distance-separated from a white partner by the current blacks.
/// anchor = frontier label i; partner = the matched vertex or run start.
/// extended marks the c/g/h sub-variant whose partner pattern sits at i+5
/// and needs the second color swap.
struct CasePattern {
  CaseId id;
  int anchor = 0;
  int partner = 0;
  bool extended = false;
};

struct DetectResult {
  bool arranged = true;
  CasePattern pattern{};  // meaningful when !arranged
};

/// Structural pattern matcher at the frontier run. Pure adjacency tests,
/// O(local degree). With cross_check, a BFS oracle recomputes arrangement
/// and any disagreement throws Error{invariant_violation}.
DetectResult detect_unarranged(const MopGraph& g, const ColorState& st,
                               bool cross_check = false);

/// Applies the color swaps and frontier advance for a detected pattern:
///   a: swap(i-1,i), swap(i+1,i+2), frontier += 5
///   b,d: swap(i+1,i+2), frontier += 5
///   c: swap(i+1,i+2); extended also swap(i+3,i+4); frontier += 5 or 8
///   e,f: swap(i-1,i), frontier += 3
///   g,h: swap(i+1,i+2); extended also swap(i+4,i+5); frontier += 5 or 8
void apply_case(const MopGraph& g, ColorState& st, const CasePattern& pat);

struct ScanStats {
  long long cases[8] = {};       // by CaseId
  long long extended[8] = {};    // second-swap sub-variants, by CaseId
  long long relabeled = 0;       // initial coloring restarted one label over
  long long arranged_runs = 0;
  long long small_orders = 0;    // answered by the direct small-order search
};

struct BuildOptions {
  bool verify = true;            // final is_resolving check (|S| BFS runs)
  bool check_invariants = false; // per-step BFS oracle + invariant assertions
  ScanStats* stats = nullptr;    // optional counters, for tests and tuning
};

/// Resolving set of size exactly ceil(2n/5), built in linear time by the
/// clockwise recoloring scan (orders below 10 fall back to a direct search;
/// the alternating initial layout needs at least two full period-5 blocks).
/// Throws Error{construction_failed} if the final verification rejects the
/// output -- that signals an implementation bug, never a valid answer.
VertexSet build_resolving_set(const MopGraph& g);
VertexSet build_resolving_set(const MopGraph& g, const BuildOptions& opts);

}  // namespace mopdim
