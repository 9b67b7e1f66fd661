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

#include <cassert>

namespace mopdim {

/// Arithmetic on the circular label space 1..n. Every "i+1 / i-1" on the
/// boundary circle goes through this helper; off-by-one wraparound is the
/// dominant bug risk in this code base.
struct Cycle {
  int n;

  int next(int v) const { return v == n ? 1 : v + 1; }
  int prev(int v) const { return v == 1 ? n : v - 1; }

  int add(int v, long long k) const {
    long long r = ((static_cast<long long>(v) - 1 + k) % n + n) % n;
    return static_cast<int>(r) + 1;
  }

  /// Number of clockwise steps from a to b (0 if equal).
  int gap(int a, int b) const {
    long long r = ((static_cast<long long>(b) - a) % n + n) % n;
    return static_cast<int>(r);
  }

  /// x lies in the clockwise interval [a..b] (inclusive, may wrap).
  bool in_interval(int x, int a, int b) const {
    return gap(a, x) <= gap(a, b);
  }

  int interval_size(int a, int b) const { return gap(a, b) + 1; }
};

/// Clockwise interval [first..last] of boundary labels, wrapping through n
/// when first > last.
struct Interval {
  int first = 0;
  int last = 0;

  bool contains(int x, const Cycle& c) const {
    return c.in_interval(x, first, last);
  }
  int size(const Cycle& c) const { return c.interval_size(first, last); }

  bool operator==(const Interval&) const = default;
};

}  // namespace mopdim
