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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mopdim/dim2.hpp"
#include "mopdim/metric.hpp"
#include "mopdim/mop_graph.hpp"

namespace mopdim {

/// Text format: first non-comment line is n, each following line one
/// diagonal "a b". '#' starts a comment. One graph per file; a stream may
/// concatenate several (the diagonal count n-3 makes each self-delimiting).
MopGraph read_mop(std::istream& in);
std::optional<MopGraph> try_read_mop(std::istream& in);  // nullopt at EOF
MopGraph read_mop_file(const std::string& path);
void write_mop(std::ostream& out, const MopGraph& g);
std::string to_text(const MopGraph& g);

/// Edge-list format: one "u v" pair per line, '#' comments; routed through
/// recognize().
Recognized read_edge_list(std::istream& in);
Recognized read_edge_list_file(const std::string& path);

/// One self-describing JSON record per line; round-trips losslessly.
struct ResultRecord {
  std::string graph_id;
  int n = 0;
  std::string op;
  std::string answer;
  std::vector<int> witness;
  long long micros = 0;
};

std::string to_json_line(const ResultRecord& r);
ResultRecord parse_json_line(const std::string& line);

/// DOT drawing with grid positions as node attributes, for embeddings.
std::string embedding_to_dot(const MopGraph& g, const GridEmbedding& e);

}  // namespace mopdim
