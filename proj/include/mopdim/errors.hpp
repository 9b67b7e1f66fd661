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

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace mopdim {

enum class Errc {
  wrong_diagonal_count,
  crossing_diagonals,
  duplicate_or_boundary,
  bad_label,
  not_mop,
  not_resolving,
  unsupported_order,
  too_large,
  invariant_violation,
  construction_failed,
  parse_error,
  io_error,
};

const char* errc_name(Errc c);

/// Exception carrying a machine-readable error code and, where it makes
/// sense, the offending vertex pair (crossing diagonals, colliding vertices).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Error(Errc code, const std::string& message, std::pair<int, int> witness)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code),
        witness_(witness) {}

  Errc code() const { return code_; }
  const std::optional<std::pair<int, int>>& witness() const { return witness_; }

 private:
  Errc code_;
  std::optional<std::pair<int, int>> witness_;
};

}  // namespace mopdim
