// Copyright 2026 The paintshop Authors
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

#include <stdexcept>
#include <string>
#include <string_view>

namespace paintshop {

enum class ErrorKind {
  invalid_argument,
  constraint_violation,
  resource_limit,
  unsupported_depth,
  degenerate_range,
  degenerate_cutoff,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI, the experiment harness) can report them per row.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::constraint_violation: return "constraint-violation";
    case ErrorKind::resource_limit: return "resource-limit";
    case ErrorKind::unsupported_depth: return "unsupported-depth";
    case ErrorKind::degenerate_range: return "degenerate-range";
    case ErrorKind::degenerate_cutoff: return "degenerate-cutoff";
  }
  return "unknown";
}

}  // namespace paintshop
