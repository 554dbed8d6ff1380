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

#include <cstdint>
#include <map>
#include <variant>

#include "paintshop/ising.hpp"
#include "paintshop/params.hpp"

namespace paintshop {

/// Exact expectation values from the simulated amplitudes.
struct ExactMode {};

/// Seeded shot sampling. With reverse causal cones the shots are split evenly
/// across the 2^k trimmed circuits of an edge (rounded down, at least one).
struct ShotMode {
  std::uint64_t shots = 4096;
  std::uint64_t seed = 0;
};

using EvalMode = std::variant<ExactMode, ShotMode>;

using Correlations = std::map<NodePair, double>;

/// <Z_i Z_j> for every edge of `graph` in the depth-p ansatz.
///
/// Without `via_rcc` the full circuit is simulated once. With it, each edge
/// is measured on its trimmed cone circuits (weighted average); edges whose
/// trimming would exceed kMaxTrimmedQubits fall back to the untrimmed cone.
/// Edges are evaluated in parallel; the result is independent of threading.
Correlations correlations_all_edges(const IsingGraph& graph, const QaoaParams& params,
                                    const EvalMode& mode, bool via_rcc);

/// Number of trimmed cone circuits needed to measure every edge once
/// (sum over edges of 2^k, or 1 for edges that fall back to the untrimmed cone).
std::uint64_t trimmed_circuit_count(const IsingGraph& graph, int p);

}  // namespace paintshop
