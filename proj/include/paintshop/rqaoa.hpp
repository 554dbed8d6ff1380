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
#include <iosfwd>
#include <vector>

#include "json.hpp"
#include "paintshop/bpsp.hpp"
#include "paintshop/correlations.hpp"
#include "paintshop/ising.hpp"
#include "paintshop/qaoa.hpp"

namespace paintshop {

struct FreedNode {
  int node;
  int spin;
};

/// One elimination Z_eliminated = sign * Z_retained. Node ids are those of
/// the graph the step was applied to in `reduce_once`, and original node ids
/// once recorded in a ReductionTrace.
struct ReductionStep {
  NodePair chosen_edge{0, 0};
  double correlation = 0.0;
  int sign = 1;
  int eliminated = 0;
  int retained = 0;
  int pre_nodes = 0;
  int pre_edges = 0;
  /// Nodes left isolated by the merge, with the spin that minimises their field term.
  std::vector<FreedNode> additionally_freed;
  /// Objective calls made to obtain this step's parameters (at least 1).
  int evaluations = 1;
  /// Number of trimmed cone circuits needed for one energy of the pre-step graph.
  std::uint64_t trimmed_circuits = 0;
};

struct ReductionTrace {
  int n_nodes = 0;
  /// Isolated in the input graph.
  std::vector<FreedNode> initially_freed;
  std::vector<ReductionStep> steps;
  /// Assignment of the nodes that remained after the last step.
  std::vector<FreedNode> terminal;
};

struct ReduceResult {
  IsingGraph graph;
  ReductionStep step;
  /// kept[new_index] = index in the input graph.
  std::vector<int> kept;
};

/// |M| values closer than this count as tied, so rounding noise between
/// equivalent evaluation paths cannot change the chosen edge.
inline constexpr double kCorrelationTieTolerance = 1e-12;

/// Rounds the edge of largest |M| (ties: smallest edge; sgn(0) = +1) and
/// substitutes the higher endpoint away. Isolated nodes are removed; if no
/// edge survives only the retained node is kept.
ReduceResult reduce_once(const IsingGraph& graph, const Correlations& correlations);

struct RqaoaOptions {
  int p = 1;
  ParamSource source = FixedSource{};
  EvalMode mode = ExactMode{};
  bool via_rcc = false;
  int stop_size = 1;
};

struct RqaoaGraphResult {
  SpinConfig spins;
  HalfInt energy;
  ReductionTrace trace;
};

RqaoaGraphResult rqaoa_solve(const IsingGraph& graph, const RqaoaOptions& options);

struct RqaoaResult {
  Colouring colouring;
  int colour_changes = 0;
  ReductionTrace trace;
};

RqaoaResult rqaoa_solve(const BpspInstance& instance, const RqaoaOptions& options);

/// Replays the trace in reverse to a full spin assignment.
SpinConfig back_substitute(const ReductionTrace& trace);

enum class CircuitAccounting { full, rcc_untrimmed, rcc_trimmed };

std::uint64_t circuit_count(const ReductionTrace& trace, CircuitAccounting accounting);

nlohmann::json to_json(const ReductionStep& step);

/// One JSON object per line: each step, then the terminal assignment.
void write_trace_jsonl(const ReductionTrace& trace, std::ostream& out);

}  // namespace paintshop
