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

#include "paintshop/rqaoa.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "paintshop/error.hpp"

namespace paintshop {

namespace {

int field_spin(std::int64_t h) { return h > 0 ? -1 : 1; }

}  // namespace

ReduceResult reduce_once(const IsingGraph& graph, const Correlations& correlations) {
  if (correlations.empty())
    throw Error(ErrorKind::invalid_argument, "reduce_once needs at least one correlation");

  auto best = correlations.begin();
  for (auto it = correlations.begin(); it != correlations.end(); ++it) {
    if (!graph.has_edge(it->first.first, it->first.second))
      throw Error(ErrorKind::invalid_argument, "correlation on a missing edge");
    if (std::abs(it->second) > std::abs(best->second) + kCorrelationTieTolerance) best = it;
  }
  if (correlations.size() != graph.n_edges())
    throw Error(ErrorKind::invalid_argument, "correlations must cover every edge");

  ReductionStep step;
  step.chosen_edge = best->first;
  step.correlation = best->second;
  step.sign = best->second >= 0.0 ? 1 : -1;
  step.retained = best->first.first;
  step.eliminated = best->first.second;
  step.pre_nodes = graph.n_nodes();
  step.pre_edges = static_cast<int>(graph.n_edges());

  const int i = step.retained;
  const int j = step.eliminated;
  const int n = graph.n_nodes();

  IsingGraph merged(n, graph.offset_numerator());
  for (const auto& [e, w] : graph.couplings()) {
    const auto [a, b] = e;
    if (a == j || b == j) {
      const int k = a == j ? b : a;
      if (k == i)
        merged.add_offset(step.sign * w);
      else
        merged.add_coupling(i, k, step.sign * w);
    } else {
      merged.add_coupling(a, b, w);
    }
  }
  const auto h = graph.fields();
  for (int q = 0; q < n; ++q) {
    if (q == j)
      merged.add_field(i, step.sign * h[q]);
    else
      merged.add_field(q, h[q]);
  }

  const auto degree = merged.degrees();
  const bool edgeless = merged.n_edges() == 0;
  std::vector<int> kept;
  std::int64_t freed_offset = 0;
  for (int q = 0; q < n; ++q) {
    if (q == j) continue;
    const bool keep = edgeless ? q == i : degree[q] > 0;
    if (keep) {
      kept.push_back(q);
    } else {
      const int s = field_spin(merged.fields()[q]);
      freed_offset += merged.fields()[q] * s;
      step.additionally_freed.push_back({q, s});
    }
  }

  std::vector<int> index(n, -1);
  for (std::size_t t = 0; t < kept.size(); ++t) index[kept[t]] = static_cast<int>(t);
  IsingGraph reduced(static_cast<int>(kept.size()), merged.offset_numerator() + freed_offset);
  for (const auto& [e, w] : merged.couplings()) reduced.add_coupling(index[e.first], index[e.second], w);
  for (std::size_t t = 0; t < kept.size(); ++t)
    reduced.add_field(static_cast<int>(t), merged.fields()[kept[t]]);

  return {std::move(reduced), std::move(step), std::move(kept)};
}

namespace {

EvalMode mode_for_step(const EvalMode& mode, std::uint64_t step) {
  if (const auto* shots = std::get_if<ShotMode>(&mode))
    return ShotMode{shots->shots, derive_seed(shots->seed, Stream::shots, step)};
  return mode;
}

}  // namespace

RqaoaGraphResult rqaoa_solve(const IsingGraph& graph, const RqaoaOptions& options) {
  if (options.stop_size < 1) throw Error(ErrorKind::invalid_argument, "stop_size must be >= 1");
  if (options.p < 1) throw Error(ErrorKind::invalid_argument, "p must be >= 1");
  if (graph.n_nodes() < 1) throw Error(ErrorKind::invalid_argument, "empty graph");

  ReductionTrace trace;
  trace.n_nodes = graph.n_nodes();

  // Drop nodes that are isolated from the start; keep one if nothing else is left.
  std::vector<int> labels;
  {
    const auto degree = graph.degrees();
    std::vector<int> isolated;
    for (int q = 0; q < graph.n_nodes(); ++q) (degree[q] > 0 ? labels : isolated).push_back(q);
    if (labels.empty()) {
      labels.push_back(isolated.front());
      isolated.erase(isolated.begin());
    }
    for (int q : isolated) trace.initially_freed.push_back({q, field_spin(graph.fields()[q])});
  }
  IsingGraph current(static_cast<int>(labels.size()), graph.offset_numerator());
  {
    std::vector<int> index(graph.n_nodes(), -1);
    for (std::size_t t = 0; t < labels.size(); ++t) index[labels[t]] = static_cast<int>(t);
    for (const auto& [e, w] : graph.couplings()) current.add_coupling(index[e.first], index[e.second], w);
    for (std::size_t t = 0; t < labels.size(); ++t)
      current.add_field(static_cast<int>(t), graph.fields()[labels[t]]);
  }

  while (current.n_nodes() > options.stop_size && current.n_edges() > 0) {
    const auto step_index = static_cast<std::uint64_t>(trace.steps.size());
    const EvalMode mode = mode_for_step(options.mode, step_index);
    const ResolvedParams resolved =
        resolve_params(options.source, current, options.p, mode, options.via_rcc, step_index);
    const Correlations m = correlations_all_edges(current, resolved.params, mode, options.via_rcc);

    ReduceResult r = reduce_once(current, m);
    ReductionStep step = std::move(r.step);
    step.evaluations = std::max(1, resolved.evaluations);
    step.trimmed_circuits = current.has_fields() ? 0 : trimmed_circuit_count(current, options.p);
    step.chosen_edge = {labels[step.chosen_edge.first], labels[step.chosen_edge.second]};
    step.retained = labels[step.retained];
    step.eliminated = labels[step.eliminated];
    for (auto& f : step.additionally_freed) f.node = labels[f.node];
    trace.steps.push_back(std::move(step));

    std::vector<int> next(r.kept.size());
    for (std::size_t t = 0; t < r.kept.size(); ++t) next[t] = labels[r.kept[t]];
    labels = std::move(next);
    current = std::move(r.graph);
  }

  const GroundState remnant = brute_force_ground(current);
  for (std::size_t t = 0; t < labels.size(); ++t)
    trace.terminal.push_back({labels[t], remnant.spins[t]});

  RqaoaGraphResult out;
  out.spins = back_substitute(trace);
  out.energy = energy(graph, out.spins);
  out.trace = std::move(trace);
  return out;
}

RqaoaResult rqaoa_solve(const BpspInstance& instance, const RqaoaOptions& options) {
  const IsingGraph graph = map_bpsp(instance);
  RqaoaGraphResult g = rqaoa_solve(graph, options);
  RqaoaResult out;
  out.colouring = spins_to_colouring(instance, g.spins);
  out.colour_changes = colour_changes(instance, out.colouring);
  out.trace = std::move(g.trace);
  return out;
}

SpinConfig back_substitute(const ReductionTrace& trace) {
  SpinConfig spins(trace.n_nodes, 0);
  auto assign = [&](const FreedNode& f) {
    if (f.node < 0 || f.node >= trace.n_nodes || spins[f.node] != 0)
      throw Error(ErrorKind::invalid_argument, "trace assigns a node twice");
    spins[f.node] = f.spin;
  };
  for (const auto& f : trace.initially_freed) assign(f);
  for (const auto& f : trace.terminal) assign(f);
  for (const auto& step : trace.steps)
    for (const auto& f : step.additionally_freed) assign(f);
  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
    if (spins[it->retained] == 0) throw Error(ErrorKind::invalid_argument, "trace is incomplete");
    assign({it->eliminated, it->sign * spins[it->retained]});
  }
  for (int s : spins)
    if (s == 0) throw Error(ErrorKind::invalid_argument, "trace leaves a node unassigned");
  return spins;
}

std::uint64_t circuit_count(const ReductionTrace& trace, CircuitAccounting accounting) {
  std::uint64_t total = 0;
  for (const auto& step : trace.steps) {
    const auto evals = static_cast<std::uint64_t>(step.evaluations);
    switch (accounting) {
      case CircuitAccounting::full: total += evals; break;
      case CircuitAccounting::rcc_untrimmed:
        total += static_cast<std::uint64_t>(step.pre_edges) * evals;
        break;
      case CircuitAccounting::rcc_trimmed: total += step.trimmed_circuits * evals; break;
    }
  }
  return total;
}

namespace {

nlohmann::json freed_json(const std::vector<FreedNode>& nodes) {
  auto arr = nlohmann::json::array();
  for (const auto& f : nodes) arr.push_back({f.node, f.spin});
  return arr;
}

}  // namespace

nlohmann::json to_json(const ReductionStep& step) {
  return {{"kind", "step"},
          {"chosen_edge", {step.chosen_edge.first, step.chosen_edge.second}},
          {"correlation", step.correlation},
          {"sign", step.sign},
          {"eliminated", step.eliminated},
          {"retained", step.retained},
          {"pre_nodes", step.pre_nodes},
          {"pre_edges", step.pre_edges},
          {"additionally_freed", freed_json(step.additionally_freed)},
          {"evaluations", step.evaluations},
          {"trimmed_circuits", step.trimmed_circuits}};
}

void write_trace_jsonl(const ReductionTrace& trace, std::ostream& out) {
  for (const auto& step : trace.steps) out << to_json(step).dump() << '\n';
  nlohmann::json tail = {{"kind", "terminal"},
                         {"n_nodes", trace.n_nodes},
                         {"initially_freed", freed_json(trace.initially_freed)},
                         {"terminal", freed_json(trace.terminal)}};
  out << tail.dump() << '\n';
}

}  // namespace paintshop
