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

#include "paintshop/circuit.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <set>

#include "paintshop/error.hpp"

namespace paintshop {

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits), labels_(std::max(n_qubits, 0)) {
  if (n_qubits < 0) throw Error(ErrorKind::invalid_argument, "negative qubit count");
  for (int q = 0; q < n_qubits; ++q) labels_[q] = q;
}

Circuit::Circuit(int n_qubits, std::vector<int> labels)
    : n_qubits_(n_qubits), labels_(std::move(labels)) {
  if (labels_.size() != static_cast<std::size_t>(n_qubits))
    throw Error(ErrorKind::invalid_argument, "one label per qubit required");
}

int Circuit::local_index(int label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end())
    throw Error(ErrorKind::invalid_argument, fmt::format("node {} not in circuit register", label));
  return static_cast<int>(it - labels_.begin());
}

void Circuit::add(const Gate& gate) {
  for (int k = 0; k < gate.arity(); ++k) {
    const int q = gate.qubits[k];
    if (q < 0 || q >= n_qubits_)
      throw Error(ErrorKind::invalid_argument,
                  fmt::format("gate qubit {} outside register of {}", q, n_qubits_));
  }
  if (gate.kind == GateKind::cnot && gate.qubits[0] == gate.qubits[1])
    throw Error(ErrorKind::invalid_argument, "CNOT needs two distinct qubits");
  gates_.push_back(gate);
}

namespace {

void emit_coupling(Circuit& c, int a, int b, double angle, LayerTag tag) {
  c.add(Gate::cnot(a, b, tag));
  c.add(Gate::rz(b, angle, tag));
  c.add(Gate::cnot(a, b, tag));
}

}  // namespace

Circuit build_qaoa_circuit(const IsingGraph& graph, const QaoaParams& params) {
  params.validate();
  Circuit c(graph.n_nodes());
  const auto edges = graph.edge_list();
  const auto fields = graph.fields();
  for (int l = 1; l <= params.depth(); ++l) {
    const double gamma = params.gammas[l - 1];
    const double beta = params.betas[l - 1];
    const LayerTag phase{l, LayerPart::phase};
    for (const auto& e : edges) emit_coupling(c, e.i, e.j, gamma * static_cast<double>(e.weight), phase);
    for (int q = 0; q < graph.n_nodes(); ++q)
      if (fields[q] != 0) c.add(Gate::rz(q, gamma * static_cast<double>(fields[q]), phase));
    const LayerTag mixer{l, LayerPart::mixer};
    for (int q = 0; q < graph.n_nodes(); ++q) c.add(Gate::rx(q, 2.0 * beta, mixer));
  }
  return c;
}

std::vector<int> RccSpec::mixer_qubits(int layer) const {
  const int p = depth();
  if (layer == p) return {target.first, target.second};
  return qubits_per_layer[p - layer - 1];
}

RccSpec extract_rcc(const IsingGraph& graph, NodePair edge, int p) {
  if (p < 1) throw Error(ErrorKind::invalid_argument, "depth must be at least 1");
  edge = make_pair_ordered(edge.first, edge.second);
  if (!graph.has_edge(edge.first, edge.second))
    throw Error(ErrorKind::invalid_argument,
                fmt::format("edge ({}, {}) not in graph", edge.first, edge.second));

  RccSpec spec;
  spec.target = edge;
  std::set<int> current{edge.first, edge.second};
  const auto edges = graph.edge_list();
  for (int l = p; l >= 1; --l) {
    std::vector<NodePair> included;
    std::set<int> next = current;
    for (const auto& e : edges) {
      if (current.contains(e.i) || current.contains(e.j)) {
        included.emplace_back(e.i, e.j);
        next.insert(e.i);
        next.insert(e.j);
      }
    }
    spec.edges_per_layer.push_back(std::move(included));
    spec.qubits_per_layer.emplace_back(next.begin(), next.end());
    current = std::move(next);
  }
  const std::vector<int> second =
      p >= 2 ? spec.qubits_per_layer[p - 2] : std::vector<int>{edge.first, edge.second};
  std::set_difference(spec.cone_qubits().begin(), spec.cone_qubits().end(), second.begin(),
                      second.end(), std::back_inserter(spec.removed_qubits));
  return spec;
}

namespace {

// Shared body of the untrimmed and trimmed cone builders. `removed_signs`
// maps each removed qubit to +1/-1; when empty nothing is trimmed.
Circuit cone_circuit(const IsingGraph& graph, const RccSpec& spec, const QaoaParams& params,
                     const std::vector<int>& register_nodes,
                     const std::vector<std::pair<int, int>>& removed_signs) {
  Circuit c(static_cast<int>(register_nodes.size()), register_nodes);
  const auto fields = graph.fields();
  const int p = spec.depth();
  auto sign_of = [&](int node) {
    for (const auto& [r, s] : removed_signs)
      if (r == node) return s;
    return 0;
  };
  for (int l = 1; l <= p; ++l) {
    const double gamma = params.gammas[l - 1];
    const double beta = params.betas[l - 1];
    const LayerTag phase{l, LayerPart::phase};
    for (const auto& [a, b] : spec.edges_per_layer[p - l]) {
      const double angle = gamma * static_cast<double>(graph.coupling(a, b));
      const int sa = l == 1 ? sign_of(a) : 0;
      const int sb = l == 1 ? sign_of(b) : 0;
      if (sa != 0) {
        c.add(Gate::rz(c.local_index(b), sa * angle, phase));
      } else if (sb != 0) {
        c.add(Gate::rz(c.local_index(a), sb * angle, phase));
      } else {
        emit_coupling(c, c.local_index(a), c.local_index(b), angle, phase);
      }
    }
    const auto active = spec.mixer_qubits(l);
    for (int q : active)
      if (fields[q] != 0)
        c.add(Gate::rz(c.local_index(q), gamma * static_cast<double>(fields[q]), phase));
    const LayerTag mixer{l, LayerPart::mixer};
    for (int q : active) c.add(Gate::rx(c.local_index(q), 2.0 * beta, mixer));
  }
  return c;
}

}  // namespace

Circuit build_rcc_circuit(const IsingGraph& graph, const RccSpec& spec, const QaoaParams& params) {
  params.validate();
  if (params.depth() != spec.depth())
    throw Error(ErrorKind::invalid_argument, "cone depth and parameter depth differ");
  return cone_circuit(graph, spec, params, spec.cone_qubits(), {});
}

namespace {

std::vector<int> trimmed_register(const RccSpec& spec) {
  std::vector<int> kept;
  std::set_difference(spec.cone_qubits().begin(), spec.cone_qubits().end(),
                      spec.removed_qubits.begin(), spec.removed_qubits.end(),
                      std::back_inserter(kept));
  return kept;
}

Circuit trimmed_member(const IsingGraph& graph, const RccSpec& spec, const QaoaParams& params,
                       const std::vector<int>& kept, std::uint64_t bits) {
  std::vector<std::pair<int, int>> signs(spec.k());
  for (int t = 0; t < spec.k(); ++t)
    signs[t] = {spec.removed_qubits[t], ((bits >> t) & 1U) ? -1 : 1};
  return cone_circuit(graph, spec, params, kept, signs);
}

}  // namespace

Circuit build_rcc_trimmed_member(const IsingGraph& graph, NodePair edge, const QaoaParams& params,
                                 std::uint64_t member) {
  params.validate();
  const RccSpec spec = extract_rcc(graph, edge, params.depth());
  if (spec.k() < 64 && member >= (std::uint64_t{1} << spec.k()))
    throw Error(ErrorKind::invalid_argument, "trimmed member index out of range");
  return trimmed_member(graph, spec, params, trimmed_register(spec), member);
}

std::vector<WeightedCircuit> build_rcc_circuits_trimmed(const IsingGraph& graph, NodePair edge,
                                                        const QaoaParams& params,
                                                        int max_removed) {
  params.validate();
  const RccSpec spec = extract_rcc(graph, edge, params.depth());
  const int k = spec.k();
  if (k > max_removed)
    throw Error(ErrorKind::resource_limit,
                fmt::format("trimming would need 2^{} circuits (cap 2^{})", k, max_removed));

  const std::vector<int> kept = trimmed_register(spec);
  const std::uint64_t count = std::uint64_t{1} << k;
  const double weight = 1.0 / static_cast<double>(count);
  std::vector<WeightedCircuit> out;
  out.reserve(count);
  for (std::uint64_t bits = 0; bits < count; ++bits)
    out.push_back({trimmed_member(graph, spec, params, kept, bits), weight});
  return out;
}

CircuitMetrics metrics(const Circuit& circuit) {
  CircuitMetrics m;
  std::vector<int> depth(circuit.n_qubits(), 0);
  std::vector<bool> touched(circuit.n_qubits(), false);
  for (const auto& g : circuit.gates()) {
    touched[g.qubits[0]] = true;
    if (g.kind != GateKind::cnot) continue;
    touched[g.qubits[1]] = true;
    ++m.cnot_count;
    const int d = std::max(depth[g.qubits[0]], depth[g.qubits[1]]) + 1;
    depth[g.qubits[0]] = depth[g.qubits[1]] = d;
    m.cnot_depth = std::max(m.cnot_depth, d);
  }
  m.qubit_count = static_cast<int>(std::count(touched.begin(), touched.end(), true));
  return m;
}

nlohmann::json to_json(const Gate& gate) {
  nlohmann::json j;
  switch (gate.kind) {
    case GateKind::rx: j["kind"] = "rx"; break;
    case GateKind::rz: j["kind"] = "rz"; break;
    case GateKind::cnot: j["kind"] = "cnot"; break;
  }
  j["qubits"] = gate.arity() == 2 ? nlohmann::json::array({gate.qubits[0], gate.qubits[1]})
                                  : nlohmann::json::array({gate.qubits[0]});
  j["angle"] = gate.kind == GateKind::cnot ? nlohmann::json(nullptr) : nlohmann::json(gate.angle);
  j["layer"] = {gate.tag.layer, gate.tag.part == LayerPart::phase ? "phase" : "mixer"};
  return j;
}

nlohmann::json to_json(const Circuit& circuit) {
  nlohmann::json out = nlohmann::json::array();
  for (Gate g : circuit.gates()) {
    for (int k = 0; k < g.arity(); ++k) g.qubits[k] = circuit.labels()[g.qubits[k]];
    out.push_back(to_json(g));
  }
  return out;
}

}  // namespace paintshop
