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

#include <array>
#include <cstdint>
#include <vector>

#include "json.hpp"

#include "paintshop/ising.hpp"
#include "paintshop/params.hpp"

namespace paintshop {

enum class GateKind : std::uint8_t { rx, rz, cnot };
enum class LayerPart : std::uint8_t { phase, mixer };

struct LayerTag {
  int layer = 1;  // 1-based QAOA layer
  LayerPart part = LayerPart::phase;

  friend bool operator==(const LayerTag&, const LayerTag&) = default;
};

/// RX(a) = exp(-i a X / 2), RZ(a) = exp(-i a Z / 2). CNOT stores
/// (control, target) in qubits[0], qubits[1]; angle is unused.
struct Gate {
  GateKind kind;
  std::array<int, 2> qubits;
  double angle;
  LayerTag tag;

  static Gate rx(int q, double angle, LayerTag tag) { return {GateKind::rx, {q, -1}, angle, tag}; }
  static Gate rz(int q, double angle, LayerTag tag) { return {GateKind::rz, {q, -1}, angle, tag}; }
  static Gate cnot(int control, int target, LayerTag tag) {
    return {GateKind::cnot, {control, target}, 0.0, tag};
  }

  int arity() const { return kind == GateKind::cnot ? 2 : 1; }
};

/// Gate list applied to |+>^n (the initial state is a simulator convention,
/// not a gate). `labels[q]` is the graph node simulated by local qubit q, so
/// cone circuits can live on a compact register.
class Circuit {
 public:
  explicit Circuit(int n_qubits);
  Circuit(int n_qubits, std::vector<int> labels);

  int n_qubits() const { return n_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  const std::vector<int>& labels() const { return labels_; }

  /// Local index of graph node `label`; throws invalid-argument if absent.
  int local_index(int label) const;

  /// Validates qubit indices before appending.
  void add(const Gate& gate);

 private:
  int n_qubits_;
  std::vector<int> labels_;
  std::vector<Gate> gates_;
};

struct CircuitMetrics {
  int cnot_count = 0;
  int cnot_depth = 0;
  int qubit_count = 0;
};

/// Per layer: for each edge in sorted order CNOT(i,j) RZ(j, gamma J) CNOT(i,j),
/// then RZ(q, gamma h_q) for non-zero fields, then RX(q, 2 beta) on every qubit.
/// This realises exp(-i beta sum X) exp(-i gamma H) with H the graph energy
/// operator (1/2)(sum J ZZ + sum h Z).
Circuit build_qaoa_circuit(const IsingGraph& graph, const QaoaParams& params);

/// Reverse causal cone of Z_i Z_j through a depth-p ansatz.
///
/// Index 0 of the per-layer vectors is layer p, the last index is layer 1.
/// The qubit set of a layer is the previous (later) set plus every endpoint of
/// an edge touching it.
struct RccSpec {
  NodePair target;
  std::vector<std::vector<int>> qubits_per_layer;
  std::vector<std::vector<NodePair>> edges_per_layer;
  /// Layer-1 qubits absent from layer 2 (for p = 1, layer 2 is the target pair).
  std::vector<int> removed_qubits;

  int depth() const { return static_cast<int>(qubits_per_layer.size()); }
  int k() const { return static_cast<int>(removed_qubits.size()); }
  const std::vector<int>& cone_qubits() const { return qubits_per_layer.back(); }
  /// Qubits whose state is needed after layer-l phase gates (layer 2's set, or
  /// the target for l = p).
  std::vector<int> mixer_qubits(int layer) const;
};

RccSpec extract_rcc(const IsingGraph& graph, NodePair edge, int p);

/// The cone's gates, in full-circuit order, on a register holding only the
/// layer-1 qubits.
Circuit build_rcc_circuit(const IsingGraph& graph, const RccSpec& spec, const QaoaParams& params);

struct WeightedCircuit {
  Circuit circuit;
  double weight;
};

inline constexpr int kMaxTrimmedQubits = 20;

/// One circuit per bitstring over the removed qubits. Each removed qubit's
/// layer-1 coupling to neighbour q becomes RZ(q, +-gamma_1 J); all circuits
/// carry weight 2^-k. Throws resource-limit when k exceeds `max_removed`.
std::vector<WeightedCircuit> build_rcc_circuits_trimmed(const IsingGraph& graph, NodePair edge,
                                                        const QaoaParams& params,
                                                        int max_removed = kMaxTrimmedQubits);

/// Member `member` of the trimmed family: bit t of the index sets removed
/// qubit t to spin -1. All members share one gate layout.
Circuit build_rcc_trimmed_member(const IsingGraph& graph, NodePair edge, const QaoaParams& params,
                                 std::uint64_t member);

CircuitMetrics metrics(const Circuit& circuit);

nlohmann::json to_json(const Gate& gate);
/// [{"kind","qubits","angle","layer"}]; qubits are graph labels.
nlohmann::json to_json(const Circuit& circuit);

}  // namespace paintshop
