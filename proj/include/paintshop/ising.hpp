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

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "paintshop/bpsp.hpp"
#include "paintshop/exec.hpp"

namespace paintshop {

using NodePair = std::pair<int, int>;

/// Normalises (i, j) to i < j; throws invalid-argument on a self-loop.
NodePair make_pair_ordered(int i, int j);

/// An exact energy value stored as twice its value.
struct HalfInt {
  std::int64_t twice = 0;

  double value() const { return static_cast<double>(twice) / 2.0; }
  auto operator<=>(const HalfInt&) const = default;
};

struct Edge {
  int i;
  int j;
  std::int64_t weight;
};

/// Ising graph with energy (1/2)(sum_E J_ij s_i s_j + sum_j h_j s_j + C).
///
/// Couplings and the offset numerator C are integers, so energies are exact
/// half-integers. Zero couplings are never stored. Local fields are kept for
/// generality; graphs mapped from paint shop instances have none.
class IsingGraph {
 public:
  explicit IsingGraph(int n_nodes, std::int64_t offset_numerator = 0);

  int n_nodes() const { return n_nodes_; }
  std::int64_t offset_numerator() const { return offset_; }
  const std::map<NodePair, std::int64_t>& couplings() const { return couplings_; }
  std::size_t n_edges() const { return couplings_.size(); }

  /// Adds `w` to J_ij, erasing the edge if the sum cancels to zero.
  void add_coupling(int i, int j, std::int64_t w);
  std::int64_t coupling(int i, int j) const;
  bool has_edge(int i, int j) const;

  void add_offset(std::int64_t delta) { offset_ += delta; }

  std::span<const std::int64_t> fields() const { return fields_; }
  void add_field(int node, std::int64_t h);
  bool has_fields() const;

  /// Edges sorted by (i, j).
  std::vector<Edge> edge_list() const;
  std::vector<std::vector<int>> adjacency() const;
  std::vector<int> degrees() const;

  friend bool operator==(const IsingGraph&, const IsingGraph&) = default;

 private:
  void check_node(int node) const;

  int n_nodes_;
  std::int64_t offset_;
  std::map<NodePair, std::int64_t> couplings_;
  std::vector<std::int64_t> fields_;
};

/// Spins are +1 / -1, one per node.
using SpinConfig = std::vector<int>;

/// One node per body; -1 coupling for adjacent cars that are both first or
/// both second occurrences, +1 for mixed pairs; same-body neighbours add to
/// A, and C = A + 2N - 1.
IsingGraph map_bpsp(const BpspInstance& instance);

HalfInt energy(const IsingGraph& graph, const SpinConfig& spins);

struct GroundState {
  SpinConfig spins;
  HalfInt energy;
};

struct Extremes {
  GroundState min;
  GroundState max;
};

inline constexpr int kBruteForceCap = 24;

/// Exhaustive minimum. Without fields spin 0 is pinned to +1 (Z2 symmetry).
/// Ties resolve to the lexicographically smallest bit vector b = (1 - s) / 2.
GroundState brute_force_ground(const IsingGraph& graph, int cap = kBruteForceCap,
                               Exec exec = Exec::parallel);

/// Minimum and maximum energy configurations in one sweep.
Extremes brute_force_extremes(const IsingGraph& graph, int cap = kBruteForceCap,
                              Exec exec = Exec::parallel);

/// First occurrence of body b gets colour (1 - s_b) / 2, the second the complement.
Colouring spins_to_colouring(const BpspInstance& instance, const SpinConfig& spins);

/// Inverse of spins_to_colouring for valid colourings.
SpinConfig colouring_to_spins(const BpspInstance& instance, const Colouring& colouring);

}  // namespace paintshop
