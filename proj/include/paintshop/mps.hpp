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
#include <vector>

#include <Eigen/Dense>

#include "paintshop/circuit.hpp"
#include "paintshop/kernels.hpp"

namespace paintshop {

struct MpsStats {
  double max_entropy_bits = 0.0;
  int max_bond_dim = 1;
  double excluded_probability = 0.0;
};

/// Open-boundary MPS over a line of qubits in register order, kept in mixed
/// canonical form around a single orthogonality centre.
///
/// Two-qubit gates act on neighbouring sites; distant pairs are brought
/// together with SWAP chains and moved back afterwards. After every two-site
/// SVD, Schmidt coefficients below `cutoff` are dropped (their squared weight
/// accumulates in excluded_probability) and the kept spectrum is renormalised.
/// Singular values at round-off level (<= kNumericalZero) are rank deficiency,
/// not truncation, and are dropped without being counted as excluded.
class MpsState {
 public:
  static constexpr double kNumericalZero = 1e-13;

  /// |+>^n with the given truncation threshold on Schmidt coefficients.
  MpsState(int n_qubits, double cutoff);

  int n_qubits() const { return static_cast<int>(sites_.size()); }
  double cutoff() const { return cutoff_; }
  double excluded_probability() const { return stats_.excluded_probability; }
  /// Bond dimension between site k and k + 1, k = 0..n-2.
  std::vector<int> bond_dims() const;
  /// Running maxima over every two-site update applied so far.
  const MpsStats& stats() const { return stats_; }

  void apply(const Gate& gate);

  /// Normalised Schmidt coefficients for the bipartition [0, cut) | [cut, n).
  std::vector<double> schmidt_values(int cut) const;

  /// Dense amplitudes with bit q of the index holding qubit q.
  std::vector<kernels::Amplitude> to_amplitudes() const;

 private:
  using Site = std::array<Eigen::MatrixXcd, 2>;

  void apply_single(int site, const Eigen::Matrix2cd& u);
  void apply_two(int site, const Eigen::Matrix4cd& u);
  void move_center(int target);

  std::vector<Site> sites_;
  int center_ = 0;
  double cutoff_;
  MpsStats stats_;
};

struct MpsResult {
  MpsState state;
  MpsStats stats;
};

/// Runs `circuit` from |+>^n. Throws invalid-argument for negative cutoffs and
/// degenerate-cutoff for cutoffs >= 1 or when a truncation keeps nothing.
MpsResult simulate_mps(const Circuit& circuit, double cutoff);

/// Base-2 von Neumann entropy across [0, cut) | [cut, n); 1 <= cut <= n - 1.
double entropy_at_cut(const MpsState& state, int cut);

/// -sum p log2 p over squared normalised coefficients.
double entropy_bits(const std::vector<double>& schmidt);

}  // namespace paintshop
