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
#include <ostream>
#include <span>
#include <vector>

#include "paintshop/circuit.hpp"
#include "paintshop/exec.hpp"
#include "paintshop/ising.hpp"
#include "paintshop/kernels.hpp"

namespace paintshop {

using kernels::Amplitude;

inline constexpr int kMaxStatevectorQubits = 24;

/// Dense state over n qubits; basis index bit q holds qubit q, and bit value 0
/// corresponds to spin +1.
class Statevector {
 public:
  /// |+>^n. Throws resource-limit above kMaxStatevectorQubits.
  static Statevector plus_state(int n_qubits);
  /// Takes ownership of explicit amplitudes (length must be a power of two).
  static Statevector from_amplitudes(std::vector<Amplitude> amps);

  int n_qubits() const { return n_qubits_; }
  std::span<const Amplitude> amplitudes() const { return amps_; }
  std::span<Amplitude> mutable_amplitudes() { return amps_; }
  double probability(std::uint64_t index) const { return std::norm(amps_[index]); }

  void apply(const Gate& gate, Exec exec = Exec::parallel);

 private:
  Statevector(int n, std::vector<Amplitude> amps) : n_qubits_(n), amps_(std::move(amps)) {}

  int n_qubits_;
  std::vector<Amplitude> amps_;
};

Statevector simulate(const Circuit& circuit, Exec exec = Exec::parallel);

double expectation_z(const Statevector& state, int q);
/// Throws invalid-argument for out-of-range or equal indices.
double expectation_zz(const Statevector& state, int i, int j);
double norm_squared(const Statevector& state);

/// (1/2)(sum J <ZZ> + sum h <Z>) + C/2; graph node q is qubit q.
double energy_expectation(const IsingGraph& graph, const Statevector& state);

struct ShotCounts {
  std::map<std::uint64_t, std::uint64_t> counts;  // basis index -> hits
  std::uint64_t total = 0;
};

/// Inverse-CDF draws over the cumulative probability table.
ShotCounts sample(const Statevector& state, std::uint64_t shots, std::uint64_t seed);

/// Empirical <Z_i Z_j> from shot counts.
double estimate_zz(const ShotCounts& counts, int i, int j);

/// Spin configuration of a basis index: bit 0 -> +1, bit 1 -> -1.
SpinConfig spins_of(std::uint64_t index, int n_qubits);

/// CSV "index,bitstring,probability", bitstring written qubit 0 first.
void write_probability_csv(std::ostream& out, const Statevector& state);

}  // namespace paintshop
