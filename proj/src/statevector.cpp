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

#include "paintshop/statevector.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <bit>
#include <cmath>

#include "paintshop/error.hpp"
#include "paintshop/rng.hpp"

namespace paintshop {

Statevector Statevector::plus_state(int n_qubits) {
  if (n_qubits < 0) throw Error(ErrorKind::invalid_argument, "negative qubit count");
  if (n_qubits > kMaxStatevectorQubits)
    throw Error(ErrorKind::resource_limit, fmt::format("{} qubits exceeds statevector cap {}",
                                                       n_qubits, kMaxStatevectorQubits));
  const std::size_t dim = std::size_t{1} << n_qubits;
  const double a = 1.0 / std::sqrt(static_cast<double>(dim));
  return Statevector(n_qubits, std::vector<Amplitude>(dim, Amplitude{a, 0.0}));
}

Statevector Statevector::from_amplitudes(std::vector<Amplitude> amps) {
  if (amps.empty() || !std::has_single_bit(amps.size()))
    throw Error(ErrorKind::invalid_argument, "amplitude count must be a power of two");
  const int n = std::countr_zero(amps.size());
  if (n > kMaxStatevectorQubits)
    throw Error(ErrorKind::resource_limit, "statevector qubit cap exceeded");
  return Statevector(n, std::move(amps));
}

void Statevector::apply(const Gate& gate, Exec exec) {
  for (int k = 0; k < gate.arity(); ++k)
    if (gate.qubits[k] < 0 || gate.qubits[k] >= n_qubits_)
      throw Error(ErrorKind::invalid_argument, "gate qubit outside the state");
  const bool par = exec == Exec::parallel;
  switch (gate.kind) {
    case GateKind::rx:
      par ? kernels::omp::apply_rx(amps_, gate.qubits[0], gate.angle)
          : kernels::serial::apply_rx(amps_, gate.qubits[0], gate.angle);
      break;
    case GateKind::rz:
      par ? kernels::omp::apply_rz(amps_, gate.qubits[0], gate.angle)
          : kernels::serial::apply_rz(amps_, gate.qubits[0], gate.angle);
      break;
    case GateKind::cnot:
      par ? kernels::omp::apply_cnot(amps_, gate.qubits[0], gate.qubits[1])
          : kernels::serial::apply_cnot(amps_, gate.qubits[0], gate.qubits[1]);
      break;
  }
}

Statevector simulate(const Circuit& circuit, Exec exec) {
  Statevector state = Statevector::plus_state(circuit.n_qubits());
  for (const auto& g : circuit.gates()) state.apply(g, exec);
  return state;
}

namespace {

void check_qubit(const Statevector& s, int q) {
  if (q < 0 || q >= s.n_qubits())
    throw Error(ErrorKind::invalid_argument,
                fmt::format("qubit {} outside {}-qubit state", q, s.n_qubits()));
}

}  // namespace

double expectation_z(const Statevector& state, int q) {
  check_qubit(state, q);
  return kernels::omp::expectation_z(state.amplitudes(), q);
}

double expectation_zz(const Statevector& state, int i, int j) {
  check_qubit(state, i);
  check_qubit(state, j);
  if (i == j) throw Error(ErrorKind::invalid_argument, "ZZ correlation needs distinct qubits");
  return kernels::omp::expectation_zz(state.amplitudes(), i, j);
}

double norm_squared(const Statevector& state) {
  return kernels::omp::norm_squared(state.amplitudes());
}

double energy_expectation(const IsingGraph& graph, const Statevector& state) {
  if (graph.n_nodes() != state.n_qubits())
    throw Error(ErrorKind::invalid_argument,
                fmt::format("graph has {} nodes, state {} qubits", graph.n_nodes(),
                            state.n_qubits()));
  double sum = 0.0;
  for (const auto& e : graph.edge_list())
    sum += static_cast<double>(e.weight) * expectation_zz(state, e.i, e.j);
  const auto fields = graph.fields();
  for (int q = 0; q < graph.n_nodes(); ++q)
    if (fields[q] != 0) sum += static_cast<double>(fields[q]) * expectation_z(state, q);
  return 0.5 * (sum + static_cast<double>(graph.offset_numerator()));
}

ShotCounts sample(const Statevector& state, std::uint64_t shots, std::uint64_t seed) {
  if (shots < 1) throw Error(ErrorKind::invalid_argument, "need at least one shot");
  const auto amps = state.amplitudes();
  std::vector<double> cdf(amps.size());
  double acc = 0.0;
  for (std::size_t k = 0; k < amps.size(); ++k) {
    acc += std::norm(amps[k]);
    cdf[k] = acc;
  }
  Rng rng(seed);
  ShotCounts out;
  out.total = shots;
  for (std::uint64_t s = 0; s < shots; ++s) {
    // uniform() is in (0, 1]; scale to the table's total so rounding never
    // pushes a draw past the last bin.
    const double u = rng.uniform() * acc;
    // First bin whose cumulative value reaches u; never a zero-probability bin.
    auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) --it;
    ++out.counts[static_cast<std::uint64_t>(it - cdf.begin())];
  }
  return out;
}

double estimate_zz(const ShotCounts& counts, int i, int j) {
  if (counts.total == 0) throw Error(ErrorKind::invalid_argument, "empty shot record");
  const std::uint64_t mask = (std::uint64_t{1} << i) | (std::uint64_t{1} << j);
  std::int64_t sum = 0;
  for (const auto& [idx, c] : counts.counts)
    sum += (std::popcount(idx & mask) & 1) ? -static_cast<std::int64_t>(c)
                                            : static_cast<std::int64_t>(c);
  return static_cast<double>(sum) / static_cast<double>(counts.total);
}

SpinConfig spins_of(std::uint64_t index, int n_qubits) {
  SpinConfig s(n_qubits);
  for (int q = 0; q < n_qubits; ++q) s[q] = ((index >> q) & 1U) ? -1 : 1;
  return s;
}

void write_probability_csv(std::ostream& out, const Statevector& state) {
  out << "index,bitstring,probability\n";
  const int n = state.n_qubits();
  for (std::uint64_t k = 0; k < state.amplitudes().size(); ++k) {
    std::string bits(n, '0');
    for (int q = 0; q < n; ++q) bits[q] = ((k >> q) & 1U) ? '1' : '0';
    out << fmt::format("{},{},{:.17g}\n", k, bits, state.probability(k));
  }
}

}  // namespace paintshop
