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

#include "paintshop/correlations.hpp"

#include <cstdint>
#include <exception>
#include <vector>

#include "paintshop/circuit.hpp"
#include "paintshop/error.hpp"
#include "paintshop/rng.hpp"
#include "paintshop/statevector.hpp"

namespace paintshop {

namespace {

std::vector<WeightedCircuit> cone_circuits(const IsingGraph& graph, NodePair edge,
                                           const QaoaParams& params) {
  try {
    return build_rcc_circuits_trimmed(graph, edge, params);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::resource_limit) throw;
  }
  const RccSpec spec = extract_rcc(graph, edge, params.depth());
  std::vector<WeightedCircuit> out;
  out.push_back({build_rcc_circuit(graph, spec, params), 1.0});
  return out;
}

double cone_correlation(const IsingGraph& graph, NodePair edge, const QaoaParams& params,
                        const EvalMode& mode, std::uint64_t edge_index) {
  const auto circuits = cone_circuits(graph, edge, params);
  const auto* shots = std::get_if<ShotMode>(&mode);
  double m = 0.0;
  for (std::size_t c = 0; c < circuits.size(); ++c) {
    const auto& wc = circuits[c];
    // Sequential inside: edges are already spread over threads.
    const Statevector state = simulate(wc.circuit, Exec::serial);
    const int li = wc.circuit.local_index(edge.first);
    const int lj = wc.circuit.local_index(edge.second);
    if (shots == nullptr) {
      m += wc.weight * expectation_zz(state, li, lj);
    } else {
      const std::uint64_t per = std::max<std::uint64_t>(1, shots->shots / circuits.size());
      const std::uint64_t seed = derive_seed(shots->seed, Stream::shots, (edge_index << 24) | c);
      m += wc.weight * estimate_zz(sample(state, per, seed), li, lj);
    }
  }
  return m;
}

}  // namespace

Correlations correlations_all_edges(const IsingGraph& graph, const QaoaParams& params,
                                    const EvalMode& mode, bool via_rcc) {
  params.validate();
  const auto edges = graph.edge_list();
  Correlations out;
  if (edges.empty()) return out;

  if (!via_rcc) {
    const Statevector state = simulate(build_qaoa_circuit(graph, params));
    if (const auto* shots = std::get_if<ShotMode>(&mode)) {
      const ShotCounts counts = sample(state, shots->shots, derive_seed(shots->seed, Stream::shots));
      for (const auto& e : edges) out[{e.i, e.j}] = estimate_zz(counts, e.i, e.j);
    } else {
      for (const auto& e : edges) out[{e.i, e.j}] = expectation_zz(state, e.i, e.j);
    }
    return out;
  }

  std::vector<double> values(edges.size());
  const auto n = static_cast<std::int64_t>(edges.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t t = 0; t < n; ++t) {
    try {
      values[t] = cone_correlation(graph, {edges[t].i, edges[t].j}, params, mode,
                                   static_cast<std::uint64_t>(t));
    } catch (...) {
#pragma omp critical(paintshop_correlation_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  for (std::size_t t = 0; t < edges.size(); ++t) out[{edges[t].i, edges[t].j}] = values[t];
  return out;
}

std::uint64_t trimmed_circuit_count(const IsingGraph& graph, int p) {
  std::uint64_t total = 0;
  for (const auto& e : graph.edge_list()) {
    const int k = extract_rcc(graph, {e.i, e.j}, p).k();
    total += k > kMaxTrimmedQubits ? 1 : (std::uint64_t{1} << k);
  }
  return total;
}

}  // namespace paintshop
