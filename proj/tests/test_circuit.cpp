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

#include "doctest.h"

#include <set>

#include "helpers.hpp"
#include "paintshop/circuit.hpp"
#include "paintshop/error.hpp"
#include "paintshop/qaoa.hpp"
#include "paintshop/statevector.hpp"

using namespace paintshop;

namespace {

IsingGraph path(int n) {
  IsingGraph g(n);
  for (int q = 0; q + 1 < n; ++q) g.add_coupling(q, q + 1, q % 2 ? -1 : 1);
  return g;
}

}  // namespace

TEST_CASE("circuit rejects bad gates") {
  Circuit c(2);
  CHECK_THROWS_AS(c.add(Gate::rx(2, 0.1, {})), Error);
  CHECK_THROWS_AS(c.add(Gate::cnot(1, 1, {})), Error);
  CHECK_NOTHROW(c.add(Gate::cnot(1, 0, {})));
  CHECK_THROWS_AS(Circuit(2, {4}), Error);
  CHECK_THROWS_AS(Circuit(2, {4, 5}).local_index(3), Error);
}

TEST_CASE("full ansatz gate counts") {
  const auto g = map_bpsp(generate_random(7, 2));
  const auto c1 = build_qaoa_circuit(g, fixed_params(1));
  const auto m1 = metrics(c1);
  CHECK(m1.cnot_count == 2 * static_cast<int>(g.n_edges()));
  CHECK(m1.qubit_count == 7);
  for (int p = 2; p <= 4; ++p) {
    const auto mp = metrics(build_qaoa_circuit(g, fixed_params(p)));
    CHECK(mp.cnot_count == p * m1.cnot_count);
    CHECK(mp.cnot_depth <= p * m1.cnot_depth);
  }
  int rx = 0;
  for (const auto& gate : c1.gates()) rx += gate.kind == GateKind::rx;
  CHECK(rx == 7);
}

TEST_CASE("CNOT depth is the longest per-qubit chain") {
  Circuit c(4);
  c.add(Gate::cnot(0, 1, {}));
  c.add(Gate::cnot(2, 3, {}));
  c.add(Gate::cnot(1, 2, {}));
  c.add(Gate::rx(0, 0.3, {}));
  const auto m = metrics(c);
  CHECK(m.cnot_count == 3);
  CHECK(m.cnot_depth == 2);
  CHECK(m.qubit_count == 4);
  CHECK(metrics(Circuit(3)).qubit_count == 0);
}

TEST_CASE("cone of a path grows by one hop per layer") {
  const auto g = path(9);
  const auto s1 = extract_rcc(g, {4, 5}, 1);
  CHECK(s1.cone_qubits() == std::vector<int>{3, 4, 5, 6});
  CHECK(s1.removed_qubits == std::vector<int>{3, 6});
  CHECK(s1.edges_per_layer[0].size() == 3);
  const auto s2 = extract_rcc(g, {4, 5}, 2);
  CHECK(s2.qubits_per_layer[0] == std::vector<int>{3, 4, 5, 6});
  CHECK(s2.cone_qubits() == std::vector<int>{2, 3, 4, 5, 6, 7});
  CHECK(s2.removed_qubits == std::vector<int>{2, 7});
  CHECK(s2.mixer_qubits(2) == std::vector<int>{4, 5});
  CHECK(s2.mixer_qubits(1) == std::vector<int>{3, 4, 5, 6});
  CHECK_THROWS_AS(extract_rcc(g, {0, 5}, 1), Error);
}

TEST_CASE("cone circuits reproduce full-circuit correlations") {
  for (int p = 1; p <= 3; ++p)
    for (int k = 0; k < 3; ++k) {
      const auto g = map_bpsp(generate_random(8, 17 * p + k));
      const auto params = fixed_params(p);
      const auto full = simulate(build_qaoa_circuit(g, params));
      for (const auto& e : g.edge_list()) {
        const auto spec = extract_rcc(g, {e.i, e.j}, p);
        const auto cone = build_rcc_circuit(g, spec, params);
        const auto st = simulate(cone);
        const double m = expectation_zz(st, cone.local_index(e.i), cone.local_index(e.j));
        CHECK(m == doctest::Approx(expectation_zz(full, e.i, e.j)).epsilon(1e-10));
      }
    }
}

TEST_CASE("trimmed families average to the cone correlation") {
  for (int p = 1; p <= 2; ++p) {
    const auto g = map_bpsp(generate_random(9, 70 + p));
    const auto params = fixed_params(p);
    const auto full = simulate(build_qaoa_circuit(g, params));
    for (const auto& e : g.edge_list()) {
      const auto family = build_rcc_circuits_trimmed(g, {e.i, e.j}, params);
      const auto spec = extract_rcc(g, {e.i, e.j}, p);
      REQUIRE(family.size() == (std::size_t{1} << spec.k()));
      double m = 0.0, w = 0.0;
      for (const auto& wc : family) {
        CHECK(metrics(wc.circuit).qubit_count <= static_cast<int>(spec.cone_qubits().size()) - spec.k());
        const auto st = simulate(wc.circuit);
        m += wc.weight * expectation_zz(st, wc.circuit.local_index(e.i), wc.circuit.local_index(e.j));
        w += wc.weight;
      }
      CHECK(w == doctest::Approx(1.0));
      CHECK(m == doctest::Approx(expectation_zz(full, e.i, e.j)).epsilon(1e-10));
    }
  }
}

TEST_CASE("p = 1 trimmed circuits act on the target pair only") {
  const auto g = map_bpsp(generate_random(12, 3));
  for (const auto& e : g.edge_list()) {
    const auto member = build_rcc_trimmed_member(g, {e.i, e.j}, fixed_params(1), 0);
    CHECK(member.n_qubits() == 2);
    CHECK(metrics(member).cnot_count == 2);
  }
}

TEST_CASE("trimming refuses oversized families") {
  IsingGraph star(24);
  for (int q = 2; q < 24; ++q) star.add_coupling(0, q, 1);
  star.add_coupling(0, 1, 1);
  try {
    build_rcc_circuits_trimmed(star, {0, 1}, fixed_params(1), 20);
    FAIL("expected resource-limit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::resource_limit);
  }
}

TEST_CASE("circuit JSON uses graph labels") {
  const auto g = path(6);
  const auto spec = extract_rcc(g, {2, 3}, 1);
  const auto cone = build_rcc_circuit(g, spec, fixed_params(1));
  const auto j = to_json(cone);
  REQUIRE(j.is_array());
  std::set<int> labels;
  for (const auto& gate : j) {
    for (const auto& q : gate["qubits"]) labels.insert(q.get<int>());
    if (gate["kind"] == "cnot")
      CHECK(gate["angle"].is_null());
    else
      CHECK(gate["angle"].is_number());
    CHECK(gate["layer"][0] == 1);
  }
  CHECK(labels == std::set<int>{1, 2, 3, 4});
}
