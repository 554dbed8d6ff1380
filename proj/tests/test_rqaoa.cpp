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

#include <sstream>

#include "helpers.hpp"
#include "paintshop/error.hpp"
#include "paintshop/rqaoa.hpp"

using namespace paintshop;

namespace {

Correlations all_edges(const IsingGraph& g, double m) {
  Correlations c;
  for (const auto& e : g.edge_list()) c[{e.i, e.j}] = m;
  return c;
}

SpinConfig spins_from_index(std::uint64_t x, int n) {
  SpinConfig s(n);
  for (int q = 0; q < n; ++q) s[q] = ((x >> q) & 1U) ? -1 : 1;
  return s;
}

/// Lifts a reduced configuration back to the pre-step graph's node set.
SpinConfig lift(const ReduceResult& r, const SpinConfig& reduced, int pre_nodes) {
  SpinConfig s(pre_nodes, 0);
  for (std::size_t t = 0; t < r.kept.size(); ++t) s[r.kept[t]] = reduced[t];
  for (const auto& f : r.step.additionally_freed) s[f.node] = f.spin;
  if (s[r.step.retained] == 0) s[r.step.retained] = 1;
  s[r.step.eliminated] = r.step.sign * s[r.step.retained];
  return s;
}

}  // namespace

TEST_CASE("single edge with negative correlation") {
  IsingGraph g(2, 3);
  g.add_coupling(0, 1, 1);
  const auto r = reduce_once(g, {{{0, 1}, -0.4}});
  CHECK(r.step.sign == -1);
  CHECK(r.step.retained == 0);
  CHECK(r.step.eliminated == 1);
  CHECK(r.graph.n_nodes() == 1);
  CHECK(r.graph.n_edges() == 0);
  CHECK(r.graph.offset_numerator() == 2);
  CHECK(r.kept == std::vector<int>{0});
}

TEST_CASE("triangle merge adds the signed coupling") {
  IsingGraph g(3);
  g.add_coupling(0, 1, 1);
  g.add_coupling(1, 2, 1);
  g.add_coupling(0, 2, -1);
  const auto r = reduce_once(g, {{{0, 1}, -0.9}, {{1, 2}, 0.1}, {{0, 2}, 0.2}});
  CHECK(r.step.sign == -1);
  REQUIRE(r.graph.n_nodes() == 2);
  CHECK(r.graph.coupling(0, 1) == -2);
  CHECK(r.graph.offset_numerator() == -1);
  CHECK(r.kept == std::vector<int>{0, 2});
}

TEST_CASE("path merge creates a new edge") {
  IsingGraph g(3);
  g.add_coupling(0, 1, 1);
  g.add_coupling(1, 2, -1);
  const auto r = reduce_once(g, {{{0, 1}, 0.5}, {{1, 2}, 0.1}});
  CHECK(r.step.sign == 1);
  CHECK(r.graph.coupling(0, 1) == -1);
  CHECK(r.graph.offset_numerator() == 1);
}

TEST_CASE("cancellation frees the isolated node") {
  // Rounding (1,2) with Z2 = Z1 merges (2,3):-1 onto (1,3):+1, which cancels.
  IsingGraph g(4);
  g.add_coupling(0, 1, 1);
  g.add_coupling(1, 2, 1);
  g.add_coupling(1, 3, 1);
  g.add_coupling(2, 3, -1);
  const auto r = reduce_once(g, {{{0, 1}, 0.0}, {{1, 2}, 0.9}, {{1, 3}, 0.0}, {{2, 3}, 0.0}});
  CHECK(r.step.chosen_edge == NodePair{1, 2});
  REQUIRE(r.step.additionally_freed.size() == 1);
  CHECK(r.step.additionally_freed[0].node == 3);
  CHECK(r.step.additionally_freed[0].spin == 1);
  CHECK(r.kept == std::vector<int>{0, 1});
  CHECK(r.graph.n_edges() == 1);
}

TEST_CASE("ties pick the smallest edge and zero rounds up") {
  IsingGraph g(3);
  g.add_coupling(0, 2, 1);
  g.add_coupling(1, 2, 1);
  const auto r = reduce_once(g, {{{0, 2}, 0.0}, {{1, 2}, -0.0}});
  CHECK(r.step.chosen_edge == NodePair{0, 2});
  CHECK(r.step.sign == 1);
  const auto s = reduce_once(g, {{{0, 2}, -0.5}, {{1, 2}, 0.5}});
  CHECK(s.step.chosen_edge == NodePair{0, 2});
  CHECK(s.step.sign == -1);
  const auto noisy = reduce_once(g, {{{0, 2}, 0.5}, {{1, 2}, 0.5 + 1e-14}});
  CHECK(noisy.step.chosen_edge == NodePair{0, 2});
}

TEST_CASE("reduce_once argument checks") {
  IsingGraph g(2);
  g.add_coupling(0, 1, 1);
  CHECK_THROWS_AS(reduce_once(g, {}), Error);
  CHECK_THROWS_AS(reduce_once(g, {{{0, 2}, 0.1}}), Error);
}

TEST_CASE("substitution preserves energy for every reduced configuration") {
  for (int n = 2; n <= 6; ++n)
    for (int k = 0; k < 10; ++k) {
      IsingGraph g = map_bpsp(generate_random(n, 300 * n + k));
      Rng rng(k + 17 * n);
      while (g.n_edges() > 0) {
        Correlations m;
        for (const auto& e : g.edge_list()) m[{e.i, e.j}] = 2.0 * rng.uniform() - 1.0;
        const auto r = reduce_once(g, m);
        CHECK(r.graph.n_nodes() < g.n_nodes());
        CHECK(r.graph.n_edges() <= g.n_edges());
        for (std::uint64_t x = 0; x < (1ULL << r.graph.n_nodes()); ++x) {
          const auto reduced = spins_from_index(x, r.graph.n_nodes());
          REQUIRE(energy(r.graph, reduced) == energy(g, lift(r, reduced, g.n_nodes())));
        }
        g = r.graph;
      }
    }
}

TEST_CASE("fields are carried through substitution") {
  IsingGraph g(3, 1);
  g.add_coupling(0, 1, 2);
  g.add_coupling(1, 2, -1);
  g.add_field(1, 3);
  g.add_field(2, -1);
  for (double m : {0.7, -0.7}) {
    const auto r = reduce_once(g, {{{0, 1}, m}, {{1, 2}, 0.1}});
    for (std::uint64_t x = 0; x < (1ULL << r.graph.n_nodes()); ++x) {
      const auto reduced = spins_from_index(x, r.graph.n_nodes());
      CHECK(energy(r.graph, reduced) == energy(g, lift(r, reduced, 3)));
    }
  }
}

TEST_CASE("alternating pair is solved optimally") {
  const BpspInstance inst(2, {0, 1, 0, 1});
  const auto r = rqaoa_solve(inst, {});
  CHECK(r.colour_changes == 1);
  CHECK(r.trace.steps.size() == 1);
}

TEST_CASE("worked example is solved optimally") {
  const BpspInstance inst(4, {1, 0, 1, 3, 2, 3, 0, 2});
  const auto r = rqaoa_solve(inst, {});
  CHECK(r.colour_changes == 2);
  RqaoaOptions rcc;
  rcc.via_rcc = true;
  CHECK(rqaoa_solve(inst, rcc).colour_changes == 2);
}

TEST_CASE("no reductions means brute force") {
  for (int n = 3; n <= 8; ++n) {
    const auto inst = generate_random(n, 60 + n);
    RqaoaOptions o;
    o.stop_size = n;
    const auto r = rqaoa_solve(inst, o);
    CHECK(r.trace.steps.empty());
    CHECK(r.colour_changes == brute_force_ground(map_bpsp(inst)).energy.value());
  }
}

TEST_CASE("solutions are valid and the trace replays") {
  for (int n = 1; n <= 12; ++n)
    for (int k = 0; k < 3; ++k) {
      const auto inst = generate_random(n, 7000 + 10 * n + k);
      const auto g = map_bpsp(inst);
      RqaoaOptions o;
      o.stop_size = 1 + k;
      const auto r = rqaoa_solve(inst, o);
      CHECK_NOTHROW(validate_colouring(inst, r.colouring));
      const auto spins = back_substitute(r.trace);
      CHECK(spins == colouring_to_spins(inst, r.colouring));
      CHECK(energy(g, spins).value() == r.colour_changes);
      int nodes = g.n_nodes();
      for (const auto& s : r.trace.steps) {
        CHECK(s.pre_nodes <= nodes);
        CHECK(s.sign == (s.correlation >= 0 ? 1 : -1));
        CHECK(s.eliminated != s.retained);
        nodes = s.pre_nodes;
      }
      CHECK(r.trace.steps.size() <= static_cast<std::size_t>(std::max(0, n - 1)));
    }
}

TEST_CASE("cone correlations give the same run as the full circuit") {
  for (int n = 5; n <= 9; ++n) {
    const auto inst = generate_random(n, 40 + n);
    RqaoaOptions full, cone;
    cone.via_rcc = true;
    const auto a = rqaoa_solve(inst, full);
    const auto b = rqaoa_solve(inst, cone);
    REQUIRE(a.trace.steps.size() == b.trace.steps.size());
    for (std::size_t t = 0; t < a.trace.steps.size(); ++t) {
      CHECK(a.trace.steps[t].chosen_edge == b.trace.steps[t].chosen_edge);
      CHECK(a.trace.steps[t].correlation ==
            doctest::Approx(b.trace.steps[t].correlation).epsilon(1e-10));
    }
  }
}

TEST_CASE("shot mode is reproducible") {
  const auto inst = generate_random(7, 3);
  RqaoaOptions o;
  o.mode = ShotMode{4096, 8};
  const auto a = rqaoa_solve(inst, o);
  const auto b = rqaoa_solve(inst, o);
  CHECK(a.colouring == b.colouring);
  CHECK_NOTHROW(validate_colouring(inst, a.colouring));
}

TEST_CASE("fixed source rejects unsupported depth") {
  RqaoaOptions o;
  o.p = 5;
  try {
    rqaoa_solve(generate_random(4, 1), o);
    FAIL("expected unsupported-depth");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::unsupported_depth);
  }
}

TEST_CASE("circuit counts follow the trace") {
  for (int n = 3; n <= 9; ++n) {
    const auto inst = generate_random(n, 123 + n);
    const auto r = rqaoa_solve(inst, {});
    std::uint64_t edges = 0, trimmed = 0;
    for (const auto& s : r.trace.steps) {
      edges += s.pre_edges;
      trimmed += s.trimmed_circuits;
      CHECK(s.evaluations == 1);
    }
    CHECK(circuit_count(r.trace, CircuitAccounting::full) == r.trace.steps.size());
    CHECK(circuit_count(r.trace, CircuitAccounting::rcc_untrimmed) == edges);
    CHECK(circuit_count(r.trace, CircuitAccounting::rcc_trimmed) == trimmed);
    CHECK(trimmed >= edges);
  }
  const auto single = rqaoa_solve(BpspInstance(2, {0, 1, 0, 1}), {});
  CHECK(circuit_count(single.trace, CircuitAccounting::full) == 1);
  CHECK(circuit_count(single.trace, CircuitAccounting::rcc_untrimmed) == 1);
}

TEST_CASE("optimised source multiplies counts by evaluations") {
  const auto inst = generate_random(6, 2);
  RqaoaOptions o;
  o.source = OptimisedSource{};
  const auto r = rqaoa_solve(inst, o);
  std::uint64_t expect = 0;
  for (const auto& s : r.trace.steps) {
    CHECK(s.evaluations > 1);
    expect += static_cast<std::uint64_t>(s.pre_edges) * s.evaluations;
  }
  CHECK(circuit_count(r.trace, CircuitAccounting::rcc_untrimmed) == expect);
}

TEST_CASE("perturbed source with zero sigma reproduces the base run") {
  const auto inst = generate_random(8, 21);
  RqaoaOptions base, noisy;
  noisy.source = PerturbedSource{FixedSource{}, 0.0, 99};
  CHECK(rqaoa_solve(inst, base).colouring == rqaoa_solve(inst, noisy).colouring);
}

TEST_CASE("trace dump has one JSON object per step plus the terminal line") {
  const auto r = rqaoa_solve(generate_random(6, 4), {});
  std::stringstream ss;
  write_trace_jsonl(r.trace, ss);
  std::string line;
  std::size_t lines = 0;
  while (std::getline(ss, line)) {
    const auto j = nlohmann::json::parse(line);
    if (lines < r.trace.steps.size()) {
      CHECK(j["kind"] == "step");
      CHECK(j["eliminated"] == r.trace.steps[lines].eliminated);
    } else {
      CHECK(j["kind"] == "terminal");
    }
    ++lines;
  }
  CHECK(lines == r.trace.steps.size() + 1);
}
