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

#include "helpers.hpp"
#include "paintshop/bpsp.hpp"
#include "paintshop/error.hpp"

using namespace paintshop;
using testing_support::seq_of;

namespace {

std::vector<int> bits(const Colouring& c) {
  std::vector<int> out;
  for (Colour x : c) out.push_back(x == Colour::blue);
  return out;
}

}  // namespace

TEST_CASE("instance validation") {
  CHECK_NOTHROW(BpspInstance(2, {0, 1, 0, 1}));
  CHECK_THROWS_AS(BpspInstance(2, {0, 1, 0}), Error);
  CHECK_THROWS_AS(BpspInstance(2, {0, 0, 0, 1}), Error);
  CHECK_THROWS_AS(BpspInstance(2, {0, 2, 0, 1}), Error);
  CHECK_THROWS_AS(BpspInstance(0, {}), Error);
  try {
    BpspInstance(2, {0, 1, 1, 1});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::invalid_argument);
  }
}

TEST_CASE("partner and first-occurrence bookkeeping") {
  const BpspInstance inst(3, {2, 0, 2, 1, 0, 1});
  CHECK(inst.is_first(0));
  CHECK_FALSE(inst.is_first(2));
  CHECK(inst.partner(0) == 2);
  CHECK(inst.partner(4) == 1);
  CHECK(inst.first_position(1) == 3);
}

TEST_CASE("random instances are valid permutations and reproducible") {
  for (int n = 1; n <= 30; ++n) {
    const auto a = generate_random(n, 100 + n);
    CHECK(a == generate_random(n, 100 + n));
    CHECK(a.n_bodies() == n);
  }
  CHECK_THROWS_AS(generate_random(0, 1), Error);
}

TEST_CASE("colouring validation rejects shared colours") {
  const BpspInstance inst(2, {0, 1, 0, 1});
  using enum Colour;
  CHECK_NOTHROW(validate_colouring(inst, {red, red, blue, blue}));
  CHECK_THROWS_AS(validate_colouring(inst, {red, red, red, blue}), Error);
  CHECK_THROWS_AS(validate_colouring(inst, {red, blue, blue}), Error);
  try {
    colour_changes(inst, {red, red, red, blue});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::constraint_violation);
  }
  CHECK(colour_changes(inst, {red, blue, blue, red}) == 2);
}

TEST_CASE("greedy matches a literal trace of the rule") {
  const BpspInstance small(2, {0, 1, 0, 1});
  CHECK(bits(greedy_solve(small)) == std::vector<int>{0, 0, 1, 1});
  CHECK(colour_changes(small, greedy_solve(small)) == 1);
  for (int n = 1; n <= 40; ++n) {
    const auto inst = generate_random(n, 7 * n);
    const auto g = greedy_solve(inst);
    CHECK(bits(g) == oracle::greedy_trace(seq_of(inst)));
  }
}

TEST_CASE("worked example") {
  const BpspInstance inst(4, {1, 0, 1, 3, 2, 3, 0, 2});
  CHECK(colour_changes(inst, greedy_solve(inst)) == 4);
  CHECK(colour_changes(inst, recursive_greedy_solve(inst)) == 3);
  CHECK(oracle::min_changes(seq_of(inst)) == 2);
}

TEST_CASE("recursive greedy on a nested pair") {
  // R R B B is valid with a single change.
  const BpspInstance inst(2, {0, 1, 1, 0});
  CHECK(colour_changes(inst, recursive_greedy_solve(inst)) == 1);
}

TEST_CASE("heuristics are valid and bounded by the optimum") {
  for (int n = 1; n <= 10; ++n)
    for (int k = 0; k < 5; ++k) {
      const auto inst = generate_random(n, 1000 * n + k);
      const int best = oracle::min_changes(seq_of(inst));
      const auto g = greedy_solve(inst);
      const auto r = recursive_greedy_solve(inst);
      CHECK_NOTHROW(validate_colouring(inst, g));
      CHECK_NOTHROW(validate_colouring(inst, r));
      CHECK(colour_changes(inst, g) >= best);
      CHECK(colour_changes(inst, r) >= best);
      CHECK(colour_changes(inst, g) <= 2 * n - 1);
    }
}
