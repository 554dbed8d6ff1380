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

#include <cmath>

#include "paintshop/error.hpp"
#include "paintshop/nelder_mead.hpp"

using namespace paintshop;

TEST_CASE("quadratic bowl converges to its minimum") {
  int calls = 0;
  auto f = [&](std::span<const double> x) {
    ++calls;
    return (x[0] - 1.0) * (x[0] - 1.0) + 4.0 * (x[1] + 2.0) * (x[1] + 2.0);
  };
  const auto r = nelder_mead(f, {0.0, 0.0}, {.xatol = 1e-8, .max_evaluations = 5000});
  CHECK(r.converged);
  CHECK(r.x[0] == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(r.x[1] == doctest::Approx(-2.0).epsilon(1e-6));
  CHECK(r.evaluations == calls);
}

TEST_CASE("Rosenbrock valley") {
  auto f = [](std::span<const double> x) {
    return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
  };
  const auto r = nelder_mead(f, {-1.2, 1.0}, {.xatol = 1e-10, .max_evaluations = 10000});
  CHECK(r.value < 1e-12);
  CHECK(r.x[0] == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("evaluation cap is respected exactly") {
  int calls = 0;
  auto f = [&](std::span<const double> x) {
    ++calls;
    return std::sin(10 * x[0]) + x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
  };
  for (int cap : {1, 2, 3, 7, 50}) {
    calls = 0;
    const auto r = nelder_mead(f, {0.5, 0.5, 0.5}, {.xatol = 1e-14, .max_evaluations = cap});
    CHECK(r.evaluations == cap);
    CHECK(calls == cap);
    CHECK_FALSE(r.converged);
  }
}

TEST_CASE("result never exceeds the starting value") {
  auto f = [](std::span<const double> x) { return std::abs(x[0]) + std::abs(x[1] - 0.3); };
  const std::vector<double> x0{0.0, 0.3};
  const auto r = nelder_mead(f, x0);
  CHECK(r.value <= f(x0));
}

TEST_CASE("initial simplex uses the configured step") {
  std::vector<std::vector<double>> seen;
  auto f = [&](std::span<const double> x) {
    seen.emplace_back(x.begin(), x.end());
    return x[0] + x[1];
  };
  nelder_mead(f, {1.0, 2.0}, {.xatol = 1e-3, .max_evaluations = 3, .initial_step = 0.1});
  REQUIRE(seen.size() == 3);
  CHECK(seen[1] == std::vector<double>{1.1, 2.0});
  CHECK(seen[2] == std::vector<double>{1.0, 2.1});
}

TEST_CASE("argument checks") {
  auto f = [](std::span<const double>) { return 0.0; };
  CHECK_THROWS_AS(nelder_mead(f, {}), Error);
  CHECK_THROWS_AS(nelder_mead(f, {1.0}, {.xatol = 0.0}), Error);
  CHECK_THROWS_AS(nelder_mead(f, {1.0}, {.xatol = 1e-4, .max_evaluations = 0}), Error);
}
