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
#include <numbers>

#include "helpers.hpp"
#include "paintshop/circuit.hpp"
#include "paintshop/error.hpp"
#include "paintshop/kernels.hpp"
#include "paintshop/qaoa.hpp"
#include "paintshop/rng.hpp"
#include "paintshop/statevector.hpp"

using namespace paintshop;
using testing_support::dense;
using testing_support::to_eigen;

namespace {

std::vector<Amplitude> random_state(int n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Amplitude> a(std::size_t{1} << n);
  double norm = 0.0;
  for (auto& x : a) {
    x = {rng.normal(), rng.normal()};
    norm += std::norm(x);
  }
  for (auto& x : a) x /= std::sqrt(norm);
  return a;
}

double max_diff(const std::vector<Amplitude>& a, const std::vector<Amplitude>& b) {
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

}  // namespace

TEST_CASE("serial and parallel kernels agree") {
  for (int n : {3, 15, 16}) {
    auto a = random_state(n, 10 + n);
    auto b = a;
    Rng rng(n);
    for (int t = 0; t < 30; ++t) {
      const int q = static_cast<int>(rng.below(n));
      const int r = static_cast<int>((q + 1 + rng.below(n - 1)) % n);
      const double angle = rng.normal();
      switch (t % 3) {
        case 0:
          kernels::serial::apply_rx(a, q, angle);
          kernels::omp::apply_rx(b, q, angle);
          break;
        case 1:
          kernels::serial::apply_rz(a, q, angle);
          kernels::omp::apply_rz(b, q, angle);
          break;
        default:
          kernels::serial::apply_cnot(a, q, r);
          kernels::omp::apply_cnot(b, q, r);
      }
    }
    CHECK(max_diff(a, b) < 1e-14);
    CHECK(kernels::serial::norm_squared(a) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(kernels::omp::norm_squared(b) == doctest::Approx(kernels::serial::norm_squared(a)).epsilon(1e-13));
    CHECK(kernels::omp::expectation_z(b, 1) ==
          doctest::Approx(kernels::serial::expectation_z(a, 1)).epsilon(1e-12));
    CHECK(kernels::omp::expectation_zz(b, 0, n - 1) ==
          doctest::Approx(kernels::serial::expectation_zz(a, 0, n - 1)).epsilon(1e-12));
  }
}

TEST_CASE("single-qubit rotations follow the half-angle convention") {
  auto s = Statevector::from_amplitudes({1.0, 0.0});
  s.apply(Gate::rx(0, std::numbers::pi, {}));
  CHECK(std::abs(s.amplitudes()[1] - Amplitude(0, -1)) < 1e-14);
  auto z = Statevector::plus_state(1);
  z.apply(Gate::rz(0, std::numbers::pi / 2, {}));
  const Amplitude ratio = z.amplitudes()[1] / z.amplitudes()[0];
  CHECK(std::abs(ratio - Amplitude(0, 1)) < 1e-14);
}

TEST_CASE("CNOT uses bit q for qubit q") {
  auto s = Statevector::from_amplitudes({0, 1, 0, 0});  // qubit 0 set
  s.apply(Gate::cnot(0, 1, {}));
  CHECK(std::abs(s.amplitudes()[3] - Amplitude(1, 0)) < 1e-15);
}

TEST_CASE("ansatz state matches the dense oracle") {
  for (int p = 1; p <= 3; ++p)
    for (int n = 2; n <= 8; n += 3) {
      const auto g = map_bpsp(generate_random(n, 5 * p + n));
      const auto params = fixed_params(p);
      const auto psi = to_eigen(simulate(build_qaoa_circuit(g, params)));
      const auto ref = oracle::qaoa_state(dense(g), params.betas, params.gammas);
      CHECK(oracle::overlap(psi, ref) == doctest::Approx(1.0).epsilon(1e-10));
      const auto st = simulate(build_qaoa_circuit(g, params));
      CHECK(energy_expectation(g, st) == doctest::Approx(oracle::energy(dense(g), ref)).epsilon(1e-10));
      for (const auto& e : g.edge_list())
        CHECK(expectation_zz(st, e.i, e.j) == doctest::Approx(oracle::zz(ref, e.i, e.j)).epsilon(1e-10));
    }
}

TEST_CASE("fields enter the phase operator") {
  IsingGraph g(3, 2);
  g.add_coupling(0, 2, -1);
  g.add_field(1, 2);
  g.add_field(2, -1);
  const QaoaParams params{{0.3, -0.2}, {0.7, 0.4}};
  const auto psi = to_eigen(simulate(build_qaoa_circuit(g, params)));
  const auto ref = oracle::qaoa_state(dense(g), params.betas, params.gammas);
  CHECK(oracle::overlap(psi, ref) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("serial and parallel simulation give identical observables") {
  const auto g = map_bpsp(generate_random(16, 2));
  const auto c = build_qaoa_circuit(g, fixed_params(2));
  const auto a = simulate(c, Exec::serial);
  const auto b = simulate(c, Exec::parallel);
  double d = 0.0;
  for (std::size_t k = 0; k < a.amplitudes().size(); ++k)
    d = std::max(d, std::abs(a.amplitudes()[k] - b.amplitudes()[k]));
  CHECK(d < 1e-14);
  CHECK(energy_expectation(g, a) == doctest::Approx(energy_expectation(g, b)).epsilon(1e-13));
}

TEST_CASE("zero angles leave the uniform superposition") {
  const auto g = map_bpsp(generate_random(6, 1));
  const auto st = simulate(build_qaoa_circuit(g, QaoaParams{{0.0}, {0.0}}));
  for (const auto& e : g.edge_list()) CHECK(std::abs(expectation_zz(st, e.i, e.j)) < 1e-14);
  CHECK(energy_expectation(g, st) == doctest::Approx(0.5 * g.offset_numerator()));
}

TEST_CASE("sampling is seeded and converges") {
  const auto g = map_bpsp(generate_random(5, 3));
  const auto st = simulate(build_qaoa_circuit(g, fixed_params(1)));
  const auto a = sample(st, 4096, 99);
  const auto b = sample(st, 4096, 99);
  CHECK(a.counts == b.counts);
  CHECK(a.total == 4096);
  const auto big = sample(st, 400000, 1);
  for (const auto& e : g.edge_list())
    CHECK(std::abs(estimate_zz(big, e.i, e.j) - expectation_zz(st, e.i, e.j)) < 0.01);
  for (const auto& [idx, hits] : a.counts) CHECK(st.probability(idx) > 0.0);
  CHECK_THROWS_AS(sample(st, 0, 1), Error);
}

TEST_CASE("statevector guards") {
  CHECK_THROWS_AS(Statevector::plus_state(kMaxStatevectorQubits + 1), Error);
  CHECK_THROWS_AS(Statevector::from_amplitudes({1, 0, 0}), Error);
  const auto st = Statevector::plus_state(3);
  CHECK_THROWS_AS(expectation_zz(st, 1, 1), Error);
  CHECK_THROWS_AS(expectation_zz(st, 0, 3), Error);
  CHECK(spins_of(5, 3) == SpinConfig{-1, 1, -1});
}
