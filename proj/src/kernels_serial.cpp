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

#include <bit>
#include <cmath>

#include "paintshop/kernels.hpp"

namespace paintshop::kernels::serial {

void apply_rx(std::span<Amplitude> amps, int q, double angle) {
  const std::size_t mask = std::size_t{1} << q;
  const double c = std::cos(angle / 2);
  const Amplitude s{0.0, -std::sin(angle / 2)};
  for (std::size_t idx = 0; idx < amps.size(); ++idx) {
    if (idx & mask) continue;
    const Amplitude a0 = amps[idx];
    const Amplitude a1 = amps[idx | mask];
    amps[idx] = c * a0 + s * a1;
    amps[idx | mask] = s * a0 + c * a1;
  }
}

void apply_rz(std::span<Amplitude> amps, int q, double angle) {
  const std::size_t mask = std::size_t{1} << q;
  const Amplitude p0 = std::polar(1.0, -angle / 2);
  const Amplitude p1 = std::polar(1.0, angle / 2);
  for (std::size_t idx = 0; idx < amps.size(); ++idx) amps[idx] *= (idx & mask) ? p1 : p0;
}

void apply_cnot(std::span<Amplitude> amps, int control, int target) {
  const std::size_t cmask = std::size_t{1} << control;
  const std::size_t tmask = std::size_t{1} << target;
  for (std::size_t idx = 0; idx < amps.size(); ++idx) {
    if ((idx & cmask) && !(idx & tmask)) std::swap(amps[idx], amps[idx | tmask]);
  }
}

double expectation_z(std::span<const Amplitude> amps, int q) {
  const std::size_t mask = std::size_t{1} << q;
  double sum = 0.0;
  for (std::size_t idx = 0; idx < amps.size(); ++idx)
    sum += (idx & mask) ? -std::norm(amps[idx]) : std::norm(amps[idx]);
  return sum;
}

double expectation_zz(std::span<const Amplitude> amps, int i, int j) {
  const std::size_t mask = (std::size_t{1} << i) | (std::size_t{1} << j);
  double sum = 0.0;
  for (std::size_t idx = 0; idx < amps.size(); ++idx) {
    const bool odd = std::popcount(idx & mask) & 1;
    sum += odd ? -std::norm(amps[idx]) : std::norm(amps[idx]);
  }
  return sum;
}

double norm_squared(std::span<const Amplitude> amps) {
  double sum = 0.0;
  for (const auto& a : amps) sum += std::norm(a);
  return sum;
}

}  // namespace paintshop::kernels::serial
