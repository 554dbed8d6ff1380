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
#include <cstdint>
#include <vector>

#include "paintshop/kernels.hpp"

namespace paintshop::kernels::omp {

namespace {

bool parallel_for(std::size_t dim) { return dim >= (std::size_t{1} << kMinParallelQubits); }

// Index of the k-th basis state whose bit q is zero.
inline std::size_t insert_zero(std::size_t k, int q) {
  const std::size_t low = k & ((std::size_t{1} << q) - 1);
  return ((k >> q) << (q + 1)) | low;
}

template <class Term>
double blocked_sum(std::size_t dim, Term term) {
  const std::size_t blocks = (dim + kReductionBlock - 1) / kReductionBlock;
  std::vector<double> partial(blocks, 0.0);
  const auto nb = static_cast<std::int64_t>(blocks);
#pragma omp parallel for schedule(static) if (parallel_for(dim))
  for (std::int64_t b = 0; b < nb; ++b) {
    const std::size_t begin = static_cast<std::size_t>(b) * kReductionBlock;
    const std::size_t end = std::min(dim, begin + kReductionBlock);
    double s = 0.0;
    for (std::size_t idx = begin; idx < end; ++idx) s += term(idx);
    partial[b] = s;
  }
  double total = 0.0;
  for (double s : partial) total += s;
  return total;
}

}  // namespace

void apply_rx(std::span<Amplitude> amps, int q, double angle) {
  const std::size_t mask = std::size_t{1} << q;
  const double c = std::cos(angle / 2);
  const Amplitude s{0.0, -std::sin(angle / 2)};
  const auto half = static_cast<std::int64_t>(amps.size() / 2);
  Amplitude* data = amps.data();
#pragma omp parallel for schedule(static) if (parallel_for(amps.size()))
  for (std::int64_t k = 0; k < half; ++k) {
    const std::size_t i0 = insert_zero(static_cast<std::size_t>(k), q);
    const std::size_t i1 = i0 | mask;
    const Amplitude a0 = data[i0];
    const Amplitude a1 = data[i1];
    data[i0] = c * a0 + s * a1;
    data[i1] = s * a0 + c * a1;
  }
}

void apply_rz(std::span<Amplitude> amps, int q, double angle) {
  const std::size_t mask = std::size_t{1} << q;
  const Amplitude p0 = std::polar(1.0, -angle / 2);
  const Amplitude p1 = std::polar(1.0, angle / 2);
  const auto dim = static_cast<std::int64_t>(amps.size());
  Amplitude* data = amps.data();
#pragma omp parallel for schedule(static) if (parallel_for(amps.size()))
  for (std::int64_t idx = 0; idx < dim; ++idx)
    data[idx] *= (static_cast<std::size_t>(idx) & mask) ? p1 : p0;
}

void apply_cnot(std::span<Amplitude> amps, int control, int target) {
  const std::size_t cmask = std::size_t{1} << control;
  const std::size_t tmask = std::size_t{1} << target;
  const auto half = static_cast<std::int64_t>(amps.size() / 2);
  Amplitude* data = amps.data();
#pragma omp parallel for schedule(static) if (parallel_for(amps.size()))
  for (std::int64_t k = 0; k < half; ++k) {
    const std::size_t i0 = insert_zero(static_cast<std::size_t>(k), target);
    if (i0 & cmask) std::swap(data[i0], data[i0 | tmask]);
  }
}

double expectation_z(std::span<const Amplitude> amps, int q) {
  const std::size_t mask = std::size_t{1} << q;
  return blocked_sum(amps.size(), [&](std::size_t idx) {
    return (idx & mask) ? -std::norm(amps[idx]) : std::norm(amps[idx]);
  });
}

double expectation_zz(std::span<const Amplitude> amps, int i, int j) {
  const std::size_t mask = (std::size_t{1} << i) | (std::size_t{1} << j);
  return blocked_sum(amps.size(), [&](std::size_t idx) {
    return (std::popcount(idx & mask) & 1) ? -std::norm(amps[idx]) : std::norm(amps[idx]);
  });
}

double norm_squared(std::span<const Amplitude> amps) {
  return blocked_sum(amps.size(), [&](std::size_t idx) { return std::norm(amps[idx]); });
}

}  // namespace paintshop::kernels::omp
