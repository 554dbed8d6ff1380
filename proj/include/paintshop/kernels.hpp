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

#include <complex>
#include <span>

namespace paintshop::kernels {

using Amplitude = std::complex<double>;

// Basis index bit q holds qubit q. Rotation conventions:
// RX(a) = exp(-i a X / 2), RZ(a) = exp(-i a Z / 2).

/// Straightforward loops; the reference the OpenMP kernels are tested against.
namespace serial {
void apply_rx(std::span<Amplitude> amps, int q, double angle);
void apply_rz(std::span<Amplitude> amps, int q, double angle);
void apply_cnot(std::span<Amplitude> amps, int control, int target);
double expectation_z(std::span<const Amplitude> amps, int q);
double expectation_zz(std::span<const Amplitude> amps, int i, int j);
double norm_squared(std::span<const Amplitude> amps);
}  // namespace serial

/// OpenMP kernels. Gate updates touch disjoint amplitude pairs per iteration.
/// Reductions sum fixed-size blocks in parallel and combine the block partials
/// in index order, so results do not depend on the thread count.
namespace omp {
inline constexpr int kMinParallelQubits = 14;
inline constexpr std::size_t kReductionBlock = std::size_t{1} << 12;

void apply_rx(std::span<Amplitude> amps, int q, double angle);
void apply_rz(std::span<Amplitude> amps, int q, double angle);
void apply_cnot(std::span<Amplitude> amps, int control, int target);
double expectation_z(std::span<const Amplitude> amps, int q);
double expectation_zz(std::span<const Amplitude> amps, int i, int j);
double norm_squared(std::span<const Amplitude> amps);
}  // namespace omp

}  // namespace paintshop::kernels
