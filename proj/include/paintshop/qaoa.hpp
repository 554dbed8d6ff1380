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

#include <cstdint>
#include <optional>
#include <variant>

#include "paintshop/bpsp.hpp"
#include "paintshop/correlations.hpp"
#include "paintshop/ising.hpp"
#include "paintshop/params.hpp"
#include "paintshop/rng.hpp"

namespace paintshop {

/// Precomputed angles for 4-regular graphs with unit couplings, p = 1..4.
/// Throws unsupported-depth outside that range.
QaoaParams fixed_params(int p);

/// Energy of the depth-p ansatz state. Exact mode returns <H>; shot mode
/// returns the mean sampled energy. With `via_rcc` the energy is assembled
/// from per-edge cone correlations as (1/2) sum J M + C/2.
double evaluate_energy(const IsingGraph& graph, const QaoaParams& params, const EvalMode& mode,
                       bool via_rcc = false);

struct OptimizeResult {
  QaoaParams params;
  double energy = 0.0;
  int evaluations = 0;
};

/// Nelder-Mead over the 2p angles from `initial`, stopping when the simplex
/// spread drops below `tol` or after 500 * 2p objective calls.
OptimizeResult optimize_nelder_mead(const IsingGraph& graph, const QaoaParams& initial,
                                    const EvalMode& mode, double tol = 1e-4,
                                    bool via_rcc = false);

struct QaoaSolution {
  Colouring colouring;
  int colour_changes = 0;
  /// Exact <H> of the ansatz state, kept for diagnostics.
  double expected_energy = 0.0;
};

/// Samples `shots` bitstrings from the full ansatz state and returns the one
/// with the lowest Ising energy (ties: smallest basis index), as a colouring.
QaoaSolution qaoa_solve(const IsingGraph& graph, const BpspInstance& instance,
                        const QaoaParams& params, std::uint64_t shots, std::uint64_t seed);

/// Precomputed angles for the depth, or explicit ones when given.
struct FixedSource {
  std::optional<QaoaParams> params;
};

/// Nelder-Mead from `initial` (the precomputed row when unset).
struct OptimisedSource {
  std::optional<QaoaParams> initial;
  double tol = 1e-4;
};

/// Base angles plus i.i.d. N(0, sigma^2) noise, redrawn for every use index.
struct PerturbedSource {
  std::variant<FixedSource, OptimisedSource> base;
  double sigma = 0.0;
  std::uint64_t seed = 0;
};

using ParamSource = std::variant<FixedSource, OptimisedSource, PerturbedSource>;

/// Adds sigma * N(0, 1) to every angle; sigma = 0 returns `params` unchanged.
QaoaParams perturb(const QaoaParams& params, double sigma, Rng& rng);

struct ResolvedParams {
  QaoaParams params;
  /// Objective calls spent obtaining them (0 for precomputed angles).
  int evaluations = 0;
};

/// Produces angles for one use of a parameter source. `use_index` selects the
/// noise draw for perturbed sources (an RQAOA step, or an instance).
ResolvedParams resolve_params(const ParamSource& source, const IsingGraph& graph, int p,
                              const EvalMode& mode, bool via_rcc, std::uint64_t use_index);

}  // namespace paintshop
