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

#include "paintshop/qaoa.hpp"

#include <fmt/format.h>

#include <limits>

#include "paintshop/circuit.hpp"
#include "paintshop/error.hpp"
#include "paintshop/nelder_mead.hpp"
#include "paintshop/statevector.hpp"

namespace paintshop {

QaoaParams fixed_params(int p) {
  switch (p) {
    case 1: return {{-0.39269}, {0.52358}};
    case 2: return {{-0.53411, -0.28296}, {0.40784, 0.73974}};
    case 3: return {{-0.58794, -0.42318, -0.22301}, {0.35450, 0.65138, 0.75426}};
    case 4:
      return {{-0.60498, -0.47780, -0.36127, -0.18753}, {0.31500, 0.58754, 0.67322, 0.77120}};
    default:
      throw Error(ErrorKind::unsupported_depth,
                  fmt::format("no precomputed parameters for p = {} (available: 1..4)", p));
  }
}

namespace {

std::int64_t twice_energy_of_index(const std::vector<Edge>& edges, std::span<const std::int64_t> h,
                                   std::int64_t c, std::uint64_t index) {
  auto spin = [&](int q) -> std::int64_t { return ((index >> q) & 1U) ? -1 : 1; };
  std::int64_t e = c;
  for (const auto& edge : edges) e += edge.weight * spin(edge.i) * spin(edge.j);
  for (std::size_t q = 0; q < h.size(); ++q) e += h[q] * spin(static_cast<int>(q));
  return e;
}

}  // namespace

double evaluate_energy(const IsingGraph& graph, const QaoaParams& params, const EvalMode& mode,
                       bool via_rcc) {
  params.validate();
  const double offset = 0.5 * static_cast<double>(graph.offset_numerator());
  if (via_rcc) {
    if (graph.has_fields())
      throw Error(ErrorKind::invalid_argument, "cone energy assembly supports couplings only");
    double sum = 0.0;
    for (const auto& [edge, m] : correlations_all_edges(graph, params, mode, true))
      sum += static_cast<double>(graph.coupling(edge.first, edge.second)) * m;
    return 0.5 * sum + offset;
  }
  const Statevector state = simulate(build_qaoa_circuit(graph, params));
  if (std::holds_alternative<ExactMode>(mode)) return energy_expectation(graph, state);

  const auto& shots = std::get<ShotMode>(mode);
  const ShotCounts counts = sample(state, shots.shots, derive_seed(shots.seed, Stream::shots));
  const auto edges = graph.edge_list();
  double total = 0.0;
  for (const auto& [idx, hits] : counts.counts)
    total += static_cast<double>(hits) *
             static_cast<double>(
                 twice_energy_of_index(edges, graph.fields(), graph.offset_numerator(), idx));
  return 0.5 * total / static_cast<double>(counts.total);
}

OptimizeResult optimize_nelder_mead(const IsingGraph& graph, const QaoaParams& initial,
                                    const EvalMode& mode, double tol, bool via_rcc) {
  initial.validate();
  if (!(tol > 0.0)) throw Error(ErrorKind::invalid_argument, "tolerance must be positive");
  NelderMeadOptions options;
  options.xatol = tol;
  options.max_evaluations = 500 * 2 * initial.depth();
  auto objective = [&](std::span<const double> x) {
    return evaluate_energy(graph, QaoaParams::unpack(x), mode, via_rcc);
  };
  const auto r = nelder_mead(objective, initial.packed(), options);
  return {QaoaParams::unpack(r.x), r.value, r.evaluations};
}

QaoaSolution qaoa_solve(const IsingGraph& graph, const BpspInstance& instance,
                        const QaoaParams& params, std::uint64_t shots, std::uint64_t seed) {
  if (graph.n_nodes() != instance.n_bodies())
    throw Error(ErrorKind::invalid_argument, "graph and instance sizes differ");
  const Statevector state = simulate(build_qaoa_circuit(graph, params));
  const ShotCounts counts = sample(state, shots, seed);
  const auto edges = graph.edge_list();
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::uint64_t best_index = 0;
  for (const auto& [idx, hits] : counts.counts) {
    const auto e = twice_energy_of_index(edges, graph.fields(), graph.offset_numerator(), idx);
    if (e < best) {
      best = e;
      best_index = idx;
    }
  }
  QaoaSolution out;
  out.colouring = spins_to_colouring(instance, spins_of(best_index, graph.n_nodes()));
  out.colour_changes = colour_changes(instance, out.colouring);
  out.expected_energy = energy_expectation(graph, state);
  return out;
}

QaoaParams perturb(const QaoaParams& params, double sigma, Rng& rng) {
  if (!(sigma >= 0.0)) throw Error(ErrorKind::invalid_argument, "sigma must be non-negative");
  QaoaParams out = params;
  for (double& b : out.betas) b += sigma * rng.normal();
  for (double& g : out.gammas) g += sigma * rng.normal();
  return out;
}

namespace {

ResolvedParams resolve_base(const std::variant<FixedSource, OptimisedSource>& base,
                            const IsingGraph& graph, int p, const EvalMode& mode, bool via_rcc) {
  if (const auto* fixed = std::get_if<FixedSource>(&base)) {
    if (!fixed->params) return {fixed_params(p), 0};
    fixed->params->validate();
    if (fixed->params->depth() != p)
      throw Error(ErrorKind::invalid_argument, "explicit parameters have the wrong depth");
    return {*fixed->params, 0};
  }
  const auto& opt = std::get<OptimisedSource>(base);
  const QaoaParams start = opt.initial ? *opt.initial : fixed_params(p);
  if (start.depth() != p)
    throw Error(ErrorKind::invalid_argument, "initial parameters have the wrong depth");
  if (graph.n_edges() == 0) return {start, 0};
  const auto r = optimize_nelder_mead(graph, start, mode, opt.tol, via_rcc);
  return {r.params, r.evaluations};
}

}  // namespace

ResolvedParams resolve_params(const ParamSource& source, const IsingGraph& graph, int p,
                              const EvalMode& mode, bool via_rcc, std::uint64_t use_index) {
  return std::visit(
      [&](const auto& s) -> ResolvedParams {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PerturbedSource>) {
          ResolvedParams r = resolve_base(s.base, graph, p, mode, via_rcc);
          Rng rng(derive_seed(s.seed, Stream::perturbation, use_index));
          r.params = perturb(r.params, s.sigma, rng);
          return r;
        } else {
          return resolve_base(s, graph, p, mode, via_rcc);
        }
      },
      source);
}

}  // namespace paintshop
