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
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "paintshop/bpsp.hpp"
#include "paintshop/correlations.hpp"

namespace paintshop {

enum class Method {
  greedy,
  recursive_greedy,
  brute_force,
  qaoa_fixed,
  qaoa_optimised,
  qaoa_perturbed,
  rqaoa_fixed,
  rqaoa_optimised,
  rqaoa_perturbed,
};

std::string_view to_string(Method method);
/// Accepts the hyphenated names, e.g. "recursive-greedy"; throws invalid-argument otherwise.
Method parse_method(std::string_view name);
bool is_quantum(Method method);
bool is_perturbed(Method method);

struct ExperimentConfig {
  int n_min = 4;
  int n_max = 10;
  int instances = 20;
  std::vector<int> p_list{1};
  std::uint64_t seed = 0;
  std::vector<Method> methods{Method::greedy, Method::recursive_greedy, Method::brute_force,
                              Method::rqaoa_fixed};
  std::vector<double> sigmas{0.0};
  EvalMode mode = ExactMode{};
  /// Shots drawn for the best-of-shots QAOA colouring.
  std::uint64_t shots = 4096;
  bool via_rcc = false;
  /// Perturbed methods add noise to Nelder-Mead optima rather than the fixed angles.
  bool perturb_optimised = true;
  /// Fill the wall_time column; off by default so output is reproducible byte for byte.
  bool timing = false;
  std::vector<double> cutoffs{0.0, 0.005, 0.0075, 0.01};

  void validate() const;
};

struct InstanceRef {
  int id;
  int n;
  BpspInstance instance;
};

/// Instances for every size in the range, seeded independently per (n, id).
std::vector<InstanceRef> make_instances(const ExperimentConfig& config);

/// (worst - value) / (worst - best); degenerate-range when worst == best.
double approximation_measure(double worst, double best, double value);

struct ResultRow {
  int instance_id = 0;
  int n = 0;
  Method method = Method::greedy;
  int p = 0;  // 0 for classical methods
  std::optional<double> sigma;
  /// Colour changes; for QAOA methods the expected (or mean sampled) energy.
  double delta_c = 0.0;
  double measure = 0.0;
  /// Measure against the uniform-random baseline C/2 instead of the maximum.
  double measure_vs_random = 0.0;
  /// Best colour-change count among the sampled QAOA bitstrings.
  std::optional<int> sampled_best;
  std::uint64_t circuits = 0;
  int evaluations = 0;
  std::optional<double> wall_time;
  std::string error;
};

std::vector<ResultRow> run_method_comparison(const ExperimentConfig& config);

/// The comparison restricted to perturbed methods (both QAOA and RQAOA when
/// the config names neither), over every sigma.
std::vector<ResultRow> run_sigma_sweep(const ExperimentConfig& config);

struct SummaryRow {
  int n = 0;
  Method method = Method::greedy;
  int p = 0;
  std::optional<double> sigma;
  int count = 0;
  double mean_measure = 0.0;
  double stderr_measure = 0.0;
  double mean_measure_vs_random = 0.0;
  double mean_delta_c = 0.0;
  double stderr_delta_c = 0.0;
};

/// Mean and standard error (sample stddev / sqrt(count)) per (n, method, p, sigma);
/// rows carrying an error are skipped.
std::vector<SummaryRow> aggregate(const std::vector<ResultRow>& rows);

enum class CircuitKind { full, rcc, rcc_trimmed };
std::string_view to_string(CircuitKind kind);

inline constexpr int kTrimmedMpsMaxRemoved = 10;

struct ResourceRow {
  int instance_id = 0;
  int n = 0;
  int p = 0;
  CircuitKind kind = CircuitKind::full;
  std::optional<NodePair> edge;
  std::uint64_t circuits = 1;
  int cnot_count = 0;
  int cnot_depth = 0;
  int qubit_count = 0;
  double cutoff = 0.0;
  /// Unset when the trimmed family is too large to simulate circuit by circuit.
  std::optional<double> max_entropy_bits;
  std::optional<int> max_bond_dim;
  std::optional<double> excluded_probability;
};

std::vector<ResourceRow> run_resource_report(const ExperimentConfig& config);

struct ResourceSummary {
  int n = 0;
  int p = 0;
  CircuitKind kind = CircuitKind::full;
  double cutoff = 0.0;
  int instances = 0;
  /// Per instance the maximum over the kind's circuits, then averaged.
  double mean_cnot_count = 0.0;
  double mean_cnot_depth = 0.0;
  double mean_qubit_count = 0.0;
  double mean_max_entropy_bits = 0.0;
  double mean_max_bond_dim = 0.0;
  double mean_excluded_probability = 0.0;
};

std::vector<ResourceSummary> summarise_resources(const std::vector<ResourceRow>& rows);

struct CountRow {
  int instance_id = 0;
  int n = 0;
  Method method = Method::qaoa_fixed;
  int p = 1;
  std::optional<double> sigma;
  int steps = 0;
  std::uint64_t sum_edges = 0;
  std::uint64_t full = 0;
  std::uint64_t rcc_untrimmed = 0;
  std::uint64_t rcc_trimmed = 0;
  int evaluations = 0;
};

std::vector<CountRow> run_circuit_count_report(const ExperimentConfig& config);

/// Column-oriented view shared by the CSV and JSON writers.
struct Table {
  using Cell = std::variant<std::monostate, std::int64_t, std::uint64_t, double, std::string>;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

Table to_table(const std::vector<ResultRow>& rows);
Table to_table(const std::vector<SummaryRow>& rows);
Table to_table(const std::vector<ResourceRow>& rows);
Table to_table(const std::vector<ResourceSummary>& rows);
Table to_table(const std::vector<CountRow>& rows);

void write_csv(std::ostream& out, const Table& table);
nlohmann::json to_json(const Table& table);

}  // namespace paintshop
