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

#include "paintshop/experiments.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <map>
#include <ostream>
#include <tuple>

#include "paintshop/circuit.hpp"
#include "paintshop/error.hpp"
#include "paintshop/ising.hpp"
#include "paintshop/mps.hpp"
#include "paintshop/qaoa.hpp"
#include "paintshop/rqaoa.hpp"

namespace paintshop {

namespace {

struct MethodName {
  Method method;
  std::string_view name;
};

constexpr MethodName kMethodNames[] = {
    {Method::greedy, "greedy"},
    {Method::recursive_greedy, "recursive-greedy"},
    {Method::brute_force, "brute-force"},
    {Method::qaoa_fixed, "qaoa-fixed"},
    {Method::qaoa_optimised, "qaoa-optimised"},
    {Method::qaoa_perturbed, "qaoa-perturbed"},
    {Method::rqaoa_fixed, "rqaoa-fixed"},
    {Method::rqaoa_optimised, "rqaoa-optimised"},
    {Method::rqaoa_perturbed, "rqaoa-perturbed"},
};

}  // namespace

std::string_view to_string(Method method) {
  for (const auto& m : kMethodNames)
    if (m.method == method) return m.name;
  return "unknown";
}

Method parse_method(std::string_view name) {
  for (const auto& m : kMethodNames)
    if (m.name == name) return m.method;
  throw Error(ErrorKind::invalid_argument, fmt::format("unknown method '{}'", name));
}

bool is_quantum(Method method) {
  return method != Method::greedy && method != Method::recursive_greedy &&
         method != Method::brute_force;
}

bool is_perturbed(Method method) {
  return method == Method::qaoa_perturbed || method == Method::rqaoa_perturbed;
}

void ExperimentConfig::validate() const {
  if (n_min < 1 || n_max < n_min)
    throw Error(ErrorKind::invalid_argument, fmt::format("bad body range {}..{}", n_min, n_max));
  if (instances < 1) throw Error(ErrorKind::invalid_argument, "instances must be >= 1");
  if (methods.empty()) throw Error(ErrorKind::invalid_argument, "no methods given");
  if (p_list.empty()) throw Error(ErrorKind::invalid_argument, "no depths given");
  for (int p : p_list)
    if (p < 1) throw Error(ErrorKind::invalid_argument, "p must be >= 1");
  for (double s : sigmas)
    if (!(s >= 0.0)) throw Error(ErrorKind::invalid_argument, "sigma must be >= 0");
  for (double c : cutoffs)
    if (!(c >= 0.0)) throw Error(ErrorKind::invalid_argument, "cutoff must be >= 0");
  if (shots < 1) throw Error(ErrorKind::invalid_argument, "shots must be >= 1");
}

namespace {

std::uint64_t instance_key(int n, int id) {
  return (static_cast<std::uint64_t>(n) << 32) | static_cast<std::uint32_t>(id);
}

/// Runs `body(i)` for every index in parallel, returning results in index order.
template <typename T, typename F>
std::vector<T> parallel_map(std::size_t count, F body) {
  std::vector<T> out(count);
  std::vector<std::exception_ptr> errors(count);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < count; ++i) {
    try {
      out[i] = body(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

template <typename T>
std::vector<T> flatten(std::vector<std::vector<T>> parts) {
  std::vector<T> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

double measure_or_one(double worst, double best, double value) {
  if (worst == best) return 1.0;
  return approximation_measure(worst, best, value);
}

}  // namespace

std::vector<InstanceRef> make_instances(const ExperimentConfig& config) {
  config.validate();
  std::vector<InstanceRef> out;
  for (int n = config.n_min; n <= config.n_max; ++n)
    for (int id = 0; id < config.instances; ++id)
      out.push_back(
          {id, n, generate_random(n, derive_seed(config.seed, Stream::instance, instance_key(n, id)))});
  return out;
}

double approximation_measure(double worst, double best, double value) {
  if (worst == best)
    throw Error(ErrorKind::degenerate_range, "worst and best values coincide");
  return (worst - value) / (worst - best);
}

namespace {

struct Job {
  Method method;
  int p;
  std::optional<double> sigma;
};

std::vector<Job> jobs_for(const ExperimentConfig& config) {
  std::vector<Job> jobs;
  for (Method m : config.methods) {
    if (!is_quantum(m)) {
      jobs.push_back({m, 0, std::nullopt});
      continue;
    }
    for (int p : config.p_list) {
      if (is_perturbed(m))
        for (double s : config.sigmas) jobs.push_back({m, p, s});
      else
        jobs.push_back({m, p, std::nullopt});
    }
  }
  return jobs;
}

EvalMode mode_for_instance(const ExperimentConfig& config, std::uint64_t key) {
  if (const auto* s = std::get_if<ShotMode>(&config.mode))
    return ShotMode{s->shots, derive_seed(s->seed ^ config.seed, Stream::shots, key)};
  return config.mode;
}

ParamSource source_for(const ExperimentConfig& config, const Job& job, std::uint64_t key) {
  switch (job.method) {
    case Method::qaoa_optimised:
    case Method::rqaoa_optimised: return OptimisedSource{};
    case Method::qaoa_perturbed:
    case Method::rqaoa_perturbed: {
      PerturbedSource s;
      if (config.perturb_optimised)
        s.base = OptimisedSource{};
      else
        s.base = FixedSource{};
      s.sigma = *job.sigma;
      s.seed = derive_seed(config.seed, Stream::perturbation, key);
      return s;
    }
    default: return FixedSource{};
  }
}

ResultRow run_job(const ExperimentConfig& config, const InstanceRef& ref, const IsingGraph& graph,
                  const Extremes& ext, const Job& job) {
  ResultRow row;
  row.instance_id = ref.id;
  row.n = ref.n;
  row.method = job.method;
  row.p = job.p;
  row.sigma = job.sigma;

  const auto key = instance_key(ref.n, ref.id);
  const auto start = std::chrono::steady_clock::now();
  try {
    const EvalMode mode = mode_for_instance(config, key);
    switch (job.method) {
      case Method::greedy:
        row.delta_c = colour_changes(ref.instance, greedy_solve(ref.instance));
        break;
      case Method::recursive_greedy:
        row.delta_c = colour_changes(ref.instance, recursive_greedy_solve(ref.instance));
        break;
      case Method::brute_force: row.delta_c = ext.min.energy.value(); break;
      case Method::qaoa_fixed:
      case Method::qaoa_optimised:
      case Method::qaoa_perturbed: {
        const ResolvedParams r =
            resolve_params(source_for(config, job, key), graph, job.p, mode, config.via_rcc, 0);
        row.delta_c = evaluate_energy(graph, r.params, mode, config.via_rcc);
        row.sampled_best =
            qaoa_solve(graph, ref.instance, r.params, config.shots,
                       derive_seed(config.seed, Stream::shots, key))
                .colour_changes;
        row.evaluations = r.evaluations;
        row.circuits = static_cast<std::uint64_t>(std::max(1, r.evaluations));
        break;
      }
      case Method::rqaoa_fixed:
      case Method::rqaoa_optimised:
      case Method::rqaoa_perturbed: {
        RqaoaOptions options;
        options.p = job.p;
        options.source = source_for(config, job, key);
        options.mode = mode;
        options.via_rcc = config.via_rcc;
        const RqaoaResult r = rqaoa_solve(ref.instance, options);
        row.delta_c = r.colour_changes;
        for (const auto& s : r.trace.steps) row.evaluations += s.evaluations;
        row.circuits = circuit_count(
            r.trace, config.via_rcc ? CircuitAccounting::rcc_trimmed : CircuitAccounting::full);
        break;
      }
    }
    const double worst = ext.max.energy.value();
    const double best = ext.min.energy.value();
    row.measure = measure_or_one(worst, best, row.delta_c);
    row.measure_vs_random = measure_or_one(
        0.5 * static_cast<double>(graph.offset_numerator()), best, row.delta_c);
  } catch (const Error& e) {
    row.error = e.what();
    row.delta_c = std::nan("");
    row.measure = std::nan("");
    row.measure_vs_random = std::nan("");
  }
  if (config.timing)
    row.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return row;
}

}  // namespace

std::vector<ResultRow> run_method_comparison(const ExperimentConfig& config) {
  const auto instances = make_instances(config);
  const auto jobs = jobs_for(config);
  return flatten(parallel_map<std::vector<ResultRow>>(instances.size(), [&](std::size_t i) {
    const auto& ref = instances[i];
    const IsingGraph graph = map_bpsp(ref.instance);
    const Extremes ext = brute_force_extremes(graph, kBruteForceCap, Exec::serial);
    std::vector<ResultRow> rows;
    for (const auto& job : jobs) rows.push_back(run_job(config, ref, graph, ext, job));
    return rows;
  }));
}

std::vector<ResultRow> run_sigma_sweep(const ExperimentConfig& config) {
  ExperimentConfig sweep = config;
  sweep.methods.clear();
  for (Method m : config.methods)
    if (is_perturbed(m)) sweep.methods.push_back(m);
  if (sweep.methods.empty()) sweep.methods = {Method::qaoa_perturbed, Method::rqaoa_perturbed};
  return run_method_comparison(sweep);
}

namespace {

struct Moments {
  int count = 0;
  double sum = 0.0;
  double sum_sq = 0.0;

  void add(double x) {
    ++count;
    sum += x;
    sum_sq += x * x;
  }
  double mean() const { return count ? sum / count : std::nan(""); }
  double stderr_() const {
    if (count < 2) return 0.0;
    const double var = std::max(0.0, (sum_sq - sum * sum / count) / (count - 1));
    return std::sqrt(var / count);
  }
};

}  // namespace

std::vector<SummaryRow> aggregate(const std::vector<ResultRow>& rows) {
  using Key = std::tuple<int, int, int, double>;
  struct Acc {
    Method method;
    std::optional<double> sigma;
    Moments measure, vs_random, delta;
  };
  std::map<Key, Acc> groups;
  for (const auto& r : rows) {
    if (!r.error.empty()) continue;
    const Key key{r.n, static_cast<int>(r.method), r.p, r.sigma.value_or(-1.0)};
    auto [it, inserted] = groups.try_emplace(key, Acc{r.method, r.sigma, {}, {}, {}});
    it->second.measure.add(r.measure);
    it->second.vs_random.add(r.measure_vs_random);
    it->second.delta.add(r.delta_c);
  }
  std::vector<SummaryRow> out;
  for (const auto& [key, acc] : groups) {
    SummaryRow s;
    s.n = std::get<0>(key);
    s.method = acc.method;
    s.p = std::get<2>(key);
    s.sigma = acc.sigma;
    s.count = acc.measure.count;
    s.mean_measure = acc.measure.mean();
    s.stderr_measure = acc.measure.stderr_();
    s.mean_measure_vs_random = acc.vs_random.mean();
    s.mean_delta_c = acc.delta.mean();
    s.stderr_delta_c = acc.delta.stderr_();
    out.push_back(s);
  }
  return out;
}

std::string_view to_string(CircuitKind kind) {
  switch (kind) {
    case CircuitKind::full: return "full";
    case CircuitKind::rcc: return "rcc";
    case CircuitKind::rcc_trimmed: return "rcc-trimmed";
  }
  return "unknown";
}

namespace {

MpsStats max_stats(const MpsStats& a, const MpsStats& b) {
  return {std::max(a.max_entropy_bits, b.max_entropy_bits), std::max(a.max_bond_dim, b.max_bond_dim),
          std::max(a.excluded_probability, b.excluded_probability)};
}

void push_rows(std::vector<ResourceRow>& out, const ResourceRow& base,
               const std::vector<double>& cutoffs, const std::vector<const Circuit*>& family) {
  for (double cutoff : cutoffs) {
    ResourceRow row = base;
    row.cutoff = cutoff;
    if (!family.empty()) {
      MpsStats acc;
      for (const Circuit* c : family) acc = max_stats(acc, simulate_mps(*c, cutoff).stats);
      row.max_entropy_bits = acc.max_entropy_bits;
      row.max_bond_dim = acc.max_bond_dim;
      row.excluded_probability = acc.excluded_probability;
    }
    out.push_back(row);
  }
}

}  // namespace

std::vector<ResourceRow> run_resource_report(const ExperimentConfig& config) {
  const auto instances = make_instances(config);
  return flatten(parallel_map<std::vector<ResourceRow>>(instances.size(), [&](std::size_t i) {
    const auto& ref = instances[i];
    const IsingGraph graph = map_bpsp(ref.instance);
    std::vector<ResourceRow> rows;
    for (int p : config.p_list) {
      const QaoaParams params = fixed_params(p);
      ResourceRow base;
      base.instance_id = ref.id;
      base.n = ref.n;
      base.p = p;

      const Circuit full = build_qaoa_circuit(graph, params);
      const auto fm = metrics(full);
      base.kind = CircuitKind::full;
      base.cnot_count = fm.cnot_count;
      base.cnot_depth = fm.cnot_depth;
      base.qubit_count = fm.qubit_count;
      push_rows(rows, base, config.cutoffs, {&full});

      for (const auto& e : graph.edge_list()) {
        const NodePair edge{e.i, e.j};
        const RccSpec spec = extract_rcc(graph, edge, p);
        const Circuit cone = build_rcc_circuit(graph, spec, params);
        const auto cm = metrics(cone);
        ResourceRow r = base;
        r.kind = CircuitKind::rcc;
        r.edge = edge;
        r.cnot_count = cm.cnot_count;
        r.cnot_depth = cm.cnot_depth;
        r.qubit_count = cm.qubit_count;
        push_rows(rows, r, config.cutoffs, {&cone});

        ResourceRow t = base;
        t.kind = CircuitKind::rcc_trimmed;
        t.edge = edge;
        t.cnot_count = t.cnot_depth = t.qubit_count = 0;
        t.circuits = std::uint64_t{1} << std::min(spec.k(), 63);
        if (spec.k() <= kTrimmedMpsMaxRemoved) {
          const auto family = build_rcc_circuits_trimmed(graph, edge, params);
          std::vector<const Circuit*> ptrs;
          for (const auto& wc : family) {
            const auto tm = metrics(wc.circuit);
            t.cnot_count = std::max(t.cnot_count, tm.cnot_count);
            t.cnot_depth = std::max(t.cnot_depth, tm.cnot_depth);
            t.qubit_count = std::max(t.qubit_count, tm.qubit_count);
            ptrs.push_back(&wc.circuit);
          }
          push_rows(rows, t, config.cutoffs, ptrs);
        } else {
          // Too many members to simulate; report the shared layout only.
          const auto tm = metrics(build_rcc_trimmed_member(graph, edge, params, 0));
          t.cnot_count = tm.cnot_count;
          t.cnot_depth = tm.cnot_depth;
          t.qubit_count = tm.qubit_count;
          push_rows(rows, t, config.cutoffs, {});
        }
      }
    }
    return rows;
  }));
}

std::vector<ResourceSummary> summarise_resources(const std::vector<ResourceRow>& rows) {
  using Key = std::tuple<int, int, int, double>;
  using InstanceKey = std::tuple<int, int, int, double, int>;
  struct Max {
    double cnot_count = 0, cnot_depth = 0, qubits = 0, entropy = 0, bond = 0, excluded = 0;
  };
  std::map<InstanceKey, Max> per_instance;
  for (const auto& r : rows) {
    auto& m = per_instance[{r.n, r.p, static_cast<int>(r.kind), r.cutoff, r.instance_id}];
    m.cnot_count = std::max(m.cnot_count, double(r.cnot_count));
    m.cnot_depth = std::max(m.cnot_depth, double(r.cnot_depth));
    m.qubits = std::max(m.qubits, double(r.qubit_count));
    m.entropy = std::max(m.entropy, r.max_entropy_bits.value_or(0.0));
    m.bond = std::max(m.bond, double(r.max_bond_dim.value_or(0)));
    m.excluded = std::max(m.excluded, r.excluded_probability.value_or(0.0));
  }
  std::map<Key, std::pair<int, Max>> sums;
  for (const auto& [k, m] : per_instance) {
    auto& [count, s] = sums[{std::get<0>(k), std::get<1>(k), std::get<2>(k), std::get<3>(k)}];
    ++count;
    s.cnot_count += m.cnot_count;
    s.cnot_depth += m.cnot_depth;
    s.qubits += m.qubits;
    s.entropy += m.entropy;
    s.bond += m.bond;
    s.excluded += m.excluded;
  }
  std::vector<ResourceSummary> out;
  for (const auto& [k, v] : sums) {
    const auto& [count, s] = v;
    ResourceSummary r;
    r.n = std::get<0>(k);
    r.p = std::get<1>(k);
    r.kind = static_cast<CircuitKind>(std::get<2>(k));
    r.cutoff = std::get<3>(k);
    r.instances = count;
    r.mean_cnot_count = s.cnot_count / count;
    r.mean_cnot_depth = s.cnot_depth / count;
    r.mean_qubit_count = s.qubits / count;
    r.mean_max_entropy_bits = s.entropy / count;
    r.mean_max_bond_dim = s.bond / count;
    r.mean_excluded_probability = s.excluded / count;
    out.push_back(r);
  }
  return out;
}

std::vector<CountRow> run_circuit_count_report(const ExperimentConfig& config) {
  const auto instances = make_instances(config);
  std::vector<Job> jobs;
  for (const auto& job : jobs_for(config))
    if (is_quantum(job.method)) jobs.push_back(job);
  return flatten(parallel_map<std::vector<CountRow>>(instances.size(), [&](std::size_t i) {
    const auto& ref = instances[i];
    const IsingGraph graph = map_bpsp(ref.instance);
    const auto key = instance_key(ref.n, ref.id);
    const EvalMode mode = mode_for_instance(config, key);
    std::vector<CountRow> rows;
    for (const auto& job : jobs) {
      CountRow row;
      row.instance_id = ref.id;
      row.n = ref.n;
      row.method = job.method;
      row.p = job.p;
      row.sigma = job.sigma;
      const ParamSource source = source_for(config, job, key);
      if (job.method == Method::rqaoa_fixed || job.method == Method::rqaoa_optimised ||
          job.method == Method::rqaoa_perturbed) {
        RqaoaOptions options;
        options.p = job.p;
        options.source = source;
        options.mode = mode;
        options.via_rcc = config.via_rcc;
        const auto r = rqaoa_solve(ref.instance, options);
        row.steps = static_cast<int>(r.trace.steps.size());
        for (const auto& s : r.trace.steps) {
          row.sum_edges += static_cast<std::uint64_t>(s.pre_edges);
          row.evaluations += s.evaluations;
        }
        row.full = circuit_count(r.trace, CircuitAccounting::full);
        row.rcc_untrimmed = circuit_count(r.trace, CircuitAccounting::rcc_untrimmed);
        row.rcc_trimmed = circuit_count(r.trace, CircuitAccounting::rcc_trimmed);
      } else {
        const auto r = resolve_params(source, graph, job.p, mode, config.via_rcc, 0);
        const auto evals = static_cast<std::uint64_t>(std::max(1, r.evaluations));
        row.evaluations = r.evaluations;
        row.sum_edges = graph.n_edges();
        row.full = evals;
        row.rcc_untrimmed = graph.n_edges() * evals;
        row.rcc_trimmed = trimmed_circuit_count(graph, job.p) * evals;
      }
      rows.push_back(row);
    }
    return rows;
  }));
}

namespace {

using Cell = Table::Cell;

Cell opt(const std::optional<double>& v) { return v ? Cell{*v} : Cell{}; }
Cell opt(const std::optional<int>& v) { return v ? Cell{std::int64_t{*v}} : Cell{}; }
Cell num(double v) { return std::isnan(v) ? Cell{} : Cell{v}; }
Cell str(std::string_view s) { return std::string(s); }
Cell i64(std::int64_t v) { return v; }
Cell u64(std::uint64_t v) { return v; }

}  // namespace

Table to_table(const std::vector<ResultRow>& rows) {
  Table t;
  t.columns = {"instance_id", "n",       "method",    "p",           "sigma",
               "delta_c",     "measure", "measure_vs_random", "sampled_best", "circuits",
               "evaluations", "wall_time", "error"};
  for (const auto& r : rows)
    t.rows.push_back({i64(r.instance_id), i64(r.n), str(to_string(r.method)), i64(r.p),
                      opt(r.sigma), num(r.delta_c), num(r.measure), num(r.measure_vs_random),
                      opt(r.sampled_best), u64(r.circuits), i64(r.evaluations), opt(r.wall_time),
                      r.error.empty() ? Cell{} : str(r.error)});
  return t;
}

Table to_table(const std::vector<SummaryRow>& rows) {
  Table t;
  t.columns = {"n",           "method",         "p",
               "sigma",       "count",          "mean_measure",
               "stderr_measure", "mean_measure_vs_random", "mean_delta_c",
               "stderr_delta_c"};
  for (const auto& r : rows)
    t.rows.push_back({i64(r.n), str(to_string(r.method)), i64(r.p), opt(r.sigma), i64(r.count),
                      num(r.mean_measure), num(r.stderr_measure), num(r.mean_measure_vs_random),
                      num(r.mean_delta_c), num(r.stderr_delta_c)});
  return t;
}

Table to_table(const std::vector<ResourceRow>& rows) {
  Table t;
  t.columns = {"instance_id", "n",          "p",          "kind",
               "edge",        "circuits",   "cnot_count", "cnot_depth",
               "qubit_count", "cutoff",     "max_entropy_bits", "max_bond_dim",
               "excluded_probability"};
  for (const auto& r : rows)
    t.rows.push_back({i64(r.instance_id), i64(r.n), i64(r.p), str(to_string(r.kind)),
                      r.edge ? str(fmt::format("{}-{}", r.edge->first, r.edge->second)) : Cell{},
                      u64(r.circuits), i64(r.cnot_count), i64(r.cnot_depth), i64(r.qubit_count),
                      num(r.cutoff), opt(r.max_entropy_bits), opt(r.max_bond_dim),
                      opt(r.excluded_probability)});
  return t;
}

Table to_table(const std::vector<ResourceSummary>& rows) {
  Table t;
  t.columns = {"n",
               "p",
               "kind",
               "cutoff",
               "instances",
               "mean_cnot_count",
               "mean_cnot_depth",
               "mean_qubit_count",
               "mean_max_entropy_bits",
               "mean_max_bond_dim",
               "mean_excluded_probability"};
  for (const auto& r : rows)
    t.rows.push_back({i64(r.n), i64(r.p), str(to_string(r.kind)), num(r.cutoff), i64(r.instances),
                      num(r.mean_cnot_count), num(r.mean_cnot_depth), num(r.mean_qubit_count),
                      num(r.mean_max_entropy_bits), num(r.mean_max_bond_dim),
                      num(r.mean_excluded_probability)});
  return t;
}

Table to_table(const std::vector<CountRow>& rows) {
  Table t;
  t.columns = {"instance_id", "n",    "method",        "p",           "sigma",      "steps",
               "sum_edges",   "full", "rcc_untrimmed", "rcc_trimmed", "evaluations"};
  for (const auto& r : rows)
    t.rows.push_back({i64(r.instance_id), i64(r.n), str(to_string(r.method)), i64(r.p),
                      opt(r.sigma), i64(r.steps), u64(r.sum_edges), u64(r.full),
                      u64(r.rcc_untrimmed), u64(r.rcc_trimmed), i64(r.evaluations)});
  return t;
}

namespace {

std::string csv_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "";
        } else if constexpr (std::is_same_v<T, std::string>) {
          if (v.find_first_of(",\"\n") == std::string::npos) return v;
          std::string q = "\"";
          for (char ch : v) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
          return q + "\"";
        } else {
          return fmt::format("{}", v);
        }
      },
      c);
}

}  // namespace

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t c = 0; c < table.columns.size(); ++c)
    out << (c ? "," : "") << table.columns[c];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_cell(row[c]);
    out << '\n';
  }
}

nlohmann::json to_json(const Table& table) {
  auto arr = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t c = 0; c < row.size(); ++c)
      obj[table.columns[c]] = std::visit(
          [](const auto& v) -> nlohmann::json {
            if constexpr (std::is_same_v<std::decay_t<decltype(v)>, std::monostate>)
              return nullptr;
            else
              return v;
          },
          row[c]);
    arr.push_back(std::move(obj));
  }
  return arr;
}

}  // namespace paintshop
