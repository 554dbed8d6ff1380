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

#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "paintshop/circuit.hpp"
#include "paintshop/error.hpp"
#include "paintshop/experiments.hpp"
#include "paintshop/io.hpp"
#include "paintshop/qaoa.hpp"
#include "paintshop/rqaoa.hpp"

using namespace paintshop;

namespace {

struct CommonArgs {
  std::string bodies = "4..10";
  int instances = 20;
  std::string p_list = "1";
  std::uint64_t seed = 0;
  std::string mode = "exact";
  std::uint64_t shots = 4096;
  bool rcc = false;
  std::string methods;
  std::string out;
  std::string format = "csv";
  bool summary = false;
  bool timing = false;
};

template <typename T>
std::vector<T> parse_list(const std::string& text, const char* what) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::istringstream is(item);
    T v;
    if (!(is >> v) || !is.eof())
      throw Error(ErrorKind::invalid_argument, fmt::format("bad {} '{}'", what, item));
    out.push_back(v);
  }
  if (out.empty()) throw Error(ErrorKind::invalid_argument, fmt::format("empty {} list", what));
  return out;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int n = parse_list<int>(text, "body count").at(0);
    return {n, n};
  }
  return {parse_list<int>(text.substr(0, dots), "body count").at(0),
          parse_list<int>(text.substr(dots + 2), "body count").at(0)};
}

EvalMode parse_mode(const std::string& mode, std::uint64_t shots, std::uint64_t seed) {
  if (mode == "exact") return ExactMode{};
  if (mode == "shots") return ShotMode{shots, seed};
  throw Error(ErrorKind::invalid_argument, fmt::format("unknown mode '{}'", mode));
}

void add_common(CLI::App* cmd, CommonArgs& a, bool with_methods = true) {
  cmd->add_option("--bodies", a.bodies, "Body count or range A..B");
  cmd->add_option("--instances", a.instances, "Instances per body count");
  cmd->add_option("--p", a.p_list, "Comma-separated QAOA depths");
  cmd->add_option("--seed", a.seed, "Master seed");
  cmd->add_option("--mode", a.mode, "exact | shots");
  cmd->add_option("--shots", a.shots, "Shots per measurement");
  cmd->add_flag("--rcc", a.rcc, "Use reverse causal cone circuits");
  if (with_methods) cmd->add_option("--methods", a.methods, "Comma-separated methods");
  cmd->add_option("--out", a.out, "Output file (default stdout)");
  cmd->add_option("--format", a.format, "csv | json");
  cmd->add_flag("--summary", a.summary, "Write aggregated rows");
  cmd->add_flag("--timing", a.timing, "Record wall time per row");
}

ExperimentConfig make_config(const CommonArgs& a, const std::string& default_methods) {
  ExperimentConfig c;
  std::tie(c.n_min, c.n_max) = parse_range(a.bodies);
  c.instances = a.instances;
  c.p_list = parse_list<int>(a.p_list, "depth");
  c.seed = a.seed;
  c.mode = parse_mode(a.mode, a.shots, 0);
  c.shots = a.shots;
  c.via_rcc = a.rcc;
  c.timing = a.timing;
  c.methods.clear();
  for (const auto& m : parse_list<std::string>(a.methods.empty() ? default_methods : a.methods,
                                               "method"))
    c.methods.push_back(parse_method(m));
  if (a.format != "csv" && a.format != "json")
    throw Error(ErrorKind::invalid_argument, fmt::format("unknown format '{}'", a.format));
  c.validate();
  return c;
}

void emit_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::invalid_argument, "cannot write " + path);
  out << text;
}

void emit(const CommonArgs& a, const Table& table) {
  std::ostringstream os;
  if (a.format == "json")
    os << to_json(table).dump(2) << '\n';
  else
    write_csv(os, table);
  emit_text(a.out, os.str());
}

template <typename Row>
void emit_rows(const CommonArgs& a, const std::vector<Row>& rows) {
  emit(a, to_table(rows));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binary paint shop solvers: classical heuristics, QAOA and recursive QAOA"};
  app.require_subcommand(1);

  CommonArgs gen_args;
  auto* gen = app.add_subcommand("generate", "Write random instances as JSON");
  gen->add_option("--bodies", gen_args.bodies, "Body count or range A..B");
  gen->add_option("--instances", gen_args.instances, "Instances per body count");
  gen->add_option("--seed", gen_args.seed, "Master seed");
  gen->add_option("--out", gen_args.out, "Output file (default stdout)");

  CommonArgs solve_args;
  std::string instance_file, sequence, method = "rqaoa-fixed", params_file, trace_file,
                                       circuit_file;
  double sigma = 0.0;
  int stop_size = 1;
  std::size_t instance_index = 0;
  auto* solve = app.add_subcommand("solve", "Solve one instance with one method");
  solve->add_option("--instance", instance_file, "Instance JSON file");
  solve->add_option("--index", instance_index, "Entry to use when the file holds a list");
  solve->add_option("--sequence", sequence, "Comma-separated car sequence");
  solve->add_option("--bodies", solve_args.bodies, "Body count for a random instance");
  solve->add_option("--seed", solve_args.seed, "Seed for the random instance and shots");
  solve->add_option("--method", method, "Solver");
  solve->add_option("--p", solve_args.p_list, "QAOA depth");
  solve->add_option("--mode", solve_args.mode, "exact | shots");
  solve->add_option("--shots", solve_args.shots, "Shots per measurement");
  solve->add_flag("--rcc", solve_args.rcc, "Use reverse causal cone circuits");
  solve->add_option("--params", params_file, "Angles JSON for the fixed methods");
  solve->add_option("--sigma", sigma, "Noise scale for perturbed methods");
  solve->add_option("--stop-size", stop_size, "Solve the remaining graph exactly at this size");
  solve->add_option("--trace", trace_file, "Write the reduction trace as JSON lines");
  solve->add_option("--circuit-out", circuit_file, "Write the full ansatz circuit as JSON");
  solve->add_option("--out", solve_args.out, "Output file (default stdout)");

  CommonArgs cmp_args;
  auto* compare = app.add_subcommand("compare", "Compare methods over random instances");
  add_common(compare, cmp_args);

  CommonArgs sweep_args;
  sweep_args.bodies = "8";
  std::string sigmas = "0,0.05,0.2,0.5";
  bool from_fixed = false;
  auto* sweep = app.add_subcommand("sigma-sweep", "Perturb parameters with Gaussian noise");
  add_common(sweep, sweep_args);
  sweep->add_option("--sigmas", sigmas, "Comma-separated noise scales");
  sweep->add_flag("--from-fixed", from_fixed, "Perturb precomputed rather than optimised angles");

  CommonArgs res_args;
  res_args.bodies = "8..12";
  res_args.instances = 8;
  std::string cutoffs = "0,0.005,0.0075,0.01";
  auto* resources = app.add_subcommand("resources", "Circuit metrics and MPS statistics");
  add_common(resources, res_args, false);
  resources->add_option("--cutoffs", cutoffs, "Comma-separated MPS cutoffs");

  CommonArgs cnt_args;
  cnt_args.instances = 8;
  auto* counts = app.add_subcommand("circuit-counts", "Circuits needed by each quantum method");
  add_common(counts, cnt_args);

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      ExperimentConfig c;
      std::tie(c.n_min, c.n_max) = parse_range(gen_args.bodies);
      c.instances = gen_args.instances;
      c.seed = gen_args.seed;
      auto arr = nlohmann::json::array();
      for (const auto& ref : make_instances(c)) {
        auto j = to_json(ref.instance);
        j["id"] = ref.id;
        arr.push_back(j);
      }
      emit_text(gen_args.out, arr.dump(2) + "\n");
    } else if (solve->parsed()) {
      BpspInstance instance = [&] {
        if (!instance_file.empty()) {
          const auto j = read_json_file(instance_file);
          if (!j.is_array()) return instance_from_json(j);
          if (instance_index >= j.size())
            throw Error(ErrorKind::invalid_argument,
                        fmt::format("--index {} out of range for {} instances", instance_index,
                                    j.size()));
          return instance_from_json(j[instance_index]);
        }
        if (!sequence.empty()) {
          const auto seq = parse_list<int>(sequence, "body index");
          return BpspInstance(static_cast<int>(seq.size() / 2), seq);
        }
        const auto [n, m] = parse_range(solve_args.bodies);
        if (n != m) throw Error(ErrorKind::invalid_argument, "solve takes a single body count");
        return generate_random(n, derive_seed(solve_args.seed, Stream::instance));
      }();
      const IsingGraph graph = map_bpsp(instance);
      const int p = parse_list<int>(solve_args.p_list, "depth").at(0);
      const EvalMode mode = parse_mode(solve_args.mode, solve_args.shots, solve_args.seed);
      const Method m = parse_method(method);

      FixedSource fixed;
      if (!params_file.empty()) fixed.params = params_from_json(read_json_file(params_file));
      ParamSource source = fixed;
      if (m == Method::qaoa_optimised || m == Method::rqaoa_optimised)
        source = OptimisedSource{fixed.params, 1e-4};
      if (is_perturbed(m))
        source = PerturbedSource{fixed, sigma, derive_seed(solve_args.seed, Stream::perturbation)};

      nlohmann::json result = {{"method", to_string(m)}, {"n_bodies", instance.n_bodies()}};
      Colouring colouring;
      switch (m) {
        case Method::greedy: colouring = greedy_solve(instance); break;
        case Method::recursive_greedy: colouring = recursive_greedy_solve(instance); break;
        case Method::brute_force:
          colouring = spins_to_colouring(instance, brute_force_ground(graph).spins);
          break;
        case Method::qaoa_fixed:
        case Method::qaoa_optimised:
        case Method::qaoa_perturbed: {
          const auto r = resolve_params(source, graph, p, mode, solve_args.rcc, 0);
          const auto sol = qaoa_solve(graph, instance, r.params, solve_args.shots,
                                      derive_seed(solve_args.seed, Stream::shots));
          colouring = sol.colouring;
          result["p"] = p;
          result["params"] = to_json(r.params);
          result["expected_energy"] = sol.expected_energy;
          result["evaluations"] = r.evaluations;
          if (!circuit_file.empty())
            emit_text(circuit_file, to_json(build_qaoa_circuit(graph, r.params)).dump(2) + "\n");
          break;
        }
        case Method::rqaoa_fixed:
        case Method::rqaoa_optimised:
        case Method::rqaoa_perturbed: {
          RqaoaOptions o;
          o.p = p;
          o.source = source;
          o.mode = mode;
          o.via_rcc = solve_args.rcc;
          o.stop_size = stop_size;
          const auto r = rqaoa_solve(instance, o);
          colouring = r.colouring;
          result["p"] = p;
          result["steps"] = r.trace.steps.size();
          result["circuits_full"] = circuit_count(r.trace, CircuitAccounting::full);
          result["circuits_rcc"] = circuit_count(r.trace, CircuitAccounting::rcc_untrimmed);
          result["circuits_rcc_trimmed"] = circuit_count(r.trace, CircuitAccounting::rcc_trimmed);
          if (!trace_file.empty()) {
            std::ostringstream os;
            write_trace_jsonl(r.trace, os);
            emit_text(trace_file, os.str());
          }
          if (!circuit_file.empty()) {
            const auto params = resolve_params(source, graph, p, mode, false, 0).params;
            emit_text(circuit_file, to_json(build_qaoa_circuit(graph, params)).dump(2) + "\n");
          }
          break;
        }
      }
      result["colouring"] = colouring_to_json(colouring);
      result["colour_changes"] = colour_changes(instance, colouring);
      result["optimum"] = graph.n_nodes() <= kBruteForceCap
                              ? nlohmann::json(brute_force_ground(graph).energy.value())
                              : nlohmann::json(nullptr);
      emit_text(solve_args.out, result.dump(2) + "\n");
    } else if (compare->parsed()) {
      const auto cfg = make_config(cmp_args, "greedy,recursive-greedy,brute-force,qaoa-fixed,rqaoa-fixed");
      const auto rows = run_method_comparison(cfg);
      if (cmp_args.summary)
        emit_rows(cmp_args, aggregate(rows));
      else
        emit_rows(cmp_args, rows);
    } else if (sweep->parsed()) {
      auto cfg = make_config(sweep_args, "qaoa-perturbed,rqaoa-perturbed");
      cfg.sigmas = parse_list<double>(sigmas, "sigma");
      cfg.perturb_optimised = !from_fixed;
      cfg.validate();
      const auto rows = run_sigma_sweep(cfg);
      if (sweep_args.summary)
        emit_rows(sweep_args, aggregate(rows));
      else
        emit_rows(sweep_args, rows);
    } else if (resources->parsed()) {
      auto cfg = make_config(res_args, "qaoa-fixed");
      cfg.cutoffs = parse_list<double>(cutoffs, "cutoff");
      cfg.validate();
      const auto rows = run_resource_report(cfg);
      if (res_args.summary)
        emit_rows(res_args, summarise_resources(rows));
      else
        emit_rows(res_args, rows);
    } else if (counts->parsed()) {
      const auto cfg =
          make_config(cnt_args, "qaoa-fixed,qaoa-optimised,rqaoa-fixed,rqaoa-optimised");
      emit_rows(cnt_args, run_circuit_count_report(cfg));
    }
  } catch (const Error& e) {
    std::cerr << "paintshop: " << e.what() << '\n';
    return e.kind() == ErrorKind::invalid_argument ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "paintshop: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
