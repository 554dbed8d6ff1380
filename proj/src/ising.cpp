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

#include "paintshop/ising.hpp"

#include <fmt/format.h>
#include <omp.h>

#include <algorithm>
#include <limits>

#include "paintshop/error.hpp"

namespace paintshop {

NodePair make_pair_ordered(int i, int j) {
  if (i == j) throw Error(ErrorKind::invalid_argument, fmt::format("self-loop on node {}", i));
  return i < j ? NodePair{i, j} : NodePair{j, i};
}

IsingGraph::IsingGraph(int n_nodes, std::int64_t offset_numerator)
    : n_nodes_(n_nodes), offset_(offset_numerator), fields_(std::max(n_nodes, 0), 0) {
  if (n_nodes < 1) throw Error(ErrorKind::invalid_argument, "graph needs at least one node");
}

void IsingGraph::check_node(int node) const {
  if (node < 0 || node >= n_nodes_)
    throw Error(ErrorKind::invalid_argument,
                fmt::format("node {} out of range for {} nodes", node, n_nodes_));
}

void IsingGraph::add_coupling(int i, int j, std::int64_t w) {
  check_node(i);
  check_node(j);
  const NodePair key = make_pair_ordered(i, j);
  if (w == 0) return;
  auto [it, inserted] = couplings_.try_emplace(key, w);
  if (!inserted) {
    it->second += w;
    if (it->second == 0) couplings_.erase(it);
  }
}

std::int64_t IsingGraph::coupling(int i, int j) const {
  auto it = couplings_.find(make_pair_ordered(i, j));
  return it == couplings_.end() ? 0 : it->second;
}

bool IsingGraph::has_edge(int i, int j) const {
  if (i == j) return false;
  return couplings_.contains(make_pair_ordered(i, j));
}

void IsingGraph::add_field(int node, std::int64_t h) {
  check_node(node);
  fields_[node] += h;
}

bool IsingGraph::has_fields() const {
  return std::any_of(fields_.begin(), fields_.end(), [](std::int64_t h) { return h != 0; });
}

std::vector<Edge> IsingGraph::edge_list() const {
  std::vector<Edge> out;
  out.reserve(couplings_.size());
  for (const auto& [key, w] : couplings_) out.push_back({key.first, key.second, w});
  return out;
}

std::vector<std::vector<int>> IsingGraph::adjacency() const {
  std::vector<std::vector<int>> adj(n_nodes_);
  for (const auto& [key, w] : couplings_) {
    adj[key.first].push_back(key.second);
    adj[key.second].push_back(key.first);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

std::vector<int> IsingGraph::degrees() const {
  std::vector<int> deg(n_nodes_, 0);
  for (const auto& [key, w] : couplings_) {
    ++deg[key.first];
    ++deg[key.second];
  }
  return deg;
}

IsingGraph map_bpsp(const BpspInstance& instance) {
  const int n = instance.n_bodies();
  std::int64_t same_body = 0;
  IsingGraph g(n);
  for (std::size_t pos = 0; pos + 1 < instance.size(); ++pos) {
    const int a = instance.body(pos);
    const int b = instance.body(pos + 1);
    if (a == b) {
      ++same_body;
      continue;
    }
    const bool same_kind = instance.is_first(pos) == instance.is_first(pos + 1);
    g.add_coupling(a, b, same_kind ? -1 : +1);
  }
  g.add_offset(same_body + 2 * static_cast<std::int64_t>(n) - 1);
  return g;
}

namespace {

void check_spins(const IsingGraph& graph, const SpinConfig& spins) {
  if (spins.size() != static_cast<std::size_t>(graph.n_nodes()))
    throw Error(ErrorKind::invalid_argument,
                fmt::format("spin config has {} entries, graph has {} nodes", spins.size(),
                            graph.n_nodes()));
  for (int s : spins)
    if (s != 1 && s != -1) throw Error(ErrorKind::invalid_argument, "spins must be +1 or -1");
}

// Flat view of a graph for the enumeration loop.
struct Flat {
  std::vector<int> a, b;
  std::vector<std::int64_t> w;
  std::vector<std::int64_t> h;
  std::int64_t c;
};

Flat flatten(const IsingGraph& g) {
  Flat f;
  for (const auto& e : g.edge_list()) {
    f.a.push_back(e.i);
    f.b.push_back(e.j);
    f.w.push_back(e.weight);
  }
  f.h.assign(g.fields().begin(), g.fields().end());
  f.c = g.offset_numerator();
  return f;
}

struct Candidate {
  std::int64_t twice;
  std::uint64_t index;
};

bool better_min(const Candidate& x, const Candidate& y) {
  return x.twice < y.twice || (x.twice == y.twice && x.index < y.index);
}
bool better_max(const Candidate& x, const Candidate& y) {
  return x.twice > y.twice || (x.twice == y.twice && x.index < y.index);
}

// Enumeration order: the first free node is the most significant bit, so
// increasing index is lexicographic order of the bit vector.
struct Layout {
  int n;
  int first_free;  // 1 when node 0 is pinned to +1
  int m;           // number of free nodes
};

void decode(const Layout& L, std::uint64_t x, std::vector<int>& spins) {
  spins[0] = 1;
  for (int k = 0; k < L.m; ++k) {
    const int node = L.first_free + k;
    spins[node] = ((x >> (L.m - 1 - k)) & 1U) ? -1 : 1;
  }
}

std::int64_t twice_energy(const Flat& f, const std::vector<int>& s) {
  std::int64_t e = f.c;
  for (std::size_t k = 0; k < f.w.size(); ++k) e += f.w[k] * s[f.a[k]] * s[f.b[k]];
  for (std::size_t k = 0; k < f.h.size(); ++k) e += f.h[k] * s[k];
  return e;
}

std::pair<Candidate, Candidate> scan(const Flat& f, const Layout& L, std::uint64_t begin,
                                     std::uint64_t end) {
  Candidate lo{std::numeric_limits<std::int64_t>::max(), 0};
  Candidate hi{std::numeric_limits<std::int64_t>::min(), 0};
  std::vector<int> spins(L.n, 1);
  for (std::uint64_t x = begin; x < end; ++x) {
    decode(L, x, spins);
    const Candidate c{twice_energy(f, spins), x};
    if (better_min(c, lo)) lo = c;
    if (better_max(c, hi)) hi = c;
  }
  return {lo, hi};
}

Extremes enumerate(const IsingGraph& graph, int cap, Exec exec) {
  if (graph.n_nodes() > cap)
    throw Error(ErrorKind::resource_limit,
                fmt::format("brute force over {} nodes exceeds cap {}", graph.n_nodes(), cap));
  const Flat f = flatten(graph);
  Layout L{graph.n_nodes(), graph.has_fields() ? 0 : 1, 0};
  L.m = L.n - L.first_free;
  const std::uint64_t total = std::uint64_t{1} << L.m;

  Candidate lo, hi;
  if (exec == Exec::serial || total < (1U << 12)) {
    std::tie(lo, hi) = scan(f, L, 0, total);
  } else {
    lo = {std::numeric_limits<std::int64_t>::max(), 0};
    hi = {std::numeric_limits<std::int64_t>::min(), 0};
#pragma omp parallel
    {
      const auto nt = static_cast<std::uint64_t>(omp_get_num_threads());
      const auto t = static_cast<std::uint64_t>(omp_get_thread_num());
      const std::uint64_t chunk = (total + nt - 1) / nt;
      const std::uint64_t b = std::min(total, t * chunk);
      const std::uint64_t e = std::min(total, b + chunk);
      auto [l, h] = scan(f, L, b, e);
#pragma omp critical(paintshop_brute_force_merge)
      {
        if (b < e && better_min(l, lo)) lo = l;
        if (b < e && better_max(h, hi)) hi = h;
      }
    }
  }

  Extremes out;
  out.min.spins.assign(L.n, 1);
  out.max.spins.assign(L.n, 1);
  decode(L, lo.index, out.min.spins);
  decode(L, hi.index, out.max.spins);
  out.min.energy = HalfInt{lo.twice};
  out.max.energy = HalfInt{hi.twice};
  return out;
}

}  // namespace

HalfInt energy(const IsingGraph& graph, const SpinConfig& spins) {
  check_spins(graph, spins);
  return HalfInt{twice_energy(flatten(graph), spins)};
}

GroundState brute_force_ground(const IsingGraph& graph, int cap, Exec exec) {
  return enumerate(graph, cap, exec).min;
}

Extremes brute_force_extremes(const IsingGraph& graph, int cap, Exec exec) {
  return enumerate(graph, cap, exec);
}

Colouring spins_to_colouring(const BpspInstance& instance, const SpinConfig& spins) {
  if (spins.size() != static_cast<std::size_t>(instance.n_bodies()))
    throw Error(ErrorKind::invalid_argument,
                fmt::format("{} spins for {} bodies", spins.size(), instance.n_bodies()));
  Colouring out(instance.size());
  for (std::size_t pos = 0; pos < instance.size(); ++pos) {
    const int s = spins[instance.body(pos)];
    if (s != 1 && s != -1) throw Error(ErrorKind::invalid_argument, "spins must be +1 or -1");
    const Colour first = s == 1 ? Colour::red : Colour::blue;
    out[pos] = instance.is_first(pos) ? first : opposite(first);
  }
  return out;
}

SpinConfig colouring_to_spins(const BpspInstance& instance, const Colouring& colouring) {
  validate_colouring(instance, colouring);
  SpinConfig spins(instance.n_bodies());
  for (int b = 0; b < instance.n_bodies(); ++b)
    spins[b] = colouring[instance.first_position(b)] == Colour::red ? 1 : -1;
  return spins;
}

}  // namespace paintshop
