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

#include <Eigen/Dense>

#include <vector>

#include "oracles.hpp"
#include "paintshop/bpsp.hpp"
#include "paintshop/ising.hpp"
#include "paintshop/statevector.hpp"

namespace testing_support {

inline std::vector<int> seq_of(const paintshop::BpspInstance& inst) {
  return {inst.sequence().begin(), inst.sequence().end()};
}

inline oracle::DenseIsing dense(const paintshop::IsingGraph& g) {
  oracle::DenseIsing d;
  d.n = g.n_nodes();
  for (const auto& e : g.edge_list()) d.edges.push_back({e.i, e.j, double(e.weight)});
  for (auto h : g.fields()) d.h.push_back(double(h));
  d.c = double(g.offset_numerator());
  return d;
}

inline Eigen::VectorXcd to_eigen(const paintshop::Statevector& s) {
  const auto a = s.amplitudes();
  Eigen::VectorXcd v(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) v[k] = a[k];
  return v;
}

}  // namespace testing_support
