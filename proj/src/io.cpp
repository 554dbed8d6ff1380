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

#include "paintshop/io.hpp"

#include <fstream>

#include "paintshop/error.hpp"

namespace paintshop {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::invalid_argument, std::string("malformed ") + what + ": " + e.what());
  }
}

}  // namespace

nlohmann::json to_json(const BpspInstance& instance) {
  return {{"n_bodies", instance.n_bodies()},
          {"sequence", std::vector<int>(instance.sequence().begin(), instance.sequence().end())}};
}

BpspInstance instance_from_json(const nlohmann::json& j) {
  return guarded("instance", [&] {
    return BpspInstance(j.at("n_bodies").get<int>(), j.at("sequence").get<std::vector<int>>());
  });
}

nlohmann::json to_json(const IsingGraph& graph) {
  auto edges = nlohmann::json::array();
  for (const auto& e : graph.edge_list()) edges.push_back({e.i, e.j, e.weight});
  nlohmann::json j = {{"n_nodes", graph.n_nodes()},
                      {"offset_numerator", graph.offset_numerator()},
                      {"edges", edges}};
  if (graph.has_fields())
    j["fields"] = std::vector<std::int64_t>(graph.fields().begin(), graph.fields().end());
  return j;
}

IsingGraph graph_from_json(const nlohmann::json& j) {
  return guarded("graph", [&] {
    IsingGraph g(j.at("n_nodes").get<int>(), j.value("offset_numerator", std::int64_t{0}));
    for (const auto& e : j.at("edges"))
      g.add_coupling(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<std::int64_t>());
    if (j.contains("fields")) {
      const auto h = j.at("fields").get<std::vector<std::int64_t>>();
      if (static_cast<int>(h.size()) != g.n_nodes())
        throw Error(ErrorKind::invalid_argument, "fields length differs from n_nodes");
      for (int q = 0; q < g.n_nodes(); ++q) g.add_field(q, h[q]);
    }
    return g;
  });
}

nlohmann::json to_json(const QaoaParams& params) {
  return {{"p", params.depth()}, {"betas", params.betas}, {"gammas", params.gammas}};
}

QaoaParams params_from_json(const nlohmann::json& j) {
  return guarded("parameters", [&] {
    QaoaParams params{j.at("betas").get<std::vector<double>>(),
                      j.at("gammas").get<std::vector<double>>()};
    params.validate();
    if (j.contains("p") && j.at("p").get<int>() != params.depth())
      throw Error(ErrorKind::invalid_argument, "p does not match the angle count");
    return params;
  });
}

nlohmann::json colouring_to_json(const Colouring& colouring) {
  std::string s;
  for (Colour c : colouring) s += c == Colour::red ? 'R' : 'B';
  return s;
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::invalid_argument, "cannot open " + path);
  return guarded("JSON file", [&] { return nlohmann::json::parse(in); });
}

}  // namespace paintshop
