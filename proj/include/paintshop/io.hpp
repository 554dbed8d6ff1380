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

#include <string>

#include "json.hpp"
#include "paintshop/bpsp.hpp"
#include "paintshop/ising.hpp"
#include "paintshop/params.hpp"

namespace paintshop {

// {"n_bodies": N, "sequence": [...]}
nlohmann::json to_json(const BpspInstance& instance);
BpspInstance instance_from_json(const nlohmann::json& j);

// {"n_nodes": N, "offset_numerator": C, "edges": [[i, j, w], ...], "fields": [...]}
nlohmann::json to_json(const IsingGraph& graph);
IsingGraph graph_from_json(const nlohmann::json& j);

// {"p": p, "betas": [...], "gammas": [...]}
nlohmann::json to_json(const QaoaParams& params);
QaoaParams params_from_json(const nlohmann::json& j);

nlohmann::json colouring_to_json(const Colouring& colouring);

/// Reads and parses a JSON file; malformed input raises invalid-argument.
nlohmann::json read_json_file(const std::string& path);

}  // namespace paintshop
