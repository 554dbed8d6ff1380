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

#include <span>
#include <vector>

namespace paintshop {

/// QAOA angles for p layers. The nominal domains (beta in [0, pi], gamma in
/// [0, 2 pi]) are not enforced: the precomputed table uses negative betas.
struct QaoaParams {
  std::vector<double> betas;
  std::vector<double> gammas;

  int depth() const { return static_cast<int>(betas.size()); }

  /// Throws invalid-argument unless both vectors are non-empty and equally long.
  void validate() const;

  /// Packed as [beta_1..beta_p, gamma_1..gamma_p].
  std::vector<double> packed() const;
  static QaoaParams unpack(std::span<const double> x);

  friend bool operator==(const QaoaParams&, const QaoaParams&) = default;
};

}  // namespace paintshop
