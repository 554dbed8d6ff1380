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

#include "paintshop/params.hpp"

#include <fmt/format.h>

#include "paintshop/error.hpp"

namespace paintshop {

void QaoaParams::validate() const {
  if (betas.empty() || betas.size() != gammas.size())
    throw Error(ErrorKind::invalid_argument,
                fmt::format("need equal, non-empty beta/gamma lists (got {} and {})", betas.size(),
                            gammas.size()));
}

std::vector<double> QaoaParams::packed() const {
  std::vector<double> x(betas);
  x.insert(x.end(), gammas.begin(), gammas.end());
  return x;
}

QaoaParams QaoaParams::unpack(std::span<const double> x) {
  if (x.empty() || x.size() % 2 != 0)
    throw Error(ErrorKind::invalid_argument, "packed parameter vector must have even length");
  const std::size_t p = x.size() / 2;
  return {{x.begin(), x.begin() + p}, {x.begin() + p, x.end()}};
}

}  // namespace paintshop
