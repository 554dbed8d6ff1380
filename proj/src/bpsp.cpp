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

#include "paintshop/bpsp.hpp"

#include <fmt/format.h>

#include <limits>
#include <utility>

#include "paintshop/error.hpp"
#include "paintshop/rng.hpp"

namespace paintshop {

BpspInstance::BpspInstance(int n_bodies, std::vector<int> sequence)
    : n_bodies_(n_bodies), sequence_(std::move(sequence)) {
  if (n_bodies_ < 1) throw Error(ErrorKind::invalid_argument, "n_bodies must be at least 1");
  if (sequence_.size() != 2 * static_cast<std::size_t>(n_bodies_))
    throw Error(ErrorKind::invalid_argument,
                fmt::format("sequence length {} != 2 * n_bodies ({})", sequence_.size(), n_bodies_));

  constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
  first_pos_.assign(n_bodies_, kUnset);
  std::vector<std::size_t> second_pos(n_bodies_, kUnset);
  first_.assign(sequence_.size(), false);
  for (std::size_t pos = 0; pos < sequence_.size(); ++pos) {
    const int b = sequence_[pos];
    if (b < 0 || b >= n_bodies_)
      throw Error(ErrorKind::invalid_argument, fmt::format("body index {} out of range", b));
    if (first_pos_[b] == kUnset) {
      first_pos_[b] = pos;
      first_[pos] = true;
    } else if (second_pos[b] == kUnset) {
      second_pos[b] = pos;
    } else {
      throw Error(ErrorKind::invalid_argument, fmt::format("body {} occurs more than twice", b));
    }
  }
  partner_.assign(sequence_.size(), 0);
  for (int b = 0; b < n_bodies_; ++b) {
    if (second_pos[b] == kUnset)
      throw Error(ErrorKind::invalid_argument, fmt::format("body {} occurs fewer than twice", b));
    partner_[first_pos_[b]] = second_pos[b];
    partner_[second_pos[b]] = first_pos_[b];
  }
}

BpspInstance generate_random(int n_bodies, std::uint64_t seed) {
  if (n_bodies < 1) throw Error(ErrorKind::invalid_argument, "n_bodies must be at least 1");
  std::vector<int> seq;
  seq.reserve(2 * static_cast<std::size_t>(n_bodies));
  for (int b = 0; b < n_bodies; ++b) {
    seq.push_back(b);
    seq.push_back(b);
  }
  Rng rng(seed);
  for (std::size_t i = seq.size() - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i + 1));
    std::swap(seq[i], seq[j]);
  }
  return BpspInstance(n_bodies, std::move(seq));
}

void validate_colouring(const BpspInstance& instance, const Colouring& colouring) {
  if (colouring.size() != instance.size())
    throw Error(ErrorKind::constraint_violation,
                fmt::format("colouring length {} != sequence length {}", colouring.size(),
                            instance.size()));
  for (std::size_t pos = 0; pos < instance.size(); ++pos) {
    if (instance.is_first(pos) && colouring[pos] == colouring[instance.partner(pos)])
      throw Error(ErrorKind::constraint_violation,
                  fmt::format("both cars of body {} share a colour", instance.body(pos)));
  }
}

namespace {

int count_changes(const Colouring& c) {
  int changes = 0;
  for (std::size_t i = 1; i < c.size(); ++i) changes += c[i] != c[i - 1];
  return changes;
}

}  // namespace

int colour_changes(const BpspInstance& instance, const Colouring& colouring) {
  validate_colouring(instance, colouring);
  return count_changes(colouring);
}

Colouring greedy_solve(const BpspInstance& instance) {
  Colouring out(instance.size(), Colour::red);
  for (std::size_t pos = 1; pos < instance.size(); ++pos) {
    out[pos] = instance.is_first(pos) ? out[pos - 1] : opposite(out[instance.partner(pos)]);
  }
  return out;
}

Colouring recursive_greedy_solve(const BpspInstance& instance) {
  const std::size_t n = instance.size();
  Colouring out(n, Colour::red);
  std::vector<bool> placed(n, false);

  // Changes contributed by placed cars only, in sequence order.
  auto partial_changes = [&] {
    int changes = 0;
    bool have_prev = false;
    Colour prev = Colour::red;
    for (std::size_t pos = 0; pos < n; ++pos) {
      if (!placed[pos]) continue;
      if (have_prev && out[pos] != prev) ++changes;
      prev = out[pos];
      have_prev = true;
    }
    return changes;
  };

  for (std::size_t pos = 0; pos < n; ++pos) {
    if (!instance.is_first(pos)) continue;
    const std::size_t mate = instance.partner(pos);
    placed[pos] = placed[mate] = true;

    out[pos] = Colour::red;
    out[mate] = Colour::blue;
    const int red_first = partial_changes();
    out[pos] = Colour::blue;
    out[mate] = Colour::red;
    const int blue_first = partial_changes();
    if (red_first <= blue_first) {
      out[pos] = Colour::red;
      out[mate] = Colour::blue;
    }
  }
  return out;
}

}  // namespace paintshop
