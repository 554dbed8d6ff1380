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
#include <span>
#include <vector>

namespace paintshop {

/// Colour convention used everywhere: red = 0 = spin +1, blue = 1 = spin -1.
enum class Colour : std::uint8_t { red = 0, blue = 1 };

inline Colour opposite(Colour c) { return c == Colour::red ? Colour::blue : Colour::red; }

using Colouring = std::vector<Colour>;

/// A binary paint shop instance: a sequence of 2N car slots in which each of
/// the N body types 0..N-1 appears exactly twice.
class BpspInstance {
 public:
  /// Throws invalid-argument unless every body 0..n_bodies-1 occurs exactly twice.
  BpspInstance(int n_bodies, std::vector<int> sequence);

  int n_bodies() const { return n_bodies_; }
  std::size_t size() const { return sequence_.size(); }
  std::span<const int> sequence() const { return sequence_; }
  int body(std::size_t pos) const { return sequence_[pos]; }

  /// True when `pos` holds the first occurrence of its body.
  bool is_first(std::size_t pos) const { return first_[pos]; }
  /// Position of the other car with the same body.
  std::size_t partner(std::size_t pos) const { return partner_[pos]; }
  /// Position of the first occurrence of `body`.
  std::size_t first_position(int body) const { return first_pos_[body]; }

  friend bool operator==(const BpspInstance& a, const BpspInstance& b) {
    return a.n_bodies_ == b.n_bodies_ && a.sequence_ == b.sequence_;
  }

 private:
  int n_bodies_;
  std::vector<int> sequence_;
  std::vector<bool> first_;
  std::vector<std::size_t> partner_;
  std::vector<std::size_t> first_pos_;
};

/// Uniform random arrangement of {0,0,1,1,...,N-1,N-1} by Fisher-Yates.
BpspInstance generate_random(int n_bodies, std::uint64_t seed);

/// Throws constraint-violation on wrong length or a pair painted alike.
void validate_colouring(const BpspInstance& instance, const Colouring& colouring);

/// Number of adjacent positions with differing colours.
int colour_changes(const BpspInstance& instance, const Colouring& colouring);

/// Red-first greedy: first car red, each free car copies its predecessor,
/// second occurrences are forced to the complement of their partner.
Colouring greedy_solve(const BpspInstance& instance);

/// Bodies are inserted in order of first appearance; each pair is oriented to
/// minimise the colour changes of the partial sequence (ties: red first).
Colouring recursive_greedy_solve(const BpspInstance& instance);

}  // namespace paintshop
