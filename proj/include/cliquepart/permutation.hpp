// Copyright 2026 The cliquepart Authors
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

#ifndef CLIQUEPART_PERMUTATION_HPP_
#define CLIQUEPART_PERMUTATION_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cliquepart/graph.hpp"

namespace cliquepart {

// A bijection of {0, ..., size-1}; images()[x] is the image of x.
class Permutation {
 public:
  Permutation() = default;
  // Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int size);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  std::span<const int> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  // Least k > 0 with p^k = identity.
  std::uint64_t order() const;
  // Non-trivial cycles, each starting at its smallest point, sorted by it.
  std::vector<std::vector<int>> cycles() const;
  // Smallest point moved, or nullopt for the identity.
  std::optional<int> first_moved() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

// x -> second(first(x)).
Permutation compose(const Permutation& first, const Permutation& second);
Permutation power(const Permutation& p, std::uint64_t k);

// Cycle notation such as "(A1 A3)(B0 B1)"; plain ids when no layout is
// given. The identity renders as "()".
std::string to_cycle_string(const Permutation& p,
                            const std::optional<BlockLayout>& layout =
                                std::nullopt);
// Parses cycle notation; points may be separated by spaces or commas.
// Throws std::invalid_argument on repeated or unknown points.
Permutation parse_cycles(std::string_view text, int size,
                         const std::optional<BlockLayout>& layout =
                             std::nullopt);

// The graph whose edges are {p(u), p(v)} for every edge {u, v} of g.
Graph relabel(const Graph& g, const Permutation& p);

// Exact group orders. 128 bits hold every order arising on <= 34 points.
using GroupOrder = unsigned __int128;
std::string to_string(GroupOrder value);

// Base and strong generating set built by the deterministic Schreier-Sims
// algorithm.
class StabilizerChain {
 public:
  StabilizerChain(int degree, std::span<const Permutation> generators);

  GroupOrder order() const;
  bool contains(const Permutation& g) const;
  std::vector<int> base() const;
  std::vector<int> orbit_sizes() const;

 private:
  struct Level {
    int base_point = 0;
    std::vector<Permutation> generators;
    // transversal[x] maps base_point to x; empty when x is not in the orbit.
    std::vector<std::optional<Permutation>> transversal;
  };

  // Sifts g through levels [from, size). Returns the residue and the level
  // at which sifting stopped (levels_.size() if it passed every level).
  std::pair<Permutation, std::size_t> strip(Permutation g,
                                            std::size_t from) const;
  void rebuild_orbit(std::size_t level);
  void run();

  int degree_;
  std::vector<Level> levels_;
};

// Generators plus the exact order of the group they generate.
struct PermGroup {
  int degree = 0;
  std::vector<Permutation> generators;
  GroupOrder order = 1;
};

PermGroup make_group(int degree, std::vector<Permutation> generators);

// Every element of the group, sorted, or nullopt if there are more than
// `cap` of them.
std::optional<std::vector<Permutation>> group_elements(const PermGroup& group,
                                                       std::size_t cap);

}  // namespace cliquepart

#endif  // CLIQUEPART_PERMUTATION_HPP_
