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

#ifndef CLIQUEPART_PARTITION_HPP_
#define CLIQUEPART_PARTITION_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliquepart/graph.hpp"

namespace cliquepart {

// Disjoint v-cliques covering every vertex, sorted by smallest member.
struct CliquePartition {
  std::vector<VertexSet> blocks;

  bool operator==(const CliquePartition&) const = default;
};

std::string to_string(const CliquePartition& partition,
                      const std::optional<BlockLayout>& layout = std::nullopt);

// Every vertex set of size `size` inducing a complete subgraph, in
// lexicographic order of sorted member lists.
std::vector<VertexSet> enumerate_cliques(const Graph& g, int size);

// Does g contain a clique of `size` vertices that includes `must`?
bool has_clique_through(const Graph& g, int size, VertexSet must,
                        VertexSet allowed);

struct PartitionCount {
  std::uint64_t count = 0;
  // True when the search stopped at the limit; count is then a lower bound.
  bool truncated = false;
  std::vector<CliquePartition> partitions;
};

// Exact number of partitions of the vertex set into `block_size`-cliques,
// found by exact-cover search that always branches on the uncovered vertex
// with the fewest usable cliques. Stops once `limit` partitions are found
// (0 means no limit). Throws std::invalid_argument if the order is not a
// multiple of block_size.
PartitionCount count_clique_partitions(const Graph& g, int block_size,
                                       std::uint64_t limit = 0);

struct CpResult {
  bool holds = false;
  std::optional<CliquePartition> partition;
  // Number of partitions seen (capped at 2 by the weak test).
  std::uint64_t partitions = 0;
  // Number of v-cliques (filled in by the strong test only).
  std::size_t cliques = 0;
};

// Both throw std::invalid_argument unless g has n*v vertices.
CpResult is_weakly_cp(const Graph& g, int n, int v);
CpResult is_strongly_cp(const Graph& g, int n, int v);

// Largest edge count of a strongly CP graph: n*v(v-1)/2 + n*v(n-1)(v-2)/2.
std::int64_t strong_bound(int n, int v);
// Largest edge count of a weakly CP graph: C(nv, 2) - n(n-1)v/2.
std::int64_t weak_bound(int n, int v);

bool is_maximal_strong(const Graph& g, int n, int v);
bool is_maximal_weak(const Graph& g, int n, int v);

// Orientation of the blocks of a maximal weakly CP graph: from -> to when
// a vertex of `from` (its distinguished vertex) has no neighbour in `to`.
class Tournament {
 public:
  explicit Tournament(int n);

  int size() const { return n_; }
  bool beats(int from, int to) const { return arcs_[from * n_ + to]; }
  void set_arc(int from, int to);
  int out_degree(int block) const;
  // Distinguished vertex of a block with outgoing arcs.
  std::optional<int> distinguished(int block) const {
    return distinguished_[block];
  }
  void set_distinguished(int block, int vertex) {
    distinguished_[block] = vertex;
  }
  // Blocks ordered so each beats every later one; nullopt if not acyclic.
  std::optional<std::vector<int>> chain() const;

 private:
  int n_;
  std::vector<bool> arcs_;
  std::vector<std::optional<int>> distinguished_;
};

class WeakStructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Recovers the block tournament of a maximal weakly CP graph. Every pair
// of blocks must have exactly one vertex on one side with no neighbour on
// the other; a block's distinguished vertex must be the same for all its
// outgoing arcs; and the tournament must be transitive. Violations throw
// WeakStructureError naming the blocks involved.
Tournament weak_structure(const Graph& g, const CliquePartition& partition);

}  // namespace cliquepart

#endif  // CLIQUEPART_PARTITION_HPP_
