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

#ifndef CLIQUEPART_ENUMERATION_HPP_
#define CLIQUEPART_ENUMERATION_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "cliquepart/constructions.hpp"
#include "cliquepart/graph.hpp"

namespace cliquepart {

struct EnumerationOptions {
  // Search-tree node cap; 0 means unlimited.
  std::uint64_t max_nodes = 0;
  // Wall-clock cap in seconds; 0 means unlimited.
  double max_seconds = 0;
  int jobs = 1;
  // Skip the automorphism group of each class.
  bool skip_groups = false;
};

struct EnumeratedGraph {
  // graph6 of the canonical relabeling.
  std::string graph6;
  // Empty when groups were skipped or the graph has more than 32 vertices.
  std::string aut_order;
  std::string group;

  bool operator==(const EnumeratedGraph&) const = default;
};

struct EnumerationReport {
  int n = 0;
  int v = 0;
  // False when a budget ran out; graphs is then a lower bound.
  bool complete = true;
  // Sorted by graph6; pairwise non-isomorphic.
  std::vector<EnumeratedGraph> graphs;
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  double elapsed_seconds = 0;
  int jobs = 1;

  std::size_t count() const { return graphs.size(); }
  bool operator==(const EnumerationReport&) const = default;
};

// All maximal strongly (n, v)-clique-partitioned graphs up to isomorphism.
//
// Every block pair of such a graph misses exactly a Hamiltonian cycle of
// K_{v,v}, so the search assigns one missing cycle per pair in the order
// (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ... Blocks relabel freely, so
// pair (0,1) is fixed and pair (0,q) only needs one cycle per cyclic order
// of block 0. After each pair (p,q) the search rejects any v-clique that
// meets both p and q. Leaves are deduplicated by canonical form. The
// result does not depend on `jobs`.
EnumerationReport enumerate_maximal_strong(int n, int v,
                                           const EnumerationOptions& options = {});

// Exhaustive scans over every labeled graph on n*v vertices with the
// relevant bound's edge count. Sorted canonical graph6 keys of the
// surviving classes. Refused (std::invalid_argument) above 6 vertices, or
// above 8 with allow_slow.
std::vector<std::string> brute_force_maximal_weak(int n, int v,
                                                  bool allow_slow = false);
std::vector<std::string> brute_force_maximal_strong(int n, int v,
                                                    bool allow_slow = false);

// Every Hamiltonian cycle of K_{v,v} exactly once, written as block-local
// columns a0 b0 a1 b1 ... with a0 = 0 (a-entries are one side, b-entries
// the other).
std::vector<std::vector<int>> bipartite_hamiltonian_cycles(int v);

struct RowVerdict {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Checks records of the (3,4) case table: a `clique` attribute names a
// 4-clique that must be present; rows without one must be strongly CP and
// isomorphic to the record named by the `reference` attribute, via the
// permutation in the `permutation` attribute when one is given (it maps
// the reference graph onto the row graph).
std::vector<RowVerdict> verify_case_rows(const std::vector<FixtureRecord>& rows,
                                      const FixtureRecord& reference);

}  // namespace cliquepart

#endif  // CLIQUEPART_ENUMERATION_HPP_
