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

#ifndef CLIQUEPART_CONSTRUCTIONS_HPP_
#define CLIQUEPART_CONSTRUCTIONS_HPP_

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cliquepart/graph.hpp"
#include "cliquepart/permutation.hpp"

namespace cliquepart {

// The maximal strongly clique-partitioned graph on n blocks of size v:
//   (i,j) ~ (i,l)  for j != l,
//   (i,j) ~ (k,l)  for i < k unless l - j = 0 or 1 (mod v).
// Regular of degree n(v-2)+1. Throws std::invalid_argument unless
// n, v >= 2 and n*v <= kMaxOrder.
Graph gamma(int n, int v);

// K_{nv} minus every edge from (i,0) to a block k > i. The unique maximal
// weakly clique-partitioned graph.
Graph gamma_prime(int n, int v);

// Complete multipartite graph on `order` vertices with `parts` parts whose
// sizes differ by at most one. Vertex u lies in part u mod parts.
Graph turan(int order, int parts);

// Circulant on Z_m: i ~ j iff (i - j) mod m is in `connection`. The set
// must avoid 0 and be closed under negation; throws otherwise.
Graph circulant(int m, const std::set<int>& connection);
// {1, ..., k} together with their negatives mod m.
std::set<int> symmetric_interval(int m, int k);

// The order-nv automorphism of gamma(n, v) walking
// (0,0) -> (1,0) -> ... -> (n-1,0) -> (0,v-1) -> ... -> (n-1,1) -> (0,0).
Permutation sigma_automorphism(int n, int v);

// Between-block edges given as cycles through two blocks.
//
// Each listed cycle alternates between blocks p < q and visits all 2v of
// their vertices once. Consecutive vertices of a cycle are either the
// edges that are MISSING between the two blocks (for a maximal strong
// graph they form a Hamiltonian cycle of K_{v,v}) or the edges that are
// PRESENT (the convention of the fixtures in data/, where
// both sets are 8-cycles). Pairs without a listed cycle get no edges under
// the present convention and all edges under the missing one.
struct CycleSpec {
  enum class Meaning { kMissing, kPresent };

  int n = 0;
  int v = 0;
  Meaning meaning = Meaning::kMissing;
  // Keyed by (p, q) with p < q.
  std::map<std::pair<int, int>, std::vector<int>> cycles;

  BlockLayout layout() const { return {n, v}; }
};

class CycleSpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Throws CycleSpecError on repeated vertices, wrong length, cycles that
// do not alternate between two blocks, or two cycles for one pair.
void validate(const CycleSpec& spec);
Graph from_cycle_spec(const CycleSpec& spec);

// Inverse of from_cycle_spec for graphs whose between-block missing edges
// form one 2v-cycle per pair; the cycle starts at the lowest vertex of
// block p and continues to the smaller of its two neighbours.
CycleSpec missing_cycle_spec(const Graph& g, int n, int v);

// Named records read from the fixture text format:
//
//   # comment
//   name: maximal-4-4-graph1
//   cycles: present
//   group: D32
//   A0,B2,A3,B1,A2,B0,A1,B3
//   A0,C2,A3,C1,A2,C0,A1,C3
//   ...
//   <blank line>
//
// Lines holding ':' are attributes, other non-comment lines are cycles
// given as comma-separated labels. Blank lines end a record. `n` and `v`
// may be given as attributes; otherwise v is half the cycle length and n
// is one more than the largest block letter.
struct FixtureRecord {
  std::string name;
  std::map<std::string, std::string> attributes;
  CycleSpec spec;

  // Attribute value, or an empty string.
  std::string attribute(const std::string& key) const;
};

class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<FixtureRecord> parse_fixtures(std::string_view text);
std::vector<FixtureRecord> load_fixtures(const std::string& path);
std::string format_cycle(const std::vector<int>& cycle,
                         const BlockLayout& layout);

}  // namespace cliquepart

#endif  // CLIQUEPART_CONSTRUCTIONS_HPP_
