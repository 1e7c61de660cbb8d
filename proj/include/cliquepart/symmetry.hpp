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

#ifndef CLIQUEPART_SYMMETRY_HPP_
#define CLIQUEPART_SYMMETRY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cliquepart/graph.hpp"
#include "cliquepart/permutation.hpp"

namespace cliquepart {

// Canonical labeling of a graph.
//
// Computed by individualization-refinement: cells are split by the count
// of neighbours in every current cell until stable, then the first
// largest non-singleton cell is individualized vertex by vertex (lowest
// first). The canonical graph is the least relabeling over all leaves.
// Subtrees shown equivalent by automorphisms found along the way are
// skipped.
struct CanonicalForm {
  // labeling(u) is the canonical position of vertex u.
  Permutation labeling;
  Graph graph;
  // to_graph6(graph): equal for two graphs iff they are isomorphic.
  std::string key;
  // Automorphism generators discovered during the search.
  std::vector<Permutation> automorphisms;
  std::uint64_t nodes = 0;
};

CanonicalForm canonical_form(const Graph& g);
inline std::string canonical_key(const Graph& g) {
  return canonical_form(g).key;
}

// A bijection p with relabel(g, p) == h, verified before it is returned.
std::optional<Permutation> find_isomorphism(const Graph& g, const Graph& h);
inline bool are_isomorphic(const Graph& g, const Graph& h) {
  return find_isomorphism(g, h).has_value();
}

// Throws std::invalid_argument when p and g differ in size.
bool is_automorphism(const Graph& g, const Permutation& p);

// Generators (each verified) and exact order. Throws std::invalid_argument
// above 32 vertices.
PermGroup automorphism_group(const Graph& g);

enum class GroupKind {
  kTrivial,
  kCyclic,
  kDihedral,
  kElementaryAbelian,
  kOther,
};

struct GroupStructure {
  GroupKind kind = GroupKind::kOther;
  GroupOrder order = 1;
  bool abelian = false;

  // "trivial", "cyclic 2", "dihedral 32", "elementary-abelian 4", "other".
  std::string tag() const;
  // Short name: 1, Z2, D32, Z2xZ2.
  std::string symbol() const;
};

// Classified from the element-order census; groups above 65536 elements
// are reported as kOther.
GroupStructure identify_group(const PermGroup& group);

}  // namespace cliquepart

#endif  // CLIQUEPART_SYMMETRY_HPP_
