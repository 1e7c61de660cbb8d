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

#ifndef CLIQUEPART_ORACLE_HPP_
#define CLIQUEPART_ORACLE_HPP_

// Exhaustive reference routines for small graphs. They share no code with
// the search routines they are used to check.

#include <cstdint>
#include <random>

#include "cliquepart/graph.hpp"

namespace cliquepart::oracle {

// All permutations are tried; intended for at most 8 vertices.
bool isomorphic_by_permutations(const Graph& g, const Graph& h);
std::uint64_t automorphism_count(const Graph& g);

// Partitions into `block_size`-cliques counted over every set partition
// of the vertices into blocks of that size.
std::uint64_t partition_count(const Graph& g, int block_size);

// Number of `size`-subsets that are cliques, by subset enumeration.
std::uint64_t clique_count(const Graph& g, int size);

// G(n, 1/2) style random graph with edge probability `density`.
Graph random_graph(int order, double density, std::mt19937_64& rng);
// Uniformly random relabeling.
Graph shuffle_labels(const Graph& g, std::mt19937_64& rng);

}  // namespace cliquepart::oracle

#endif  // CLIQUEPART_ORACLE_HPP_
