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

#include "cliquepart/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace cliquepart::oracle {
namespace {

bool maps_onto(const Graph& g, const Graph& h, const std::vector<int>& p) {
  for (int u = 0; u < g.order(); ++u) {
    for (int w = u + 1; w < g.order(); ++w) {
      if (g.has_edge(u, w) != h.has_edge(p[u], p[w])) return false;
    }
  }
  return true;
}

bool all_adjacent(const Graph& g, const std::vector<int>& s) {
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (!g.has_edge(s[a], s[b])) return false;
    }
  }
  return true;
}

// Fills blocks greedily: the lowest unassigned vertex opens a block and
// every (size-1)-subset of the remaining unassigned vertices completes it.
std::uint64_t count_partitions(const Graph& g, int block_size,
                               std::vector<bool>& used, int remaining) {
  if (remaining == 0) return 1;
  int lead = 0;
  while (used[lead]) ++lead;
  std::vector<int> rest;
  for (int u = lead + 1; u < g.order(); ++u) {
    if (!used[u]) rest.push_back(u);
  }
  std::uint64_t total = 0;
  std::vector<bool> pick(rest.size(), false);
  std::fill(pick.begin(), pick.begin() + (block_size - 1), true);
  do {
    std::vector<int> block{lead};
    for (std::size_t k = 0; k < rest.size(); ++k) {
      if (pick[k]) block.push_back(rest[k]);
    }
    if (!all_adjacent(g, block)) continue;
    for (int u : block) used[u] = true;
    total += count_partitions(g, block_size, used, remaining - block_size);
    for (int u : block) used[u] = false;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return total;
}

}  // namespace

bool isomorphic_by_permutations(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  std::vector<int> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    if (maps_onto(g, h, p)) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

std::uint64_t automorphism_count(const Graph& g) {
  std::vector<int> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t count = 0;
  do {
    if (maps_onto(g, g, p)) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

std::uint64_t partition_count(const Graph& g, int block_size) {
  if (g.order() % block_size != 0) return 0;
  std::vector<bool> used(g.order(), false);
  return count_partitions(g, block_size, used, g.order());
}

std::uint64_t clique_count(const Graph& g, int size) {
  if (size > g.order()) return 0;
  std::vector<bool> pick(g.order(), false);
  std::fill(pick.begin(), pick.begin() + size, true);
  std::uint64_t count = 0;
  do {
    std::vector<int> s;
    for (int u = 0; u < g.order(); ++u) {
      if (pick[u]) s.push_back(u);
    }
    if (all_adjacent(g, s)) ++count;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return count;
}

Graph random_graph(int order, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  Graph g(order);
  for (int u = 0; u < order; ++u) {
    for (int w = u + 1; w < order; ++w) {
      if (coin(rng)) g.add_edge(u, w);
    }
  }
  return g;
}

Graph shuffle_labels(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  Graph out(g.order());
  for (auto [u, w] : g.edges()) out.add_edge(p[u], p[w]);
  return out;
}

}  // namespace cliquepart::oracle
