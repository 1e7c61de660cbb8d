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

#include "cliquepart/partition.hpp"

#include <algorithm>
#include <numeric>

namespace cliquepart {
namespace {

void collect_cliques(const Graph& g, int remaining, VertexSet current,
                     VertexSet candidates, std::vector<VertexSet>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  if (candidates.size() < remaining) return;
  for (int u : candidates) {
    // Only extend by larger ids, so each clique is produced once.
    const VertexSet later(candidates.bits() & ~((std::uint64_t{2} << u) - 1));
    VertexSet next = current;
    next.insert(u);
    collect_cliques(g, remaining - 1, next, later & g.neighbors(u), out);
  }
}

bool clique_exists(const Graph& g, int remaining, VertexSet candidates) {
  if (remaining == 0) return true;
  if (candidates.size() < remaining) return false;
  for (int u : candidates) {
    const VertexSet later(candidates.bits() & ~((std::uint64_t{2} << u) - 1));
    if (clique_exists(g, remaining - 1, later & g.neighbors(u))) return true;
  }
  return false;
}

class ExactCover {
 public:
  ExactCover(const Graph& g, int block_size, std::uint64_t limit)
      : limit_(limit), by_vertex_(g.order()) {
    cliques_ = enumerate_cliques(g, block_size);
    for (std::size_t c = 0; c < cliques_.size(); ++c) {
      for (int u : cliques_[c]) by_vertex_[u].push_back(c);
    }
  }

  PartitionCount run(VertexSet all) {
    search(all);
    return std::move(result_);
  }

 private:
  bool search(VertexSet uncovered) {
    if (uncovered.empty()) {
      ++result_.count;
      if (limit_ > 0) {
        CliquePartition p{chosen_};
        std::sort(p.blocks.begin(), p.blocks.end(),
                  [](VertexSet a, VertexSet b) { return a.first() < b.first(); });
        result_.partitions.push_back(std::move(p));
        if (result_.count >= limit_) {
          result_.truncated = true;
          return true;
        }
      }
      return false;
    }
    int best = -1;
    std::size_t best_options = SIZE_MAX;
    for (int u : uncovered) {
      std::size_t options = 0;
      for (std::size_t c : by_vertex_[u]) {
        if (cliques_[c].is_subset_of(uncovered)) ++options;
      }
      if (options < best_options) {
        best_options = options;
        best = u;
        if (options == 0) return false;
      }
    }
    for (std::size_t c : by_vertex_[best]) {
      if (!cliques_[c].is_subset_of(uncovered)) continue;
      chosen_.push_back(cliques_[c]);
      const bool stop = search(uncovered - cliques_[c]);
      chosen_.pop_back();
      if (stop) return true;
    }
    return false;
  }

  std::uint64_t limit_;
  std::vector<VertexSet> cliques_;
  std::vector<std::vector<std::size_t>> by_vertex_;
  std::vector<VertexSet> chosen_;
  PartitionCount result_;
};

void check_order(const Graph& g, int n, int v) {
  if (n < 1 || v < 1 || g.order() != n * v) {
    throw std::invalid_argument("graph order " + std::to_string(g.order()) +
                                " does not equal n*v = " +
                                std::to_string(n * v));
  }
}

std::string block_name(const CliquePartition& partition, int b) {
  std::string out = "block " + std::to_string(b) + " {";
  bool first = true;
  for (int u : partition.blocks[b]) {
    if (!first) out += ',';
    out += std::to_string(u);
    first = false;
  }
  return out + "}";
}

}  // namespace

std::string to_string(const CliquePartition& partition,
                      const std::optional<BlockLayout>& layout) {
  std::string out;
  for (const VertexSet block : partition.blocks) {
    if (!out.empty()) out += ' ';
    out += '{';
    bool first = true;
    for (int u : block) {
      if (!first) out += ',';
      out += layout ? layout->label(u) : std::to_string(u);
      first = false;
    }
    out += '}';
  }
  return out;
}

std::vector<VertexSet> enumerate_cliques(const Graph& g, int size) {
  std::vector<VertexSet> out;
  if (size < 1) throw std::invalid_argument("clique size must be positive");
  collect_cliques(g, size, VertexSet{}, g.vertices(), out);
  return out;
}

bool has_clique_through(const Graph& g, int size, VertexSet must,
                        VertexSet allowed) {
  VertexSet candidates = allowed - must;
  for (int u : must) {
    if (!(must - VertexSet::single(u)).is_subset_of(g.neighbors(u))) {
      return false;
    }
    candidates &= g.neighbors(u);
  }
  return clique_exists(g, size - must.size(), candidates);
}

PartitionCount count_clique_partitions(const Graph& g, int block_size,
                                       std::uint64_t limit) {
  if (block_size < 1 || g.order() % block_size != 0) {
    throw std::invalid_argument("order " + std::to_string(g.order()) +
                                " is not divisible by " +
                                std::to_string(block_size));
  }
  return ExactCover(g, block_size, limit).run(g.vertices());
}

CpResult is_weakly_cp(const Graph& g, int n, int v) {
  check_order(g, n, v);
  PartitionCount pc = count_clique_partitions(g, v, 2);
  CpResult r;
  r.partitions = pc.count;
  r.holds = pc.count == 1;
  if (r.holds) r.partition = pc.partitions.front();
  return r;
}

CpResult is_strongly_cp(const Graph& g, int n, int v) {
  check_order(g, n, v);
  const auto cliques = enumerate_cliques(g, v);
  CpResult r;
  r.cliques = cliques.size();
  if (static_cast<int>(cliques.size()) != n) return r;
  VertexSet covered;
  for (VertexSet c : cliques) {
    if (!(c & covered).empty()) return r;
    covered |= c;
  }
  if (covered != g.vertices()) return r;
  r.holds = true;
  r.partitions = 1;
  CliquePartition p{cliques};
  std::sort(p.blocks.begin(), p.blocks.end(),
            [](VertexSet a, VertexSet b) { return a.first() < b.first(); });
  r.partition = std::move(p);
  return r;
}

std::int64_t strong_bound(int n, int v) {
  const std::int64_t nn = n;
  const std::int64_t vv = v;
  return nn * vv * (vv - 1) / 2 + nn * vv * (nn - 1) * (vv - 2) / 2;
}

std::int64_t weak_bound(int n, int v) {
  const std::int64_t order = std::int64_t{n} * v;
  return order * (order - 1) / 2 - std::int64_t{n} * (n - 1) * v / 2;
}

bool is_maximal_strong(const Graph& g, int n, int v) {
  check_order(g, n, v);
  return g.edge_count() == strong_bound(n, v) && is_strongly_cp(g, n, v).holds;
}

bool is_maximal_weak(const Graph& g, int n, int v) {
  check_order(g, n, v);
  return g.edge_count() == weak_bound(n, v) && is_weakly_cp(g, n, v).holds;
}

Tournament::Tournament(int n)
    : n_(n), arcs_(static_cast<std::size_t>(n) * n, false),
      distinguished_(n) {}

void Tournament::set_arc(int from, int to) {
  arcs_[from * n_ + to] = true;
  arcs_[to * n_ + from] = false;
}

int Tournament::out_degree(int block) const {
  int d = 0;
  for (int t = 0; t < n_; ++t) d += beats(block, t) ? 1 : 0;
  return d;
}

std::optional<std::vector<int>> Tournament::chain() const {
  std::vector<int> order(n_);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return out_degree(a) > out_degree(b);
  });
  for (int a = 0; a < n_; ++a) {
    for (int b = a + 1; b < n_; ++b) {
      if (!beats(order[a], order[b])) return std::nullopt;
    }
  }
  return order;
}

Tournament weak_structure(const Graph& g, const CliquePartition& partition) {
  const int n = static_cast<int>(partition.blocks.size());
  Tournament t(n);
  auto isolated_from = [&](int from, int to) {
    VertexSet out;
    for (int x : partition.blocks[from]) {
      if ((g.neighbors(x) & partition.blocks[to]).empty()) out.insert(x);
    }
    return out;
  };

  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      const VertexSet xp = isolated_from(p, q);
      const VertexSet xq = isolated_from(q, p);
      const std::string pair =
          block_name(partition, p) + " and " + block_name(partition, q);
      if (xp.empty() && xq.empty()) {
        throw WeakStructureError("no direction between " + pair);
      }
      if (!xp.empty() && !xq.empty()) {
        throw WeakStructureError("both directions between " + pair);
      }
      const auto [from, to, dist] =
          xp.empty() ? std::tuple{q, p, xq} : std::tuple{p, q, xp};
      if (dist.size() != 1) {
        throw WeakStructureError("several isolated vertices between " + pair);
      }
      t.set_arc(from, to);
      const int x = dist.first();
      if (auto prev = t.distinguished(from); prev && *prev != x) {
        throw WeakStructureError("distinguished vertices conflict in " +
                                 block_name(partition, from) + " (vertices " +
                                 std::to_string(*prev) + " and " +
                                 std::to_string(x) + ")");
      }
      t.set_distinguished(from, x);
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (a != b && b != c && a != c && t.beats(a, b) && t.beats(b, c) &&
            t.beats(c, a)) {
          throw WeakStructureError(
              "directed 3-cycle " + block_name(partition, a) + " -> " +
              block_name(partition, b) + " -> " + block_name(partition, c));
        }
      }
    }
  }
  return t;
}

}  // namespace cliquepart
