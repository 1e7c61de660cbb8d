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

#include "cliquepart/graph.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <string>

namespace cliquepart {

Graph::Graph(int order) : order_(order) {
  if (order < 0 || order > kMaxOrder) {
    throw std::invalid_argument("graph order " + std::to_string(order) +
                                " outside [0, 64]");
  }
}

void Graph::check_pair(int u, int v) const {
  if (u < 0 || v < 0 || u >= order_ || v >= order_) {
    throw std::out_of_range("vertex id out of range");
  }
  if (u == v) throw std::invalid_argument("loops are not allowed");
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= order_ || v >= order_) {
    throw std::out_of_range("vertex id out of range");
  }
  return (rows_[u] >> v) & 1U;
}

void Graph::add_edge(int u, int v) {
  check_pair(u, v);
  rows_[u] |= std::uint64_t{1} << v;
  rows_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
  check_pair(u, v);
  rows_[u] &= ~(std::uint64_t{1} << v);
  rows_[v] &= ~(std::uint64_t{1} << u);
}

Graph Graph::with_edge(int u, int v) const {
  Graph g = *this;
  g.add_edge(u, v);
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  Graph g = *this;
  g.remove_edge(u, v);
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int u = 0; u < order_; ++u) twice += std::popcount(rows_[u]);
  return twice / 2;
}

std::optional<int> Graph::regular_degree() const {
  if (order_ == 0) return 0;
  const int d = degree(0);
  for (int u = 1; u < order_; ++u) {
    if (degree(u) != d) return std::nullopt;
  }
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order_; ++u) {
    for (int v : VertexSet(rows_[u]) - VertexSet::first_n(u + 1)) {
      out.emplace_back(u, v);
    }
  }
  return out;
}

std::strong_ordering Graph::operator<=>(const Graph& other) const {
  if (auto c = order_ <=> other.order_; c != 0) return c;
  return std::lexicographical_compare_three_way(
      rows_.begin(), rows_.begin() + order_, other.rows_.begin(),
      other.rows_.begin() + order_);
}

Graph complete_graph(int order) {
  Graph g(order);
  for (int u = 0; u < order; ++u) {
    for (int v = u + 1; v < order; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.has_edge(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
  if (!keep.is_subset_of(g.vertices())) {
    throw std::out_of_range("induced_subgraph: vertex outside the graph");
  }
  const std::vector<int> kept = keep.to_vector();
  Graph out(static_cast<int>(kept.size()));
  for (std::size_t a = 0; a < kept.size(); ++a) {
    for (std::size_t b = a + 1; b < kept.size(); ++b) {
      if (g.has_edge(kept[a], kept[b])) {
        out.add_edge(static_cast<int>(a), static_cast<int>(b));
      }
    }
  }
  return out;
}

std::string BlockLayout::label(int id) const {
  const int b = block_of(id);
  std::string out;
  out.push_back(static_cast<char>(b < 26 ? 'A' + b : 'a' + (b - 26)));
  out += std::to_string(column_of(id));
  return out;
}

int BlockLayout::parse_label(std::string_view text) const {
  auto fail = [&] {
    throw std::invalid_argument("bad vertex label '" + std::string(text) + "'");
  };
  if (text.size() < 2) fail();
  int b = 0;
  if (text[0] >= 'A' && text[0] <= 'Z') {
    b = text[0] - 'A';
  } else if (text[0] >= 'a' && text[0] <= 'z') {
    b = 26 + (text[0] - 'a');
  } else {
    fail();
  }
  int col = 0;
  const char* first = text.data() + 1;
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, col);
  if (ec != std::errc{} || ptr != last) fail();
  if (b >= blocks || col < 0 || col >= block_size) fail();
  return id(b, col);
}

}  // namespace cliquepart
