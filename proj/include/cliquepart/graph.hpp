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

#ifndef CLIQUEPART_GRAPH_HPP_
#define CLIQUEPART_GRAPH_HPP_

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cliquepart {

// One adjacency row per machine word.
inline constexpr int kMaxOrder = 64;

// A set of vertex ids in [0, 64), stored as a bit mask.
class VertexSet {
 public:
  class Iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;

    constexpr Iterator() = default;
    constexpr explicit Iterator(std::uint64_t bits) : bits_(bits) {}
    constexpr int operator*() const { return std::countr_zero(bits_); }
    constexpr Iterator& operator++() {
      bits_ &= bits_ - 1;
      return *this;
    }
    constexpr Iterator operator++(int) {
      Iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const Iterator&) const = default;

   private:
    std::uint64_t bits_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  // {0, 1, ..., count - 1}
  static constexpr VertexSet first_n(int count) {
    return VertexSet(count >= 64 ? ~std::uint64_t{0}
                                 : (std::uint64_t{1} << count) - 1);
  }
  static constexpr VertexSet single(int v) {
    return VertexSet(std::uint64_t{1} << v);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  // Smallest member; undefined on the empty set.
  constexpr int first() const { return std::countr_zero(bits_); }
  constexpr bool is_subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  constexpr Iterator begin() const { return Iterator(bits_); }
  constexpr Iterator end() const { return Iterator(0); }

  std::vector<int> to_vector() const { return {begin(), end()}; }

  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & b.bits_);
  }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ | b.bits_);
  }
  // Set difference.
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & ~b.bits_);
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr auto operator<=>(const VertexSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

// Undirected simple graph on at most kMaxOrder vertices.
//
// The adjacency matrix is kept symmetric with a zero diagonal. Graph is a
// plain value: copies are independent and nothing is shared, so a search
// can copy a parent and edit the copy.
class Graph {
 public:
  Graph() = default;
  // Edgeless graph. Throws std::invalid_argument if order is outside
  // [0, kMaxOrder].
  explicit Graph(int order);

  int order() const { return order_; }
  VertexSet vertices() const { return VertexSet::first_n(order_); }

  bool has_edge(int u, int v) const;
  // Idempotent. Throws std::invalid_argument on loops and std::out_of_range
  // on bad ids.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;

  VertexSet neighbors(int u) const { return VertexSet(rows_[u]); }
  std::uint64_t row(int u) const { return rows_[u]; }
  int degree(int u) const { return std::popcount(rows_[u]); }
  int edge_count() const;
  // The common degree, or nullopt if the graph is not regular. The empty
  // graph is reported as 0-regular.
  std::optional<int> regular_degree() const;

  // Edges as (u, v) pairs with u < v, in row-major order.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph&) const = default;
  // Orders by vertex count, then rows lexicographically.
  std::strong_ordering operator<=>(const Graph& other) const;

 private:
  void check_pair(int u, int v) const;

  int order_ = 0;
  std::array<std::uint64_t, kMaxOrder> rows_{};
};

Graph complete_graph(int order);
Graph complement(const Graph& g);
// Vertices of `keep` are relabeled 0..|keep|-1 in increasing id order.
Graph induced_subgraph(const Graph& g, VertexSet keep);

// The (clique i, column j) <-> i*v + j labeling used by every construction.
//
// Printable labels use a block letter (A-Z, then a-z) and a column number:
// A0, B3, C12.
struct BlockLayout {
  int blocks = 0;
  int block_size = 0;

  int order() const { return blocks * block_size; }
  int id(int block, int column) const { return block * block_size + column; }
  int block_of(int id) const { return id / block_size; }
  int column_of(int id) const { return id % block_size; }
  VertexSet block(int i) const {
    return VertexSet(VertexSet::first_n(block_size).bits() << (i * block_size));
  }
  std::string label(int id) const;
  // Inverse of label(). Throws std::invalid_argument on malformed input.
  int parse_label(std::string_view text) const;
};

// graph6 codec (header-free on output; ">>graph6<<" accepted on input).
class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

// Graphviz rendering. With a layout, nodes are labeled "ij" for vertex
// (i, j).
std::string to_dot(const Graph& g,
                   const std::optional<BlockLayout>& layout = std::nullopt);

}  // namespace cliquepart

#endif  // CLIQUEPART_GRAPH_HPP_
