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

#include <random>

#include "cliquepart/constructions.hpp"
#include "cliquepart/graph.hpp"
#include "cliquepart/oracle.hpp"
#include "cliquepart/symmetry.hpp"
#include "doctest.h"

using namespace cliquepart;

namespace {

int count_substr(const std::string& s, const std::string& needle) {
  int n = 0;
  for (auto p = s.find(needle); p != std::string::npos;
       p = s.find(needle, p + 1)) {
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("vertex sets") {
  VertexSet s;
  CHECK(s.empty());
  s.insert(3);
  s.insert(63);
  CHECK(s.size() == 2);
  CHECK(s.first() == 3);
  CHECK(s.contains(63));
  CHECK(s.to_vector() == std::vector<int>{3, 63});
  s.erase(3);
  CHECK(s == VertexSet::single(63));
  CHECK(VertexSet::first_n(64).size() == 64);
  CHECK(VertexSet::first_n(0).empty());
  const VertexSet a = VertexSet::first_n(4);
  const VertexSet b = VertexSet::single(2) | VertexSet::single(5);
  CHECK((a & b) == VertexSet::single(2));
  CHECK((a - b).size() == 3);
  CHECK(VertexSet::single(1).is_subset_of(a));
  CHECK_FALSE(b.is_subset_of(a));
}

TEST_CASE("new graphs are edgeless") {
  CHECK(Graph(0).order() == 0);
  CHECK(Graph(0).edge_count() == 0);
  CHECK(Graph(16).edge_count() == 0);
  CHECK(Graph(64).order() == 64);
  CHECK_THROWS_AS(Graph(65), std::invalid_argument);
  CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
}

TEST_CASE("edge edits") {
  Graph g(4);
  for (int u = 0; u < 4; ++u) {
    for (int w = u + 1; w < 4; ++w) g.add_edge(u, w);
  }
  CHECK(g.edge_count() == 6);
  CHECK(g == complete_graph(4));

  Graph h(2);
  h.add_edge(0, 1);
  h.add_edge(1, 0);
  CHECK(h.edge_count() == 1);
  CHECK(h.has_edge(1, 0));
  h.remove_edge(0, 1);
  CHECK(h == Graph(2));
  CHECK(g.without_edge(0, 1).with_edge(0, 1) == g);

  CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 4), std::out_of_range);
  CHECK_THROWS_AS(g.has_edge(-1, 0), std::out_of_range);
  CHECK_THROWS_AS(g.remove_edge(1, 1), std::invalid_argument);
}

TEST_CASE("adjacency rule excludes equal columns") {
  const Graph g = gamma(2, 3);
  CHECK_FALSE(g.has_edge(0, 3));
  CHECK_FALSE(g.has_edge(0, 4));
  CHECK(g.has_edge(0, 5));
}

TEST_CASE("regular degree") {
  CHECK(complete_graph(5).regular_degree() == 4);
  CHECK(Graph(3).regular_degree() == 0);
  Graph p(3);
  p.add_edge(0, 1);
  CHECK_FALSE(p.regular_degree().has_value());
}

TEST_CASE("complement") {
  CHECK(complement(complete_graph(4)) == Graph(4));
  const Graph c = complement(gamma(2, 3));
  CHECK(c.edge_count() == 6);
  CHECK(c.regular_degree() == 2);
  CHECK(complement(gamma(4, 4)).regular_degree() == 6);
  CHECK(complement(Graph(0)) == Graph(0));
}

TEST_CASE("induced subgraphs") {
  const BlockLayout l3{3, 3};
  const Graph two = induced_subgraph(gamma(3, 3), l3.block(0) | l3.block(1));
  CHECK(two.order() == 6);
  CHECK(are_isomorphic(two, gamma(2, 3)));
  CHECK(induced_subgraph(gamma(3, 3), VertexSet{}) == Graph(0));

  const BlockLayout l4{4, 4};
  const Graph weak =
      induced_subgraph(gamma_prime(4, 4), l4.block(0) | l4.block(1));
  CHECK(are_isomorphic(weak, gamma_prime(2, 4)));

  // Sorted order is kept.
  Graph path(4);
  path.add_edge(1, 3);
  const Graph sub =
      induced_subgraph(path, VertexSet::single(1) | VertexSet::single(3));
  CHECK(sub.has_edge(0, 1));
}

TEST_CASE("graph6 known strings") {
  CHECK(to_graph6(Graph(2)) == "A?");
  CHECK(to_graph6(complete_graph(2)) == "A_");
  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK(to_graph6(Graph(5)) == "D??");
  CHECK(to_graph6(Graph(0)) == "?");
  CHECK(from_graph6("C~") == complete_graph(4));
  CHECK(from_graph6("?") == Graph(0));
}

TEST_CASE("graph6 long form") {
  const std::string s = to_graph6(Graph(63));
  CHECK(s.substr(0, 4) == std::string("~??~"));
  CHECK(from_graph6(s) == Graph(63));
  CHECK(from_graph6(to_graph6(complete_graph(64))) == complete_graph(64));
}

TEST_CASE("graph6 errors") {
  CHECK_THROWS_AS(from_graph6(""), Graph6Error);
  CHECK_THROWS_AS(from_graph6("C\x01"), Graph6Error);
  CHECK_THROWS_AS(from_graph6("C~~"), Graph6Error);
  CHECK_THROWS_AS(from_graph6("C"), Graph6Error);
  // K2 with a stray padding bit.
  CHECK_THROWS_AS(from_graph6("A`"), Graph6Error);
  // 65 vertices.
  CHECK_THROWS_AS(from_graph6("~??\x80"), Graph6Error);
}

TEST_CASE("graph6 round trips") {
  CHECK(from_graph6(to_graph6(gamma(4, 4))) == gamma(4, 4));
  std::mt19937_64 rng(7);
  for (int order : {1, 2, 5, 12, 31, 62, 63, 64}) {
    for (double d : {0.1, 0.5, 0.9}) {
      const Graph g = oracle::random_graph(order, d, rng);
      CHECK(from_graph6(to_graph6(g)) == g);
    }
  }
}

TEST_CASE("DOT output") {
  const std::string k2 = to_dot(complete_graph(2));
  CHECK(count_substr(k2, " -- ") == 1);
  const std::string prism = to_dot(gamma(2, 3), BlockLayout{2, 3});
  CHECK(count_substr(prism, " -- ") == 9);
  CHECK(prism.find("label=\"12\"") != std::string::npos);
  const std::string empty = to_dot(Graph(0));
  CHECK(count_substr(empty, "\n") == 2);
  CHECK(empty.rfind("graph G {", 0) == 0);
}

TEST_CASE("random graph properties") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const int order = static_cast<int>(rng() % 20);
    const Graph g = oracle::random_graph(order, 0.4, rng);
    CHECK(complement(complement(g)) == g);
    CHECK(g.edge_count() + complement(g).edge_count() ==
          order * (order - 1) / 2);
    CHECK(induced_subgraph(g, g.vertices()) == g);
    int sum = 0;
    for (int u = 0; u < order; ++u) {
      CHECK_FALSE(g.has_edge(u, u));
      sum += g.degree(u);
      for (int w = 0; w < order; ++w) {
        if (u != w) CHECK(g.has_edge(u, w) == g.has_edge(w, u));
      }
    }
    CHECK(sum == 2 * g.edge_count());
  }
}

TEST_CASE("block labels") {
  const BlockLayout l{4, 4};
  CHECK(l.label(0) == "A0");
  CHECK(l.label(13) == "D1");
  CHECK(l.parse_label("C2") == 10);
  CHECK_THROWS_AS(l.parse_label("E0"), std::invalid_argument);
  CHECK_THROWS_AS(l.parse_label("A4"), std::invalid_argument);
  CHECK_THROWS_AS(l.parse_label(""), std::invalid_argument);
  const BlockLayout wide{30, 2};
  CHECK(wide.label(wide.id(27, 1)) == "b1");
  CHECK(wide.parse_label("b1") == wide.id(27, 1));
}
