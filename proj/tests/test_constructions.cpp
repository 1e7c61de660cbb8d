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

#include <algorithm>

#include "cliquepart/constructions.hpp"
#include "cliquepart/oracle.hpp"
#include "cliquepart/partition.hpp"
#include "cliquepart/symmetry.hpp"
#include "doctest.h"

using namespace cliquepart;

namespace {

std::vector<int> ids(const BlockLayout& l, std::initializer_list<const char*> labels) {
  std::vector<int> out;
  for (const char* s : labels) out.push_back(l.parse_label(s));
  return out;
}

}  // namespace

TEST_CASE("gamma small cases") {
  const Graph prism = gamma(2, 3);
  CHECK(prism.edge_count() == 9);
  CHECK(prism.regular_degree() == 3);

  for (int n = 2; n <= 6; ++n) {
    const Graph g = gamma(n, 2);
    CHECK(g.edge_count() == n);
    CHECK(g.regular_degree() == 1);
    for (int i = 0; i < n; ++i) CHECK(g.has_edge(2 * i, 2 * i + 1));
  }

  const Graph g44 = gamma(4, 4);
  CHECK(g44.order() == 16);
  CHECK(g44.edge_count() == 72);
  CHECK(g44.regular_degree() == 9);
}

TEST_CASE("gamma argument errors") {
  CHECK_THROWS_AS(gamma(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(gamma(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(gamma(5, 13), std::invalid_argument);
  CHECK_NOTHROW(gamma(2, 32));
  CHECK_THROWS_AS(gamma_prime(9, 8), std::invalid_argument);
}

TEST_CASE("gamma and gamma-prime over a range") {
  for (int n = 2; n <= 8; ++n) {
    for (int v = 2; v <= 8; ++v) {
      CAPTURE(n);
      CAPTURE(v);
      const Graph g = gamma(n, v);
      CHECK(g.regular_degree() == n * (v - 2) + 1);
      CHECK(g.edge_count() == strong_bound(n, v));
      CHECK(is_automorphism(g, sigma_automorphism(n, v)));
      CHECK(gamma_prime(n, v).edge_count() == weak_bound(n, v));
      CHECK(gamma_prime(n, v).edge_count() == turan(n * v, v).edge_count());
    }
  }
}

TEST_CASE("column property") {
  for (int n = 2; n <= 5; ++n) {
    for (int v = 2; v <= 5; ++v) {
      for (VertexSet c : enumerate_cliques(gamma(n, v), v)) {
        std::set<int> columns;
        for (int u : c) columns.insert(u % v);
        CHECK(static_cast<int>(columns.size()) == v);
      }
    }
  }
}

TEST_CASE("gamma-prime small cases") {
  const Graph g = gamma_prime(2, 2);
  CHECK(g.edge_count() == 4);
  CHECK(oracle::partition_count(g, 2) == 1);
  CHECK(gamma_prime(2, 3).edge_count() == 12);
  CHECK(gamma_prime(4, 4).edge_count() == 96);
  // (0,0) misses block 1 entirely.
  const Graph h = gamma_prime(3, 3);
  for (int w = 3; w < 9; ++w) CHECK_FALSE(h.has_edge(0, w));
  CHECK(h.has_edge(1, 3));
}

TEST_CASE("turan graphs") {
  const Graph t = turan(16, 4);
  CHECK(t.edge_count() == 96);
  CHECK(t.regular_degree() == 12);
  CHECK(are_isomorphic(turan(4, 2), circulant(4, {1, 3})));
  CHECK(turan(5, 5) == complete_graph(5));
  CHECK(turan(7, 3).edge_count() == 16);
  CHECK_THROWS_AS(turan(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(turan(3, 0), std::invalid_argument);
}

TEST_CASE("circulants") {
  CHECK(are_isomorphic(circulant(16, {1, 3, 4, 6, 8, 10, 12, 13, 15}), gamma(4, 4)));
  const Graph c5 = circulant(5, {1, 4});
  CHECK(c5.regular_degree() == 2);
  CHECK(c5.edge_count() == 5);
  CHECK(circulant(6, {1, 2, 3, 4, 5}) == complete_graph(6));
  CHECK(symmetric_interval(10, 2) == std::set<int>{1, 2, 8, 9});
  CHECK_THROWS_AS(circulant(5, {0, 1, 4}), std::invalid_argument);
  CHECK_THROWS_AS(circulant(5, {1}), std::invalid_argument);
  CHECK_THROWS_AS(circulant(5, {6}), std::invalid_argument);
}

TEST_CASE("sigma") {
  const Permutation s = sigma_automorphism(2, 2);
  CHECK(s.order() == 4);
  CHECK(s.cycles().size() == 1);
  // (0,0) -> (1,0) -> (0,1) -> (1,1) -> (0,0)
  CHECK(s(0) == 2);
  CHECK(s(2) == 1);
  CHECK(s(1) == 3);
  CHECK(s(3) == 0);
  CHECK(is_automorphism(gamma(4, 4), sigma_automorphism(4, 4)));
  for (int n = 2; n <= 6; ++n) {
    for (int v = 2; v <= 6; ++v) {
      CHECK(power(sigma_automorphism(n, v), n * v).is_identity());
    }
  }
}

TEST_CASE("cycle specs with present edges") {
  CycleSpec spec;
  spec.n = 2;
  spec.v = 4;
  spec.meaning = CycleSpec::Meaning::kPresent;
  const BlockLayout l = spec.layout();
  spec.cycles[{0, 1}] = ids(l, {"A0", "B2", "A3", "B1", "A2", "B0", "A1", "B3"});
  const Graph g = from_cycle_spec(spec);
  CHECK(g.edge_count() == strong_bound(2, 4));
  CHECK(are_isomorphic(g, gamma(2, 4)));
}

TEST_CASE("missing-edge specs round trip") {
  for (int n = 2; n <= 5; ++n) {
    for (int v = 3; v <= 6; ++v) {
      const Graph g = gamma(n, v);
      const CycleSpec spec = missing_cycle_spec(g, n, v);
      CHECK(spec.meaning == CycleSpec::Meaning::kMissing);
      CHECK(spec.cycles.size() == static_cast<std::size_t>(n * (n - 1) / 2));
      CHECK(from_cycle_spec(spec) == g);
    }
  }
  CHECK_THROWS_AS(missing_cycle_spec(gamma_prime(2, 3), 2, 3), std::invalid_argument);
}

TEST_CASE("cycle spec validation") {
  CycleSpec spec;
  spec.n = 2;
  spec.v = 2;
  spec.cycles[{0, 1}] = {0, 2, 0, 3};
  CHECK_THROWS_AS(validate(spec), CycleSpecError);
  spec.cycles[{0, 1}] = {0, 2, 1};
  CHECK_THROWS_AS(validate(spec), CycleSpecError);
  spec.cycles[{0, 1}] = {0, 1, 2, 3};
  CHECK_THROWS_AS(validate(spec), CycleSpecError);
  spec.cycles[{0, 1}] = {0, 2, 1, 3};
  CHECK_NOTHROW(validate(spec));
  spec.cycles[{0, 1}] = {0, 2, 1, 7};
  CHECK_THROWS_AS(validate(spec), CycleSpecError);
}

TEST_CASE("fixture parsing") {
  const auto records = parse_fixtures(
      "# comment\n"
      "name: first\n"
      "cycles: present\n"
      "colour: blue\n"
      "(A0,B2,A3,B1,A2,B0,A1,B3)\n"
      "\n"
      "\n"
      "name: second\n"
      "A0,B0,A1,B1,A2,B2,A3,B3\n");
  REQUIRE(records.size() == 2);
  CHECK(records[0].name == "first");
  CHECK(records[0].attribute("colour") == "blue");
  CHECK(records[0].attribute("absent").empty());
  CHECK(records[0].spec.n == 2);
  CHECK(records[0].spec.v == 4);
  CHECK(records[0].spec.meaning == CycleSpec::Meaning::kPresent);
  CHECK(records[1].spec.meaning == CycleSpec::Meaning::kMissing);
  CHECK(format_cycle(records[1].spec.cycles.at({0, 1}), BlockLayout{2, 4}) ==
        "A0,B0,A1,B1,A2,B2,A3,B3");
  // The two conventions describe complementary between-block edges.
  const Graph present = from_cycle_spec(records[1].spec);
  CycleSpec flipped = records[1].spec;
  flipped.meaning = CycleSpec::Meaning::kPresent;
  CHECK(present.edge_count() + from_cycle_spec(flipped).edge_count() ==
        2 * 12 + 16);
}

TEST_CASE("fixture errors name the line") {
  try {
    parse_fixtures("name: x\nA0,B0,A1,Z9\n");
    FAIL("expected an error");
  } catch (const FixtureError& e) {
    CHECK(std::string(e.what()).find("line") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_fixtures("cycles: sideways\nA0,B0,A1,B1\n"),
                  FixtureError);
  CHECK_THROWS_AS(parse_fixtures("A0,B0,A1,B1\nB0,A0,B1,A1\n"), FixtureError);
  CHECK_THROWS_AS(parse_fixtures("n: lots\nA0,B0,A1,B1\n"), FixtureError);
  CHECK_THROWS_AS(load_fixtures("/nonexistent/table.txt"), FixtureError);
}

TEST_CASE("shipped fixtures load") {
  const std::string dir = CLIQUEPART_FIXTURE_DIR;
  CHECK(load_fixtures(dir + "/case-rows-3-4.txt").size() == 20);
  CHECK(load_fixtures(dir + "/maximal-4-4.txt").size() == 6);
  CHECK(load_fixtures(dir + "/cases-3-4.txt").size() == 10);
}

TEST_CASE("a case II completion with a foreign clique") {
  const auto rows = load_fixtures(std::string(CLIQUEPART_FIXTURE_DIR) + "/case-rows-3-4.txt");
  const auto it = std::find_if(rows.begin(), rows.end(),
                               [](const auto& r) { return r.name == "row-ii"; });
  REQUIRE(it != rows.end());
  const Graph g = from_cycle_spec(it->spec);
  const BlockLayout l{3, 4};
  VertexSet want;
  for (int u : ids(l, {"A0", "B2", "B3", "C2"})) want.insert(u);
  const auto cliques = enumerate_cliques(g, 4);
  CHECK(std::find(cliques.begin(), cliques.end(), want) != cliques.end());
  CHECK_FALSE(is_strongly_cp(g, 3, 4).holds);
}
