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

#include <set>

#include "cliquepart/constructions.hpp"
#include "cliquepart/enumeration.hpp"
#include "cliquepart/partition.hpp"
#include "cliquepart/symmetry.hpp"
#include "doctest.h"

using namespace cliquepart;

namespace {

std::vector<std::string> keys(const EnumerationReport& r) {
  std::vector<std::string> out;
  for (const auto& g : r.graphs) out.push_back(g.graph6);
  return out;
}

std::vector<FixtureRecord> fixtures(const std::string& file) {
  return load_fixtures(std::string(CLIQUEPART_FIXTURE_DIR) + "/" + file);
}

}  // namespace

TEST_CASE("hamiltonian cycles of the complete bipartite graph") {
  // v! (v-1)! / 2 for v >= 2.
  CHECK(bipartite_hamiltonian_cycles(2).size() == 1);
  CHECK(bipartite_hamiltonian_cycles(3).size() == 6);
  CHECK(bipartite_hamiltonian_cycles(4).size() == 72);
  CHECK(bipartite_hamiltonian_cycles(5).size() == 1440);
  for (const auto& c : bipartite_hamiltonian_cycles(4)) {
    REQUIRE(c.size() == 8);
    CHECK(c[0] == 0);
    std::set<int> a;
    std::set<int> b;
    for (std::size_t k = 0; k < 8; ++k) (k % 2 == 0 ? a : b).insert(c[k]);
    CHECK(a.size() == 4);
    CHECK(b.size() == 4);
  }
  CHECK_THROWS_AS(bipartite_hamiltonian_cycles(1), std::invalid_argument);
}

TEST_CASE("small enumerations are single gamma classes") {
  for (auto [n, v] : std::vector<std::pair<int, int>>{
           {2, 2}, {5, 2}, {2, 3}, {3, 3}, {4, 3}, {5, 3}, {2, 4}, {2, 5}, {2, 6}}) {
    CAPTURE(n);
    CAPTURE(v);
    const auto r = enumerate_maximal_strong(n, v);
    CHECK(r.complete);
    REQUIRE(r.count() == 1);
    CHECK(r.graphs[0].graph6 == canonical_key(gamma(n, v)));
  }
}

TEST_CASE("(3,4) and (4,4)") {
  const auto r34 = enumerate_maximal_strong(3, 4);
  CHECK(r34.count() == 2);
  const auto r44 = enumerate_maximal_strong(4, 4);
  REQUIRE(r44.count() == 6);
  std::multiset<std::string> orders;
  for (const auto& g : r44.graphs) orders.insert(g.aut_order);
  CHECK(orders == std::multiset<std::string>{"32", "4", "2", "4", "2", "4"});
  CHECK(std::is_sorted(r44.graphs.begin(), r44.graphs.end(),
                       [](const auto& a, const auto& b) { return a.graph6 < b.graph6; }));
  for (const auto& g : r44.graphs) {
    CHECK(is_maximal_strong(from_graph6(g.graph6), 4, 4));
    CHECK(g.graph6 == canonical_key(from_graph6(g.graph6)));
  }
  std::set<std::string> table;
  for (const auto& rec : fixtures("maximal-4-4.txt")) {
    table.insert(canonical_key(from_cycle_spec(rec.spec)));
  }
  const auto found = keys(r44);
  CHECK(std::set<std::string>(found.begin(), found.end()) == table);
}

TEST_CASE("results do not depend on the number of workers") {
  EnumerationOptions one;
  const auto base = enumerate_maximal_strong(4, 4, one);
  for (int jobs : {2, 4, 7}) {
    EnumerationOptions o;
    o.jobs = jobs;
    const auto r = enumerate_maximal_strong(4, 4, o);
    CHECK(r.graphs == base.graphs);
    CHECK(r.leaves == base.leaves);
    CHECK(r.jobs == jobs);
  }
}

TEST_CASE("budgets give flagged lower bounds") {
  EnumerationOptions o;
  o.max_nodes = 50;
  const auto r = enumerate_maximal_strong(4, 4, o);
  CHECK_FALSE(r.complete);
  CHECK(r.count() < 6);
  EnumerationOptions t;
  t.max_seconds = 1e-9;
  CHECK_FALSE(enumerate_maximal_strong(5, 4, t).complete);
  EnumerationOptions skip;
  skip.skip_groups = true;
  const auto s = enumerate_maximal_strong(3, 4, skip);
  CHECK(s.count() == 2);
  CHECK(s.graphs[0].aut_order.empty());
}

TEST_CASE("enumeration argument errors") {
  CHECK_THROWS_AS(enumerate_maximal_strong(1, 4), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_maximal_strong(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_maximal_strong(9, 8), std::invalid_argument);
}

TEST_CASE("exhaustive scans") {
  for (auto [n, v] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
    CAPTURE(n);
    CAPTURE(v);
    const auto strong = brute_force_maximal_strong(n, v);
    CHECK(strong == keys(enumerate_maximal_strong(n, v)));
    const auto weak = brute_force_maximal_weak(n, v);
    REQUIRE(weak.size() == 1);
    CHECK(weak[0] == canonical_key(gamma_prime(n, v)));
  }
  CHECK_THROWS_AS(brute_force_maximal_weak(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_maximal_strong(3, 3, true), std::invalid_argument);
}

TEST_CASE("eight-vertex scans") {
  const auto weak = brute_force_maximal_weak(2, 4, true);
  REQUIRE(weak.size() == 1);
  CHECK(weak[0] == canonical_key(gamma_prime(2, 4)));
  CHECK(brute_force_maximal_strong(4, 2, true) == keys(enumerate_maximal_strong(4, 2)));
}

TEST_CASE("case table verdicts") {
  const auto rows = fixtures("case-rows-3-4.txt");
  FixtureRecord reference;
  for (const auto& r : fixtures("cases-3-4.txt")) {
    if (r.name == "case-I-i") reference = r;
  }
  const auto verdicts = verify_case_rows(rows, reference);
  REQUIRE(verdicts.size() == 20);
  for (const auto& v : verdicts) {
    CAPTURE(v.name);
    CAPTURE(v.detail);
    CHECK(v.passed);
  }

  // A wrong clique, a wrong permutation and a broken label all fail alone.
  auto bad = rows;
  bad[1].attributes["clique"] = "A0,A1,B0,C0";
  bad[0].attributes["permutation"] = "(A0 A1)";
  bad[6].attributes.erase("permutation");
  bad[11].attributes["permutation"] = "(A0 Q1)";
  const auto mixed = verify_case_rows(bad, reference);
  CHECK_FALSE(mixed[0].passed);
  CHECK_FALSE(mixed[1].passed);
  CHECK(mixed[1].detail.find("missing") != std::string::npos);
  CHECK(mixed[6].passed);
  CHECK(mixed[6].detail.find("isomorphism search") != std::string::npos);
  CHECK_FALSE(mixed[11].passed);
  CHECK(mixed[2].passed);
}
