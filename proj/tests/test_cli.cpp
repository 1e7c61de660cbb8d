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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cliquepart/constructions.hpp"
#include "cliquepart/report.hpp"
#include "cliquepart/symmetry.hpp"
#include "doctest.h"

using namespace cliquepart;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& input = "") {
  std::string cmd = std::string(CLIQUEPART_CLI) + " " + args + " 2>&1";
  if (!input.empty()) cmd = "printf '%s\\n' '" + input + "' | " + cmd;
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("construct") {
  auto r = run("construct gamma -n 2 -v 3");
  CHECK(r.status == 0);
  CHECK(from_graph6(first_line(r.out)) == gamma(2, 3));
  r = run("construct turan -N 16 -r 4");
  CHECK(from_graph6(first_line(r.out)).edge_count() == 96);
  r = run("construct circulant -m 16 -s 1,3,4,6,8");
  CHECK(are_isomorphic(from_graph6(first_line(r.out)), gamma(4, 4)));
  r = run("construct gamma-prime -n 3 -v 2 --dot -");
  CHECK(r.out.find("graph G {") != std::string::npos);
  CHECK(r.out.find("label=\"21\"") != std::string::npos);
}

TEST_CASE("construct usage errors") {
  CHECK(run("construct gamma -n 1 -v 3").status == 1);
  CHECK(run("construct gamma -v 3").status == 1);
  CHECK(run("construct hypercube -n 3").status == 1);
  CHECK(run("construct circulant -m 5 -s 0").status == 1);
  CHECK(run("construct turan -N 3 -r 0").status == 1);
  CHECK(run("").status == 1);
  CHECK(run("--help").status == 0);
}

TEST_CASE("check") {
  auto r = run("check -n 4 -v 4", to_graph6(gamma(4, 4)));
  CHECK(r.status == 0);
  CHECK(r.out.find("verdict: strong, maximal (72/72 edges)") != std::string::npos);
  r = run("check -n 4 -v 4 '" + to_graph6(gamma_prime(4, 4)) + "'");
  CHECK(r.status == 4);
  CHECK(r.out.find("verdict: weak, maximal (96/96), not strong") != std::string::npos);
  r = run("check -n 2 -v 2 C~");
  CHECK(r.status == 2);
  CHECK(r.out.find("not weakly CP (3 partitions)") != std::string::npos);
  CHECK(run("check -n 3 -v 3 C~").status == 1);
  CHECK(run("check -n 2 -v 2 'C~~'").status == 1);
}

TEST_CASE("enumerate") {
  auto r = run("enumerate -n 4 -v 4");
  CHECK(r.status == 0);
  CHECK(first_line(r.out) == "6 graphs");
  CHECK(first_line(run("enumerate -n 3 -v 4").out) == "2 graphs");
  r = run("enumerate -n 2 -v 6");
  CHECK(first_line(r.out) == "1 graph");
  CHECK(r.out.find(canonical_key(gamma(2, 6))) != std::string::npos);
  r = run("enumerate -n 5 -v 4 --budget 200");
  CHECK(r.status == 3);
  CHECK(run("enumerate -n 1 -v 4").status == 1);
  CHECK(run("enumerate -n 9 -v 8").status == 1);
}

TEST_CASE("enumerate output files are deterministic across jobs") {
  const auto dir = std::filesystem::temp_directory_path();
  const std::string a = (dir / "cliquepart-enum-a").string();
  const std::string b = (dir / "cliquepart-enum-b").string();
  CHECK(run("enumerate -n 4 -v 4 --no-timings --jobs 1 --out " + a).status == 0);
  CHECK(run("enumerate -n 4 -v 4 --no-timings --jobs 3 --out " + b).status == 0);
  const std::string ja = slurp(a + ".json");
  const std::string jb = slurp(b + ".json");
  CHECK_FALSE(ja.empty());
  // Only the recorded job count may differ.
  CHECK(enumeration_from_json(ja).graphs == enumeration_from_json(jb).graphs);
  CHECK(to_json(enumeration_from_json(ja), false) == ja);
  CHECK(slurp(a + ".txt").find("count: 6") != std::string::npos);
}

TEST_CASE("aut") {
  auto r = run("aut", to_graph6(gamma(2, 3)));
  CHECK(r.status == 0);
  CHECK(r.out.rfind("order 12, dihedral 12", 0) == 0);
  r = run("aut '" + to_graph6(gamma_prime(2, 2)) + "'");
  CHECK(r.out.rfind("order 2, cyclic 2", 0) == 0);
  r = run("aut -n 3 -v 4", to_graph6(gamma(3, 4)));
  CHECK(r.out.find("generator (") != std::string::npos);
  CHECK(r.out.find("A") != std::string::npos);
  CHECK(run("aut", "not graph6 at all").status == 1);
  CHECK(run("aut '" + to_graph6(Graph(33)) + "'").status == 1);
}

TEST_CASE("verify writes a report that round trips") {
  const auto path =
      (std::filesystem::temp_directory_path() / "cliquepart-verify.json").string();
  const auto r = run("verify --no-timings --report " + path);
  CHECK(r.status == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find(" checks passed") != std::string::npos);
  const std::string json = slurp(path);
  CHECK(to_json(verification_from_json(json), false) == json);
  CHECK(verification_from_json(json).passed());
}

TEST_CASE("verify with broken fixtures exits 2") {
  const auto r = run("verify --fixtures /nonexistent/cliquepart");
  CHECK(r.status == 2);
  CHECK(r.out.find("FAIL [7] maximal-4-4-maximal-strong") != std::string::npos);
  CHECK(r.out.find("PASS [1] gamma-edge-count") != std::string::npos);
}

TEST_CASE("environment overrides") {
  const std::string env = "CLIQUEPART_FIXTURES=/nonexistent ";
  FILE* pipe = popen((env + CLIQUEPART_CLI + " verify >/dev/null 2>&1").c_str(), "r");
  REQUIRE(pipe != nullptr);
  const int raw = pclose(pipe);
  CHECK(WEXITSTATUS(raw) == 2);
  pipe = popen((std::string("CLIQUEPART_JOBS=3 ") + CLIQUEPART_CLI +
                " enumerate -n 3 -v 4 --no-timings").c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  pclose(pipe);
  CHECK(out.find("jobs: 3") != std::string::npos);
  pipe = popen((std::string("CLIQUEPART_JOBS=lots ") + CLIQUEPART_CLI +
                " enumerate -n 3 -v 4 >/dev/null 2>&1").c_str(), "r");
  CHECK(WEXITSTATUS(pclose(pipe)) == 1);
}
