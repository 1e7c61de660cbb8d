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

#include <filesystem>
#include <fstream>
#include <set>

#include "cliquepart/verification.hpp"
#include "doctest.h"

using namespace cliquepart;
namespace fs = std::filesystem;

namespace {

fs::path copy_fixtures(const std::string& tag) {
  const fs::path dir = fs::temp_directory_path() / ("cliquepart-" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  for (const char* f : {"case-rows-3-4.txt", "maximal-4-4.txt", "cases-3-4.txt"}) {
    fs::copy_file(fs::path(CLIQUEPART_FIXTURE_DIR) / f, dir / f);
  }
  return dir;
}

}  // namespace

TEST_CASE("every check appears once and all pass") {
  std::vector<std::string> seen;
  AcceptanceOptions o;
  o.on_check = [&](const Check& c) { seen.push_back(c.id + "|" + c.params); };
  const auto r = run_acceptance(o);
  CHECK(r.passed());
  CHECK(seen.size() == r.checks.size());
  CHECK(std::set<std::string>(seen.begin(), seen.end()).size() == seen.size());
  std::set<int> criteria;
  for (const auto& c : r.checks) criteria.insert(c.criterion);
  CHECK(criteria == std::set<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
}

TEST_CASE("a corrupted fixture only fails its own checks") {
  const fs::path dir = copy_fixtures("corrupt");
  {
    std::ofstream out(dir / "maximal-4-4.txt", std::ios::app);
    out << "\nname: broken\nA0,B9,A1\n";
  }
  AcceptanceOptions o;
  o.fixture_dir = dir.string();
  const auto r = run_acceptance(o);
  CHECK_FALSE(r.passed());
  int failed = 0;
  for (const auto& c : r.checks) {
    if (c.pass) continue;
    ++failed;
    CAPTURE(c.id);
    CHECK(c.id.rfind("maximal-4-4-", 0) == 0);
    CHECK(c.computed.find("fixture line") != std::string::npos);
  }
  CHECK(failed == 10);
  fs::remove_all(dir);
}

TEST_CASE("a wrong expected group is reported, not hidden") {
  const fs::path dir = copy_fixtures("group");
  std::ifstream in(dir / "maximal-4-4.txt");
  std::string text((std::istreambuf_iterator<char>(in)), {});
  in.close();
  text.replace(text.find("group: Z2\n"), 10, "group: Z3\n");
  std::ofstream(dir / "maximal-4-4.txt") << text;
  AcceptanceOptions o;
  o.fixture_dir = dir.string();
  const auto r = run_acceptance(o);
  std::vector<std::string> failed;
  for (const auto& c : r.checks) {
    if (!c.pass) failed.push_back(c.id);
  }
  CHECK(failed == std::vector<std::string>{"maximal-4-4-graph-3-group"});
  fs::remove_all(dir);
}

TEST_CASE("missing fixture directory") {
  AcceptanceOptions o;
  o.fixture_dir = "/nonexistent/cliquepart";
  const auto r = run_acceptance(o);
  for (const auto& c : r.checks) {
    if (c.criterion != 7) {
      CHECK(c.pass);
    } else if (c.id.find("enumerate") == std::string::npos) {
      CHECK_FALSE(c.pass);
    }
  }
}
