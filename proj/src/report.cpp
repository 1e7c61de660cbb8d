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

#include "cliquepart/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace cliquepart {
namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ReportError(std::string("malformed report: ") + e.what());
  }
}

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.contains(key)) throw ReportError(std::string("missing key ") + key);
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw ReportError(std::string("bad value for ") + key + ": " + e.what());
  }
}

std::string format_seconds(double s) {
  std::ostringstream out;
  out.precision(3);
  out << std::fixed << s;
  return out.str();
}

}  // namespace

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

std::string to_text(const EnumerationReport& report, bool timings) {
  std::ostringstream out;
  out << "n: " << report.n << "\n"
      << "v: " << report.v << "\n"
      << "complete: " << (report.complete ? "yes" : "no (lower bound)")
      << "\n"
      << "count: " << report.count() << "\n"
      << "nodes: " << report.nodes << "\n"
      << "leaves: " << report.leaves << "\n"
      << "jobs: " << report.jobs << "\n";
  if (timings) {
    out << "elapsed_seconds: " << format_seconds(report.elapsed_seconds)
        << "\n";
  }
  out << "\n";
  for (const auto& g : report.graphs) {
    out << g.graph6;
    if (!g.aut_order.empty()) out << ' ' << g.aut_order << ' ' << g.group;
    out << "\n";
  }
  return out.str();
}

std::string to_json(const EnumerationReport& report, bool timings) {
  Json j;
  j["n"] = report.n;
  j["v"] = report.v;
  j["complete"] = report.complete;
  j["count"] = report.count();
  j["nodes"] = report.nodes;
  j["leaves"] = report.leaves;
  j["jobs"] = report.jobs;
  if (timings) j["elapsed_seconds"] = report.elapsed_seconds;
  Json graphs = Json::array();
  for (const auto& g : report.graphs) {
    graphs.push_back(
        {{"graph6", g.graph6}, {"aut_order", g.aut_order}, {"group", g.group}});
  }
  j["graphs"] = std::move(graphs);
  return dump(j);
}

EnumerationReport enumeration_from_json(std::string_view text) {
  const Json j = parse(text);
  EnumerationReport r;
  r.n = field<int>(j, "n");
  r.v = field<int>(j, "v");
  r.complete = field<bool>(j, "complete");
  r.nodes = field<std::uint64_t>(j, "nodes");
  r.leaves = field<std::uint64_t>(j, "leaves");
  r.jobs = field<int>(j, "jobs");
  if (j.contains("elapsed_seconds")) {
    r.elapsed_seconds = field<double>(j, "elapsed_seconds");
  }
  const Json graphs = field<Json>(j, "graphs");
  if (!graphs.is_array()) throw ReportError("graphs is not an array");
  for (const auto& g : graphs) {
    r.graphs.push_back({field<std::string>(g, "graph6"),
                        field<std::string>(g, "aut_order"),
                        field<std::string>(g, "group")});
  }
  if (field<std::size_t>(j, "count") != r.graphs.size()) {
    throw ReportError("count disagrees with the graph list");
  }
  return r;
}

std::string to_json(const VerificationReport& report, bool timings) {
  Json j;
  j["passed"] = report.passed();
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json e;
    e["id"] = c.id;
    e["criterion"] = c.criterion;
    e["params"] = c.params;
    e["expected"] = c.expected;
    e["computed"] = c.computed;
    e["pass"] = c.pass;
    if (timings) e["elapsed_seconds"] = c.elapsed_seconds;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  return dump(j);
}

VerificationReport verification_from_json(std::string_view text) {
  const Json j = parse(text);
  VerificationReport r;
  const Json checks = field<Json>(j, "checks");
  if (!checks.is_array()) throw ReportError("checks is not an array");
  for (const auto& e : checks) {
    Check c;
    c.id = field<std::string>(e, "id");
    c.criterion = field<int>(e, "criterion");
    c.params = field<std::string>(e, "params");
    c.expected = field<std::string>(e, "expected");
    c.computed = field<std::string>(e, "computed");
    c.pass = field<bool>(e, "pass");
    if (e.contains("elapsed_seconds")) {
      c.elapsed_seconds = field<double>(e, "elapsed_seconds");
    }
    r.checks.push_back(std::move(c));
  }
  if (field<bool>(j, "passed") != r.passed()) {
    throw ReportError("passed flag disagrees with the checks");
  }
  return r;
}

std::string to_text(const VerificationReport& report, bool timings) {
  std::ostringstream out;
  for (const auto& c : report.checks) {
    out << (c.pass ? "PASS" : "FAIL") << " [" << c.criterion << "] " << c.id;
    if (!c.params.empty()) out << " (" << c.params << ")";
    out << ": expected " << c.expected << ", got " << c.computed;
    if (timings) out << " [" << format_seconds(c.elapsed_seconds) << " s]";
    out << "\n";
  }
  const auto failed = std::count_if(report.checks.begin(), report.checks.end(),
                                    [](const Check& c) { return !c.pass; });
  out << report.checks.size() - failed << "/" << report.checks.size()
      << " checks passed\n";
  return out.str();
}

}  // namespace cliquepart
