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

// cliquepart: build, check and enumerate clique-partitioned graphs.
//
// Exit codes: 0 success, 1 usage or input error, 2 failed check,
// 3 enumeration stopped by its budget, 4 (`check` only) weakly but not
// strongly clique-partitioned.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cliquepart/constructions.hpp"
#include "cliquepart/enumeration.hpp"
#include "cliquepart/partition.hpp"
#include "cliquepart/report.hpp"
#include "cliquepart/symmetry.hpp"
#include "cliquepart/verification.hpp"

namespace cp = cliquepart;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kFailed = 2;
constexpr int kTruncated = 3;
constexpr int kWeakOnly = 4;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int default_jobs() {
  if (const char* env = std::getenv("CLIQUEPART_JOBS"); env && *env) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      throw UsageError("CLIQUEPART_JOBS is not a number");
    }
  }
  return 1;
}

// graph6 from the argument, or the first non-empty stdin line.
cp::Graph read_graph(const std::string& arg) {
  std::string text = arg;
  if (text.empty() || text == "-") {
    text.clear();
    std::string line;
    while (text.empty() && std::getline(std::cin, line)) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
        line.pop_back();
      }
      text = line;
    }
  }
  try {
    return cp::from_graph6(text);
  } catch (const cp::Graph6Error& e) {
    throw UsageError(e.what());
  }
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << body;
}

std::set<int> parse_residues(const std::string& text, int m) {
  std::set<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    int r = 0;
    try {
      r = std::stoi(item);
    } catch (const std::exception&) {
      throw UsageError("bad residue '" + item + "'");
    }
    if (m > 0) r = ((r % m) + m) % m;
    out.insert(r);
    if (m > 0) out.insert((m - r) % m);
  }
  return out;
}

struct ConstructArgs {
  std::string family;
  int n = 0;
  int v = 0;
  int order = 0;
  int parts = 0;
  int m = 0;
  std::string residues;
  std::string dot;
};

int run_construct(const ConstructArgs& a) {
  cp::Graph g;
  std::optional<cp::BlockLayout> layout;
  if (a.family == "gamma" || a.family == "gamma-prime") {
    if (a.n == 0 || a.v == 0) throw UsageError(a.family + " needs -n and -v");
    g = a.family == "gamma" ? cp::gamma(a.n, a.v) : cp::gamma_prime(a.n, a.v);
    layout = cp::BlockLayout{a.n, a.v};
  } else if (a.family == "turan") {
    if (a.order == 0 || a.parts == 0) throw UsageError("turan needs -N and -r");
    g = cp::turan(a.order, a.parts);
  } else {
    if (a.m == 0) throw UsageError("circulant needs -m");
    // Residues are closed under negation here, so "1,3,4,6,8" means
    // {+-1, +-3, +-4, +-6, 8}.
    g = cp::circulant(a.m, parse_residues(a.residues, a.m));
  }
  std::cout << cp::to_graph6(g) << "\n";
  if (!a.dot.empty()) {
    const std::string dot = cp::to_dot(g, layout);
    if (a.dot == "-") {
      std::cout << dot;
    } else {
      write_file(a.dot, dot);
    }
  }
  return kOk;
}

int run_check(const std::string& input, int n, int v) {
  const cp::Graph g = read_graph(input);
  if (g.order() != n * v) {
    throw UsageError("graph has " + std::to_string(g.order()) +
                     " vertices, expected n*v = " + std::to_string(n * v));
  }
  const cp::BlockLayout layout{n, v};
  const auto strong_max = cp::strong_bound(n, v);
  const auto weak_max = cp::weak_bound(n, v);
  const cp::CpResult weak = cp::is_weakly_cp(g, n, v);
  std::cout << "order: " << g.order() << "\n"
            << "edges: " << g.edge_count() << "\n"
            << "strong bound: " << strong_max << "\n"
            << "weak bound: " << weak_max << "\n";
  if (!weak.holds) {
    const auto count = cp::count_clique_partitions(g, v).count;
    std::cout << "verdict: not weakly CP (" << count << " partition"
              << (count == 1 ? "" : "s") << ")\n";
    return kFailed;
  }
  const cp::CpResult strong = cp::is_strongly_cp(g, n, v);
  std::cout << "partition: " << cp::to_string(*weak.partition, layout) << "\n"
            << v << "-cliques: "
            << cp::enumerate_cliques(g, v).size() << "\n";
  const auto edges = g.edge_count();
  if (strong.holds) {
    std::cout << "verdict: strong, "
              << (edges == strong_max ? "maximal" : "not maximal") << " ("
              << edges << "/" << strong_max << " edges)\n";
    return kOk;
  }
  std::cout << "verdict: weak, "
            << (edges == weak_max ? "maximal" : "not maximal") << " (" << edges
            << "/" << weak_max << "), not strong\n";
  return kWeakOnly;
}

struct EnumerateArgs {
  int n = 0;
  int v = 0;
  std::uint64_t budget = 0;
  double time_limit = 0;
  int jobs = 0;
  std::string out;
  bool no_timings = false;
};

int run_enumerate(const EnumerateArgs& a) {
  cp::EnumerationOptions options;
  options.max_nodes = a.budget;
  options.max_seconds = a.time_limit;
  options.jobs = a.jobs > 0 ? a.jobs : default_jobs();
  cp::EnumerationReport report;
  try {
    report = cp::enumerate_maximal_strong(a.n, a.v, options);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const bool timings = !a.no_timings;
  if (!a.out.empty()) {
    write_file(a.out + ".txt", cp::to_text(report, timings));
    write_file(a.out + ".json", cp::to_json(report, timings));
  }
  std::cout << report.count() << (report.count() == 1 ? " graph" : " graphs");
  if (!report.complete) std::cout << " (lower bound: budget exhausted)";
  std::cout << "\n";
  if (a.out.empty()) std::cout << cp::to_text(report, timings);
  return report.complete ? kOk : kTruncated;
}

int run_aut(const std::string& input, int n, int v) {
  const cp::Graph g = read_graph(input);
  std::optional<cp::BlockLayout> layout;
  if (n > 0 && v > 0) {
    if (n * v != g.order()) throw UsageError("n*v does not match the order");
    layout = cp::BlockLayout{n, v};
  }
  if (g.order() > 32) throw UsageError("aut supports at most 32 vertices");
  const cp::PermGroup group = cp::automorphism_group(g);
  const cp::GroupStructure s = cp::identify_group(group);
  std::cout << "order " << cp::to_string(group.order) << ", " << s.tag() << " ("
            << s.symbol() << "), " << (s.abelian ? "abelian" : "non-abelian")
            << "\n";
  for (const auto& p : group.generators) {
    std::cout << "generator " << cp::to_cycle_string(p, layout) << "\n";
  }
  return kOk;
}

struct VerifyArgs {
  bool long_mode = false;
  std::uint64_t seed = cp::AcceptanceOptions{}.seed;
  std::string fixtures;
  std::string report;
  int jobs = 0;
  double lower_bound_seconds = cp::AcceptanceOptions{}.lower_bound_seconds;
  bool no_timings = false;
};

int run_verify(const VerifyArgs& a) {
  cp::AcceptanceOptions options;
  options.long_mode = a.long_mode;
  options.seed = a.seed;
  options.fixture_dir = a.fixtures;
  options.jobs = a.jobs > 0 ? a.jobs : default_jobs();
  options.lower_bound_seconds = a.lower_bound_seconds;
  const bool timings = !a.no_timings;
  options.on_check = [timings](const cp::Check& c) {
    cp::VerificationReport one{{c}};
    std::string line = cp::to_text(one, timings);
    std::cout << line.substr(0, line.find('\n') + 1) << std::flush;
  };
  const cp::VerificationReport report = cp::run_acceptance(options);
  if (!a.report.empty()) write_file(a.report, cp::to_json(report, timings));
  const auto failed = std::count_if(report.checks.begin(), report.checks.end(),
                                    [](const cp::Check& c) { return !c.pass; });
  std::cout << report.checks.size() - failed << "/" << report.checks.size()
            << " checks passed\n";
  return report.passed() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Build, check and enumerate clique-partitioned graphs"};
  app.require_subcommand(1);

  ConstructArgs construct;
  auto* c = app.add_subcommand("construct", "Print the graph6 of a named graph");
  c->add_option("family", construct.family, "gamma | gamma-prime | turan | circulant")
      ->required()
      ->check(CLI::IsMember({"gamma", "gamma-prime", "turan", "circulant"}));
  c->add_option("-n", construct.n, "Number of blocks");
  c->add_option("-v", construct.v, "Block size");
  c->add_option("-N", construct.order, "Turan graph order");
  c->add_option("-r", construct.parts, "Turan graph parts");
  c->add_option("-m", construct.m, "Circulant order");
  c->add_option("-s", construct.residues,
                "Circulant connection set, comma separated; negatives added");
  c->add_option("--dot", construct.dot, "Also write DOT to this file ('-' for stdout)");

  std::string check_input;
  int check_n = 0;
  int check_v = 0;
  auto* k = app.add_subcommand("check", "Classify a graph6 graph");
  k->add_option("graph6", check_input, "graph6 string; stdin when omitted");
  k->add_option("-n", check_n, "Number of blocks")->required();
  k->add_option("-v", check_v, "Block size")->required();

  EnumerateArgs enumerate;
  auto* e = app.add_subcommand("enumerate",
                               "All maximal strongly clique-partitioned graphs");
  e->add_option("-n", enumerate.n, "Number of blocks")->required();
  e->add_option("-v", enumerate.v, "Block size")->required();
  e->add_option("--budget", enumerate.budget, "Search node cap (0: none)");
  e->add_option("--time-limit", enumerate.time_limit, "Seconds (0: none)");
  e->add_option("--jobs", enumerate.jobs, "Worker threads (default $CLIQUEPART_JOBS or 1)");
  e->add_option("--out", enumerate.out, "Write PREFIX.txt and PREFIX.json");
  e->add_flag("--no-timings", enumerate.no_timings, "Leave timings out of the report");

  std::string aut_input;
  int aut_n = 0;
  int aut_v = 0;
  auto* u = app.add_subcommand("aut", "Automorphism group of a graph6 graph");
  u->add_option("graph6", aut_input, "graph6 string; stdin when omitted");
  u->add_option("-n", aut_n, "Blocks, for labelled generators");
  u->add_option("-v", aut_v, "Block size, for labelled generators");

  VerifyArgs verify;
  auto* r = app.add_subcommand("verify", "Run the acceptance suite");
  r->add_flag("--long", verify.long_mode, "Include the long enumerations");
  r->add_option("--seed", verify.seed, "Seed of the random graph corpus");
  r->add_option("--fixtures", verify.fixtures,
                "Fixture directory (default $CLIQUEPART_FIXTURES or the built-in one)");
  r->add_option("--report", verify.report, "Write the JSON report here");
  r->add_option("--jobs", verify.jobs, "Worker threads");
  r->add_option("--lower-bound-seconds", verify.lower_bound_seconds,
                "Budget of each lower-bound enumeration");
  r->add_flag("--no-timings", verify.no_timings, "Leave timings out of the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::CallForAllHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex);
    return kUsage;
  }

  try {
    if (*c) return run_construct(construct);
    if (*k) return run_check(check_input, check_n, check_v);
    if (*e) return run_enumerate(enumerate);
    if (*u) return run_aut(aut_input, aut_n, aut_v);
    if (*r) return run_verify(verify);
  } catch (const UsageError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kUsage;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
