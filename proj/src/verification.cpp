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

#include "cliquepart/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <random>
#include <set>

#include "cliquepart/constructions.hpp"
#include "cliquepart/enumeration.hpp"
#include "cliquepart/oracle.hpp"
#include "cliquepart/partition.hpp"
#include "cliquepart/symmetry.hpp"

#ifndef CLIQUEPART_FIXTURE_DIR
#define CLIQUEPART_FIXTURE_DIR "data"
#endif

namespace cliquepart {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  std::string computed;
  bool pass = false;
};

std::string nv(int n, int v) {
  return "(" + std::to_string(n) + "," + std::to_string(v) + ")";
}

// Counts successes over a parameter range and keeps the first failure.
class Tally {
 public:
  void add(bool ok, const std::string& what) {
    ++total_;
    if (ok) {
      ++good_;
    } else if (first_bad_.empty()) {
      first_bad_ = what;
    }
  }
  Outcome outcome() const {
    std::string s = std::to_string(good_) + "/" + std::to_string(total_);
    if (!first_bad_.empty()) s += ", first failure " + first_bad_;
    return {s, total_ > 0 && good_ == total_};
  }
  std::string expected() const {
    return std::to_string(total_) + "/" + std::to_string(total_);
  }

 private:
  int total_ = 0;
  int good_ = 0;
  std::string first_bad_;
};

Outcome equal(const std::string& computed, const std::string& expected) {
  return {computed, computed == expected};
}

const FixtureRecord& record(const std::vector<FixtureRecord>& records,
                            const std::string& name) {
  for (const auto& r : records) {
    if (r.name == name) return r;
  }
  throw FixtureError("no record named " + name);
}

// Between-block edges of a cycle as a bit mask over column pairs
// (column in the lower block) * v + (column in the upper block).
std::uint64_t pair_mask(const std::vector<int>& cycle, int v) {
  std::uint64_t mask = 0;
  const std::size_t len = cycle.size();
  for (std::size_t k = 0; k < len; ++k) {
    int x = cycle[k];
    int y = cycle[(k + 1) % len];
    if (x > y) std::swap(x, y);
    mask |= std::uint64_t{1} << ((x % v) * v + (y % v));
  }
  return mask;
}

class Runner {
 public:
  explicit Runner(const AcceptanceOptions& options) : options_(options) {}

  void check(const std::string& id, int criterion, const std::string& params,
             const std::string& expected,
             const std::function<Outcome()>& body) {
    Check c;
    c.id = id;
    c.criterion = criterion;
    c.params = params;
    c.expected = expected;
    const auto start = Clock::now();
    try {
      const Outcome o = body();
      c.computed = o.computed;
      c.pass = o.pass;
    } catch (const std::exception& e) {
      c.computed = std::string("error: ") + e.what();
      c.pass = false;
    }
    c.elapsed_seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    record_check(std::move(c));
  }

  // Total time of the criterion's checks so far against a limit.
  void runtime(int criterion, double limit) {
    double total = 0;
    for (const auto& c : report_.checks) {
      if (c.criterion == criterion) total += c.elapsed_seconds;
    }
    Check c;
    c.id = "criterion-" + std::to_string(criterion) + "-runtime";
    c.criterion = criterion;
    c.expected = "< " + std::to_string(static_cast<int>(limit)) + " s";
    c.computed = std::to_string(total) + " s";
    c.pass = total < limit;
    record_check(std::move(c));
  }

  std::vector<FixtureRecord> fixtures(const std::string& file) const {
    return load_fixtures(options_.fixture_dir + "/" + file);
  }

  // Enumerations are shared between criteria; the first use pays.
  const EnumerationReport& enumeration(int n, int v) {
    const auto key = std::pair{n, v};
    auto it = enumerations_.find(key);
    if (it == enumerations_.end()) {
      EnumerationOptions eo;
      eo.jobs = options_.jobs;
      it = enumerations_.emplace(key, enumerate_maximal_strong(n, v, eo)).first;
    }
    return it->second;
  }

  const AcceptanceOptions& options() const { return options_; }
  VerificationReport take() { return std::move(report_); }

 private:
  void record_check(Check c) {
    report_.checks.push_back(std::move(c));
    if (options_.on_check) options_.on_check(report_.checks.back());
  }

  const AcceptanceOptions& options_;
  VerificationReport report_;
  std::map<std::pair<int, int>, EnumerationReport> enumerations_;
};

void criterion1(Runner& run) {
  const std::string range = "2<=n,v<=6";
  run.check("gamma-edge-count", 1, range, "25/25", [] {
    Tally t;
    for (int n = 2; n <= 6; ++n) {
      for (int v = 2; v <= 6; ++v) {
        t.add(gamma(n, v).edge_count() == strong_bound(n, v), nv(n, v));
      }
    }
    return t.outcome();
  });
  run.check("gamma-regular-degree", 1, range, "25/25", [] {
    Tally t;
    for (int n = 2; n <= 6; ++n) {
      for (int v = 2; v <= 6; ++v) {
        t.add(gamma(n, v).regular_degree() == n * (v - 2) + 1, nv(n, v));
      }
    }
    return t.outcome();
  });
  run.check("gamma-strongly-cp", 1, range, "25/25", [] {
    Tally t;
    for (int n = 2; n <= 6; ++n) {
      for (int v = 2; v <= 6; ++v) {
        t.add(is_strongly_cp(gamma(n, v), n, v).holds, nv(n, v));
      }
    }
    return t.outcome();
  });
  run.runtime(1, 10);
}

void criterion2(Runner& run) {
  const std::string range = "2<=n,v<=5";
  run.check("gamma-prime-edge-count", 2, range, "16/16", [] {
    Tally t;
    for (int n = 2; n <= 5; ++n) {
      for (int v = 2; v <= 5; ++v) {
        t.add(gamma_prime(n, v).edge_count() == weak_bound(n, v), nv(n, v));
      }
    }
    return t.outcome();
  });
  run.check("gamma-prime-unique-partition", 2, range, "16/16", [] {
    Tally t;
    for (int n = 2; n <= 5; ++n) {
      for (int v = 2; v <= 5; ++v) {
        t.add(count_clique_partitions(gamma_prime(n, v), v).count == 1,
              nv(n, v));
      }
    }
    return t.outcome();
  });
  run.check("gamma-prime-missing-edges-per-pair", 2, range, "16/16", [] {
    Tally t;
    for (int n = 2; n <= 5; ++n) {
      for (int v = 2; v <= 5; ++v) {
        const Graph g = gamma_prime(n, v);
        const BlockLayout layout{n, v};
        bool ok = true;
        for (int p = 0; p < n; ++p) {
          for (int q = p + 1; q < n; ++q) {
            int present = 0;
            for (int x : layout.block(p)) {
              present += (g.neighbors(x) & layout.block(q)).size();
            }
            ok = ok && v * v - present >= v;
          }
        }
        t.add(ok, nv(n, v));
      }
    }
    return t.outcome();
  });
  run.check("gamma-prime-transitive-tournament", 2, range, "16/16", [] {
    Tally t;
    for (int n = 2; n <= 5; ++n) {
      for (int v = 2; v <= 5; ++v) {
        const Graph g = gamma_prime(n, v);
        const CpResult r = is_weakly_cp(g, n, v);
        bool ok = r.holds;
        if (ok) {
          const Tournament tour = weak_structure(g, *r.partition);
          const auto chain = tour.chain();
          ok = chain.has_value();
        }
        t.add(ok, nv(n, v));
      }
    }
    return t.outcome();
  });
  run.runtime(2, 30);
}

void criterion3(Runner& run) {
  run.check("column-property", 3, "2<=n,v<=5", "16/16", [] {
    Tally t;
    for (int n = 2; n <= 5; ++n) {
      for (int v = 2; v <= 5; ++v) {
        bool ok = true;
        for (VertexSet c : enumerate_cliques(gamma(n, v), v)) {
          std::uint64_t columns = 0;
          for (int u : c) columns |= std::uint64_t{1} << (u % v);
          ok = ok && std::popcount(columns) == v;
        }
        t.add(ok, nv(n, v));
      }
    }
    return t.outcome();
  });
}

void criterion4(Runner& run) {
  const std::string range = "2<=n,v<=6";
  run.check("sigma-order", 4, range, "25/25", [] {
    Tally t;
    for (int n = 2; n <= 6; ++n) {
      for (int v = 2; v <= 6; ++v) {
        t.add(sigma_automorphism(n, v).order() ==
                  static_cast<std::uint64_t>(n * v),
              nv(n, v));
      }
    }
    return t.outcome();
  });
  run.check("sigma-automorphism", 4, range, "25/25", [] {
    Tally t;
    for (int n = 2; n <= 6; ++n) {
      for (int v = 2; v <= 6; ++v) {
        t.add(is_automorphism(gamma(n, v), sigma_automorphism(n, v)),
              nv(n, v));
      }
    }
    return t.outcome();
  });
  run.check("gamma-4-4-circulant", 4, "m=16, {1,3,4,6,8,10,12,13,15}",
            "isomorphic", [] {
              const Graph c = circulant(16, {1, 3, 4, 6, 8, 10, 12, 13, 15});
              return equal(are_isomorphic(c, gamma(4, 4)) ? "isomorphic"
                                                          : "not isomorphic",
                           "isomorphic");
            });
}

GroupOrder factorial(int k) {
  GroupOrder f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

void criterion5(Runner& run) {
  run.check("aut-gamma-dihedral", 5, "2<=n<=5, 3<=v<=5", "12/12", [] {
    Tally t;
    for (int n = 2; n <= 5; ++n) {
      for (int v = 3; v <= 5; ++v) {
        const PermGroup g = automorphism_group(gamma(n, v));
        const GroupStructure s = identify_group(g);
        t.add(g.order == static_cast<GroupOrder>(2 * n * v) &&
                  s.kind == GroupKind::kDihedral,
              nv(n, v) + " order " + to_string(g.order) + " " + s.tag());
      }
    }
    return t.outcome();
  });
  run.check("aut-gamma-v2", 5, "2<=n<=5, v=2", "4/4", [] {
    Tally t;
    for (int n = 2; n <= 5; ++n) {
      const PermGroup g = automorphism_group(gamma(n, 2));
      const GroupOrder want = (GroupOrder{1} << n) * factorial(n);
      t.add(g.order == want && !identify_group(g).abelian,
            nv(n, 2) + " order " + to_string(g.order));
    }
    return t.outcome();
  });
  run.check("aut-gamma-prime", 5, "2<=n,v<=4", "9/9", [] {
    Tally t;
    for (int n = 2; n <= 4; ++n) {
      for (int v = 2; v <= 4; ++v) {
        const PermGroup g = automorphism_group(gamma_prime(n, v));
        GroupOrder want = factorial(v);
        for (int i = 1; i < n; ++i) want *= factorial(v - 1);
        t.add(g.order == want, nv(n, v) + " order " + to_string(g.order));
      }
    }
    return t.outcome();
  });
  run.runtime(5, 60);
}

// Count 1 and the class is gamma(n, v), for every listed (n, v).
Outcome unique_gamma(Runner& run,
                     const std::vector<std::pair<int, int>>& params) {
  Tally t;
  for (const auto& [n, v] : params) {
    const EnumerationReport& r = run.enumeration(n, v);
    t.add(r.complete && r.count() == 1 &&
              r.graphs[0].graph6 == canonical_key(gamma(n, v)),
          nv(n, v) + " count " + std::to_string(r.count()));
  }
  return t.outcome();
}

bool contains_key(const EnumerationReport& r, const std::string& key) {
  return std::any_of(r.graphs.begin(), r.graphs.end(),
                     [&](const EnumeratedGraph& g) { return g.graph6 == key; });
}

void lower_bound(Runner& run, int n, std::size_t bound) {
  const double budget = run.options().lower_bound_seconds;
  run.check("enumerate-" + std::to_string(n) + "-4-lower-bound", 6,
            nv(n, 4) + ", budget " + std::to_string(static_cast<int>(budget)) +
                " s",
            ">= " + std::to_string(bound), [&run, n, bound, budget] {
              EnumerationOptions eo;
              eo.jobs = run.options().jobs;
              eo.max_seconds = budget;
              eo.skip_groups = true;
              const EnumerationReport r = enumerate_maximal_strong(n, 4, eo);
              return Outcome{std::to_string(r.count()) +
                                 (r.complete ? " (complete)" : " (truncated)"),
                             r.count() >= bound};
            });
}

void criterion6(Runner& run) {
  run.check("enumerate-n-2", 6, "2<=n<=5, v=2", "4/4", [&run] {
    return unique_gamma(run, {{2, 2}, {3, 2}, {4, 2}, {5, 2}});
  });
  run.check("enumerate-n-3", 6, "2<=n<=5, v=3", "4/4", [&run] {
    return unique_gamma(run, {{2, 3}, {3, 3}, {4, 3}, {5, 3}});
  });
  run.check("enumerate-2-v", 6, "n=2, 2<=v<=6", "5/5", [&run] {
    return unique_gamma(run, {{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}});
  });
  run.check("enumerate-3-4-count", 6, nv(3, 4), "2", [&run] {
    return equal(std::to_string(run.enumeration(3, 4).count()), "2");
  });
  run.check("enumerate-3-4-contains-gamma", 6, nv(3, 4), "yes", [&run] {
    return equal(contains_key(run.enumeration(3, 4), canonical_key(gamma(3, 4)))
                     ? "yes"
                     : "no",
                 "yes");
  });
  run.check("enumerate-4-4-count", 6, nv(4, 4), "6", [&run] {
    return equal(std::to_string(run.enumeration(4, 4).count()), "6");
  });
  run.check("enumerate-4-4-aut-orders", 6, nv(4, 4), "2,2,4,4,4,32", [&run] {
    std::vector<int> orders;
    for (const auto& g : run.enumeration(4, 4).graphs) {
      orders.push_back(std::stoi(g.aut_order));
    }
    std::sort(orders.begin(), orders.end());
    std::string s;
    for (int o : orders) s += (s.empty() ? "" : ",") + std::to_string(o);
    return equal(s, "2,2,4,4,4,32");
  });
  run.check("enumerate-4-4-contains-gamma", 6, nv(4, 4), "yes", [&run] {
    return equal(contains_key(run.enumeration(4, 4), canonical_key(gamma(4, 4)))
                     ? "yes"
                     : "no",
                 "yes");
  });
  run.check("enumerate-4-4-runtime", 6, nv(4, 4), "< 60 s", [&run] {
    const double t = run.enumeration(4, 4).elapsed_seconds;
    return Outcome{std::to_string(t) + " s", t < 60};
  });
  run.check("enumerate-jobs-independent", 6, nv(4, 4) + ", jobs 1 and 3",
            "identical", [] {
              EnumerationOptions one;
              EnumerationOptions three;
              three.jobs = 3;
              const auto a = enumerate_maximal_strong(4, 4, one);
              const auto b = enumerate_maximal_strong(4, 4, three);
              return equal(a.graphs == b.graphs ? "identical" : "different",
                           "identical");
            });
  if (!run.options().long_mode) return;
  run.check("enumerate-5-4-count", 6, nv(5, 4), "24", [&run] {
    return equal(std::to_string(run.enumeration(5, 4).count()), "24");
  });
  run.check("enumerate-5-4-runtime", 6, nv(5, 4), "< 1800 s", [&run] {
    const double t = run.enumeration(5, 4).elapsed_seconds;
    return Outcome{std::to_string(t) + " s", t < 1800};
  });
  lower_bound(run, 6, 129);
  lower_bound(run, 7, 828);
}

void criterion7(Runner& run) {
  const std::vector<std::string> graph_names = {"graph-1", "graph-2", "graph-3",
                                           "graph-4", "graph-5", "graph-6"};
  run.check("maximal-4-4-maximal-strong", 7, "maximal-4-4.txt", "6/6", [&] {
    Tally t;
    const auto records = run.fixtures("maximal-4-4.txt");
    for (const auto& name : graph_names) {
      t.add(is_maximal_strong(from_cycle_spec(record(records, name).spec), 4,
                              4),
            name);
    }
    return t.outcome();
  });
  run.check("maximal-4-4-pairwise-non-isomorphic", 7, "maximal-4-4.txt", "6 classes",
            [&] {
              std::set<std::string> keys;
              const auto records = run.fixtures("maximal-4-4.txt");
              for (const auto& name : graph_names) {
                keys.insert(
                    canonical_key(from_cycle_spec(record(records, name).spec)));
              }
              return equal(std::to_string(keys.size()) + " classes",
                           "6 classes");
            });
  for (const auto& name : graph_names) {
    run.check("maximal-4-4-" + name + "-group", 7, "maximal-4-4.txt", "as listed", [&] {
      const auto records = run.fixtures("maximal-4-4.txt");
      const FixtureRecord& r = record(records, name);
      const PermGroup g = automorphism_group(from_cycle_spec(r.spec));
      const GroupStructure s = identify_group(g);
      const std::string got = to_string(g.order) + " " + s.symbol();
      const std::string want = r.attribute("aut_order") + " " + r.attribute("group");
      return Outcome{got + " (listed " + want + ")", got == want};
    });
  }
  run.check("maximal-4-4-graph-1-is-gamma", 7, nv(4, 4), "isomorphic", [&] {
    const auto records = run.fixtures("maximal-4-4.txt");
    const Graph g = from_cycle_spec(record(records, "graph-1").spec);
    return equal(are_isomorphic(g, gamma(4, 4)) ? "isomorphic" : "not isomorphic",
                 "isomorphic");
  });
  run.check("maximal-4-4-matches-enumeration", 7, nv(4, 4), "same 6 classes", [&] {
    std::vector<std::string> keys;
    const auto records = run.fixtures("maximal-4-4.txt");
    for (const auto& name : graph_names) {
      keys.push_back(canonical_key(from_cycle_spec(record(records, name).spec)));
    }
    std::sort(keys.begin(), keys.end());
    std::vector<std::string> found;
    for (const auto& g : run.enumeration(4, 4).graphs) found.push_back(g.graph6);
    return equal(keys == found ? "same 6 classes" : "different classes",
                 "same 6 classes");
  });

  // The (3,4) case study.
  const std::vector<std::string> rows = {
      "i",   "ii",  "iii", "iv",   "v",   "vi",   "vii",
      "viii", "ix", "x",   "xi",   "xii", "xiii", "xiv",
      "xv",  "xvi", "xvii", "xviii", "xix", "xx"};
  std::vector<RowVerdict> verdicts;
  std::string load_error;
  try {
    const auto case_rows = run.fixtures("case-rows-3-4.txt");
    const auto cases = run.fixtures("cases-3-4.txt");
    verdicts = verify_case_rows(case_rows, record(cases, "case-I-i"));
  } catch (const std::exception& e) {
    load_error = e.what();
  }
  for (const auto& row : rows) {
    const std::string name = "row-" + row;
    run.check("case-rows-" + name, 7, "case-rows-3-4.txt", "verified", [&] {
      if (!load_error.empty()) throw FixtureError(load_error);
      for (const auto& v : verdicts) {
        if (v.name == name) return Outcome{v.detail, v.passed};
      }
      throw FixtureError("no record named " + name);
    });
  }

  // Present B-C cycles as column-pair masks.
  auto candidates = [] {
    std::vector<std::uint64_t> out;
    for (const auto& c : bipartite_hamiltonian_cycles(4)) {
      std::vector<int> ids;
      for (std::size_t k = 0; k < c.size(); ++k) {
        ids.push_back(k % 2 == 0 ? c[k] : 4 + c[k]);
      }
      out.push_back(pair_mask(ids, 4));
    }
    return out;
  };
  auto bc_mask = [](const FixtureRecord& r) {
    return pair_mask(r.spec.cycles.at({1, 2}), 4);
  };
  auto col = [](int b, int c) { return std::uint64_t{1} << (b * 4 + c); };

  run.check("case-II-candidates", 7, "B-C cycles avoiding B2C3 and B0C1",
            "20, equal to the listed rows", [&] {
              std::set<std::uint64_t> found;
              for (std::uint64_t m : candidates()) {
                if (!(m & (col(2, 3) | col(0, 1)))) found.insert(m);
              }
              std::set<std::uint64_t> listed;
              const auto case_rows = run.fixtures("case-rows-3-4.txt");
              for (const auto& r : case_rows) listed.insert(bc_mask(r));
              const std::string got =
                  std::to_string(found.size()) +
                  (found == listed ? ", equal to the listed rows"
                                   : ", differs from the listed rows");
              return equal(got, "20, equal to the listed rows");
            });
  run.check("case-II-survivors", 7, "strongly CP completions",
            "rows i, vii, xii, xviii", [&] {
              const auto case_rows = run.fixtures("case-rows-3-4.txt");
              std::string got;
              for (const auto& r : case_rows) {
                if (is_strongly_cp(from_cycle_spec(r.spec), 3, 4).holds) {
                  got += (got.empty() ? "rows " : ", ") + r.name.substr(4);
                }
              }
              return equal(got, "rows i, vii, xii, xviii");
            });
  run.check("case-I-candidates", 7, "B-C cycles with no Bj~Cj",
            "6, equal to the listed possibilities", [&] {
              std::uint64_t diagonal = 0;
              for (int j = 0; j < 4; ++j) diagonal |= col(j, j);
              std::set<std::uint64_t> found;
              for (std::uint64_t m : candidates()) {
                if (!(m & diagonal)) found.insert(m);
              }
              std::set<std::uint64_t> listed;
              const auto cases = run.fixtures("cases-3-4.txt");
              for (const char* s : {"i", "ii", "iii", "iv", "v", "vi"}) {
                listed.insert(bc_mask(record(cases, std::string("case-I-") + s)));
              }
              const std::string got =
                  std::to_string(found.size()) +
                  (found == listed ? ", equal to the listed possibilities"
                                   : ", differs from the listed possibilities");
              return equal(got, "6, equal to the listed possibilities");
            });
  run.check("case-maps", 7, "map-to-* attributes", "all verified", [&] {
    Tally t;
    const auto cases = run.fixtures("cases-3-4.txt");
    for (const auto& r : cases) {
      for (const auto& [key, value] : r.attributes) {
        if (key.rfind("map-to-", 0) != 0) continue;
        const FixtureRecord& target = record(cases, key.substr(7));
        const Permutation p =
            parse_cycles(value, r.spec.layout().order(), r.spec.layout());
        t.add(relabel(from_cycle_spec(r.spec), p) ==
                  from_cycle_spec(target.spec),
              r.name + " -> " + target.name);
      }
    }
    const Outcome o = t.outcome();
    return Outcome{o.computed, o.pass};
  });
  run.check("case-gamma", 7, "isomorphic-to: gamma", "all verified", [&] {
    Tally t;
    for (const auto& r : run.fixtures("cases-3-4.txt")) {
      if (r.attribute("isomorphic-to") != "gamma") continue;
      t.add(are_isomorphic(from_cycle_spec(r.spec), gamma(r.spec.n, r.spec.v)),
            r.name);
    }
    return t.outcome();
  });
  run.check("case-I-strongly-cp", 7, "case-I-i .. case-I-vi", "6/6", [&] {
    Tally t;
    for (const auto& r : run.fixtures("cases-3-4.txt")) {
      if (r.name.rfind("case-I-", 0) != 0) continue;
      t.add(is_maximal_strong(from_cycle_spec(r.spec), 3, 4), r.name);
    }
    return t.outcome();
  });
  for (const char* name : {"case-I-i", "case-I-iv"}) {
    run.check(std::string(name) + "-group", 7, "cases-3-4.txt", "as listed",
              [&run, name] {
                const auto cases = run.fixtures("cases-3-4.txt");
                const FixtureRecord& r = record(cases, name);
                const PermGroup g = automorphism_group(from_cycle_spec(r.spec));
                const std::string got =
                    to_string(g.order) + " " + identify_group(g).symbol();
                const std::string want =
                    r.attribute("aut_order") + " " + r.attribute("group");
                return Outcome{got + " (listed " + want + ")", got == want};
              });
  }
  run.check("case-I-i-generators", 7, "cases-3-4.txt",
            "automorphisms generating order 4", [&] {
              const auto cases = run.fixtures("cases-3-4.txt");
              const FixtureRecord& r = record(cases, "case-I-i");
              const Graph g = from_cycle_spec(r.spec);
              const std::string text = r.attribute("generators");
              std::vector<Permutation> gens;
              std::size_t start = 0;
              while (start <= text.size()) {
                const std::size_t end = std::min(text.find(';', start), text.size());
                gens.push_back(parse_cycles(text.substr(start, end - start),
                                            g.order(), r.spec.layout()));
                start = end + 1;
              }
              const bool autos = std::all_of(
                  gens.begin(), gens.end(),
                  [&](const Permutation& p) { return is_automorphism(g, p); });
              const GroupOrder order = make_group(g.order(), gens).order;
              std::string got = autos ? "automorphisms" : "not automorphisms";
              got += " generating order " + to_string(order);
              return equal(got, "automorphisms generating order 4");
            });
  run.check("enumerate-3-4-matches-cases", 7, nv(3, 4),
            "case-I-i and case-I-iv", [&] {
              const auto cases = run.fixtures("cases-3-4.txt");
              std::vector<std::string> keys = {
                  canonical_key(from_cycle_spec(record(cases, "case-I-i").spec)),
                  canonical_key(from_cycle_spec(record(cases, "case-I-iv").spec))};
              std::sort(keys.begin(), keys.end());
              std::vector<std::string> found;
              for (const auto& g : run.enumeration(3, 4).graphs) {
                found.push_back(g.graph6);
              }
              return equal(keys == found ? "case-I-i and case-I-iv" : "different",
                           "case-I-i and case-I-iv");
            });
}

std::string join(const std::vector<std::string>& keys) {
  std::string s;
  for (const auto& k : keys) s += (s.empty() ? "" : " ") + k;
  return s.empty() ? "none" : s;
}

void criterion8(Runner& run) {
  std::vector<std::pair<int, int>> sizes = {{2, 2}, {2, 3}, {3, 2}};
  if (run.options().long_mode) {
    sizes.emplace_back(2, 4);
    sizes.emplace_back(4, 2);
  }
  for (const auto& [n, v] : sizes) {
    const bool slow = n * v > 6;
    run.check("scan-strong", 8, nv(n, v), "enumerator classes", [&run, n, v, slow] {
      const auto scanned = brute_force_maximal_strong(n, v, slow);
      std::vector<std::string> found;
      for (const auto& g : run.enumeration(n, v).graphs) found.push_back(g.graph6);
      return Outcome{join(scanned) + (scanned == found ? "" : " vs " + join(found)),
                     scanned == found};
    });
    run.check("scan-weak", 8, nv(n, v), "one class, gamma-prime", [n, v, slow] {
      const auto scanned = brute_force_maximal_weak(n, v, slow);
      const bool ok =
          scanned.size() == 1 && scanned[0] == canonical_key(gamma_prime(n, v));
      return Outcome{std::to_string(scanned.size()) + " class(es)" +
                         (ok ? ", gamma-prime" : ""),
                     ok};
    });
  }
  run.runtime(8, 300);
}

void criterion9(Runner& run) {
  run.check("gamma-prime-turan-edges", 9, "2<=n,v<=5", "16/16", [] {
    Tally t;
    for (int n = 2; n <= 5; ++n) {
      for (int v = 2; v <= 5; ++v) {
        t.add(gamma_prime(n, v).edge_count() == turan(n * v, v).edge_count(),
              nv(n, v));
      }
    }
    return t.outcome();
  });
  run.check("strong-turan-ratio", 9, "2<=n,v<=5", "16/16", [] {
    Tally t;
    for (int n = 2; n <= 5; ++n) {
      for (int v = 2; v <= 5; ++v) {
        // s / T = 1 - (n-1)/(n(v-1))  <=>  s n (v-1) = T (n(v-1) - (n-1))
        const std::int64_t s = strong_bound(n, v);
        const std::int64_t tur = turan(n * v, v).edge_count();
        const std::int64_t d = std::int64_t{n} * (v - 1);
        t.add(s * d == tur * (d - (n - 1)), nv(n, v));
      }
    }
    return t.outcome();
  });
  run.check("complement-circulant", 9, "2<=n<=4, 3<=v<=4", "6/6", [] {
    Tally t;
    for (int n = 2; n <= 4; ++n) {
      for (int v = 3; v <= 4; ++v) {
        const Graph c = circulant(n * v, symmetric_interval(n * v, n - 1));
        t.add(are_isomorphic(complement(gamma(n, v)), c), nv(n, v));
      }
    }
    return t.outcome();
  });
}

void criterion10(Runner& run) {
  const std::uint64_t seed = run.options().seed;
  const std::string params = "seed " + std::to_string(seed);
  run.check("canonical-relabeling-invariance", 10,
            params + ", 200 graphs x 5 relabelings, <=12 vertices", "1000/1000",
            [seed] {
              std::mt19937_64 rng(seed);
              std::uniform_int_distribution<int> order(1, 12);
              std::uniform_real_distribution<double> density(0.1, 0.9);
              Tally t;
              for (int i = 0; i < 200; ++i) {
                const Graph g = oracle::random_graph(order(rng), density(rng), rng);
                const std::string key = canonical_key(g);
                for (int k = 0; k < 5; ++k) {
                  const Graph h = oracle::shuffle_labels(g, rng);
                  t.add(canonical_key(h) == key && find_isomorphism(g, h),
                        "graph " + std::to_string(i));
                }
              }
              return t.outcome();
            });

  // A sample of 100 small graphs where half are relabeled copies of others.
  auto sample = [seed] {
    std::mt19937_64 rng(seed + 1);
    std::uniform_int_distribution<int> order(4, 7);
    std::uniform_real_distribution<double> density(0.2, 0.8);
    std::vector<Graph> out;
    for (int i = 0; i < 50; ++i) {
      out.push_back(oracle::random_graph(order(rng), density(rng), rng));
    }
    for (int i = 0; i < 50; ++i) {
      out.push_back(oracle::shuffle_labels(out[rng() % 50], rng));
    }
    return out;
  };
  run.check("isomorphism-vs-brute-force", 10, params + ", 100 graphs <=7 vertices",
            "all pairs agree", [&] {
              const auto graphs = sample();
              std::size_t pairs = 0;
              std::size_t agree = 0;
              std::size_t isomorphic = 0;
              for (std::size_t a = 0; a < graphs.size(); ++a) {
                for (std::size_t b = a + 1; b < graphs.size(); ++b) {
                  const bool fast = are_isomorphic(graphs[a], graphs[b]);
                  const bool slow =
                      oracle::isomorphic_by_permutations(graphs[a], graphs[b]);
                  ++pairs;
                  agree += fast == slow;
                  isomorphic += slow;
                }
              }
              const std::string got =
                  agree == pairs ? "all pairs agree"
                                 : std::to_string(pairs - agree) + " disagreements";
              return Outcome{got + " (" + std::to_string(pairs) + " pairs, " +
                                 std::to_string(isomorphic) + " isomorphic)",
                             agree == pairs};
            });
  run.check("aut-order-vs-brute-force", 10, params + ", 100 graphs <=7 vertices",
            "100/100", [&] {
              Tally t;
              const auto graphs = sample();
              for (std::size_t i = 0; i < graphs.size(); ++i) {
                const PermGroup g = automorphism_group(graphs[i]);
                t.add(g.order == oracle::automorphism_count(graphs[i]),
                      "graph " + std::to_string(i));
              }
              return t.outcome();
            });
}

}  // namespace

std::string default_fixture_dir() {
  if (const char* env = std::getenv("CLIQUEPART_FIXTURES"); env && *env) {
    return env;
  }
  return CLIQUEPART_FIXTURE_DIR;
}

VerificationReport run_acceptance(const AcceptanceOptions& options) {
  AcceptanceOptions opts = options;
  if (opts.fixture_dir.empty()) opts.fixture_dir = default_fixture_dir();
  Runner run(opts);
  criterion1(run);
  criterion2(run);
  criterion3(run);
  criterion4(run);
  criterion5(run);
  criterion6(run);
  criterion7(run);
  criterion8(run);
  criterion9(run);
  criterion10(run);
  return run.take();
}

}  // namespace cliquepart
