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

#include "cliquepart/constructions.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cliquepart {
namespace {

void check_params(int n, int v) {
  if (n < 2 || v < 2) {
    throw std::invalid_argument("need n >= 2 and v >= 2");
  }
  if (n * v > kMaxOrder) {
    throw std::invalid_argument("n*v = " + std::to_string(n * v) +
                                " exceeds capacity 64");
  }
}

int mod(int a, int m) { return ((a % m) + m) % m; }

Graph disjoint_blocks(int n, int v) {
  Graph g(n * v);
  const BlockLayout layout{n, v};
  for (int i = 0; i < n; ++i) {
    for (int a = 0; a < v; ++a) {
      for (int b = a + 1; b < v; ++b) {
        g.add_edge(layout.id(i, a), layout.id(i, b));
      }
    }
  }
  return g;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

Graph gamma(int n, int v) {
  check_params(n, v);
  const BlockLayout layout{n, v};
  Graph g = disjoint_blocks(n, v);
  for (int i = 0; i < n; ++i) {
    for (int k = i + 1; k < n; ++k) {
      for (int j = 0; j < v; ++j) {
        for (int l = 0; l < v; ++l) {
          const int diff = mod(l - j, v);
          if (diff != 0 && diff != 1) {
            g.add_edge(layout.id(i, j), layout.id(k, l));
          }
        }
      }
    }
  }
  return g;
}

Graph gamma_prime(int n, int v) {
  check_params(n, v);
  const BlockLayout layout{n, v};
  Graph g = complete_graph(n * v);
  for (int i = 0; i + 1 < n; ++i) {
    for (int k = i + 1; k < n; ++k) {
      for (int l = 0; l < v; ++l) {
        g.remove_edge(layout.id(i, 0), layout.id(k, l));
      }
    }
  }
  return g;
}

Graph turan(int order, int parts) {
  if (parts < 1 || order < parts) {
    throw std::invalid_argument("turan: need parts >= 1 and order >= parts");
  }
  Graph g(order);
  for (int u = 0; u < order; ++u) {
    for (int w = u + 1; w < order; ++w) {
      if (u % parts != w % parts) g.add_edge(u, w);
    }
  }
  return g;
}

Graph circulant(int m, const std::set<int>& connection) {
  for (int s : connection) {
    if (s <= 0 || s >= m) {
      throw std::invalid_argument("circulant: connection element " +
                                  std::to_string(s) + " not in [1, m-1]");
    }
    if (!connection.contains(m - s)) {
      throw std::invalid_argument("circulant: connection set not closed "
                                  "under negation");
    }
  }
  Graph g(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (connection.contains(mod(i - j, m))) g.add_edge(i, j);
    }
  }
  return g;
}

std::set<int> symmetric_interval(int m, int k) {
  std::set<int> out;
  for (int s = 1; s <= k; ++s) {
    out.insert(mod(s, m));
    out.insert(mod(-s, m));
  }
  out.erase(0);
  return out;
}

Permutation sigma_automorphism(int n, int v) {
  check_params(n, v);
  const BlockLayout layout{n, v};
  std::vector<int> images(n * v);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < v; ++j) {
      images[layout.id(i, j)] =
          i + 1 < n ? layout.id(i + 1, j) : layout.id(0, mod(j - 1, v));
    }
  }
  return Permutation(std::move(images));
}

void validate(const CycleSpec& spec) {
  check_params(spec.n, spec.v);
  const BlockLayout layout = spec.layout();
  for (const auto& [pair, cycle] : spec.cycles) {
    const auto [p, q] = pair;
    const std::string where =
        "cycle for blocks " + layout.label(layout.id(p, 0)).substr(0, 1) +
        "," + layout.label(layout.id(q, 0)).substr(0, 1);
    if (p < 0 || q >= spec.n || p >= q) {
      throw CycleSpecError(where + ": bad block pair");
    }
    if (static_cast<int>(cycle.size()) != 2 * spec.v) {
      throw CycleSpecError(where + ": expected " + std::to_string(2 * spec.v) +
                           " vertices");
    }
    VertexSet seen;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int x = cycle[k];
      if (x < 0 || x >= layout.order()) {
        throw CycleSpecError(where + ": vertex out of range");
      }
      if (seen.contains(x)) {
        throw CycleSpecError(where + ": repeated vertex " + layout.label(x));
      }
      seen.insert(x);
      const int b = layout.block_of(x);
      const int want = k % 2 == 0 ? layout.block_of(cycle[0])
                                  : (layout.block_of(cycle[0]) == p ? q : p);
      if ((b != p && b != q) || b != want) {
        throw CycleSpecError(where + ": cycle does not alternate between "
                                     "the two blocks");
      }
    }
  }
}

Graph from_cycle_spec(const CycleSpec& spec) {
  validate(spec);
  const BlockLayout layout = spec.layout();
  Graph g = disjoint_blocks(spec.n, spec.v);
  const bool present = spec.meaning == CycleSpec::Meaning::kPresent;
  for (int p = 0; p < spec.n; ++p) {
    for (int q = p + 1; q < spec.n; ++q) {
      Graph listed(layout.order());
      if (auto it = spec.cycles.find({p, q}); it != spec.cycles.end()) {
        const auto& cycle = it->second;
        for (std::size_t k = 0; k < cycle.size(); ++k) {
          listed.add_edge(cycle[k], cycle[(k + 1) % cycle.size()]);
        }
      }
      for (int a : layout.block(p)) {
        for (int b : layout.block(q)) {
          if (listed.has_edge(a, b) == present) g.add_edge(a, b);
        }
      }
    }
  }
  return g;
}

CycleSpec missing_cycle_spec(const Graph& g, int n, int v) {
  check_params(n, v);
  const BlockLayout layout{n, v};
  if (g.order() != layout.order()) {
    throw std::invalid_argument("missing_cycle_spec: order mismatch");
  }
  CycleSpec spec{n, v, CycleSpec::Meaning::kMissing, {}};
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      const VertexSet both = layout.block(p) | layout.block(q);
      auto missing = [&](int x) {
        const VertexSet other =
            layout.block_of(x) == p ? layout.block(q) : layout.block(p);
        return other - g.neighbors(x);
      };
      for (int x : both) {
        if (missing(x).size() != 2) {
          throw std::invalid_argument("missing edges between blocks " +
                                      std::to_string(p) + " and " +
                                      std::to_string(q) +
                                      " are not 2-regular");
        }
      }
      std::vector<int> cycle{layout.id(p, 0)};
      int prev = -1;
      int cur = cycle[0];
      for (;;) {
        const VertexSet next = missing(cur) - VertexSet::single(prev < 0 ? cur : prev);
        const int nxt = next.first();
        if (nxt == cycle[0]) break;
        if (std::find(cycle.begin(), cycle.end(), nxt) != cycle.end()) break;
        cycle.push_back(nxt);
        prev = cur;
        cur = nxt;
      }
      if (static_cast<int>(cycle.size()) != 2 * v) {
        throw std::invalid_argument("missing edges between blocks " +
                                    std::to_string(p) + " and " +
                                    std::to_string(q) +
                                    " are not a single cycle");
      }
      spec.cycles[{p, q}] = std::move(cycle);
    }
  }
  return spec;
}

std::string FixtureRecord::attribute(const std::string& key) const {
  auto it = attributes.find(key);
  return it == attributes.end() ? std::string{} : it->second;
}

std::vector<FixtureRecord> parse_fixtures(std::string_view text) {
  std::vector<FixtureRecord> records;
  FixtureRecord current;
  std::vector<std::vector<std::string>> raw_cycles;
  int line_no = 0;

  auto fail = [&](const std::string& what) {
    throw FixtureError("fixture line " + std::to_string(line_no) + ": " + what);
  };

  auto finish = [&] {
    if (raw_cycles.empty() && current.attributes.empty()) return;
    int max_block = 0;
    std::size_t len = 0;
    for (const auto& c : raw_cycles) {
      len = std::max(len, c.size());
      for (const auto& label : c) {
        if (label.empty()) fail("empty vertex label");
        const char b = label[0];
        const int block = b >= 'a' ? 26 + (b - 'a') : b - 'A';
        max_block = std::max(max_block, block);
      }
    }
    CycleSpec& spec = current.spec;
    const std::string n_attr = current.attribute("n");
    const std::string v_attr = current.attribute("v");
    try {
      spec.n = n_attr.empty() ? max_block + 1 : std::stoi(n_attr);
      spec.v = v_attr.empty() ? static_cast<int>(len / 2) : std::stoi(v_attr);
    } catch (const std::exception&) {
      fail("bad n or v attribute");
    }
    const std::string meaning = current.attribute("cycles");
    if (meaning.empty() || meaning == "missing") {
      spec.meaning = CycleSpec::Meaning::kMissing;
    } else if (meaning == "present") {
      spec.meaning = CycleSpec::Meaning::kPresent;
    } else {
      fail("cycles attribute must be 'present' or 'missing'");
    }
    const BlockLayout layout = spec.layout();
    for (const auto& c : raw_cycles) {
      std::vector<int> ids;
      try {
        for (const auto& label : c) ids.push_back(layout.parse_label(label));
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
      if (ids.size() < 2) fail("cycle too short");
      int p = layout.block_of(ids[0]);
      int q = layout.block_of(ids[1]);
      if (p > q) std::swap(p, q);
      if (!spec.cycles.emplace(std::pair{p, q}, std::move(ids)).second) {
        fail("two cycles for the same block pair");
      }
    }
    try {
      validate(spec);
    } catch (const std::invalid_argument& e) {
      fail(current.name + ": " + e.what());
    }
    records.push_back(std::move(current));
    current = FixtureRecord{};
    raw_cycles.clear();
  };

  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty()) {
      finish();
      continue;
    }
    if (t[0] == '#') continue;
    if (const auto colon = t.find(':'); colon != std::string::npos) {
      const std::string key = trim(std::string_view(t).substr(0, colon));
      const std::string value = trim(std::string_view(t).substr(colon + 1));
      if (key == "name") current.name = value;
      current.attributes[key] = value;
      continue;
    }
    std::vector<std::string> labels;
    std::string token;
    for (char c : t) {
      if (c == ',') {
        labels.push_back(trim(token));
        token.clear();
      } else if (c != '(' && c != ')') {
        token.push_back(c);
      }
    }
    labels.push_back(trim(token));
    raw_cycles.push_back(std::move(labels));
  }
  finish();
  return records;
}

std::vector<FixtureRecord> load_fixtures(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FixtureError("cannot open fixture file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_fixtures(buf.str());
}

std::string format_cycle(const std::vector<int>& cycle,
                         const BlockLayout& layout) {
  std::string out;
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    if (k > 0) out += ',';
    out += layout.label(cycle[k]);
  }
  return out;
}

}  // namespace cliquepart
