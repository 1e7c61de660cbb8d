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

#include "cliquepart/permutation.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cliquepart {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || x >= size() || seen[x]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[x] = true;
  }
}

Permutation Permutation::identity(int size) {
  std::vector<int> images(size);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int x = 0; x < size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int x = 0; x < size(); ++x) inv[images_[x]] = x;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (const auto& cycle : cycles()) {
    result = std::lcm(result, static_cast<std::uint64_t>(cycle.size()));
  }
  return result;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 0; start < size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<int> cycle;
    for (int x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::optional<int> Permutation::first_moved() const {
  for (int x = 0; x < size(); ++x) {
    if (images_[x] != x) return x;
  }
  return std::nullopt;
}

Permutation compose(const Permutation& first, const Permutation& second) {
  if (first.size() != second.size()) {
    throw std::invalid_argument("compose: size mismatch");
  }
  std::vector<int> images(first.size());
  for (int x = 0; x < first.size(); ++x) images[x] = second(first(x));
  return Permutation(std::move(images));
}

Permutation power(const Permutation& p, std::uint64_t k) {
  Permutation result = Permutation::identity(p.size());
  Permutation base = p;
  while (k > 0) {
    if (k & 1U) result = compose(result, base);
    base = compose(base, base);
    k >>= 1U;
  }
  return result;
}

std::string to_cycle_string(const Permutation& p,
                            const std::optional<BlockLayout>& layout) {
  const auto cycles = p.cycles();
  if (cycles.empty()) return "()";
  std::string out;
  for (const auto& cycle : cycles) {
    out += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k > 0) out += ' ';
      out += layout ? layout->label(cycle[k]) : std::to_string(cycle[k]);
    }
    out += ')';
  }
  return out;
}

Permutation parse_cycles(std::string_view text, int size,
                         const std::optional<BlockLayout>& layout) {
  std::vector<int> images(size);
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(size, false);

  auto parse_point = [&](std::string_view token) {
    if (layout) return layout->parse_label(token);
    int value = 0;
    for (char c : token) {
      if (c < '0' || c > '9') {
        throw std::invalid_argument("bad point '" + std::string(token) + "'");
      }
      value = value * 10 + (c - '0');
    }
    if (value >= size) throw std::invalid_argument("point out of range");
    return value;
  };

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("expected '('");
    ++pos;
    std::vector<int> cycle;
    std::string token;
    for (;; ++pos) {
      if (pos >= text.size()) throw std::invalid_argument("unclosed cycle");
      const char c = text[pos];
      if (c == ' ' || c == ',' || c == ')') {
        if (!token.empty()) {
          const int x = parse_point(token);
          if (used[x]) {
            throw std::invalid_argument("point repeated in cycle notation");
          }
          used[x] = true;
          cycle.push_back(x);
          token.clear();
        }
        if (c == ')') break;
      } else {
        token.push_back(c);
      }
    }
    ++pos;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
    skip_space();
  }
  return Permutation(std::move(images));
}

Graph relabel(const Graph& g, const Permutation& p) {
  if (p.size() != g.order()) {
    throw std::invalid_argument("relabel: size mismatch");
  }
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(p(u), p(v));
  return out;
}

std::string to_string(GroupOrder value) {
  if (value == 0) return "0";
  std::string out;
  while (value > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

StabilizerChain::StabilizerChain(int degree,
                                 std::span<const Permutation> generators)
    : degree_(degree) {
  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    if (g.size() != degree) {
      throw std::invalid_argument("StabilizerChain: generator size mismatch");
    }
    if (!g.is_identity()) gens.push_back(g);
  }
  // Initial base: extend until no generator fixes every base point.
  std::vector<int> base;
  for (const auto& g : gens) {
    const bool fixes_all = std::all_of(base.begin(), base.end(),
                                       [&](int b) { return g(b) == b; });
    if (fixes_all) base.push_back(*g.first_moved());
  }
  levels_.resize(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    levels_[i].base_point = base[i];
    for (const auto& g : gens) {
      bool fixes_prefix = true;
      for (std::size_t j = 0; j < i; ++j) fixes_prefix &= g(base[j]) == base[j];
      if (fixes_prefix) levels_[i].generators.push_back(g);
    }
    rebuild_orbit(i);
  }
  run();
}

void StabilizerChain::rebuild_orbit(std::size_t level) {
  Level& lv = levels_[level];
  lv.transversal.assign(degree_, std::nullopt);
  lv.transversal[lv.base_point] = Permutation::identity(degree_);
  std::deque<int> queue{lv.base_point};
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (const auto& s : lv.generators) {
      const int y = s(x);
      if (!lv.transversal[y]) {
        lv.transversal[y] = compose(*lv.transversal[x], s);
        queue.push_back(y);
      }
    }
  }
}

std::pair<Permutation, std::size_t> StabilizerChain::strip(
    Permutation g, std::size_t from) const {
  for (std::size_t j = from; j < levels_.size(); ++j) {
    const int x = g(levels_[j].base_point);
    const auto& u = levels_[j].transversal[x];
    if (!u) return {std::move(g), j};
    g = compose(g, u->inverse());
  }
  return {std::move(g), levels_.size()};
}

// Checks every Schreier generator level by level from the top, pushing
// non-trivial residues down until each level's generators generate the
// full point stabilizer of the level above.
void StabilizerChain::run() {
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool level_done = true;
    const Level& lv = levels_[i];
    for (int x = 0; x < degree_ && level_done; ++x) {
      if (!lv.transversal[x]) continue;
      for (std::size_t k = 0; k < lv.generators.size(); ++k) {
        const Permutation& s = levels_[i].generators[k];
        const Permutation& ux = *levels_[i].transversal[x];
        const Permutation& uy = *levels_[i].transversal[s(x)];
        Permutation schreier = compose(compose(ux, s), uy.inverse());
        auto [residue, drop] = strip(std::move(schreier), i + 1);
        if (drop == levels_.size() && residue.is_identity()) continue;
        if (drop == levels_.size()) {
          Level fresh;
          fresh.base_point = *residue.first_moved();
          levels_.push_back(std::move(fresh));
        }
        for (std::size_t l = i + 1; l <= drop; ++l) {
          levels_[l].generators.push_back(residue);
          rebuild_orbit(l);
        }
        i = static_cast<std::ptrdiff_t>(drop);
        level_done = false;
        break;
      }
    }
    if (level_done) --i;
  }
}

GroupOrder StabilizerChain::order() const {
  GroupOrder result = 1;
  for (int size : orbit_sizes()) result *= static_cast<GroupOrder>(size);
  return result;
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.size() != degree_) return false;
  auto [residue, drop] = strip(g, 0);
  return drop == levels_.size() && residue.is_identity();
}

std::vector<int> StabilizerChain::base() const {
  std::vector<int> out;
  for (const auto& lv : levels_) out.push_back(lv.base_point);
  return out;
}

std::vector<int> StabilizerChain::orbit_sizes() const {
  std::vector<int> out;
  for (const auto& lv : levels_) {
    out.push_back(static_cast<int>(std::count_if(
        lv.transversal.begin(), lv.transversal.end(),
        [](const auto& u) { return u.has_value(); })));
  }
  return out;
}

PermGroup make_group(int degree, std::vector<Permutation> generators) {
  PermGroup group;
  group.degree = degree;
  group.order = StabilizerChain(degree, generators).order();
  group.generators = std::move(generators);
  return group;
}

std::optional<std::vector<Permutation>> group_elements(const PermGroup& group,
                                                       std::size_t cap) {
  if (group.order > cap) return std::nullopt;
  std::set<Permutation> seen{Permutation::identity(group.degree)};
  std::deque<Permutation> queue{Permutation::identity(group.degree)};
  while (!queue.empty()) {
    Permutation p = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : group.generators) {
      Permutation q = compose(p, s);
      if (seen.insert(q).second) {
        if (seen.size() > cap) return std::nullopt;
        queue.push_back(std::move(q));
      }
    }
  }
  return std::vector<Permutation>(seen.begin(), seen.end());
}

}  // namespace cliquepart
