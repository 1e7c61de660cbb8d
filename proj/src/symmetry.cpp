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

#include "cliquepart/symmetry.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <stdexcept>

namespace cliquepart {
namespace {

using Cells = std::vector<VertexSet>;

// Splits every cell by the vector of neighbour counts into all current
// cells, repeating until no cell splits. Sub-cells are ordered by their
// count vectors, so the result does not depend on vertex names.
Cells refine(const Graph& g, Cells cells) {
  std::vector<std::uint8_t> counts;
  std::vector<int> members;
  std::vector<int> idx;
  for (;;) {
    const std::size_t k = cells.size();
    if (static_cast<int>(k) == g.order()) return cells;
    bool changed = false;
    Cells next;
    next.reserve(g.order());
    for (const VertexSet cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      members = cell.to_vector();
      counts.assign(members.size() * k, 0);
      for (std::size_t m = 0; m < members.size(); ++m) {
        const std::uint64_t row = g.row(members[m]);
        for (std::size_t c = 0; c < k; ++c) {
          counts[m * k + c] =
              static_cast<std::uint8_t>(std::popcount(row & cells[c].bits()));
        }
      }
      idx.resize(members.size());
      std::iota(idx.begin(), idx.end(), 0);
      auto cmp = [&](int a, int b) {
        return std::memcmp(&counts[a * k], &counts[b * k], k);
      };
      std::stable_sort(idx.begin(), idx.end(),
                       [&](int a, int b) { return cmp(a, b) < 0; });
      VertexSet part;
      for (std::size_t m = 0; m < idx.size(); ++m) {
        if (m > 0 && cmp(idx[m - 1], idx[m]) != 0) {
          next.push_back(part);
          part = VertexSet{};
          changed = true;
        }
        part.insert(members[idx[m]]);
      }
      next.push_back(part);
    }
    cells = std::move(next);
    if (!changed) return cells;
  }
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

class LabelingSearch {
 public:
  explicit LabelingSearch(const Graph& g) : g_(g) {}

  CanonicalForm run() {
    Cells root;
    if (g_.order() > 0) root.push_back(g_.vertices());
    visit(refine(g_, std::move(root)), 0);
    CanonicalForm out;
    if (g_.order() == 0) {
      out.labeling = Permutation::identity(0);
      out.graph = g_;
    } else {
      out.labeling = *best_labeling_;
      out.graph = best_graph_;
    }
    out.key = to_graph6(out.graph);
    out.automorphisms = std::move(automorphisms_);
    out.nodes = nodes_;
    return out;
  }

 private:
  static constexpr int kNoJump = 1 << 30;

  // Returns the depth to unwind to, or kNoJump.
  int visit(const Cells& cells, int depth) {
    ++nodes_;
    if (static_cast<int>(cells.size()) == g_.order()) return leaf(cells);

    std::size_t target = 0;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].size() > cells[target].size()) target = c;
    }
    const VertexSet choices = cells[target];
    VertexSet explored;
    std::size_t autos_seen = SIZE_MAX;
    UnionFind orbits(0);

    for (int w : choices) {
      if (!explored.empty()) {
        if (autos_seen != automorphisms_.size()) {
          orbits = stabilizer_orbits();
          autos_seen = automorphisms_.size();
        }
        bool equivalent = false;
        for (int e : explored) {
          if (orbits.find(e) == orbits.find(w)) {
            equivalent = true;
            break;
          }
        }
        if (equivalent) continue;
      }
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c == target) {
          child.push_back(VertexSet::single(w));
          child.push_back(cells[c] - VertexSet::single(w));
        } else {
          child.push_back(cells[c]);
        }
      }
      path_.push_back(w);
      const int jump = visit(refine(g_, std::move(child)), depth + 1);
      path_.pop_back();
      explored.insert(w);
      if (jump < depth) return jump;
    }
    return kNoJump;
  }

  // Orbits of the automorphisms found so far that fix the current path.
  UnionFind stabilizer_orbits() const {
    UnionFind uf(g_.order());
    for (const auto& a : automorphisms_) {
      const bool fixes = std::all_of(path_.begin(), path_.end(),
                                     [&](int x) { return a(x) == x; });
      if (!fixes) continue;
      for (int x = 0; x < g_.order(); ++x) uf.unite(x, a(x));
    }
    return uf;
  }

  int leaf(const Cells& cells) {
    std::vector<int> images(g_.order());
    for (std::size_t k = 0; k < cells.size(); ++k) {
      images[cells[k].first()] = static_cast<int>(k);
    }
    Permutation labeling(std::move(images));
    Graph relabeled = relabel(g_, labeling);

    if (!first_labeling_) {
      first_labeling_ = labeling;
      first_graph_ = relabeled;
      first_path_ = path_;
      best_labeling_ = std::move(labeling);
      best_graph_ = std::move(relabeled);
      return kNoJump;
    }
    if (relabeled == first_graph_) {
      add_automorphism(compose(labeling, first_labeling_->inverse()));
      std::size_t common = 0;
      while (common < path_.size() && common < first_path_.size() &&
             path_[common] == first_path_[common]) {
        ++common;
      }
      return static_cast<int>(common);
    }
    if (relabeled == best_graph_) {
      add_automorphism(compose(labeling, best_labeling_->inverse()));
    } else if (relabeled < best_graph_) {
      best_labeling_ = std::move(labeling);
      best_graph_ = std::move(relabeled);
    }
    return kNoJump;
  }

  void add_automorphism(Permutation p) {
    if (!p.is_identity()) automorphisms_.push_back(std::move(p));
  }

  const Graph& g_;
  std::vector<int> path_;
  std::vector<int> first_path_;
  std::optional<Permutation> first_labeling_;
  std::optional<Permutation> best_labeling_;
  Graph first_graph_;
  Graph best_graph_;
  std::vector<Permutation> automorphisms_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) { return LabelingSearch(g).run(); }

std::optional<Permutation> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) {
    return std::nullopt;
  }
  const CanonicalForm cg = canonical_form(g);
  const CanonicalForm ch = canonical_form(h);
  if (cg.graph != ch.graph) return std::nullopt;
  Permutation map = compose(cg.labeling, ch.labeling.inverse());
  if (relabel(g, map) != h) {
    throw std::logic_error("find_isomorphism: canonical labelings disagree");
  }
  return map;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.size() != g.order()) {
    throw std::invalid_argument("is_automorphism: size mismatch");
  }
  for (int u = 0; u < g.order(); ++u) {
    std::uint64_t mapped = 0;
    for (int w : g.neighbors(u)) mapped |= std::uint64_t{1} << p(w);
    if (mapped != g.row(p(u))) return false;
  }
  return true;
}

PermGroup automorphism_group(const Graph& g) {
  if (g.order() > 32) {
    throw std::invalid_argument("automorphism_group: more than 32 vertices");
  }
  CanonicalForm cf = canonical_form(g);
  for (const auto& a : cf.automorphisms) {
    if (!is_automorphism(g, a)) {
      throw std::logic_error("automorphism_group: bad generator");
    }
  }
  return make_group(g.order(), std::move(cf.automorphisms));
}

std::string GroupStructure::tag() const {
  switch (kind) {
    case GroupKind::kTrivial:
      return "trivial";
    case GroupKind::kCyclic:
      return "cyclic " + to_string(order);
    case GroupKind::kDihedral:
      return "dihedral " + to_string(order);
    case GroupKind::kElementaryAbelian:
      return "elementary-abelian " + to_string(order);
    case GroupKind::kOther:
      break;
  }
  return "other";
}

std::string GroupStructure::symbol() const {
  switch (kind) {
    case GroupKind::kTrivial:
      return "1";
    case GroupKind::kCyclic:
      return "Z" + to_string(order);
    case GroupKind::kDihedral:
      return "D" + to_string(order);
    case GroupKind::kElementaryAbelian: {
      std::string out = "Z2";
      for (GroupOrder o = order; o > 2; o /= 2) out += "xZ2";
      return out;
    }
    case GroupKind::kOther:
      break;
  }
  return "other(" + to_string(order) + ")";
}

GroupStructure identify_group(const PermGroup& group) {
  GroupStructure s;
  s.order = group.order;
  s.abelian = true;
  for (const auto& a : group.generators) {
    for (const auto& b : group.generators) {
      if (compose(a, b) != compose(b, a)) s.abelian = false;
    }
  }
  if (group.order == 1) {
    s.kind = GroupKind::kTrivial;
    return s;
  }
  const auto elements = group_elements(group, 65536);
  if (!elements) return s;

  std::vector<std::uint64_t> orders;
  orders.reserve(elements->size());
  for (const auto& e : *elements) orders.push_back(e.order());

  const std::uint64_t max_order = *std::max_element(orders.begin(), orders.end());
  if (max_order == group.order) {
    s.kind = GroupKind::kCyclic;
    return s;
  }
  if (max_order == 2) {
    s.kind = GroupKind::kElementaryAbelian;
    return s;
  }
  // Dihedral of order 2m: an element r of order m with every element
  // outside <r> an involution.
  const GroupOrder m = group.order / 2;
  if (group.order % 2 == 0 && m >= 3) {
    for (std::size_t i = 0; i < elements->size(); ++i) {
      if (orders[i] != m) continue;
      std::vector<Permutation> rotations;
      Permutation r = (*elements)[i];
      Permutation x = Permutation::identity(group.degree);
      for (GroupOrder k = 0; k < m; ++k) {
        rotations.push_back(x);
        x = compose(x, r);
      }
      std::sort(rotations.begin(), rotations.end());
      bool dihedral = true;
      for (std::size_t j = 0; j < elements->size() && dihedral; ++j) {
        if (!std::binary_search(rotations.begin(), rotations.end(),
                                (*elements)[j])) {
          dihedral = orders[j] == 2;
        }
      }
      if (dihedral) {
        s.kind = GroupKind::kDihedral;
        return s;
      }
      break;
    }
  }
  return s;
}

}  // namespace cliquepart
