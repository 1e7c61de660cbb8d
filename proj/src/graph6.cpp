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

// graph6: N(n) followed by the upper triangle x(0,1), x(0,2), x(1,2),
// x(0,3), ... packed six bits per byte, each byte offset by 63.

#include <string>

#include "cliquepart/graph.hpp"

namespace cliquepart {
namespace {

constexpr int kOffset = 63;
constexpr std::string_view kHeader = ">>graph6<<";

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kOffset));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kOffset));
    out.push_back(static_cast<char>((n & 63) + kOffset));
  }
  int acc = 0;
  int nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) {
    out.push_back(static_cast<char>((acc << (6 - nbits)) + kOffset));
  }
  return out;
}

Graph from_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw Graph6Error("graph6: empty input");
  for (char c : text) {
    if (c < kOffset || c > 126) {
      throw Graph6Error("graph6: byte outside the printable range 63..126");
    }
  }
  auto byte = [&](std::size_t k) { return text[k] - kOffset; };

  std::size_t pos = 0;
  long n = 0;
  if (byte(0) < 63) {
    n = byte(0);
    pos = 1;
  } else {
    if (text.size() < 4) throw Graph6Error("graph6: truncated order field");
    if (byte(1) == 63) {
      throw Graph6Error("graph6: orders beyond 258047 are not supported");
    }
    n = (long{byte(1)} << 12) | (byte(2) << 6) | byte(3);
    pos = 4;
  }
  if (n > kMaxOrder) {
    throw Graph6Error("graph6: order " + std::to_string(n) +
                      " exceeds capacity 64");
  }
  const long bits = n * (n - 1) / 2;
  const long expected = (bits + 5) / 6;
  if (static_cast<long>(text.size() - pos) != expected) {
    throw Graph6Error("graph6: length does not match order " +
                      std::to_string(n));
  }

  Graph g(static_cast<int>(n));
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = byte(pos + static_cast<std::size_t>(k / 6));
      if ((chunk >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = byte(text.size() - 1);
    const int pad = 6 - static_cast<int>(bits % 6);
    if ((last & ((1 << pad) - 1)) != 0) {
      throw Graph6Error("graph6: nonzero padding bits");
    }
  }
  return g;
}

std::string to_dot(const Graph& g, const std::optional<BlockLayout>& layout) {
  std::string out = "graph G {\n";
  for (int u = 0; u < g.order(); ++u) {
    out += "  " + std::to_string(u);
    if (layout) {
      out += " [label=\"" + std::to_string(layout->block_of(u)) +
             std::to_string(layout->column_of(u)) + "\"]";
    }
    out += ";\n";
  }
  for (auto [u, v] : g.edges()) {
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace cliquepart
