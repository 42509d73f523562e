// Copyright 2026 The wlbound Authors
//
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

#ifndef WLBOUND_TESTS_TEST_UTIL_H_
#define WLBOUND_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "wlbound/graph.h"
#include "wlbound/refine.h"

namespace wlbound::testing {

inline std::string DataDir() { return WLBOUND_TEST_DATA; }

inline Graph Path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, e);
}

inline Graph Cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph(n, e);
}

inline Graph Complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  }
  return Graph(n, e);
}

inline Graph Star(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
  return Graph(leaves + 1, e);
}

inline Graph Petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({i, i + 5});
    e.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return Graph(10, e);
}

// Two non-isomorphic 6-vertex graphs with the same stable 1-WL coloring.
inline Graph HardPairLeft() {
  return Graph(6, {{0, 5}, {0, 4}, {0, 3}, {1, 5}, {1, 4}, {1, 3}, {2, 4}, {2, 3}});
}
inline Graph HardPairRight() {
  return Graph(6, {{0, 5}, {0, 3}, {0, 1}, {1, 5}, {1, 2}, {2, 4}, {2, 3}, {3, 4}});
}

// Two mirrored 5-vertex halves joined by x1-x1'. Node ids: x1..x5 = 0..4,
// x1'..x5' = 5..9. The halves carry the same edge-label multisets at every
// vertex but differ in where the labels sit.
inline Graph MirroredHalves() {
  Graph g(10, {{0, 5}, {0, 1}, {0, 3}, {1, 2}, {2, 3}, {3, 4},
               {5, 6}, {6, 7}, {5, 8}, {7, 8}, {8, 9}});
  g.SetEdgeAttrs({{"0"}, {"1"}, {"2"}, {"2"}, {"1"}, {"3"},
                  {"2"}, {"1"}, {"1"}, {"2"}, {"3"}},
                 {});
  return g;
}

// K4 x K4 rook's graph, SRG(16,6,2,2).
inline Graph Rook4() {
  std::vector<Edge> e;
  for (int a = 0; a < 16; ++a) {
    for (int b = a + 1; b < 16; ++b) {
      if (a / 4 == b / 4 || a % 4 == b % 4) e.push_back({a, b});
    }
  }
  return Graph(16, e);
}

// Shrikhande graph, the other SRG(16,6,2,2).
inline Graph Shrikhande() {
  std::vector<Edge> e;
  auto id = [](int i, int j) { return ((i + 4) % 4) * 4 + (j + 4) % 4; };
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      for (auto [di, dj] : {std::pair{0, 1}, {1, 0}, {1, 1}}) {
        int a = id(i, j), b = id(i + di, j + dj);
        e.push_back({std::min(a, b), std::max(a, b)});
      }
    }
  }
  return Graph(16, e);
}

inline Graph RandomGraph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) e.push_back({i, j});
    }
  }
  return Graph(n, e);
}

inline std::vector<int> RandomPermutation(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// All 2^(n choose 2) labeled graphs on n vertices.
inline std::vector<Graph> AllLabeledGraphs(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) slots.push_back({i, j});
  }
  std::vector<Graph> out;
  for (uint64_t mask = 0; mask < (uint64_t{1} << slots.size()); ++mask) {
    std::vector<Edge> e;
    for (size_t s = 0; s < slots.size(); ++s) {
      if (mask >> s & 1) e.push_back({slots[s].first, slots[s].second});
    }
    out.emplace_back(n, e);
  }
  return out;
}

// Isomorphism by trying every permutation; for tiny graphs only.
inline bool BruteIsomorphic(const Graph& a, const Graph& b) {
  if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count()) {
    return false;
  }
  std::vector<int> p(a.node_count());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (const Edge& e : a.edges()) {
      if (!b.Adjacent(p[e.u], p[e.v])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Partition of the original vertices after `rounds` rounds of 1-WLE on g
// versus after 2 * rounds rounds of 1-WL on the incidence graph of g.
inline bool IncidencePartitionsAgree(const Graph& g, int rounds) {
  RefineOptions wle;
  wle.use_edge_attrs = true;
  wle.rounds = rounds;
  wle.stop_at_convergence = false;
  std::vector<ColorId> direct = Refine(g, wle).Round(rounds);

  RefineOptions wl;
  wl.rounds = 2 * rounds;
  wl.stop_at_convergence = false;
  std::vector<ColorId> via = Refine(IncidenceTransform(g), wl).Round(2 * rounds);
  via.resize(g.node_count());
  return PartitionLabels(direct) == PartitionLabels(via);
}

// Random graph with edge labels drawn from `edge_alphabet` symbols and node
// labels from `node_alphabet` symbols (no node labels when 0).
inline Graph RandomLabeledGraph(std::mt19937_64& rng, int n, double p,
                                int edge_alphabet, int node_alphabet) {
  Graph g = RandomGraph(rng, n, p);
  std::uniform_int_distribution<int> edge_pick(0, edge_alphabet - 1);
  std::vector<AttrRow> edge_rows;
  for (int e = 0; e < g.edge_count(); ++e) {
    edge_rows.push_back({std::to_string(edge_pick(rng))});
  }
  g.SetEdgeAttrs(edge_rows, {});
  if (node_alphabet > 0) {
    std::uniform_int_distribution<int> node_pick(0, node_alphabet - 1);
    std::vector<AttrRow> node_rows;
    for (int v = 0; v < n; ++v) node_rows.push_back({std::to_string(node_pick(rng))});
    g.SetNodeAttrs(node_rows, {});
  }
  return g;
}

}  // namespace wlbound::testing

#endif  // WLBOUND_TESTS_TEST_UTIL_H_
