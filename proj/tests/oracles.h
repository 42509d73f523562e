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

// Brute-force reference implementations shared by the unit tests and the
// acceptance checks. They favour obviousness over speed.

#ifndef WLBOUND_TESTS_ORACLES_H_
#define WLBOUND_TESTS_ORACLES_H_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wlbound/features.h"
#include "wlbound/graph.h"

namespace wlbound::testing {

// All-pairs BFS distances, -1 when unreachable.
inline std::vector<std::vector<int>> Distances(const Graph& g) {
  const int n = g.node_count();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    d[s][s] = 0;
    std::vector<int> q = {s};
    for (size_t i = 0; i < q.size(); ++i) {
      for (int w : g.Neighbors(q[i])) {
        if (d[s][w] < 0) {
          d[s][w] = d[s][q[i]] + 1;
          q.push_back(w);
        }
      }
    }
  }
  return d;
}

// Number of shortest paths between every pair, by dynamic programming on
// distance layers.
inline std::vector<std::vector<double>> PathCounts(const Graph& g,
                                                   const std::vector<std::vector<int>>& d) {
  const int n = g.node_count();
  std::vector<std::vector<double>> sigma(n, std::vector<double>(n, 0));
  for (int s = 0; s < n; ++s) {
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return d[s][a] < d[s][b]; });
    sigma[s][s] = 1;
    for (int v : order) {
      if (d[s][v] <= 0) continue;
      for (int w : g.Neighbors(v)) {
        if (d[s][w] == d[s][v] - 1) sigma[s][v] += sigma[s][w];
      }
    }
  }
  return sigma;
}

inline std::vector<double> BruteBetweenness(const Graph& g) {
  auto d = Distances(g);
  auto sigma = PathCounts(g, d);
  const int n = g.node_count();
  std::vector<double> out(n, 0);
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      if (d[s][t] < 0) continue;
      for (int v = 0; v < n; ++v) {
        if (v == s || v == t || d[s][v] < 0 || d[v][t] < 0) continue;
        if (d[s][v] + d[v][t] == d[s][t]) out[v] += sigma[s][v] * sigma[v][t] / sigma[s][t];
      }
    }
  }
  return out;
}

inline std::vector<double> BruteEdgeBetweenness(const Graph& g) {
  auto d = Distances(g);
  auto sigma = PathCounts(g, d);
  const int n = g.node_count();
  std::vector<double> out(g.edge_count(), 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    for (int s = 0; s < n; ++s) {
      for (int t = s + 1; t < n; ++t) {
        if (d[s][t] < 0) continue;
        for (auto [a, b] : {std::pair{g.edges()[e].u, g.edges()[e].v},
                            std::pair{g.edges()[e].v, g.edges()[e].u}}) {
          if (d[s][a] >= 0 && d[b][t] >= 0 && d[s][a] + 1 + d[b][t] == d[s][t]) {
            out[e] += sigma[s][a] * sigma[b][t] / sigma[s][t];
          }
        }
      }
    }
  }
  return out;
}

// Counts each substructure by growing vertex sequences one adjacent vertex at
// a time and dropping repeats by edge set.
inline std::vector<int64_t> BruteCount(const Graph& g, Pattern pattern,
                                       int vertices, Target target) {
  const int n = g.node_count();
  std::vector<int64_t> out(target == Target::kNode ? n : g.edge_count(), 0);
  std::vector<int> seq;
  std::vector<char> used(n, 0);
  std::set<std::vector<int>> seen;
  std::function<void()> rec = [&] {
    if (static_cast<int>(seq.size()) == vertices) {
      std::vector<std::pair<int, int>> edges;
      if (pattern == Pattern::kClique) {
        for (int i = 0; i < vertices; ++i) {
          for (int j = i + 1; j < vertices; ++j) edges.push_back({seq[i], seq[j]});
        }
      } else {
        for (int i = 0; i + 1 < vertices; ++i) edges.push_back({seq[i], seq[i + 1]});
        if (pattern == Pattern::kCycle) {
          if (!g.Adjacent(seq.back(), seq.front())) return;
          edges.push_back({seq.back(), seq.front()});
        }
      }
      std::vector<int> key;
      if (pattern == Pattern::kClique || vertices == 1) {
        key = seq;
      } else {
        for (auto [a, b] : edges) key.push_back(std::min(a, b) * n + std::max(a, b));
      }
      std::sort(key.begin(), key.end());
      if (!seen.insert(key).second) return;
      if (target == Target::kNode) {
        for (int v : seq) ++out[v];
      } else {
        for (auto [a, b] : edges) ++out[g.EdgeIndex(a, b)];
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool fits = true;
      if (pattern == Pattern::kClique) {
        for (int u : seq) fits = fits && g.Adjacent(u, v);
      } else if (!seq.empty()) {
        fits = g.Adjacent(seq.back(), v);
      }
      if (!fits) continue;
      used[v] = 1;
      seq.push_back(v);
      rec();
      seq.pop_back();
      used[v] = 0;
    }
  };
  rec();
  return out;
}

// Color refinement run jointly over several uncolored graphs with one shared
// relabeling table. Entry [r][i] is the sorted color multiset of graph i after
// r rounds.
inline std::vector<std::vector<std::vector<int>>> JointRefinement(
    const std::vector<Graph>& graphs, int rounds) {
  std::vector<std::vector<int>> colors;
  for (const Graph& g : graphs) colors.emplace_back(g.node_count(), 0);
  auto snapshot = [&] {
    std::vector<std::vector<int>> s = colors;
    for (auto& c : s) std::sort(c.begin(), c.end());
    return s;
  };
  std::vector<std::vector<std::vector<int>>> out = {snapshot()};
  for (int r = 0; r < rounds; ++r) {
    std::map<std::pair<int, std::vector<int>>, int> table;
    std::vector<std::vector<int>> next = colors;
    for (size_t i = 0; i < graphs.size(); ++i) {
      const Graph& g = graphs[i];
      for (int v = 0; v < g.node_count(); ++v) {
        std::vector<int> bag;
        for (int u = 0; u < g.node_count(); ++u) {
          if (g.Adjacent(u, v)) bag.push_back(colors[i][u]);
        }
        std::sort(bag.begin(), bag.end());
        auto key = std::make_pair(colors[i][v], bag);
        auto it = table.find(key);
        if (it == table.end()) it = table.emplace(key, static_cast<int>(table.size())).first;
        next[i][v] = it->second;
      }
    }
    colors = next;
    out.push_back(snapshot());
  }
  return out;
}

// Best accuracy over every map from groups to labels. Groups are given as
// dense ids.
inline double ExhaustiveAccuracy(const std::vector<int>& group,
                                 const std::vector<std::string>& labels) {
  std::vector<std::string> alphabet(labels);
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  const int g = group.empty() ? 0 : *std::max_element(group.begin(), group.end()) + 1;
  const int a = static_cast<int>(alphabet.size());
  std::vector<int> label_id(labels.size());
  for (size_t i = 0; i < labels.size(); ++i) {
    label_id[i] = static_cast<int>(
        std::lower_bound(alphabet.begin(), alphabet.end(), labels[i]) - alphabet.begin());
  }
  std::vector<int> choice(g, 0);
  int best = 0;
  while (true) {
    int correct = 0;
    for (size_t i = 0; i < group.size(); ++i) correct += choice[group[i]] == label_id[i];
    best = std::max(best, correct);
    int i = 0;
    while (i < g && ++choice[i] == a) choice[i++] = 0;
    if (i == g) break;
  }
  return static_cast<double>(best) / group.size();
}

// Dense ids in order of first appearance.
template <typename T>
std::vector<int> DenseIds(const std::vector<T>& keys) {
  std::map<T, int> ids;
  std::vector<int> out;
  for (const T& k : keys) out.push_back(ids.emplace(k, static_cast<int>(ids.size())).first->second);
  return out;
}

}  // namespace wlbound::testing

#endif  // WLBOUND_TESTS_ORACLES_H_
