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

#include "wlbound/classes.h"

#include <algorithm>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "wlbound/canon.h"
#include "wlbound/error.h"

namespace wlbound {

namespace {

constexpr int kExhaustiveOrderLimit = 16;

constexpr GraphClass kClasses[] = {
    GraphClass::kAll,           GraphClass::kEulerian,
    GraphClass::kPlanarConnected, GraphClass::kChordal,
    GraphClass::kPerfect,       GraphClass::kHighlyIrregular,
    GraphClass::kEdge4Critical, GraphClass::kSelfComplementary,
    GraphClass::kDistanceRegular, GraphClass::kStronglyRegular,
};

void CheckBudget(const Graph& g, const char* what) {
  if (g.node_count() > kExhaustiveOrderLimit) {
    throw Error(ErrorCode::kBudgetExceeded,
                std::string(what) + " check is limited to " +
                    std::to_string(kExhaustiveOrderLimit) + " vertices");
  }
}

std::vector<int> Bfs(const Graph& g, int s) {
  std::vector<int> dist(g.node_count(), -1);
  std::queue<int> q;
  dist[s] = 0;
  q.push(s);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.Neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

// Induced cycle of odd length >= 5 through vertices >= path[0].
bool OddHoleFrom(const Graph& g, std::vector<int>& path,
                 std::vector<char>& on_path) {
  const int s = path[0];
  const int last = path.back();
  const int len = static_cast<int>(path.size());
  for (int w : g.Neighbors(last)) {
    if (w <= s || on_path[w]) continue;
    // w may touch only `last` and possibly s (closing the cycle).
    bool ok = true;
    for (int i = 1; i + 1 < len && ok; ++i) ok = !g.Adjacent(w, path[i]);
    if (!ok) continue;
    if (len >= 2 && g.Adjacent(w, s)) {
      int cycle = len + 1;
      if (cycle >= 5 && cycle % 2 == 1) return true;
      continue;
    }
    path.push_back(w);
    on_path[w] = 1;
    bool found = OddHoleFrom(g, path, on_path);
    on_path[w] = 0;
    path.pop_back();
    if (found) return true;
  }
  return false;
}

bool HasOddHole(const Graph& g) {
  std::vector<char> on_path(g.node_count(), 0);
  for (int s = 0; s < g.node_count(); ++s) {
    std::vector<int> path = {s};
    on_path[s] = 1;
    bool found = OddHoleFrom(g, path, on_path);
    on_path[s] = 0;
    if (found) return true;
  }
  return false;
}

class Colorer {
 public:
  Colorer(const Graph& g, int k) : g_(g), k_(k), color_(g.node_count(), -1) {}

  bool Run() { return Step(0); }

 private:
  bool Step(int colored) {
    if (colored == g_.node_count()) return true;
    // DSATUR: most distinct neighbour colours, then highest degree.
    int best = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < g_.node_count(); ++v) {
      if (color_[v] >= 0) continue;
      unsigned mask = 0;
      for (int w : g_.Neighbors(v)) {
        if (color_[w] >= 0) mask |= 1u << color_[w];
      }
      int sat = __builtin_popcount(mask);
      if (sat > best_sat || (sat == best_sat && g_.Degree(v) > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = g_.Degree(v);
      }
    }
    unsigned used = 0;
    int max_used = -1;
    for (int v = 0; v < g_.node_count(); ++v) max_used = std::max(max_used, color_[v]);
    for (int w : g_.Neighbors(best)) {
      if (color_[w] >= 0) used |= 1u << color_[w];
    }
    // Trying one fresh colour is enough; fresh colours are interchangeable.
    for (int c = 0; c < k_ && c <= max_used + 1; ++c) {
      if (used & (1u << c)) continue;
      color_[best] = c;
      if (Step(colored + 1)) return true;
      color_[best] = -1;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<int> color_;
};

}  // namespace

std::string_view ClassName(GraphClass c) {
  switch (c) {
    case GraphClass::kAll: return "all_nonisomorphic";
    case GraphClass::kEulerian: return "eulerian";
    case GraphClass::kPlanarConnected: return "planar_connected";
    case GraphClass::kChordal: return "chordal";
    case GraphClass::kPerfect: return "perfect";
    case GraphClass::kHighlyIrregular: return "highly_irregular";
    case GraphClass::kEdge4Critical: return "edge_4_critical";
    case GraphClass::kSelfComplementary: return "self_complementary";
    case GraphClass::kDistanceRegular: return "distance_regular";
    case GraphClass::kStronglyRegular: return "strongly_regular";
  }
  return "?";
}

GraphClass ParseClass(std::string_view name) {
  if (name == "all") return GraphClass::kAll;
  for (GraphClass c : kClasses) {
    if (ClassName(c) == name) return c;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown graph class '" + std::string(name) + "'");
}

std::vector<GraphClass> AllClasses() {
  return {std::begin(kClasses), std::end(kClasses)};
}

bool IsConnected(const Graph& g) {
  if (g.node_count() == 0) return true;
  std::vector<int> d = Bfs(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

bool IsEulerian(const Graph& g) {
  for (int v = 0; v < g.node_count(); ++v) {
    if (g.Degree(v) % 2 != 0) return false;
  }
  return true;
}

bool IsChordal(const Graph& g) {
  const int n = g.node_count();
  std::vector<int> weight(n, 0), order;
  std::vector<char> picked(n, 0);
  for (int i = 0; i < n; ++i) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (!picked[v] && (best < 0 || weight[v] > weight[best])) best = v;
    }
    picked[best] = 1;
    order.push_back(best);
    for (int w : g.Neighbors(best)) {
      if (!picked[w]) ++weight[w];
    }
  }
  // Elimination order is the reverse of the search order.
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[n - 1 - i]] = i;
  for (int v = 0; v < n; ++v) {
    std::vector<int> later;
    for (int w : g.Neighbors(v)) {
      if (pos[w] > pos[v]) later.push_back(w);
    }
    if (later.empty()) continue;
    int u = *std::min_element(later.begin(), later.end(),
                              [&](int a, int b) { return pos[a] < pos[b]; });
    for (int w : later) {
      if (w != u && !g.Adjacent(u, w)) return false;
    }
  }
  return true;
}

bool IsPerfect(const Graph& g) {
  CheckBudget(g, "perfect");
  return !HasOddHole(g) && !HasOddHole(Complement(g));
}

bool IsHighlyIrregular(const Graph& g) {
  if (g.node_count() == 0 || !IsConnected(g)) return false;
  for (int v = 0; v < g.node_count(); ++v) {
    std::vector<int> degs;
    for (int w : g.Neighbors(v)) degs.push_back(g.Degree(w));
    std::sort(degs.begin(), degs.end());
    if (std::adjacent_find(degs.begin(), degs.end()) != degs.end()) return false;
  }
  return true;
}

bool IsColorable(const Graph& g, int k) {
  if (k <= 0) return g.node_count() == 0;
  if (k >= 32) throw Error(ErrorCode::kBudgetExceeded, "too many colours");
  return Colorer(g, k).Run();
}

int ChromaticNumber(const Graph& g) {
  CheckBudget(g, "colourability");
  int k = 0;
  while (!IsColorable(g, k)) ++k;
  return k;
}

bool IsEdge4Critical(const Graph& g) {
  CheckBudget(g, "edge-4-critical");
  if (!IsConnected(g) || ChromaticNumber(g) != 4) return false;
  for (int skip = 0; skip < g.edge_count(); ++skip) {
    std::vector<Edge> edges;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (e != skip) edges.push_back(g.edges()[e]);
    }
    if (!IsColorable(Graph(g.node_count(), std::move(edges)), 3)) return false;
  }
  return true;
}

bool IsSelfComplementary(const Graph& g) {
  return IsIsomorphic(Graph(g.node_count(), g.edges()), Complement(g));
}

bool IsPlanar(const Graph& g) {
  using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BGraph bg(g.node_count());
  for (const Edge& e : g.edges()) boost::add_edge(e.u, e.v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

std::vector<int> IntersectionArray::a() const {
  std::vector<int> out;
  const int k = degree();
  for (int i = 0; i <= diameter(); ++i) {
    int bi = i < static_cast<int>(b.size()) ? b[i] : 0;
    int ci = i == 0 ? 0 : c[i - 1];
    out.push_back(k - bi - ci);
  }
  return out;
}

std::optional<IntersectionArray> ComputeIntersectionArray(const Graph& g) {
  const int n = g.node_count();
  if (n == 0 || !IsConnected(g)) return std::nullopt;
  std::vector<int> b, c;
  for (int v = 0; v < n; ++v) {
    std::vector<int> dist = Bfs(g, v);
    int diam = *std::max_element(dist.begin(), dist.end());
    if (v == 0) {
      b.assign(diam, -1);
      c.assign(diam, -1);
    } else if (diam != static_cast<int>(c.size())) {
      return std::nullopt;
    }
    for (int u = 0; u < n; ++u) {
      int i = dist[u];
      int bi = 0, ci = 0;
      for (int w : g.Neighbors(u)) {
        if (dist[w] == i + 1) ++bi;
        if (dist[w] == i - 1) ++ci;
      }
      if (i < diam) {
        if (b[i] < 0) b[i] = bi;
        if (b[i] != bi) return std::nullopt;
      }
      if (i > 0) {
        if (c[i - 1] < 0) c[i - 1] = ci;
        if (c[i - 1] != ci) return std::nullopt;
      }
    }
  }
  return IntersectionArray{b, c};
}

std::optional<SrgParams> StronglyRegularParams(const Graph& g) {
  const int n = g.node_count();
  if (n < 2) return std::nullopt;
  const int k = g.Degree(0);
  for (int v = 0; v < n; ++v) {
    if (g.Degree(v) != k) return std::nullopt;
  }
  if (k == 0 || k == n - 1) return std::nullopt;
  int lambda = -1, mu = -1;
  std::vector<char> mark(n);
  for (int u = 0; u < n; ++u) {
    std::fill(mark.begin(), mark.end(), 0);
    for (int w : g.Neighbors(u)) mark[w] = 1;
    for (int v = u + 1; v < n; ++v) {
      int common = 0;
      for (int w : g.Neighbors(v)) common += mark[w];
      int& slot = mark[v] ? lambda : mu;
      if (slot < 0) slot = common;
      if (slot != common) return std::nullopt;
    }
  }
  return SrgParams{n, k, lambda, mu};
}

bool CheckClass(const Graph& g, GraphClass c) {
  switch (c) {
    case GraphClass::kAll: return true;
    case GraphClass::kEulerian: return IsEulerian(g);
    case GraphClass::kPlanarConnected: return IsConnected(g) && IsPlanar(g);
    case GraphClass::kChordal: return IsChordal(g);
    case GraphClass::kPerfect: return IsPerfect(g);
    case GraphClass::kHighlyIrregular: return IsHighlyIrregular(g);
    case GraphClass::kEdge4Critical: return IsEdge4Critical(g);
    case GraphClass::kSelfComplementary: return IsSelfComplementary(g);
    case GraphClass::kDistanceRegular:
      return ComputeIntersectionArray(g).has_value();
    case GraphClass::kStronglyRegular:
      return StronglyRegularParams(g).has_value();
  }
  return false;
}

}  // namespace wlbound
