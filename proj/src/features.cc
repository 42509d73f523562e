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

#include "wlbound/features.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "wlbound/error.h"

namespace wlbound {
namespace {

struct KindName {
  FeatureKind kind;
  const char* name;
};

constexpr KindName kKindNames[] = {
    {FeatureKind::kDegree, "degree"},
    {FeatureKind::kCloseness, "closeness"},
    {FeatureKind::kHarmonic, "harmonic"},
    {FeatureKind::kEigenvector, "eigenvector"},
    {FeatureKind::kBetweenness, "betweenness"},
    {FeatureKind::kEccentricity, "eccentricity"},
    {FeatureKind::kLocalTransitivity, "transitivity"},
    {FeatureKind::kBurtsConstraint, "burt"},
    {FeatureKind::kEdgeBetweenness, "edge_betweenness"},
    {FeatureKind::kConvergenceDegree, "convergence"},
    {FeatureKind::kSubstructureCount, "count"},
    {FeatureKind::kRwse, "rwse"},
    {FeatureKind::kLapPe, "lappe"},
    {FeatureKind::kSubconstituentSignature, "subconst"},
};

const std::map<std::string, FeatureKind>& Aliases() {
  static const auto* m = new std::map<std::string, FeatureKind>{
      {"local_transitivity", FeatureKind::kLocalTransitivity},
      {"burts_constraint", FeatureKind::kBurtsConstraint},
      {"convergence_degree", FeatureKind::kConvergenceDegree},
      {"substructure", FeatureKind::kSubstructureCount},
      {"subconstituent", FeatureKind::kSubconstituentSignature},
  };
  return *m;
}

const char* KindString(FeatureKind k) {
  for (const auto& kn : kKindNames) {
    if (kn.kind == k) return kn.name;
  }
  return "?";
}

[[noreturn]] void Bad(const std::string& what) {
  throw Error(ErrorCode::kInvalidArgument, "feature grammar: " + what);
}

std::string Trim(std::string_view s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string_view::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return std::string(s.substr(a, b - a + 1));
}

int ParseInt(const std::string& key, const std::string& value) {
  try {
    size_t used = 0;
    int v = std::stoi(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    Bad(key + " expects an integer, got '" + value + "'");
  }
}

bool IsEdgeKind(FeatureKind k) {
  return k == FeatureKind::kEdgeBetweenness ||
         k == FeatureKind::kConvergenceDegree;
}

void SetParam(FeatureSpec& spec, std::vector<std::string>& seen,
              const std::string& key, const std::string& value) {
  if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
    Bad("parameter '" + key + "' given twice");
  }
  seen.push_back(key);
  const FeatureKind k = spec.kind;
  if (key == "digits") {
    spec.digits = ParseInt(key, value);
    if (spec.digits < 0 || spec.digits > 15) Bad("digits must be in 0..15");
  } else if (key == "steps" && k == FeatureKind::kRwse) {
    spec.steps = ParseInt(key, value);
    if (spec.steps < 1 || spec.steps > kMaxRwseSteps) Bad("steps must be in 1..32");
  } else if (key == "dims" && k == FeatureKind::kLapPe) {
    spec.dims = ParseInt(key, value);
    if (spec.dims < 1) Bad("dims must be positive");
  } else if (key == "n" && k == FeatureKind::kSubconstituentSignature) {
    spec.n = ParseInt(key, value);
    if (spec.n != 1 && spec.n != 2) Bad("n must be 1 or 2");
  } else if (key == "size" && k == FeatureKind::kSubstructureCount) {
    spec.size = ParseInt(key, value);
    if (spec.size < 1 || spec.size > kMaxPatternSize) Bad("size must be in 1..8");
  } else if (key == "pattern" && k == FeatureKind::kSubstructureCount) {
    if (value == "clique") {
      spec.pattern = Pattern::kClique;
    } else if (value == "path") {
      spec.pattern = Pattern::kPath;
    } else if (value == "cycle") {
      spec.pattern = Pattern::kCycle;
    } else {
      Bad("unknown pattern '" + value + "'");
    }
  } else if (key == "unit" && k == FeatureKind::kSubstructureCount) {
    if (value == "edges") {
      spec.path_unit = PathUnit::kEdges;
    } else if (value == "vertices") {
      spec.path_unit = PathUnit::kVertices;
    } else {
      Bad("unit must be edges or vertices");
    }
  } else if (key == "target") {
    Target t;
    if (value == "node") {
      t = Target::kNode;
    } else if (value == "edge") {
      t = Target::kEdge;
    } else {
      Bad("target must be node or edge");
    }
    if (k != FeatureKind::kSubstructureCount && t != spec.target) {
      Bad(std::string(KindString(k)) + " has a fixed target");
    }
    spec.target = t;
  } else {
    Bad("unknown parameter '" + key + "' for " + KindString(k));
  }
}

void Finish(FeatureSpec& spec, const std::vector<std::string>& seen) {
  if (spec.kind == FeatureKind::kSubstructureCount) {
    for (const char* required : {"pattern", "size"}) {
      if (std::find(seen.begin(), seen.end(), required) == seen.end()) {
        Bad(std::string("count requires ") + required);
      }
    }
    if (spec.pattern == Pattern::kCycle && spec.size < 3) {
      Bad("cycles need size >= 3");
    }
    if (spec.pattern == Pattern::kClique && spec.target == Target::kEdge &&
        spec.size < 2) {
      Bad("edge clique counts need size >= 2");
    }
  }
}

std::vector<std::vector<int>> AllDistances(const Graph& g) {
  const int n = g.node_count();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  std::vector<int> queue(n);
  for (int s = 0; s < n; ++s) {
    auto& d = dist[s];
    int head = 0, tail = 0;
    d[s] = 0;
    queue[tail++] = s;
    while (head < tail) {
      int v = queue[head++];
      for (int w : g.Neighbors(v)) {
        if (d[w] < 0) {
          d[w] = d[v] + 1;
          queue[tail++] = w;
        }
      }
    }
  }
  return dist;
}

std::vector<int> ComponentIds(const Graph& g) {
  const int n = g.node_count();
  std::vector<int> comp(n, -1);
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack = {s};
    comp[s] = next;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.Neighbors(v)) {
        if (comp[w] < 0) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

// Brandes accumulation shared by node and edge betweenness. Unordered pairs
// are counted once.
void Brandes(const Graph& g, std::vector<double>* node, std::vector<double>* edge,
             int64_t* ops) {
  const int n = g.node_count();
  if (node) node->assign(n, 0.0);
  if (edge) edge->assign(g.edge_count(), 0.0);
  std::vector<int> dist(n), order;
  std::vector<double> sigma(n), delta(n);
  order.reserve(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    order.clear();
    dist[s] = 0;
    sigma[s] = 1;
    order.push_back(s);
    for (size_t head = 0; head < order.size(); ++head) {
      int v = order[head];
      for (int w : g.Neighbors(v)) {
        if (ops) ++*ops;
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          order.push_back(w);
        }
        if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      int w = order[i];
      auto nb = g.Neighbors(w);
      auto inc = g.IncidentEdges(w);
      for (size_t p = 0; p < nb.size(); ++p) {
        int v = nb[p];
        if (ops) ++*ops;
        if (dist[v] != dist[w] - 1) continue;
        double c = sigma[v] / sigma[w] * (1.0 + delta[w]);
        if (edge) (*edge)[inc[p]] += c;
        delta[v] += c;
      }
      if (node && w != s) (*node)[w] += delta[w];
    }
  }
  if (node) {
    for (double& x : *node) x /= 2;
  }
  if (edge) {
    for (double& x : *edge) x /= 2;
  }
}

class Enumerator {
 public:
  Enumerator(const Graph& g, Target target, int64_t budget)
      : g_(g), target_(target), budget_(budget),
        counts_(target == Target::kNode ? g.node_count() : g.edge_count(), 0) {}

  std::vector<int64_t> Cliques(int size) {
    std::vector<int> clique;
    std::vector<int> cand(g_.node_count());
    for (int v = 0; v < g_.node_count(); ++v) cand[v] = v;
    ExtendClique(clique, cand, size);
    return counts_;
  }

  std::vector<int64_t> Paths(int edges) {
    for (int s = 0; s < g_.node_count(); ++s) {
      std::vector<int> path = {s};
      std::vector<char> on(g_.node_count(), 0);
      on[s] = 1;
      ExtendPath(path, on, edges);
    }
    return counts_;
  }

  std::vector<int64_t> Cycles(int size) {
    for (int s = 0; s < g_.node_count(); ++s) {
      std::vector<int> path = {s};
      std::vector<char> on(g_.node_count(), 0);
      on[s] = 1;
      ExtendCycle(path, on, size);
    }
    return counts_;
  }

 private:
  void Tick() {
    if (++steps_ > budget_) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "substructure enumeration exceeded " + std::to_string(budget_) +
                      " steps");
    }
  }

  void Record(const std::vector<int>& verts, bool closed, bool all_pairs) {
    if (target_ == Target::kNode) {
      for (int v : verts) ++counts_[v];
      return;
    }
    if (all_pairs) {
      for (size_t i = 0; i < verts.size(); ++i) {
        for (size_t j = i + 1; j < verts.size(); ++j) {
          ++counts_[g_.EdgeIndex(verts[i], verts[j])];
        }
      }
      return;
    }
    for (size_t i = 0; i + 1 < verts.size(); ++i) {
      ++counts_[g_.EdgeIndex(verts[i], verts[i + 1])];
    }
    if (closed) ++counts_[g_.EdgeIndex(verts.back(), verts.front())];
  }

  void ExtendClique(std::vector<int>& clique, const std::vector<int>& cand,
                    int size) {
    Tick();
    if (static_cast<int>(clique.size()) == size) {
      Record(clique, false, true);
      return;
    }
    for (size_t i = 0; i < cand.size(); ++i) {
      int v = cand[i];
      std::vector<int> next;
      for (size_t j = i + 1; j < cand.size(); ++j) {
        if (g_.Adjacent(v, cand[j])) next.push_back(cand[j]);
      }
      if (static_cast<int>(clique.size() + 1 + next.size()) < size) continue;
      clique.push_back(v);
      ExtendClique(clique, next, size);
      clique.pop_back();
    }
  }

  void ExtendPath(std::vector<int>& path, std::vector<char>& on, int edges) {
    Tick();
    if (static_cast<int>(path.size()) == edges + 1) {
      // Each undirected path is seen from both ends; keep one orientation.
      if (edges == 0 || path.front() < path.back()) Record(path, false, false);
      return;
    }
    for (int w : g_.Neighbors(path.back())) {
      if (on[w]) continue;
      on[w] = 1;
      path.push_back(w);
      ExtendPath(path, on, edges);
      path.pop_back();
      on[w] = 0;
    }
  }

  void ExtendCycle(std::vector<int>& path, std::vector<char>& on, int size) {
    Tick();
    const int s = path.front();
    if (static_cast<int>(path.size()) == size) {
      if (g_.Adjacent(path.back(), s) && path[1] < path.back()) {
        Record(path, true, false);
      }
      return;
    }
    for (int w : g_.Neighbors(path.back())) {
      if (w <= s || on[w]) continue;
      on[w] = 1;
      path.push_back(w);
      ExtendCycle(path, on, size);
      path.pop_back();
      on[w] = 0;
    }
  }

  const Graph& g_;
  Target target_;
  int64_t budget_;
  int64_t steps_ = 0;
  std::vector<int64_t> counts_;
};

std::string Join(const std::vector<double>& values, int digits) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += QuantizeReal(values[i], digits);
  }
  return out;
}

std::vector<Token> Quantized(const std::vector<double>& values, int digits) {
  std::vector<Token> out;
  out.reserve(values.size());
  for (double v : values) out.push_back(QuantizeReal(v, digits));
  return out;
}

}  // namespace

std::string FeatureSpec::ToString() const {
  std::string s = KindString(kind);
  std::vector<std::string> params;
  switch (kind) {
    case FeatureKind::kSubstructureCount:
      params.push_back(std::string("pattern=") +
                       (pattern == Pattern::kClique ? "clique"
                        : pattern == Pattern::kPath ? "path"
                                                    : "cycle"));
      params.push_back("size=" + std::to_string(size));
      params.push_back(std::string("target=") +
                       (target == Target::kNode ? "node" : "edge"));
      if (pattern == Pattern::kPath && path_unit == PathUnit::kVertices) {
        params.push_back("unit=vertices");
      }
      break;
    case FeatureKind::kRwse:
      params.push_back("steps=" + std::to_string(steps));
      break;
    case FeatureKind::kLapPe:
      params.push_back("dims=" + std::to_string(dims));
      break;
    case FeatureKind::kSubconstituentSignature:
      params.push_back("n=" + std::to_string(n));
      break;
    default:
      break;
  }
  if (digits != kDefaultPrecision) params.push_back("digits=" + std::to_string(digits));
  for (size_t i = 0; i < params.size(); ++i) s += (i == 0 ? ":" : ",") + params[i];
  return s;
}

std::vector<FeatureSpec> ParseFeatures(std::string_view grammar) {
  std::vector<FeatureSpec> specs;
  std::vector<std::vector<std::string>> seen;
  auto start_spec = [&](const std::string& name) {
    FeatureSpec spec;
    bool found = false;
    for (const auto& kn : kKindNames) {
      if (name == kn.name) {
        spec.kind = kn.kind;
        found = true;
      }
    }
    if (!found) {
      auto it = Aliases().find(name);
      if (it == Aliases().end()) Bad("unknown feature '" + name + "'");
      spec.kind = it->second;
    }
    spec.target = IsEdgeKind(spec.kind) ? Target::kEdge : Target::kNode;
    specs.push_back(spec);
    seen.emplace_back();
  };
  auto param = [&](const std::string& kv) {
    size_t eq = kv.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == kv.size()) {
      Bad("malformed parameter '" + kv + "'");
    }
    if (specs.empty()) Bad("parameter '" + kv + "' before any feature");
    SetParam(specs.back(), seen.back(), Trim(kv.substr(0, eq)),
             Trim(kv.substr(eq + 1)));
  };
  std::string text(grammar);
  if (Trim(text).empty()) Bad("empty feature list");
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string seg = Trim(std::string_view(text).substr(pos, comma - pos));
    pos = comma + 1;
    if (seg.empty()) Bad("empty segment");
    size_t colon = seg.find(':');
    if (colon != std::string::npos) {
      start_spec(Trim(seg.substr(0, colon)));
      param(seg.substr(colon + 1));
    } else if (seg.find('=') != std::string::npos) {
      param(seg);
    } else {
      start_spec(seg);
    }
  }
  for (size_t i = 0; i < specs.size(); ++i) Finish(specs[i], seen[i]);
  return specs;
}

std::string FormatFeatures(const std::vector<FeatureSpec>& specs) {
  std::string out;
  for (size_t i = 0; i < specs.size(); ++i) {
    if (i > 0) out += ',';
    out += specs[i].ToString();
  }
  return out;
}

int CountComponents(const Graph& g) {
  std::vector<int> c = ComponentIds(g);
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

std::vector<double> Degree(const Graph& g) {
  std::vector<double> out(g.node_count());
  for (int v = 0; v < g.node_count(); ++v) out[v] = g.Degree(v);
  return out;
}

std::vector<double> Closeness(const Graph& g) {
  const int n = g.node_count();
  auto dist = AllDistances(g);
  std::vector<double> out(n, 0.0);
  for (int v = 0; v < n; ++v) {
    long long total = 0;
    int reach = 0;
    for (int u = 0; u < n; ++u) {
      if (u != v && dist[v][u] > 0) {
        total += dist[v][u];
        ++reach;
      }
    }
    if (total > 0) out[v] = static_cast<double>(reach) / total;
  }
  return out;
}

std::vector<double> Harmonic(const Graph& g) {
  const int n = g.node_count();
  auto dist = AllDistances(g);
  std::vector<double> out(n, 0.0);
  for (int v = 0; v < n; ++v) {
    for (int u = 0; u < n; ++u) {
      if (u != v && dist[v][u] > 0) out[v] += 1.0 / dist[v][u];
    }
  }
  return out;
}

std::vector<double> EigenvectorCentrality(const Graph& g) {
  const int n = g.node_count();
  std::vector<int> comp = ComponentIds(g);
  std::vector<double> out(n, 0.0);
  const int num = CountComponents(g);
  for (int c = 0; c < num; ++c) {
    std::vector<int> members;
    for (int v = 0; v < n; ++v) {
      if (comp[v] == c) members.push_back(v);
    }
    if (members.size() < 2) continue;
    std::vector<double> x(n, 0.0), y(n, 0.0);
    for (int v : members) x[v] = 1.0;
    // Iterating A + I has the same dominant eigenvector as A but does not
    // oscillate on bipartite components.
    for (int iter = 0; iter < 10000; ++iter) {
      double top = 0.0;
      for (int v : members) {
        double s = x[v];
        for (int w : g.Neighbors(v)) s += x[w];
        y[v] = s;
        top = std::max(top, std::abs(s));
      }
      double change = 0.0;
      for (int v : members) {
        y[v] /= top;
        change = std::max(change, std::abs(y[v] - x[v]));
      }
      std::swap(x, y);
      if (change < 1e-12) break;
    }
    for (int v : members) out[v] = x[v];
  }
  return out;
}

std::vector<double> Betweenness(const Graph& g) {
  std::vector<double> node;
  Brandes(g, &node, nullptr, nullptr);
  return node;
}

std::vector<double> EdgeBetweenness(const Graph& g) {
  std::vector<double> edge;
  Brandes(g, nullptr, &edge, nullptr);
  return edge;
}

std::vector<double> Eccentricity(const Graph& g) {
  const int n = g.node_count();
  auto dist = AllDistances(g);
  std::vector<double> out(n, 0.0);
  for (int v = 0; v < n; ++v) {
    out[v] = *std::max_element(dist[v].begin(), dist[v].end());
  }
  return out;
}

std::vector<double> LocalTransitivity(const Graph& g) {
  const int n = g.node_count();
  std::vector<double> out(n, 0.0);
  for (int v = 0; v < n; ++v) {
    auto nb = g.Neighbors(v);
    const int d = static_cast<int>(nb.size());
    if (d < 2) continue;
    int closed = 0;
    for (int i = 0; i < d; ++i) {
      for (int j = i + 1; j < d; ++j) closed += g.Adjacent(nb[i], nb[j]);
    }
    out[v] = closed / (d * (d - 1) / 2.0);
  }
  return out;
}

std::vector<double> BurtsConstraint(const Graph& g) {
  const int n = g.node_count();
  std::vector<double> out(n, 0.0);
  for (int i = 0; i < n; ++i) {
    if (g.Degree(i) == 0) continue;
    const double pi = 1.0 / g.Degree(i);
    for (int j : g.Neighbors(i)) {
      double indirect = 0.0;
      for (int q : g.Neighbors(i)) {
        if (q != j && g.Adjacent(q, j)) indirect += pi * (1.0 / g.Degree(q));
      }
      double term = pi + indirect;
      out[i] += term * term;
    }
  }
  return out;
}

std::vector<double> ConvergenceDegree(const Graph& g) {
  auto dist = AllDistances(g);
  std::vector<double> out(g.edge_count(), 0.0);
  for (int e = 0; e < g.edge_count(); ++e) {
    const int u = g.edges()[e].u, v = g.edges()[e].v;
    int s = 0, t = 0;
    for (int w = 0; w < g.node_count(); ++w) {
      int du = dist[u][w], dv = dist[v][w];
      if (du < 0) continue;  // outside the edge's component
      if (du < dv) ++s;
      if (dv < du) ++t;
    }
    if (s + t > 0) out[e] = std::abs(static_cast<double>(s - t) / (s + t));
  }
  return out;
}

std::vector<int64_t> SubstructureCount(const Graph& g, Pattern pattern,
                                       int size, Target target, PathUnit unit,
                                       int64_t budget) {
  if (size < 1 || size > kMaxPatternSize) {
    throw Error(ErrorCode::kInvalidArgument, "pattern size must be in 1..8");
  }
  Enumerator en(g, target, budget);
  switch (pattern) {
    case Pattern::kClique:
      return en.Cliques(size);
    case Pattern::kPath:
      return en.Paths(unit == PathUnit::kEdges ? size : size - 1);
    case Pattern::kCycle:
      if (size < 3) throw Error(ErrorCode::kInvalidArgument, "cycles need size >= 3");
      return en.Cycles(size);
  }
  return {};
}

std::vector<std::vector<double>> RandomWalkReturn(const Graph& g, int steps) {
  const int n = g.node_count();
  std::vector<std::vector<double>> out(n, std::vector<double>(steps, 0.0));
  std::vector<double> x(n), y(n);
  for (int v = 0; v < n; ++v) {
    std::fill(x.begin(), x.end(), 0.0);
    x[v] = 1.0;
    for (int t = 0; t < steps; ++t) {
      std::fill(y.begin(), y.end(), 0.0);
      for (int u = 0; u < n; ++u) {
        if (x[u] == 0.0 || g.Degree(u) == 0) continue;
        double share = x[u] / g.Degree(u);
        for (int w : g.Neighbors(u)) y[w] += share;
      }
      std::swap(x, y);
      out[v][t] = x[v];
    }
  }
  return out;
}

Eigen SymmetricEigen(std::vector<std::vector<double>> a, double tol) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) v[i][i] = 1.0;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    }
    if (std::sqrt(off) < tol) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return a[x][x] < a[y][y]; });
  Eigen out;
  out.values.resize(n);
  out.vectors.assign(n, std::vector<double>(n));
  for (int j = 0; j < n; ++j) {
    out.values[j] = a[order[j]][order[j]];
    for (int i = 0; i < n; ++i) out.vectors[i][j] = v[i][order[j]];
  }
  return out;
}

std::vector<std::vector<double>> NormalizedLaplacian(const Graph& g) {
  const int n = g.node_count();
  std::vector<std::vector<double>> l(n, std::vector<double>(n, 0.0));
  for (int v = 0; v < n; ++v) {
    if (g.Degree(v) > 0) l[v][v] = 1.0;
  }
  for (const Edge& e : g.edges()) {
    double w = -1.0 / std::sqrt(static_cast<double>(g.Degree(e.u)) * g.Degree(e.v));
    l[e.u][e.v] = l[e.v][e.u] = w;
  }
  return l;
}

std::vector<std::vector<double>> LaplacianEncoding(const Graph& g, int dims) {
  const int n = g.node_count();
  if (dims < 1 || dims > n) {
    throw Error(ErrorCode::kDimExceedsOrder,
                "dims " + std::to_string(dims) + " for " + std::to_string(n) +
                    " nodes");
  }
  Eigen eig = SymmetricEigen(NormalizedLaplacian(g));
  const int kernel = CountComponents(g);
  constexpr double kCluster = 1e-6;
  std::vector<std::vector<double>> out(n, std::vector<double>(dims, 0.0));
  for (int d = 0; d < dims; ++d) {
    const int j = kernel + d;
    if (j >= n) break;
    int lo = j, hi = j;
    while (lo > kernel && eig.values[lo] - eig.values[lo - 1] < kCluster) --lo;
    while (hi + 1 < n && eig.values[hi + 1] - eig.values[hi] < kCluster) ++hi;
    for (int v = 0; v < n; ++v) {
      if (lo == hi) {
        out[v][d] = std::abs(eig.vectors[v][j]);
      } else {
        double s = 0.0;
        for (int i = lo; i <= hi; ++i) s += eig.vectors[v][i] * eig.vectors[v][i];
        out[v][d] = std::sqrt(s);
      }
    }
  }
  return out;
}

std::vector<std::vector<double>> SubconstituentBetweenness(const Graph& g, int n,
                                                           int64_t* ops) {
  const int order = g.node_count();
  std::vector<std::vector<double>> out(order);
  std::vector<int> dist(order), local(order, -1);
  for (int v = 0; v < order; ++v) {
    std::fill(dist.begin(), dist.end(), -1);
    std::vector<int> queue = {v};
    dist[v] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
      int x = queue[head];
      if (dist[x] == n) continue;
      for (int w : g.Neighbors(x)) {
        if (ops) ++*ops;
        if (dist[w] < 0) {
          dist[w] = dist[x] + 1;
          queue.push_back(w);
        }
      }
    }
    std::vector<int> layer;
    for (int x : queue) {
      if (dist[x] == n) layer.push_back(x);
    }
    for (size_t i = 0; i < layer.size(); ++i) local[layer[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (int x : layer) {
      for (int w : g.Neighbors(x)) {
        if (ops) ++*ops;
        if (local[w] >= 0 && x < w) edges.push_back({local[x], local[w]});
      }
    }
    for (int x : layer) local[x] = -1;
    Graph sub(static_cast<int>(layer.size()), std::move(edges));
    std::vector<double> eb;
    Brandes(sub, nullptr, &eb, ops);
    std::sort(eb.begin(), eb.end());
    out[v] = std::move(eb);
  }
  return out;
}

FeatureVector ComputeFeature(const Graph& g, const FeatureSpec& spec) {
  FeatureVector fv;
  fv.target = spec.target;
  const int digits = spec.digits;
  switch (spec.kind) {
    case FeatureKind::kDegree: fv.tokens = Quantized(Degree(g), digits); break;
    case FeatureKind::kCloseness: fv.tokens = Quantized(Closeness(g), digits); break;
    case FeatureKind::kHarmonic: fv.tokens = Quantized(Harmonic(g), digits); break;
    case FeatureKind::kEigenvector:
      fv.tokens = Quantized(EigenvectorCentrality(g), digits);
      break;
    case FeatureKind::kBetweenness: fv.tokens = Quantized(Betweenness(g), digits); break;
    case FeatureKind::kEccentricity: fv.tokens = Quantized(Eccentricity(g), digits); break;
    case FeatureKind::kLocalTransitivity:
      fv.tokens = Quantized(LocalTransitivity(g), digits);
      break;
    case FeatureKind::kBurtsConstraint:
      fv.tokens = Quantized(BurtsConstraint(g), digits);
      break;
    case FeatureKind::kEdgeBetweenness:
      fv.tokens = Quantized(EdgeBetweenness(g), digits);
      break;
    case FeatureKind::kConvergenceDegree:
      fv.tokens = Quantized(ConvergenceDegree(g), digits);
      break;
    case FeatureKind::kSubstructureCount:
      for (int64_t c : SubstructureCount(g, spec.pattern, spec.size, spec.target,
                                         spec.path_unit)) {
        fv.tokens.push_back(std::to_string(c));
      }
      break;
    case FeatureKind::kRwse:
      for (const auto& row : RandomWalkReturn(g, spec.steps)) {
        fv.tokens.push_back(Join(row, digits));
      }
      break;
    case FeatureKind::kLapPe:
      for (const auto& row : LaplacianEncoding(g, spec.dims)) {
        fv.tokens.push_back(Join(row, digits));
      }
      break;
    case FeatureKind::kSubconstituentSignature:
      for (const auto& row : SubconstituentBetweenness(g, spec.n)) {
        fv.tokens.push_back(Join(row, digits));
      }
      break;
  }
  return fv;
}

Graph ApplyFeatures(const Graph& g, const std::vector<FeatureSpec>& specs,
                    const std::string& tag) {
  if (specs.empty()) throw Error(ErrorCode::kInvalidArgument, "no feature specs");
  std::vector<AttrRow> node_rows(g.node_count()), edge_rows(g.edge_count());
  bool any_node = false, any_edge = false;
  for (const FeatureSpec& spec : specs) {
    FeatureVector fv = ComputeFeature(g, spec);
    auto& rows = fv.target == Target::kNode ? node_rows : edge_rows;
    (fv.target == Target::kNode ? any_node : any_edge) = true;
    for (size_t i = 0; i < fv.tokens.size(); ++i) {
      rows[i].push_back(tag.empty() ? fv.tokens[i] : tag + "=" + fv.tokens[i]);
    }
  }
  Graph out = g;
  if (any_node) out.AppendNodeLabels(node_rows);
  if (any_edge) out.AppendEdgeLabels(edge_rows);
  return out;
}

Dataset ApplyFeatures(const Dataset& dataset,
                      const std::vector<FeatureSpec>& specs,
                      const std::string& tag) {
  Dataset out = dataset;
  for (Graph& g : out.graphs) g = ApplyFeatures(g, specs, tag);
  return out;
}

}  // namespace wlbound
