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

#include "wlbound/generate.h"

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "wlbound/canon.h"
#include "wlbound/error.h"

namespace wlbound {
namespace {

using FormMap = std::map<CanonicalForm, Graph>;

Graph FromCanon(const Graph& g, const CanonResult& r) {
  return SortedEdges(Permute(g, r.labeling));
}

std::vector<Graph> Values(FormMap& m) {
  std::vector<Graph> out;
  out.reserve(m.size());
  for (auto& [form, g] : m) out.push_back(std::move(g));
  return out;
}

// Cached exhaustive lists for orders 1..8, built by vertex augmentation.
const std::vector<Graph>& AllOfOrder(int n) {
  static std::mutex mu;
  static std::vector<std::vector<Graph>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (cache.empty()) cache.push_back({Graph(1)});
  while (static_cast<int>(cache.size()) < n) {
    const int m = static_cast<int>(cache.size());  // order being extended
    FormMap seen;
    for (const Graph& base : cache.back()) {
      for (uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<Edge> edges = base.edges();
        for (int v = 0; v < m; ++v) {
          if (mask & (1u << v)) edges.push_back({v, m});
        }
        Graph g(m + 1, std::move(edges));
        CanonResult r = Canonicalize(g);
        if (seen.count(r.form)) continue;
        seen.emplace(std::move(r.form), FromCanon(g, r));
      }
    }
    cache.push_back(Values(seen));
  }
  return cache[n - 1];
}

void CheckOrder(int n, int hi) {
  if (n < kMinGeneratedOrder || n > hi) {
    throw Error(ErrorCode::kOrderOutOfRange,
                "order " + std::to_string(n) + " outside " +
                    std::to_string(kMinGeneratedOrder) + ".." +
                    std::to_string(hi));
  }
}

}  // namespace

std::vector<Graph> GenerateAllGraphs(int n) {
  CheckOrder(n, kMaxGeneratedOrder);
  return AllOfOrder(n);
}

std::vector<Graph> GenerateEulerianGraphs(int n) {
  CheckOrder(n, kMaxEulerianOrder);
  FormMap seen;
  for (const Graph& base : AllOfOrder(n - 1)) {
    std::vector<Edge> edges = base.edges();
    for (int v = 0; v < n - 1; ++v) {
      if (base.Degree(v) % 2 == 1) edges.push_back({v, n - 1});
    }
    Graph g(n, std::move(edges));
    CanonResult r = Canonicalize(g);
    if (!seen.count(r.form)) seen.emplace(std::move(r.form), FromCanon(g, r));
  }
  return Values(seen);
}

int MaxGeneratedOrder(GraphClass c) {
  switch (c) {
    case GraphClass::kEulerian: return kMaxEulerianOrder;
    case GraphClass::kDistanceRegular:
    case GraphClass::kStronglyRegular:
    case GraphClass::kHighlyIrregular: return 0;
    default: return kMaxGeneratedOrder;
  }
}

std::vector<Graph> GenerateClass(GraphClass c, int n) {
  const int hi = MaxGeneratedOrder(c);
  if (hi == 0) {
    throw Error(ErrorCode::kOrderOutOfRange,
                std::string(ClassName(c)) + " graphs are shipped, not generated");
  }
  CheckOrder(n, hi);
  if (c == GraphClass::kEulerian) return GenerateEulerianGraphs(n);
  std::vector<Graph> out;
  for (const Graph& g : AllOfOrder(n)) {
    if (CheckClass(g, c)) out.push_back(g);
  }
  return out;
}

}  // namespace wlbound
