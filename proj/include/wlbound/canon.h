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

#ifndef WLBOUND_CANON_H_
#define WLBOUND_CANON_H_

#include <compare>
#include <cstdint>
#include <vector>

#include "wlbound/graph.h"

namespace wlbound {

// Adjacency of the canonically relabeled graph, upper triangle packed row by
// row. Equal forms <=> isomorphic graphs (structure only, attributes are
// ignored unless passed as vertex colors).
struct CanonicalForm {
  int n = 0;
  std::vector<int> colors;  // sorted vertex colors, empty when uncolored
  std::vector<uint64_t> bits;
  auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonResult {
  CanonicalForm form;
  // labeling[v] = canonical position of vertex v.
  std::vector<int> labeling;
  // Generators of (a subgroup of) the automorphism group found on the way.
  std::vector<std::vector<int>> automorphisms;
  int64_t leaves = 0;
};

// Individualization-refinement search over equitable partitions with orbit
// pruning. `colors`, if given, fixes an initial vertex coloring.
CanonResult Canonicalize(const Graph& g, const std::vector<int>* colors = nullptr);

bool IsIsomorphic(const Graph& a, const Graph& b);

// The graph relabeled into canonical order with sorted edges.
Graph CanonicalGraph(const Graph& g);

}  // namespace wlbound

#endif  // WLBOUND_CANON_H_
