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

#ifndef WLBOUND_GENERATE_H_
#define WLBOUND_GENERATE_H_

#include <vector>

#include "wlbound/classes.h"
#include "wlbound/graph.h"

namespace wlbound {

inline constexpr int kMinGeneratedOrder = 3;
inline constexpr int kMaxGeneratedOrder = 8;
// Even-degree graphs on n vertices are built from all graphs on n - 1.
inline constexpr int kMaxEulerianOrder = kMaxGeneratedOrder + 1;

// One representative per isomorphism class of simple graphs on n vertices,
// in canonical labeling, sorted by canonical form. Throws kOrderOutOfRange
// outside 3..8.
std::vector<Graph> GenerateAllGraphs(int n);

// Even-degree graphs on n vertices (3..9): every graph on n - 1 vertices
// extended by one vertex joined to its odd-degree vertices, deduplicated.
std::vector<Graph> GenerateEulerianGraphs(int n);

// Members of `c` on n vertices, by filtering the exhaustive lists. Classes
// that are shipped rather than generated throw kOrderOutOfRange.
std::vector<Graph> GenerateClass(GraphClass c, int n);

// Largest order GenerateClass accepts for `c`, or 0 if not generated.
int MaxGeneratedOrder(GraphClass c);

}  // namespace wlbound

#endif  // WLBOUND_GENERATE_H_
