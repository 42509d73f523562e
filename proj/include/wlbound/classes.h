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

#ifndef WLBOUND_CLASSES_H_
#define WLBOUND_CLASSES_H_

#include <optional>
#include <string_view>
#include <vector>

#include "wlbound/graph.h"

namespace wlbound {

enum class GraphClass {
  kAll,
  kEulerian,
  kPlanarConnected,
  kChordal,
  kPerfect,
  kHighlyIrregular,
  kEdge4Critical,
  kSelfComplementary,
  kDistanceRegular,
  kStronglyRegular,
};

std::string_view ClassName(GraphClass c);
// Accepts the names returned by ClassName plus "all".
GraphClass ParseClass(std::string_view name);
std::vector<GraphClass> AllClasses();

bool IsConnected(const Graph& g);
// All degrees even; connectivity is not required.
bool IsEulerian(const Graph& g);
// Maximum cardinality search followed by a perfect elimination check.
bool IsChordal(const Graph& g);
// No induced odd cycle of length >= 5 in g or its complement.
bool IsPerfect(const Graph& g);
// Connected, and the neighbours of every vertex have pairwise distinct
// degrees.
bool IsHighlyIrregular(const Graph& g);
// Connected, 4-chromatic, and every single edge deletion is 3-colourable.
bool IsEdge4Critical(const Graph& g);
bool IsSelfComplementary(const Graph& g);
bool IsPlanar(const Graph& g);

// Smallest k such that g is k-colourable; backtracking in DSATUR order.
int ChromaticNumber(const Graph& g);
bool IsColorable(const Graph& g, int k);

// b_0..b_{d-1} and c_1..c_d; a_i = k - b_i - c_i.
struct IntersectionArray {
  std::vector<int> b;
  std::vector<int> c;
  int diameter() const { return static_cast<int>(c.size()); }
  int degree() const { return b.empty() ? 0 : b[0]; }
  // a_0..a_d.
  std::vector<int> a() const;
  bool operator==(const IntersectionArray&) const = default;
};

// Set iff g is connected and distance-regular.
std::optional<IntersectionArray> ComputeIntersectionArray(const Graph& g);

struct SrgParams {
  int n = 0;
  int k = 0;
  int lambda = 0;
  int mu = 0;
  bool operator==(const SrgParams&) const = default;
};

// Set iff g is regular, neither complete nor edgeless, and adjacent
// (non-adjacent) pairs have a constant number of common neighbours.
std::optional<SrgParams> StronglyRegularParams(const Graph& g);

// Throws kBudgetExceeded when the check is outside its validated order
// range.
bool CheckClass(const Graph& g, GraphClass c);

}  // namespace wlbound

#endif  // WLBOUND_CLASSES_H_
