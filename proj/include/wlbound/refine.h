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

#ifndef WLBOUND_REFINE_H_
#define WLBOUND_REFINE_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "wlbound/digest.h"
#include "wlbound/graph.h"

namespace wlbound {

enum class Variant { kWl1, kWle1, kKwl, kFolkloreKwl };

std::string_view VariantName(Variant v);

struct ColoringTrace {
  Variant variant = Variant::kWl1;
  int k = 1;
  // Colors of rounds first_round..first_round + per_round.size() - 1. Only
  // the last round is retained when history is dropped.
  int first_round = 0;
  std::vector<std::vector<ColorId>> per_round;
  // Smallest round whose partition equals that of the previous round.
  std::optional<int> converged_at;

  int last_round() const {
    return first_round + static_cast<int>(per_round.size()) - 1;
  }
  // Colors at `round`, clamped to the last computed round. Throws if the
  // round was computed but not retained.
  const std::vector<ColorId>& Round(int round) const;
};

struct RefineOptions {
  bool use_node_attrs = true;
  // 1-WLE when set. Graphs without edge attributes use one uniform token.
  bool use_edge_attrs = false;
  // Extra per-node token appended to the initial key.
  std::optional<std::vector<Token>> init;
  // Defaults to max(node_count - 1, 1).
  std::optional<int> rounds;
  // When false, exactly `rounds` rounds are computed so that colors at a
  // given round stay comparable across graphs.
  bool stop_at_convergence = true;
};

ColoringTrace Refine(const Graph& g, const RefineOptions& options = {});

inline constexpr int64_t kDefaultTupleBudget = 16'000'000;

struct KwlOptions {
  int k = 2;
  bool folklore = false;
  bool use_node_attrs = true;
  bool use_edge_attrs = true;
  std::optional<int> rounds;
  int64_t tuple_budget = kDefaultTupleBudget;
  int workers = 1;
  bool keep_history = false;
};

// Throws kTupleBudgetExceeded when node_count^k exceeds the budget.
ColoringTrace KwlRefine(const Graph& g, const KwlOptions& options);

// Digest of the sorted colors at `round` (clamped to the last round).
ColorId Certificate(const ColoringTrace& trace, int round);
// Certificate at the last computed round.
ColorId Certificate(const ColoringTrace& trace);

int CountClasses(const std::vector<ColorId>& colors);

// Class index per element, numbered by first occurrence. Two colorings
// induce the same partition iff their labels are equal.
std::vector<int> PartitionLabels(const std::vector<ColorId>& colors);

// True iff every class of `fine` lies inside one class of `coarse`.
bool Refines(const std::vector<ColorId>& fine,
             const std::vector<ColorId>& coarse);

// Digest of a node's attribute tuple, used as the uniform token when empty.
ColorId AttrDigest(const AttrRow& row);

}  // namespace wlbound

#endif  // WLBOUND_REFINE_H_
