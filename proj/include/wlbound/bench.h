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

#ifndef WLBOUND_BENCH_H_
#define WLBOUND_BENCH_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "wlbound/classes.h"
#include "wlbound/digest.h"
#include "wlbound/features.h"
#include "wlbound/graph.h"
#include "wlbound/refine.h"

namespace wlbound {

inline constexpr std::string_view kCorpusSchema = "wlbound-corpus-v1";

// One graph6 file holding every graph of a class at one order.
struct CorpusCell {
  GraphClass cls = GraphClass::kAll;
  int order = 0;
  std::string file;  // relative to the corpus root
  int count = 0;
  std::string xxh3;  // hex digest of the file bytes
};

// `<root>/manifest.json` plus the `<class>/<order>.g6` files it lists.
class CorpusManifest {
 public:
  CorpusManifest() = default;
  explicit CorpusManifest(std::string root) : root_(std::move(root)) {}

  // Throws kMissingFile or kSchemaViolation.
  static CorpusManifest Load(const std::string& root);
  // Writes manifest.json under the root.
  void Save() const;
  std::string ToJson() const;

  const std::string& root() const { return root_; }
  // Hex digest of the serialized manifest.
  std::string Digest() const;
  const std::vector<CorpusCell>& cells() const { return cells_; }
  const CorpusCell* Find(GraphClass c, int order) const;
  std::vector<int> Orders(GraphClass c) const;
  std::vector<GraphClass> Classes() const;

  // Expected number of graphs summed over all orders of a class.
  void SetExpectedTotal(GraphClass c, int64_t total) { totals_[c] = total; }
  int64_t ExpectedTotal(GraphClass c) const;

  // Writes the graphs as `<class>/<order>.g6` and records the cell.
  void WriteCell(GraphClass c, int order, const std::vector<Graph>& graphs);

  // Checks file digests and record counts of the given cells, and the class
  // totals of every class they belong to. Throws kManifestMismatch.
  void Verify(const std::vector<const CorpusCell*>& cells) const;
  void VerifyAll() const;
  std::vector<Graph> LoadCell(const CorpusCell& cell) const;

 private:
  std::string root_;
  std::vector<CorpusCell> cells_;
  std::map<GraphClass, int64_t> totals_;
};

// A distinguishing test: 1-WL, 1-WLE, oblivious k-WL or folklore k-WL, with
// optional feature tokens as initial colors.
struct TestConfig {
  Variant variant = Variant::kWl1;
  int k = 1;
  std::vector<FeatureSpec> features;

  // "1wl", "1wle", "<k>wl" (oblivious), "<k>fwl" (folklore).
  static TestConfig Parse(std::string_view name);
  // 1-WL switches to 1-WLE when a feature targets edges.
  Variant EffectiveVariant() const;
  std::string Name() const;
};

// Certificate of the refinement run to convergence.
ColorId GraphCertificate(const Graph& g, const TestConfig& test,
                         int64_t tuple_budget = kDefaultTupleBudget);

// Number of unordered pairs with equal certificates.
int64_t CountFailures(std::vector<ColorId> certificates);

struct FailureRow {
  GraphClass cls = GraphClass::kAll;
  int order = 0;
  int graphs = 0;
  std::string test;
  int64_t failures = 0;
};

struct FailureTable {
  std::vector<std::string> header;
  std::vector<FailureRow> rows;

  const FailureRow* Find(GraphClass c, int order, std::string_view test) const;
  std::string ToCsv() const;
};

std::vector<int64_t> FailureCounts(const std::vector<Graph>& graphs,
                                   const std::vector<TestConfig>& tests,
                                   int workers = 1,
                                   int64_t tuple_budget = kDefaultTupleBudget);

// Verifies every selected cell before computing anything. Empty `orders`
// selects all orders of each class. Throws kManifestMismatch or, for a
// selection that names no cell, kInvalidArgument.
FailureTable FailureCounts(const CorpusManifest& corpus,
                           const std::vector<GraphClass>& classes,
                           const std::vector<int>& orders,
                           const std::vector<TestConfig>& tests, int workers = 1,
                           int64_t tuple_budget = kDefaultTupleBudget);

}  // namespace wlbound

#endif  // WLBOUND_BENCH_H_
