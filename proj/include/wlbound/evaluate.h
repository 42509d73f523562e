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

#ifndef WLBOUND_EVALUATE_H_
#define WLBOUND_EVALUATE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wlbound/dataset.h"
#include "wlbound/digest.h"
#include "wlbound/features.h"
#include "wlbound/refine.h"

namespace wlbound {

inline constexpr std::string_view kReportSchema = "wlbound-report-v1";
inline constexpr int kReportDigits = 4;

enum class AttrConfig { kNone, kNode, kEdge, kBoth };

std::string_view AttrConfigName(AttrConfig c);
// Accepts none, node, edge, both. "all" expands to the four of them.
std::vector<AttrConfig> ParseAttrConfigs(std::string_view list);

struct EvalConfig {
  AttrConfig attrs = AttrConfig::kNone;
  std::vector<FeatureSpec> features;

  // Edge attributes or edge features are present; refinement uses 1-WLE.
  bool UsesEdges() const;
  Variant variant() const { return UsesEdges() ? Variant::kWle1 : Variant::kWl1; }
  // "node" or "node+degree,rwse:steps=16".
  std::string Name() const;
};

// The graph that refinement sees under `config`: attributes the config does
// not use are dropped and feature tokens appended as node or edge labels.
Graph PrepareGraph(const Graph& g, const EvalConfig& config);

// Hashes of the task entities (graphs, nodes in graph order, or link targets
// in graph order) for every layer 0..layers. Colors are content-addressed, so
// hashes compare across the whole dataset. Throws kLayerNegative.
std::vector<std::vector<ColorId>> EntityHashesByLayer(const Dataset& dataset,
                                                      int layers,
                                                      const EvalConfig& config,
                                                      int workers = 1);
std::vector<ColorId> EntityHashes(const Dataset& dataset, int layers,
                                  const EvalConfig& config, int workers = 1);

// Best scores of any predictor that is constant on each hash group.
double AccuracyBound(const std::vector<ColorId>& hashes,
                     const std::vector<Token>& labels);
double MacroF1Bound(const std::vector<ColorId>& hashes,
                    const std::vector<Token>& labels);
double MseBound(const std::vector<ColorId>& hashes,
                const std::vector<double>& values);

struct ReportRow {
  std::string dataset;
  std::string config;
  int layer = 0;
  Metric metric = Metric::kAccuracy;
  double raw_value = 0;
  Variant variant = Variant::kWl1;

  // Rounded to kReportDigits decimals.
  std::string Value() const;
  std::string RawValue() const;
};

struct EvaluationReport {
  std::string dataset;
  std::vector<ReportRow> rows;
  int digits = kDefaultPrecision;
  // Lines emitted as "# " comments at the top of CSV output and as a
  // "header" array in JSON.
  std::vector<std::string> header;

  const ReportRow* Find(std::string_view config, int layer) const;
  std::string ToCsv() const;
  std::string ToJson() const;
};

// Metric used when none is requested explicitly. Throws kTargetMismatch when
// `requested` does not fit the task.
Metric ResolveMetric(const Dataset& dataset, std::optional<Metric> requested);

// One row per config and layer; layer 0 is skipped for configs that use edge
// information, where it coincides with the edge-free config.
EvaluationReport UpperBound(const Dataset& dataset, int layers_max,
                            const std::vector<EvalConfig>& configs,
                            std::optional<Metric> metric = std::nullopt,
                            int workers = 1, int layers_min = 0);

// Groups nodes rather than graphs; every node takes its graph's target.
// One row per spec list, labelled with the spec grammar.
EvaluationReport FeatureMse(const Dataset& dataset,
                            const std::vector<std::vector<FeatureSpec>>& grid,
                            int layers, AttrConfig attrs = AttrConfig::kNone,
                            std::optional<Metric> metric = std::nullopt,
                            int workers = 1);

}  // namespace wlbound

#endif  // WLBOUND_EVALUATE_H_
