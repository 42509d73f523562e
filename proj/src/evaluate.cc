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

#include "wlbound/evaluate.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "wlbound/error.h"
#include "wlbound/parallel.h"

namespace wlbound {
namespace {

template <typename T>
std::map<ColorId, std::vector<int>> Groups(const std::vector<ColorId>& hashes,
                                           const std::vector<T>& targets) {
  if (hashes.size() != targets.size()) {
    throw Error(ErrorCode::kTargetMismatch,
                std::to_string(targets.size()) + " targets for " +
                    std::to_string(hashes.size()) + " entities");
  }
  std::map<ColorId, std::vector<int>> groups;
  for (size_t i = 0; i < hashes.size(); ++i) {
    groups[hashes[i]].push_back(static_cast<int>(i));
  }
  return groups;
}

// Most frequent label of a group; ties go to the smallest label.
const Token& Majority(const std::vector<int>& members,
                      const std::vector<Token>& labels) {
  std::map<Token, int> counts;
  for (int i : members) ++counts[labels[i]];
  auto best = counts.begin();
  for (auto it = counts.begin(); it != counts.end(); ++it) {
    if (it->second > best->second) best = it;
  }
  return labels[*std::find_if(members.begin(), members.end(), [&](int i) {
    return labels[i] == best->first;
  })];
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

int CountEntities(const Dataset& d) {
  switch (d.task) {
    case Task::kGraphClassification:
    case Task::kGraphRegression:
      return d.size();
    case Task::kNodeClassification: {
      int n = 0;
      for (const Graph& g : d.graphs) n += g.node_count();
      return n;
    }
    case Task::kLinkPrediction: {
      int n = 0;
      for (const auto& links : d.link_targets) n += static_cast<int>(links.size());
      return n;
    }
  }
  return 0;
}

std::vector<Token> ClassLabels(const Dataset& d) {
  if (d.task == Task::kGraphClassification) return d.graph_labels;
  std::vector<Token> out;
  if (d.task == Task::kNodeClassification) {
    for (const auto& row : d.node_targets) out.insert(out.end(), row.begin(), row.end());
  } else {
    for (const auto& links : d.link_targets) {
      for (const LinkTarget& t : links) out.push_back(t.label);
    }
  }
  return out;
}

double Score(Metric metric, const std::vector<ColorId>& hashes,
             const std::vector<Token>& labels, const std::vector<double>& values) {
  switch (metric) {
    case Metric::kAccuracy: return AccuracyBound(hashes, labels);
    case Metric::kMacroF1: return MacroF1Bound(hashes, labels);
    case Metric::kMse: return MseBound(hashes, values);
  }
  return 0;
}

}  // namespace

std::string_view AttrConfigName(AttrConfig c) {
  switch (c) {
    case AttrConfig::kNone: return "none";
    case AttrConfig::kNode: return "node";
    case AttrConfig::kEdge: return "edge";
    case AttrConfig::kBoth: return "both";
  }
  return "?";
}

std::vector<AttrConfig> ParseAttrConfigs(std::string_view list) {
  std::vector<AttrConfig> out;
  size_t pos = 0;
  while (pos <= list.size()) {
    size_t comma = std::min(list.find(',', pos), list.size());
    std::string_view item = list.substr(pos, comma - pos);
    pos = comma + 1;
    if (item == "all") {
      for (AttrConfig c : {AttrConfig::kNone, AttrConfig::kNode, AttrConfig::kEdge,
                           AttrConfig::kBoth}) {
        out.push_back(c);
      }
      continue;
    }
    bool found = false;
    for (AttrConfig c : {AttrConfig::kNone, AttrConfig::kNode, AttrConfig::kEdge,
                         AttrConfig::kBoth}) {
      if (item == AttrConfigName(c)) {
        out.push_back(c);
        found = true;
      }
    }
    if (!found) {
      throw Error(ErrorCode::kInvalidArgument,
                  "unknown config '" + std::string(item) + "'");
    }
  }
  return out;
}

bool EvalConfig::UsesEdges() const {
  if (attrs == AttrConfig::kEdge || attrs == AttrConfig::kBoth) return true;
  return std::any_of(features.begin(), features.end(),
                     [](const FeatureSpec& s) { return s.target == Target::kEdge; });
}

std::string EvalConfig::Name() const {
  std::string name(AttrConfigName(attrs));
  if (!features.empty()) name += "+" + FormatFeatures(features);
  return name;
}

Graph PrepareGraph(const Graph& g, const EvalConfig& config) {
  Graph out = g;
  if (config.attrs == AttrConfig::kNone || config.attrs == AttrConfig::kEdge) {
    out.ClearNodeAttrs();
  }
  if (config.attrs == AttrConfig::kNone || config.attrs == AttrConfig::kNode) {
    out.ClearEdgeAttrs();
  }
  if (!config.features.empty()) out = ApplyFeatures(out, config.features);
  return out;
}

std::vector<std::vector<ColorId>> EntityHashesByLayer(const Dataset& dataset,
                                                      int layers,
                                                      const EvalConfig& config,
                                                      int workers) {
  if (layers < 0) {
    throw Error(ErrorCode::kLayerNegative, "layers = " + std::to_string(layers));
  }
  const bool edges = config.UsesEdges();
  // per_graph[i][layer] holds the entity hashes of graph i.
  std::vector<std::vector<std::vector<ColorId>>> per_graph(dataset.size());
  ParallelFor(dataset.size(), workers, [&](int i) {
    const Graph g = PrepareGraph(dataset.graphs[i], config);
    RefineOptions opts;
    opts.use_node_attrs = true;
    opts.use_edge_attrs = edges;
    opts.rounds = layers;
    opts.stop_at_convergence = false;
    ColoringTrace trace = Refine(g, opts);
    auto& out = per_graph[i];
    out.resize(layers + 1);
    for (int layer = 0; layer <= layers; ++layer) {
      const std::vector<ColorId>& colors = trace.Round(layer);
      switch (dataset.task) {
        case Task::kGraphClassification:
        case Task::kGraphRegression:
          out[layer] = {SortedDigest(tag::kCertificate, colors)};
          break;
        case Task::kNodeClassification:
          out[layer] = colors;
          break;
        case Task::kLinkPrediction:
          for (const LinkTarget& t : dataset.link_targets[i]) {
            ColorId a = colors.at(t.u), b = colors.at(t.v);
            if (b < a) std::swap(a, b);
            KeyBuilder key(tag::kLink);
            key.Add(a).Add(b);
            if (edges) {
              int e = g.EdgeIndex(t.u, t.v);
              key.AddU64(e >= 0 ? 1 : 0);
              if (e >= 0) key.Add(AttrDigest(g.EdgeAttrTuple(e)));
            }
            out[layer].push_back(key.Digest());
          }
          break;
      }
    }
  });
  std::vector<std::vector<ColorId>> result(layers + 1);
  for (int layer = 0; layer <= layers; ++layer) {
    for (const auto& g : per_graph) {
      result[layer].insert(result[layer].end(), g[layer].begin(), g[layer].end());
    }
  }
  return result;
}

std::vector<ColorId> EntityHashes(const Dataset& dataset, int layers,
                                  const EvalConfig& config, int workers) {
  return EntityHashesByLayer(dataset, layers, config, workers).back();
}

double AccuracyBound(const std::vector<ColorId>& hashes,
                     const std::vector<Token>& labels) {
  if (hashes.empty()) return 0;
  int64_t correct = 0;
  for (const auto& [hash, members] : Groups(hashes, labels)) {
    const Token& pick = Majority(members, labels);
    for (int i : members) correct += labels[i] == pick;
  }
  return static_cast<double>(correct) / hashes.size();
}

double MacroF1Bound(const std::vector<ColorId>& hashes,
                    const std::vector<Token>& labels) {
  if (hashes.empty()) return 0;
  std::map<Token, int64_t> tp, fp, fn;
  for (const Token& t : labels) tp[t];
  for (const auto& [hash, members] : Groups(hashes, labels)) {
    const Token& pick = Majority(members, labels);
    for (int i : members) {
      if (labels[i] == pick) {
        ++tp[pick];
      } else {
        ++fp[pick];
        ++fn[labels[i]];
      }
    }
  }
  double total = 0;
  for (const auto& [label, hits] : tp) {
    int64_t denom = 2 * hits + fp[label] + fn[label];
    total += denom == 0 ? 0.0 : 2.0 * hits / denom;
  }
  return total / tp.size();
}

double MseBound(const std::vector<ColorId>& hashes,
                const std::vector<double>& values) {
  if (hashes.empty()) return 0;
  long double sse = 0;
  for (const auto& [hash, members] : Groups(hashes, values)) {
    long double mean = 0;
    for (int i : members) mean += values[i];
    mean /= members.size();
    for (int i : members) sse += (values[i] - mean) * (values[i] - mean);
  }
  return static_cast<double>(sse / hashes.size());
}

std::string ReportRow::Value() const {
  char buf[64];
  double v = raw_value;
  std::snprintf(buf, sizeof buf, "%.*f", kReportDigits, v);
  std::string s = buf;
  return s == "-0.0000" ? "0.0000" : s;
}

std::string ReportRow::RawValue() const { return QuantizeReal(raw_value, 12); }

const ReportRow* EvaluationReport::Find(std::string_view config, int layer) const {
  for (const ReportRow& r : rows) {
    if (r.config == config && r.layer == layer) return &r;
  }
  return nullptr;
}

std::string EvaluationReport::ToCsv() const {
  std::string out;
  for (const std::string& h : header) out += "# " + h + "\n";
  out += "dataset,config,layer,metric,value,raw_value\n";
  for (const ReportRow& r : rows) {
    out += CsvField(r.dataset) + "," + CsvField(r.config) + "," +
           std::to_string(r.layer) + "," + std::string(MetricName(r.metric)) +
           "," + r.Value() + "," + r.RawValue() + "\n";
  }
  return out;
}

std::string EvaluationReport::ToJson() const {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["header"] = header;
  j["dataset"] = dataset;
  j["digits"] = digits;
  j["rows"] = nlohmann::ordered_json::array();
  for (const ReportRow& r : rows) {
    j["rows"].push_back({{"dataset", r.dataset},
                         {"config", r.config},
                         {"layer", r.layer},
                         {"metric", MetricName(r.metric)},
                         {"value", r.Value()},
                         {"raw_value", r.RawValue()},
                         {"variant", VariantName(r.variant)}});
  }
  return j.dump(2) + "\n";
}

Metric ResolveMetric(const Dataset& dataset, std::optional<Metric> requested) {
  const bool regression = dataset.task == Task::kGraphRegression;
  Metric m = requested.value_or(dataset.metric);
  if ((m == Metric::kMse) != regression) {
    throw Error(ErrorCode::kTargetMismatch,
                std::string(MetricName(m)) + " does not fit task " +
                    std::string(TaskName(dataset.task)));
  }
  return m;
}

EvaluationReport UpperBound(const Dataset& dataset, int layers_max,
                            const std::vector<EvalConfig>& configs,
                            std::optional<Metric> metric, int workers,
                            int layers_min) {
  if (layers_max < 0 || layers_min < 0) {
    throw Error(ErrorCode::kLayerNegative, "negative layer range");
  }
  dataset.Validate();
  const Metric m = ResolveMetric(dataset, metric);
  const std::vector<Token> labels =
      m == Metric::kMse ? std::vector<Token>{} : ClassLabels(dataset);
  const std::vector<double>& values = dataset.graph_values;
  if (CountEntities(dataset) !=
      static_cast<int>(m == Metric::kMse ? values.size() : labels.size())) {
    throw Error(ErrorCode::kTargetMismatch, "target count differs from entity count");
  }
  EvaluationReport report;
  report.dataset = dataset.name;
  report.digits = dataset.precision;
  for (const EvalConfig& config : configs) {
    auto by_layer = EntityHashesByLayer(dataset, layers_max, config, workers);
    const int first = std::max(layers_min, config.UsesEdges() ? 1 : 0);
    for (int layer = first; layer <= layers_max; ++layer) {
      ReportRow row;
      row.dataset = dataset.name;
      row.config = config.Name();
      row.layer = layer;
      row.metric = m;
      row.variant = config.variant();
      row.raw_value = Score(m, by_layer[layer], labels, values);
      report.rows.push_back(row);
    }
  }
  return report;
}

EvaluationReport FeatureMse(const Dataset& dataset,
                            const std::vector<std::vector<FeatureSpec>>& grid,
                            int layers, AttrConfig attrs,
                            std::optional<Metric> metric, int workers) {
  if (layers < 0) {
    throw Error(ErrorCode::kLayerNegative, "layers = " + std::to_string(layers));
  }
  dataset.Validate();
  if (dataset.task != Task::kGraphClassification &&
      dataset.task != Task::kGraphRegression) {
    throw Error(ErrorCode::kTargetMismatch,
                "node-to-graph mode needs a graph-level task");
  }
  const Metric m = ResolveMetric(dataset, metric);
  std::vector<Token> labels;
  std::vector<double> values;
  for (int i = 0; i < dataset.size(); ++i) {
    for (int v = 0; v < dataset.graphs[i].node_count(); ++v) {
      if (m == Metric::kMse) {
        values.push_back(dataset.graph_values[i]);
      } else {
        labels.push_back(dataset.graph_labels[i]);
      }
    }
  }
  // Node hashes are exactly what a node task would group by.
  Dataset nodes;
  nodes.name = dataset.name;
  nodes.task = Task::kNodeClassification;
  nodes.graphs = dataset.graphs;

  EvaluationReport report;
  report.dataset = dataset.name;
  report.digits = dataset.precision;
  for (const auto& specs : grid) {
    EvalConfig config{attrs, specs};
    ReportRow row;
    row.dataset = dataset.name;
    row.config = config.Name();
    row.layer = layers;
    row.metric = m;
    row.variant = config.variant();
    row.raw_value = Score(m, EntityHashes(nodes, layers, config, workers), labels,
                          values);
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace wlbound
