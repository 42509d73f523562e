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

#ifndef WLBOUND_DATASET_H_
#define WLBOUND_DATASET_H_

#include <string>
#include <string_view>
#include <vector>

#include "wlbound/graph.h"

namespace wlbound {

enum class Task {
  kGraphClassification,
  kGraphRegression,
  kNodeClassification,
  kLinkPrediction,
};

enum class Metric { kAccuracy, kMacroF1, kMse };

std::string_view TaskName(Task t);
std::string_view MetricName(Metric m);
Task ParseTask(std::string_view s);
Metric ParseMetric(std::string_view s);

struct LinkTarget {
  int u = 0;
  int v = 0;
  Token label;
  bool operator==(const LinkTarget&) const = default;
};

struct Dataset {
  std::string name;
  Task task = Task::kGraphClassification;
  Metric metric = Metric::kAccuracy;
  int precision = kDefaultPrecision;
  std::vector<Graph> graphs;
  std::vector<std::string> ids;
  // Exactly one of these is populated, matching `task`.
  std::vector<Token> graph_labels;
  std::vector<double> graph_values;
  std::vector<std::vector<Token>> node_targets;
  std::vector<std::vector<LinkTarget>> link_targets;

  int size() const { return static_cast<int>(graphs.size()); }
  // Throws kTargetMismatch when targets do not fit the task.
  void Validate() const;
  bool operator==(const Dataset&) const = default;
};

// TU raw text directory (DS_A.txt, DS_graph_indicator.txt, ...). The dataset
// name is the directory's base name.
Dataset LoadTuDataset(const std::string& directory,
                      int precision = kDefaultPrecision);

// Line-oriented JSON format "wlbound-v1".
Dataset LoadJsonl(const std::string& path);
void SaveJsonl(const Dataset& dataset, const std::string& path);
Dataset ParseJsonl(std::string_view text);
std::string SerializeJsonl(const Dataset& dataset);

}  // namespace wlbound

#endif  // WLBOUND_DATASET_H_
