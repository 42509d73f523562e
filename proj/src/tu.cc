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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wlbound/dataset.h"
#include "wlbound/error.h"

namespace wlbound {
namespace {

namespace fs = std::filesystem;

struct Table {
  std::string path;
  std::vector<std::vector<std::string>> rows;
};

std::string Strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::optional<Table> ReadTable(const fs::path& path, bool required) {
  std::ifstream in(path);
  if (!in) {
    if (required) throw Error(ErrorCode::kMissingFile, path.string());
    return std::nullopt;
  }
  Table t{path.string(), {}};
  std::string line;
  size_t width = 0;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = Strip(line);
    if (line.empty()) continue;
    std::vector<std::string> cells;
    size_t start = 0;
    while (true) {
      size_t comma = line.find(',', start);
      cells.push_back(Strip(line.substr(start, comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (t.rows.empty()) width = cells.size();
    if (cells.size() != width) {
      throw Error(ErrorCode::kRaggedAttributeRow,
                  t.path + ":" + std::to_string(line_no) + " has " +
                      std::to_string(cells.size()) + " columns, expected " +
                      std::to_string(width));
    }
    t.rows.push_back(std::move(cells));
  }
  return t;
}

long long ParseIndex(const std::string& s, const Table& t, size_t row) {
  try {
    size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::kSchemaViolation, t.path + ":" +
                                                 std::to_string(row + 1) +
                                                 ": not an integer '" + s + "'");
  }
}

void CheckRowCount(const Table& t, size_t expected) {
  if (t.rows.size() != expected) {
    throw Error(ErrorCode::kIndexOutOfRange,
                t.path + " has " + std::to_string(t.rows.size()) +
                    " rows, expected " + std::to_string(expected));
  }
}

AttrRow Tokens(const std::vector<std::string>& cells, int precision) {
  AttrRow row;
  for (const auto& c : cells) row.push_back(CanonicalizeToken(c, precision));
  return row;
}

}  // namespace

Dataset LoadTuDataset(const std::string& directory, int precision) {
  fs::path dir(directory);
  std::string ds = dir.filename().string();
  if (ds.empty()) ds = dir.parent_path().filename().string();
  auto file = [&](const char* suffix) { return dir / (ds + "_" + suffix + ".txt"); };

  Table arcs = *ReadTable(file("A"), true);
  Table indicator = *ReadTable(file("graph_indicator"), true);
  std::optional<Table> graph_labels = ReadTable(file("graph_labels"), false);
  std::optional<Table> graph_attrs = ReadTable(file("graph_attributes"), false);
  if (!graph_labels && !graph_attrs) {
    throw Error(ErrorCode::kMissingFile, file("graph_labels").string());
  }
  std::optional<Table> node_labels = ReadTable(file("node_labels"), false);
  std::optional<Table> node_attrs = ReadTable(file("node_attributes"), false);
  std::optional<Table> edge_labels = ReadTable(file("edge_labels"), false);
  std::optional<Table> edge_attrs = ReadTable(file("edge_attributes"), false);

  const size_t num_nodes = indicator.rows.size();
  std::vector<int> graph_of(num_nodes), local(num_nodes);
  std::vector<int> order_count;
  for (size_t i = 0; i < num_nodes; ++i) {
    long long gid = ParseIndex(indicator.rows[i][0], indicator, i);
    if (gid < 1 || gid > static_cast<long long>(num_nodes)) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  indicator.path + ":" + std::to_string(i + 1) +
                      ": graph id " + std::to_string(gid));
    }
    if (static_cast<size_t>(gid) > order_count.size()) order_count.resize(gid, 0);
    graph_of[i] = static_cast<int>(gid - 1);
    local[i] = order_count[gid - 1]++;
  }
  const size_t num_graphs =
      graph_labels ? graph_labels->rows.size() : graph_attrs->rows.size();
  if (order_count.size() > num_graphs) {
    throw Error(ErrorCode::kIndexOutOfRange,
                indicator.path + " references graph " +
                    std::to_string(order_count.size()) + " but only " +
                    std::to_string(num_graphs) + " graphs are labeled");
  }
  order_count.resize(num_graphs, 0);
  if (node_labels) CheckRowCount(*node_labels, num_nodes);
  if (node_attrs) CheckRowCount(*node_attrs, num_nodes);
  if (edge_labels) CheckRowCount(*edge_labels, arcs.rows.size());
  if (edge_attrs) CheckRowCount(*edge_attrs, arcs.rows.size());

  // Undirected edge -> arc row supplying its attributes. The arc oriented
  // low-to-high wins so the result does not depend on arc order.
  std::vector<std::map<std::pair<int, int>, std::pair<size_t, bool>>> per_graph(
      num_graphs);
  for (size_t r = 0; r < arcs.rows.size(); ++r) {
    if (arcs.rows[r].size() != 2) {
      throw Error(ErrorCode::kRaggedAttributeRow,
                  arcs.path + ":" + std::to_string(r + 1) + ": expected 2 columns");
    }
    long long a = ParseIndex(arcs.rows[r][0], arcs, r);
    long long b = ParseIndex(arcs.rows[r][1], arcs, r);
    if (a < 1 || b < 1 || a > static_cast<long long>(num_nodes) ||
        b > static_cast<long long>(num_nodes)) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  arcs.path + ":" + std::to_string(r + 1) + ": node index out of range");
    }
    if (graph_of[a - 1] != graph_of[b - 1]) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  arcs.path + ":" + std::to_string(r + 1) + ": arc joins two graphs");
    }
    if (a == b) {
      throw Error(ErrorCode::kInvalidGraph,
                  arcs.path + ":" + std::to_string(r + 1) + ": self-loop");
    }
    int u = local[a - 1], v = local[b - 1];
    bool forward = a < b;
    auto& m = per_graph[graph_of[a - 1]];
    auto key = std::make_pair(std::min(u, v), std::max(u, v));
    auto it = m.find(key);
    if (it == m.end()) {
      m.emplace(key, std::make_pair(r, forward));
    } else if (forward && !it->second.second) {
      it->second = {r, true};
    }
  }

  Dataset out;
  out.name = ds;
  out.precision = precision;
  if (graph_labels) {
    out.task = Task::kGraphClassification;
    out.metric = Metric::kAccuracy;
  } else {
    out.task = Task::kGraphRegression;
    out.metric = Metric::kMse;
  }
  std::vector<std::vector<size_t>> nodes_of(num_graphs);
  for (size_t i = 0; i < num_nodes; ++i) nodes_of[graph_of[i]].push_back(i);
  for (size_t gi = 0; gi < num_graphs; ++gi) {
    std::vector<Edge> edges;
    std::vector<size_t> arc_rows;
    for (const auto& [key, val] : per_graph[gi]) {
      edges.push_back({key.first, key.second});
      arc_rows.push_back(val.first);
    }
    Graph g(order_count[gi], std::move(edges));
    if (node_labels || node_attrs) {
      std::vector<AttrRow> labels, feats;
      for (size_t i : nodes_of[gi]) {
        if (node_labels) labels.push_back(Tokens(node_labels->rows[i], precision));
        if (node_attrs) feats.push_back(Tokens(node_attrs->rows[i], precision));
      }
      g.SetNodeAttrs(std::move(labels), std::move(feats));
    }
    if ((edge_labels || edge_attrs) && g.edge_count() > 0) {
      std::vector<AttrRow> labels, feats;
      for (size_t r : arc_rows) {
        if (edge_labels) labels.push_back(Tokens(edge_labels->rows[r], precision));
        if (edge_attrs) feats.push_back(Tokens(edge_attrs->rows[r], precision));
      }
      g.SetEdgeAttrs(std::move(labels), std::move(feats));
    }
    out.graphs.push_back(std::move(g));
    out.ids.push_back(std::to_string(gi + 1));
    if (graph_labels) {
      out.graph_labels.push_back(CanonicalizeToken(graph_labels->rows[gi][0]));
    } else {
      const std::string& s = graph_attrs->rows[gi][0];
      out.graph_values.push_back(std::stod(s));
    }
  }
  return out;
}

}  // namespace wlbound
