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

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "wlbound/dataset.h"
#include "wlbound/error.h"

namespace wlbound {

using Json = nlohmann::ordered_json;

std::string_view TaskName(Task t) {
  switch (t) {
    case Task::kGraphClassification: return "graph_classification";
    case Task::kGraphRegression: return "graph_regression";
    case Task::kNodeClassification: return "node_classification";
    case Task::kLinkPrediction: return "link_prediction";
  }
  return "?";
}

std::string_view MetricName(Metric m) {
  switch (m) {
    case Metric::kAccuracy: return "accuracy";
    case Metric::kMacroF1: return "macro_f1";
    case Metric::kMse: return "mse";
  }
  return "?";
}

Task ParseTask(std::string_view s) {
  for (Task t : {Task::kGraphClassification, Task::kGraphRegression,
                 Task::kNodeClassification, Task::kLinkPrediction}) {
    if (TaskName(t) == s) return t;
  }
  throw Error(ErrorCode::kSchemaViolation, "unknown task '" + std::string(s) + "'");
}

Metric ParseMetric(std::string_view s) {
  if (s == "f1") return Metric::kMacroF1;
  for (Metric m : {Metric::kAccuracy, Metric::kMacroF1, Metric::kMse}) {
    if (MetricName(m) == s) return m;
  }
  throw Error(ErrorCode::kSchemaViolation,
              "unknown metric '" + std::string(s) + "'");
}

void Dataset::Validate() const {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kTargetMismatch, what);
  };
  const size_t n = graphs.size();
  if (!ids.empty() && ids.size() != n) fail("ids do not match graph count");
  switch (task) {
    case Task::kGraphClassification:
      if (graph_labels.size() != n) fail("expected one label per graph");
      break;
    case Task::kGraphRegression:
      if (graph_values.size() != n) fail("expected one value per graph");
      for (double v : graph_values) {
        if (!std::isfinite(v)) fail("regression target is not finite");
      }
      break;
    case Task::kNodeClassification:
      if (node_targets.size() != n) fail("expected node labels per graph");
      for (size_t i = 0; i < n; ++i) {
        if (static_cast<int>(node_targets[i].size()) != graphs[i].node_count()) {
          fail("graph " + std::to_string(i) + ": node label count mismatch");
        }
      }
      break;
    case Task::kLinkPrediction:
      if (link_targets.size() != n) fail("expected link targets per graph");
      for (size_t i = 0; i < n; ++i) {
        for (const LinkTarget& t : link_targets[i]) {
          if (t.u < 0 || t.v < 0 || t.u >= graphs[i].node_count() ||
              t.v >= graphs[i].node_count() || t.u == t.v) {
            fail("graph " + std::to_string(i) + ": link endpoint out of range");
          }
        }
      }
      break;
  }
  if (metric == Metric::kMse && task != Task::kGraphRegression) {
    fail("mse requires a regression task");
  }
  if (metric != Metric::kMse && task == Task::kGraphRegression) {
    fail("regression targets need the mse metric");
  }
}

namespace {

[[noreturn]] void Violation(int line, const std::string& path,
                            const std::string& what) {
  throw Error(ErrorCode::kSchemaViolation,
              "line " + std::to_string(line) + ", " + path + ": " + what);
}

Token LabelToken(const Json& j, int line, const std::string& path,
                 int precision) {
  if (j.is_string()) return CanonicalizeToken(j.get<std::string>(), precision);
  if (j.is_number_integer() || j.is_number_unsigned()) return j.dump();
  if (j.is_number_float()) return QuantizeReal(j.get<double>(), precision);
  Violation(line, path, "expected a string or number");
}

Token FeatToken(const Json& j, int line, const std::string& path,
                int precision) {
  if (j.is_number_integer() || j.is_number_unsigned()) return j.dump();
  if (j.is_number_float()) return QuantizeReal(j.get<double>(), precision);
  if (j.is_string()) return CanonicalizeToken(j.get<std::string>(), precision);
  Violation(line, path, "expected a number");
}

std::vector<AttrRow> Rows(const Json& j, size_t expected, int line,
                          const std::string& key, bool feats, int precision) {
  if (!j.is_array()) Violation(line, key, "expected an array");
  if (j.size() != expected) {
    Violation(line, key,
              "expected " + std::to_string(expected) + " rows, got " +
                  std::to_string(j.size()));
  }
  std::vector<AttrRow> rows;
  for (size_t i = 0; i < j.size(); ++i) {
    std::string path = key + "[" + std::to_string(i) + "]";
    const Json& r = j[i];
    AttrRow row;
    if (r.is_array()) {
      for (size_t c = 0; c < r.size(); ++c) {
        std::string p = path + "[" + std::to_string(c) + "]";
        row.push_back(feats ? FeatToken(r[c], line, p, precision)
                            : LabelToken(r[c], line, p, precision));
      }
    } else {
      row.push_back(feats ? FeatToken(r, line, path, precision)
                          : LabelToken(r, line, path, precision));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

bool IsIntegerToken(const Token& t) {
  if (t.empty() || t.size() > 18) return false;
  size_t i = t[0] == '-' ? 1 : 0;
  if (i == t.size()) return false;
  if (t[i] == '0' && t.size() > i + 1) return false;
  for (; i < t.size(); ++i) {
    if (t[i] < '0' || t[i] > '9') return false;
  }
  return t != "-0";
}

Json LabelJson(const Token& t) {
  if (IsIntegerToken(t)) return std::stoll(t);
  return t;
}

Json FeatJson(const Token& t) {
  if (IsIntegerToken(t)) return std::stoll(t);
  double v = 0;
  std::istringstream ss(t);
  if ((ss >> v) && ss.eof()) return v;
  return t;
}

Json RowsJson(const std::vector<AttrRow>& rows, bool feats) {
  Json out = Json::array();
  for (const AttrRow& r : rows) {
    Json row = Json::array();
    for (const Token& t : r) row.push_back(feats ? FeatJson(t) : LabelJson(t));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

Dataset ParseJsonl(std::string_view text) {
  Dataset out;
  int line_no = 0;
  bool have_header = false;
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::parse_error& e) {
      Violation(line_no, "$", std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) Violation(line_no, "$", "expected an object");
    if (!have_header) {
      for (const auto& [key, value] : j.items()) {
        if (key != "format" && key != "task" && key != "metric" &&
            key != "precision" && key != "name") {
          Violation(line_no, key, "unknown header key");
        }
      }
      for (const char* key : {"format", "task", "metric", "precision", "name"}) {
        if (!j.contains(key)) Violation(line_no, key, "missing header key");
      }
      if (j["format"] != "wlbound-v1") {
        Violation(line_no, "format", "expected \"wlbound-v1\"");
      }
      if (!j["task"].is_string()) Violation(line_no, "task", "expected a string");
      if (!j["metric"].is_string()) Violation(line_no, "metric", "expected a string");
      if (!j["name"].is_string()) Violation(line_no, "name", "expected a string");
      if (!j["precision"].is_number_integer() || j["precision"].get<int>() < 0 ||
          j["precision"].get<int>() > 17) {
        Violation(line_no, "precision", "expected an integer in 0..17");
      }
      try {
        out.task = ParseTask(j["task"].get<std::string>());
        out.metric = ParseMetric(j["metric"].get<std::string>());
      } catch (const Error& e) {
        Violation(line_no, "task/metric", e.what());
      }
      out.precision = j["precision"].get<int>();
      out.name = j["name"].get<std::string>();
      have_header = true;
      continue;
    }
    static const char* kKeys[] = {"id", "n", "edges", "node_labels", "edge_labels",
                                  "node_feats", "edge_feats", "targets"};
    for (const auto& [key, value] : j.items()) {
      bool known = false;
      for (const char* k : kKeys) known = known || key == k;
      if (!known) Violation(line_no, key, "unknown key");
    }
    for (const char* key : {"id", "n", "edges", "targets"}) {
      if (!j.contains(key)) Violation(line_no, key, "missing key");
    }
    const Json& id = j["id"];
    if (id.is_string()) {
      out.ids.push_back(id.get<std::string>());
    } else if (id.is_number_integer()) {
      out.ids.push_back(id.dump());
    } else {
      Violation(line_no, "id", "expected a string or integer");
    }
    if (!j["n"].is_number_integer() || j["n"].get<long long>() < 0) {
      Violation(line_no, "n", "expected a non-negative integer");
    }
    const int n = j["n"].get<int>();
    const Json& ej = j["edges"];
    if (!ej.is_array()) Violation(line_no, "edges", "expected an array");
    std::vector<Edge> edges;
    for (size_t i = 0; i < ej.size(); ++i) {
      std::string path = "edges[" + std::to_string(i) + "]";
      const Json& e = ej[i];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer()) {
        Violation(line_no, path, "expected [u, v]");
      }
      int u = e[0].get<int>(), v = e[1].get<int>();
      if (u == v) Violation(line_no, path, "self-loop");
      if (u < 0 || v < 0 || u >= n || v >= n) {
        Violation(line_no, path, "endpoint out of range");
      }
      edges.push_back({u, v});
    }
    Graph g;
    try {
      g = Graph(n, std::move(edges));
    } catch (const Error& e) {
      Violation(line_no, "edges", e.what());
    }
    const int m = g.edge_count();
    if (j.contains("node_labels") || j.contains("node_feats")) {
      std::vector<AttrRow> labels, feats;
      if (j.contains("node_labels")) {
        labels = Rows(j["node_labels"], n, line_no, "node_labels", false,
                      out.precision);
      }
      if (j.contains("node_feats")) {
        feats = Rows(j["node_feats"], n, line_no, "node_feats", true,
                     out.precision);
      }
      g.SetNodeAttrs(std::move(labels), std::move(feats));
    }
    if (j.contains("edge_labels") || j.contains("edge_feats")) {
      std::vector<AttrRow> labels, feats;
      if (j.contains("edge_labels")) {
        labels = Rows(j["edge_labels"], m, line_no, "edge_labels", false,
                      out.precision);
      }
      if (j.contains("edge_feats")) {
        feats = Rows(j["edge_feats"], m, line_no, "edge_feats", true,
                     out.precision);
      }
      g.SetEdgeAttrs(std::move(labels), std::move(feats));
    }
    const Json& t = j["targets"];
    switch (out.task) {
      case Task::kGraphClassification:
        out.graph_labels.push_back(LabelToken(t, line_no, "targets", out.precision));
        break;
      case Task::kGraphRegression:
        if (!t.is_number()) Violation(line_no, "targets", "expected a number");
        if (!std::isfinite(t.get<double>())) {
          Violation(line_no, "targets", "not finite");
        }
        out.graph_values.push_back(t.get<double>());
        break;
      case Task::kNodeClassification: {
        if (!t.is_array() || static_cast<int>(t.size()) != n) {
          Violation(line_no, "targets", "expected one label per node");
        }
        std::vector<Token> labels;
        for (size_t i = 0; i < t.size(); ++i) {
          labels.push_back(LabelToken(t[i], line_no,
                                      "targets[" + std::to_string(i) + "]",
                                      out.precision));
        }
        out.node_targets.push_back(std::move(labels));
        break;
      }
      case Task::kLinkPrediction: {
        if (!t.is_array()) Violation(line_no, "targets", "expected an array");
        std::vector<LinkTarget> links;
        for (size_t i = 0; i < t.size(); ++i) {
          std::string path = "targets[" + std::to_string(i) + "]";
          const Json& l = t[i];
          if (!l.is_array() || l.size() != 3 || !l[0].is_number_integer() ||
              !l[1].is_number_integer()) {
            Violation(line_no, path, "expected [u, v, label]");
          }
          LinkTarget lt{l[0].get<int>(), l[1].get<int>(),
                        LabelToken(l[2], line_no, path + "[2]", out.precision)};
          if (lt.u < 0 || lt.v < 0 || lt.u >= n || lt.v >= n || lt.u == lt.v) {
            Violation(line_no, path, "endpoint out of range");
          }
          links.push_back(std::move(lt));
        }
        out.link_targets.push_back(std::move(links));
        break;
      }
    }
    out.graphs.push_back(std::move(g));
  }
  if (!have_header) Violation(1, "$", "missing header line");
  return out;
}

std::string SerializeJsonl(const Dataset& d) {
  std::string out;
  Json header;
  header["format"] = "wlbound-v1";
  header["task"] = std::string(TaskName(d.task));
  header["metric"] = std::string(MetricName(d.metric));
  header["precision"] = d.precision;
  header["name"] = d.name;
  out += header.dump() + "\n";
  for (int i = 0; i < d.size(); ++i) {
    const Graph& g = d.graphs[i];
    Json j;
    j["id"] = i < static_cast<int>(d.ids.size()) ? d.ids[i] : std::to_string(i);
    j["n"] = g.node_count();
    Json edges = Json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    j["edges"] = std::move(edges);
    if (g.node_labels()) j["node_labels"] = RowsJson(*g.node_labels(), false);
    if (g.edge_labels()) j["edge_labels"] = RowsJson(*g.edge_labels(), false);
    if (g.node_feats()) j["node_feats"] = RowsJson(*g.node_feats(), true);
    if (g.edge_feats()) j["edge_feats"] = RowsJson(*g.edge_feats(), true);
    switch (d.task) {
      case Task::kGraphClassification:
        j["targets"] = LabelJson(d.graph_labels[i]);
        break;
      case Task::kGraphRegression:
        j["targets"] = d.graph_values[i];
        break;
      case Task::kNodeClassification: {
        Json t = Json::array();
        for (const Token& l : d.node_targets[i]) t.push_back(LabelJson(l));
        j["targets"] = std::move(t);
        break;
      }
      case Task::kLinkPrediction: {
        Json t = Json::array();
        for (const LinkTarget& l : d.link_targets[i]) {
          t.push_back({l.u, l.v, LabelJson(l.label)});
        }
        j["targets"] = std::move(t);
        break;
      }
    }
    out += j.dump() + "\n";
  }
  return out;
}

Dataset LoadJsonl(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kMissingFile, path);
  std::stringstream ss;
  ss << in.rdbuf();
  Dataset d = ParseJsonl(ss.str());
  d.Validate();
  return d;
}

void SaveJsonl(const Dataset& dataset, const std::string& path) {
  dataset.Validate();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out << SerializeJsonl(dataset);
}

}  // namespace wlbound
