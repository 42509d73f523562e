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

#include "wlbound/graph.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <numeric>
#include <string>
#include <utility>

#include "wlbound/error.h"

namespace wlbound {

std::string QuantizeReal(double x, int digits) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, x);
  std::string s(buf);
  if (s.find('.') != std::string::npos) {
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

namespace {

bool IsInteger(std::string_view s) {
  size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

std::string CanonicalizeToken(std::string_view raw, int digits) {
  std::string_view s = Trim(raw);
  if (IsInteger(s)) {
    bool negative = s[0] == '-';
    if (s[0] == '-' || s[0] == '+') s.remove_prefix(1);
    while (s.size() > 1 && s[0] == '0') s.remove_prefix(1);
    if (s == "0") return "0";
    return (negative ? "-" : "") + std::string(s);
  }
  double value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec == std::errc() && ptr == s.data() + s.size() && !s.empty()) {
    return QuantizeReal(value, digits);
  }
  return std::string(raw);
}

Graph::Graph(int node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
  if (node_count < 0) {
    throw Error(ErrorCode::kInvalidGraph, "negative node count");
  }
  for (Edge& e : edges_) {
    if (e.u == e.v) {
      throw Error(ErrorCode::kInvalidGraph,
                  "self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= node_count_) {
      throw Error(ErrorCode::kInvalidGraph,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      ") out of range for " + std::to_string(node_count_) +
                      " nodes");
    }
  }
  BuildAdjacency();
}

void Graph::BuildAdjacency() {
  offset_.assign(node_count_ + 1, 0);
  for (const Edge& e : edges_) {
    ++offset_[e.u + 1];
    ++offset_[e.v + 1];
  }
  std::partial_sum(offset_.begin(), offset_.end(), offset_.begin());
  nbr_.assign(2 * edges_.size(), 0);
  nbr_edge_.assign(2 * edges_.size(), 0);
  std::vector<int> fill(offset_.begin(), offset_.end() - 1);
  for (int i = 0; i < edge_count(); ++i) {
    const Edge& e = edges_[i];
    nbr_[fill[e.u]] = e.v;
    nbr_edge_[fill[e.u]++] = i;
    nbr_[fill[e.v]] = e.u;
    nbr_edge_[fill[e.v]++] = i;
  }
  std::vector<std::pair<int, int>> tmp;
  for (int v = 0; v < node_count_; ++v) {
    tmp.clear();
    for (int p = offset_[v]; p < offset_[v + 1]; ++p) {
      tmp.emplace_back(nbr_[p], nbr_edge_[p]);
    }
    std::sort(tmp.begin(), tmp.end());
    for (size_t i = 0; i < tmp.size(); ++i) {
      if (i > 0 && tmp[i].first == tmp[i - 1].first) {
        throw Error(ErrorCode::kInvalidGraph,
                    "duplicate edge (" + std::to_string(v) + "," +
                        std::to_string(tmp[i].first) + ")");
      }
      nbr_[offset_[v] + i] = tmp[i].first;
      nbr_edge_[offset_[v] + i] = tmp[i].second;
    }
  }
}

int Graph::EdgeIndex(int u, int v) const {
  if (u < 0 || v < 0 || u >= node_count_ || v >= node_count_) return -1;
  auto nb = Neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return -1;
  return IncidentEdges(u)[it - nb.begin()];
}

void Graph::CheckRows(const std::optional<std::vector<AttrRow>>& rows,
                      int expected, const char* what) const {
  if (rows && static_cast<int>(rows->size()) != expected) {
    throw Error(ErrorCode::kInvalidGraph,
                std::string(what) + " has " + std::to_string(rows->size()) +
                    " rows, expected " + std::to_string(expected));
  }
}

namespace {

std::optional<std::vector<AttrRow>> Wrap(std::vector<AttrRow> rows,
                                         int expected) {
  // An empty row list stands for "absent" unless there is nothing to label.
  if (rows.empty() && expected > 0) return std::nullopt;
  return rows;
}

}  // namespace

void Graph::SetNodeAttrs(std::vector<AttrRow> labels,
                         std::vector<AttrRow> feats) {
  node_labels_ = Wrap(std::move(labels), node_count_);
  node_feats_ = Wrap(std::move(feats), node_count_);
  if (node_count_ == 0) node_feats_.reset();
  CheckRows(node_labels_, node_count_, "node_labels");
  CheckRows(node_feats_, node_count_, "node_feats");
}

void Graph::SetEdgeAttrs(std::vector<AttrRow> labels,
                         std::vector<AttrRow> feats) {
  edge_labels_ = Wrap(std::move(labels), edge_count());
  edge_feats_ = Wrap(std::move(feats), edge_count());
  if (edge_count() == 0) edge_feats_.reset();
  CheckRows(edge_labels_, edge_count(), "edge_labels");
  CheckRows(edge_feats_, edge_count(), "edge_feats");
}

void Graph::AppendNodeLabels(const std::vector<AttrRow>& extra) {
  CheckRows(extra, node_count_, "appended node tokens");
  if (!node_labels_) node_labels_.emplace(node_count_);
  for (int v = 0; v < node_count_; ++v) {
    (*node_labels_)[v].insert((*node_labels_)[v].end(), extra[v].begin(),
                              extra[v].end());
  }
}

void Graph::AppendEdgeLabels(const std::vector<AttrRow>& extra) {
  CheckRows(extra, edge_count(), "appended edge tokens");
  if (!edge_labels_) edge_labels_.emplace(edge_count());
  for (int e = 0; e < edge_count(); ++e) {
    (*edge_labels_)[e].insert((*edge_labels_)[e].end(), extra[e].begin(),
                              extra[e].end());
  }
}

void Graph::ClearNodeAttrs() {
  node_labels_.reset();
  node_feats_.reset();
}

void Graph::ClearEdgeAttrs() {
  edge_labels_.reset();
  edge_feats_.reset();
}

AttrRow Graph::NodeAttrTuple(int v) const {
  AttrRow row;
  if (node_labels_) row = (*node_labels_)[v];
  if (node_feats_) {
    row.insert(row.end(), (*node_feats_)[v].begin(), (*node_feats_)[v].end());
  }
  return row;
}

AttrRow Graph::EdgeAttrTuple(int e) const {
  AttrRow row;
  if (edge_labels_) row = (*edge_labels_)[e];
  if (edge_feats_) {
    row.insert(row.end(), (*edge_feats_)[e].begin(), (*edge_feats_)[e].end());
  }
  return row;
}

bool Graph::operator==(const Graph& other) const {
  return node_count_ == other.node_count_ && edges_ == other.edges_ &&
         node_labels_ == other.node_labels_ &&
         node_feats_ == other.node_feats_ &&
         edge_labels_ == other.edge_labels_ && edge_feats_ == other.edge_feats_;
}

namespace {

std::optional<std::vector<AttrRow>> Reorder(
    const std::optional<std::vector<AttrRow>>& rows,
    const std::vector<int>& order) {
  if (!rows) return std::nullopt;
  std::vector<AttrRow> out;
  out.reserve(order.size());
  for (int i : order) out.push_back((*rows)[i]);
  return out;
}

std::vector<AttrRow> OrEmpty(std::optional<std::vector<AttrRow>> rows) {
  return rows ? std::move(*rows) : std::vector<AttrRow>{};
}

}  // namespace

Graph SortedEdges(const Graph& g) {
  std::vector<int> order(g.edge_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return g.edges()[a] < g.edges()[b];
  });
  std::vector<Edge> edges;
  edges.reserve(order.size());
  for (int i : order) edges.push_back(g.edges()[i]);
  Graph out(g.node_count(), std::move(edges));
  if (g.has_node_attrs()) {
    out.SetNodeAttrs(OrEmpty(g.node_labels()), OrEmpty(g.node_feats()));
  }
  if (g.has_edge_attrs()) {
    out.SetEdgeAttrs(OrEmpty(Reorder(g.edge_labels(), order)),
                     OrEmpty(Reorder(g.edge_feats(), order)));
  }
  return out;
}

Graph Permute(const Graph& g, const std::vector<int>& perm) {
  const int n = g.node_count();
  if (static_cast<int>(perm.size()) != n) {
    throw Error(ErrorCode::kInvalidArgument, "permutation size mismatch");
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  Graph out(n, std::move(edges));
  if (g.has_node_attrs()) {
    std::vector<int> inverse(n);
    for (int v = 0; v < n; ++v) inverse[perm[v]] = v;
    out.SetNodeAttrs(OrEmpty(Reorder(g.node_labels(), inverse)),
                     OrEmpty(Reorder(g.node_feats(), inverse)));
  }
  if (g.has_edge_attrs()) {
    out.SetEdgeAttrs(OrEmpty(g.edge_labels()), OrEmpty(g.edge_feats()));
  }
  return out;
}

Graph Complement(const Graph& g) {
  const int n = g.node_count();
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.Adjacent(u, v)) edges.push_back({u, v});
    }
  }
  return Graph(n, std::move(edges));
}

Graph IncidenceTransform(const Graph& g) {
  const int n = g.node_count();
  const int m = g.edge_count();
  std::vector<Edge> edges;
  edges.reserve(2 * m);
  for (int i = 0; i < m; ++i) {
    edges.push_back({g.edges()[i].u, n + i});
    edges.push_back({g.edges()[i].v, n + i});
  }
  Graph out(n + m, std::move(edges));
  std::vector<AttrRow> labels(n + m);
  for (int v = 0; v < n; ++v) {
    labels[v].emplace_back(kVertexRole);
    AttrRow row = g.NodeAttrTuple(v);
    labels[v].insert(labels[v].end(), row.begin(), row.end());
  }
  for (int i = 0; i < m; ++i) {
    labels[n + i].emplace_back(kEdgeRole);
    AttrRow row = g.EdgeAttrTuple(i);
    labels[n + i].insert(labels[n + i].end(), row.begin(), row.end());
  }
  out.SetNodeAttrs(std::move(labels), {});
  return out;
}

}  // namespace wlbound
