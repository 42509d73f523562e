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

#ifndef WLBOUND_GRAPH_H_
#define WLBOUND_GRAPH_H_

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wlbound {

// Attribute values are canonical byte strings so that equality is exact.
using Token = std::string;
using AttrRow = std::vector<Token>;

inline constexpr int kDefaultPrecision = 6;

struct Edge {
  int u = 0;
  int v = 0;
  auto operator<=>(const Edge&) const = default;
};

// Renders `x` with `digits` decimals, then drops trailing zeros (and a
// trailing dot). Negative zero renders as "0".
std::string QuantizeReal(double x, int digits = kDefaultPrecision);

// Integers are re-rendered in plain decimal, reals are quantized, anything
// else is returned unchanged. Idempotent.
std::string CanonicalizeToken(std::string_view raw,
                              int digits = kDefaultPrecision);

// Simple undirected graph with optional node and edge attributes.
//
// Attributes are stored as two column groups per row: labels (discrete) then
// features (quantized reals). The split only matters for serialization; the
// refinement code sees the concatenated tuple.
class Graph {
 public:
  Graph() = default;
  // Normalizes every edge to u < v and keeps the given order. Throws
  // kInvalidGraph on self-loops, duplicates or out-of-range endpoints.
  explicit Graph(int node_count, std::vector<Edge> edges = {});

  int node_count() const { return node_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  void SetNodeAttrs(std::vector<AttrRow> labels, std::vector<AttrRow> feats);
  void SetEdgeAttrs(std::vector<AttrRow> labels, std::vector<AttrRow> feats);
  // Appends tokens to the label group of every node (edge). Creates the
  // group if absent.
  void AppendNodeLabels(const std::vector<AttrRow>& extra);
  void AppendEdgeLabels(const std::vector<AttrRow>& extra);
  void ClearNodeAttrs();
  void ClearEdgeAttrs();

  bool has_node_attrs() const { return node_labels_ || node_feats_; }
  bool has_edge_attrs() const { return edge_labels_ || edge_feats_; }
  const std::optional<std::vector<AttrRow>>& node_labels() const {
    return node_labels_;
  }
  const std::optional<std::vector<AttrRow>>& node_feats() const {
    return node_feats_;
  }
  const std::optional<std::vector<AttrRow>>& edge_labels() const {
    return edge_labels_;
  }
  const std::optional<std::vector<AttrRow>>& edge_feats() const {
    return edge_feats_;
  }

  // Labels followed by features; empty when the graph has no node attrs.
  AttrRow NodeAttrTuple(int v) const;
  AttrRow EdgeAttrTuple(int e) const;

  std::span<const int> Neighbors(int v) const {
    return {nbr_.data() + offset_[v], nbr_.data() + offset_[v + 1]};
  }
  // Edge indices aligned with Neighbors(v).
  std::span<const int> IncidentEdges(int v) const {
    return {nbr_edge_.data() + offset_[v], nbr_edge_.data() + offset_[v + 1]};
  }
  int Degree(int v) const { return offset_[v + 1] - offset_[v]; }
  // Index into edges() or -1.
  int EdgeIndex(int u, int v) const;
  bool Adjacent(int u, int v) const { return EdgeIndex(u, v) >= 0; }

  // Same attributes, same edge order.
  bool operator==(const Graph& other) const;

 private:
  void BuildAdjacency();
  void CheckRows(const std::optional<std::vector<AttrRow>>& rows, int expected,
                 const char* what) const;

  int node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offset_ = {0};
  std::vector<int> nbr_;
  std::vector<int> nbr_edge_;
  std::optional<std::vector<AttrRow>> node_labels_;
  std::optional<std::vector<AttrRow>> node_feats_;
  std::optional<std::vector<AttrRow>> edge_labels_;
  std::optional<std::vector<AttrRow>> edge_feats_;
};

// Graph with edges sorted lexicographically; attributes follow their edges.
Graph SortedEdges(const Graph& g);

// Relabels vertex v as perm[v]. Edge order follows the input.
Graph Permute(const Graph& g, const std::vector<int>& perm);

Graph Complement(const Graph& g);

// Role tokens prepended by IncidenceTransform.
inline constexpr std::string_view kVertexRole = "@v";
inline constexpr std::string_view kEdgeRole = "@e";

// Replaces each edge (u, v) by a new node w carrying the edge attributes and
// the two edges (u, w), (w, v). Edge i becomes node node_count + i.
Graph IncidenceTransform(const Graph& g);

}  // namespace wlbound

#endif  // WLBOUND_GRAPH_H_
