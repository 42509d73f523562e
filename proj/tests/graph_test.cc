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

#include <random>

#include <gtest/gtest.h>

#include "test_util.h"
#include "wlbound/error.h"
#include "wlbound/graph.h"

namespace wlbound {
namespace {

using testing::Cycle;
using testing::Path;

TEST(GraphTest, NormalizesAndIndexesEdges) {
  Graph g(4, {{1, 0}, {2, 3}});
  EXPECT_EQ(g.edges()[0], (Edge{0, 1}));
  EXPECT_EQ(g.EdgeIndex(3, 2), 1);
  EXPECT_EQ(g.EdgeIndex(0, 2), -1);
  EXPECT_EQ(g.Degree(0), 1);
  EXPECT_TRUE(g.Adjacent(1, 0));
}

TEST(GraphTest, RejectsInvalidEdges) {
  auto code = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvalidArgument;
  };
  EXPECT_EQ(code([] { Graph(3, {{1, 1}}); }), ErrorCode::kInvalidGraph);
  EXPECT_EQ(code([] { Graph(3, {{0, 1}, {1, 0}}); }), ErrorCode::kInvalidGraph);
  EXPECT_EQ(code([] { Graph(3, {{0, 3}}); }), ErrorCode::kInvalidGraph);
}

TEST(GraphTest, AttributeRowsMustMatchCounts) {
  Graph g = Path(3);
  EXPECT_THROW(g.SetNodeAttrs({{"a"}}, {}), Error);
  EXPECT_THROW(g.SetEdgeAttrs({{"a"}, {"b"}, {"c"}}, {}), Error);
  g.SetNodeAttrs({{"a"}, {"b"}, {"c"}}, {{"1.5"}, {"2"}, {"3"}});
  EXPECT_EQ(g.NodeAttrTuple(0), (AttrRow{"a", "1.5"}));
  g.AppendNodeLabels({{"x"}, {"y"}, {"z"}});
  EXPECT_EQ(g.NodeAttrTuple(2), (AttrRow{"c", "z", "3"}));
  g.ClearNodeAttrs();
  EXPECT_FALSE(g.has_node_attrs());
  EXPECT_TRUE(g.NodeAttrTuple(1).empty());
}

TEST(TokenTest, QuantizeReal) {
  EXPECT_EQ(QuantizeReal(1.5), "1.5");
  EXPECT_EQ(QuantizeReal(2.0), "2");
  EXPECT_EQ(QuantizeReal(-0.0000001), "0");
  EXPECT_EQ(QuantizeReal(0.1234567), "0.123457");
  EXPECT_EQ(QuantizeReal(0.1234567, 2), "0.12");
  EXPECT_EQ(QuantizeReal(-3.25, 1), "-3.2");
}

TEST(TokenTest, CanonicalizeTokenIsIdempotent) {
  for (std::string raw : {" 007", "-0", "1.2500000", "3e2", "abc", " 0.0000004 ",
                          "-12", "1e-9", "x1"}) {
    std::string once = CanonicalizeToken(raw);
    EXPECT_EQ(CanonicalizeToken(once), once) << raw;
  }
  EXPECT_EQ(CanonicalizeToken(" 007"), "7");
  EXPECT_EQ(CanonicalizeToken("1.2500000"), "1.25");
  EXPECT_EQ(CanonicalizeToken("abc"), "abc");
}

TEST(GraphTest, ComplementAndPermute) {
  Graph c5 = Cycle(5);
  Graph comp = Complement(c5);
  EXPECT_EQ(comp.edge_count(), 5);
  for (int u = 0; u < 5; ++u) {
    for (int v = u + 1; v < 5; ++v) {
      EXPECT_NE(c5.Adjacent(u, v), comp.Adjacent(u, v));
    }
  }
  Graph p = Permute(Path(3), {2, 0, 1});
  EXPECT_TRUE(p.Adjacent(2, 0));
  EXPECT_TRUE(p.Adjacent(0, 1));
  EXPECT_FALSE(p.Adjacent(2, 1));
}

TEST(IncidenceTransformTest, SingleLabeledEdge) {
  Graph g(2, {{0, 1}});
  g.SetEdgeAttrs({{"a"}}, {});
  Graph t = IncidenceTransform(g);
  ASSERT_EQ(t.node_count(), 3);
  ASSERT_EQ(t.edge_count(), 2);
  EXPECT_TRUE(t.Adjacent(0, 2));
  EXPECT_TRUE(t.Adjacent(1, 2));
  EXPECT_FALSE(t.Adjacent(0, 1));
  EXPECT_FALSE(t.has_edge_attrs());
  EXPECT_EQ(t.NodeAttrTuple(2), (AttrRow{std::string(kEdgeRole), "a"}));
  EXPECT_EQ(t.NodeAttrTuple(0), (AttrRow{std::string(kVertexRole)}));
}

TEST(IncidenceTransformTest, SixEdgeExample) {
  Graph g(6, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {4, 3}, {5, 3}});
  g.SetEdgeAttrs({{"a"}, {"b"}, {"b"}, {"a"}, {"c"}, {"b"}}, {});
  Graph t = IncidenceTransform(g);
  EXPECT_EQ(t.node_count(), 12);
  EXPECT_EQ(t.edge_count(), 12);
  std::multiset<std::string> labels;
  for (int w = 6; w < 12; ++w) labels.insert(t.NodeAttrTuple(w).back());
  EXPECT_EQ(labels, (std::multiset<std::string>{"a", "a", "b", "b", "b", "c"}));
}

TEST(IncidenceTransformTest, EdgelessGraphUnchanged) {
  Graph t = IncidenceTransform(Graph(4));
  EXPECT_EQ(t.node_count(), 4);
  EXPECT_EQ(t.edge_count(), 0);
}

TEST(IncidenceTransformTest, SizesOnRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + trial % 9;
    Graph g = testing::RandomGraph(rng, n, 0.4);
    Graph t = IncidenceTransform(g);
    EXPECT_EQ(t.node_count(), n + g.edge_count());
    EXPECT_EQ(t.edge_count(), 2 * g.edge_count());
  }
}

}  // namespace
}  // namespace wlbound
