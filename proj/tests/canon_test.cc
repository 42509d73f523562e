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
#include <set>

#include <gtest/gtest.h>

#include "test_util.h"
#include "wlbound/canon.h"
#include "wlbound/classes.h"
#include "wlbound/error.h"
#include "wlbound/generate.h"

namespace wlbound {
namespace {

std::set<CanonicalForm> Forms(const std::vector<Graph>& graphs) {
  std::set<CanonicalForm> out;
  for (const Graph& g : graphs) out.insert(Canonicalize(g).form);
  return out;
}

TEST(CanonTest, LabeledGraphsCollapseToUnlabeledCounts) {
  const std::vector<size_t> expected = {1, 2, 4, 11, 34, 156};
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(Forms(testing::AllLabeledGraphs(n)).size(), expected[n - 1]) << n;
  }
}

TEST(CanonTest, AgreesWithBruteForceIsomorphism) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 400; ++i) {
    int n = 2 + i % 6;
    Graph a = testing::RandomGraph(rng, n, 0.5);
    Graph b = i % 2 ? Permute(a, testing::RandomPermutation(rng, n))
                    : testing::RandomGraph(rng, n, 0.5);
    EXPECT_EQ(IsIsomorphic(a, b), testing::BruteIsomorphic(a, b));
  }
}

TEST(CanonTest, LabelingProducesTheCanonicalGraph) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 50; ++i) {
    int n = 4 + i % 12;
    Graph g = testing::RandomGraph(rng, n, 0.4);
    Graph h = Permute(g, testing::RandomPermutation(rng, n));
    CanonResult r = Canonicalize(g);
    EXPECT_EQ(CanonicalGraph(g), CanonicalGraph(h));
    EXPECT_EQ(Canonicalize(SortedEdges(Permute(g, r.labeling))).form, r.form);
    for (const auto& aut : r.automorphisms) {
      EXPECT_EQ(SortedEdges(Permute(g, aut)), SortedEdges(g));
    }
  }
}

TEST(CanonTest, HardCases) {
  EXPECT_FALSE(IsIsomorphic(testing::HardPairLeft(), testing::HardPairRight()));
  EXPECT_FALSE(IsIsomorphic(testing::Rook4(), testing::Shrikhande()));
  std::mt19937_64 rng(2);
  Graph p = testing::Petersen();
  EXPECT_TRUE(IsIsomorphic(p, Permute(p, testing::RandomPermutation(rng, 10))));
}

TEST(CanonTest, VertexColorsAreRespected) {
  Graph path = testing::Path(3);
  std::vector<int> end = {1, 0, 0}, other_end = {0, 0, 1}, middle = {0, 1, 0};
  EXPECT_EQ(Canonicalize(path, &end).form, Canonicalize(path, &other_end).form);
  EXPECT_NE(Canonicalize(path, &end).form, Canonicalize(path, &middle).form);
}

TEST(GenerateTest, CountsAllGraphs) {
  const std::vector<size_t> expected = {4, 11, 34, 156, 1044};
  for (int n = 3; n <= 7; ++n) {
    std::vector<Graph> graphs = GenerateAllGraphs(n);
    EXPECT_EQ(graphs.size(), expected[n - 3]);
    EXPECT_EQ(Forms(graphs).size(), graphs.size());
  }
}

TEST(GenerateTest, CompleteAgainstLabeledEnumeration) {
  for (int n = 3; n <= 6; ++n) {
    EXPECT_EQ(Forms(GenerateAllGraphs(n)), Forms(testing::AllLabeledGraphs(n)));
  }
}

TEST(GenerateTest, EulerianIsTheEvenDegreeSubset) {
  for (int n = 3; n <= 7; ++n) {
    std::set<CanonicalForm> even;
    for (const Graph& g : GenerateAllGraphs(n)) {
      if (IsEulerian(g)) even.insert(Canonicalize(g).form);
    }
    std::vector<Graph> eulerian = GenerateEulerianGraphs(n);
    EXPECT_EQ(Forms(eulerian), even);
    EXPECT_EQ(eulerian.size(), even.size());
  }
}

TEST(GenerateTest, OrderLimits) {
  EXPECT_EQ(MaxGeneratedOrder(GraphClass::kAll), kMaxGeneratedOrder);
  EXPECT_EQ(MaxGeneratedOrder(GraphClass::kEulerian), kMaxEulerianOrder);
  for (int n : {2, kMaxGeneratedOrder + 1}) {
    try {
      GenerateAllGraphs(n);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kOrderOutOfRange);
    }
  }
  EXPECT_THROW(GenerateEulerianGraphs(kMaxEulerianOrder + 1), Error);
}

TEST(GenerateTest, ClassFilterKeepsMembers) {
  for (GraphClass c : {GraphClass::kChordal, GraphClass::kPlanarConnected,
                       GraphClass::kSelfComplementary}) {
    for (const Graph& g : GenerateClass(c, 6)) EXPECT_TRUE(CheckClass(g, c));
  }
}

}  // namespace
}  // namespace wlbound
