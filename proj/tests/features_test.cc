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
#include <functional>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "oracles.h"
#include "test_util.h"
#include "wlbound/error.h"
#include "wlbound/features.h"

namespace wlbound {
namespace {

using testing::Complete;
using testing::Cycle;
using testing::Path;
using testing::Petersen;
using testing::Star;
using testing::BruteBetweenness;
using testing::BruteCount;
using testing::BruteEdgeBetweenness;

void ExpectNear(const std::vector<double>& got, const std::vector<double>& want) {
  ASSERT_EQ(got.size(), want.size());
  for (size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], 1e-9) << i;
}

TEST(FeaturesTest, GrammarRoundTrip) {
  auto specs = ParseFeatures(
      "degree, count:pattern=cycle,size=6,target=node, rwse:steps=8,"
      "lappe:dims=2, subconstituent:n=2, burts_constraint:digits=3");
  ASSERT_EQ(specs.size(), 6u);
  EXPECT_EQ(specs[1].kind, FeatureKind::kSubstructureCount);
  EXPECT_EQ(specs[1].pattern, Pattern::kCycle);
  EXPECT_EQ(specs[1].size, 6);
  EXPECT_EQ(specs[2].steps, 8);
  EXPECT_EQ(specs[5].digits, 3);
  EXPECT_EQ(FormatFeatures(specs),
            "degree,count:pattern=cycle,size=6,target=node,rwse:steps=8,"
            "lappe:dims=2,subconst:n=2,burt:digits=3");
  EXPECT_EQ(ParseFeatures(FormatFeatures(specs)), specs);
  EXPECT_EQ(ParseFeatures("edge_betweenness")[0].target, Target::kEdge);
  EXPECT_EQ(ParseFeatures("count:pattern=path,size=5,unit=vertices,target=edge")[0]
                .ToString(),
            "count:pattern=path,size=5,target=edge,unit=vertices");
}

TEST(FeaturesTest, GrammarRejectsBadInput) {
  for (const char* bad :
       {"", "nope", "degree,", "rwse:steps=0", "rwse:steps=33", "count:size=3",
        "count:pattern=clique", "count:pattern=cycle,size=2", "subconst:n=3",
        "degree:steps=4", "betweenness:target=edge", "rwse:steps=4,steps=5",
        "lappe:dims=x", "degree:digits=16", "=3", "count:pattern=star,size=3"}) {
    try {
      ParseFeatures(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument) << bad;
    }
  }
}

TEST(FeaturesTest, CentralitiesOnKnownGraphs) {
  ExpectNear(Closeness(Petersen()), std::vector<double>(10, 0.6));
  ExpectNear(Betweenness(Petersen()), std::vector<double>(10, 3.0));
  ExpectNear(Harmonic(Petersen()), std::vector<double>(10, 6.0));
  ExpectNear(Eccentricity(Path(3)), {2, 1, 2});
  ExpectNear(LocalTransitivity(Complete(3)), {1, 1, 1});
  ExpectNear(LocalTransitivity(Star(3)), {0, 0, 0, 0});
  ExpectNear(EdgeBetweenness(Path(2)), {1});
  ExpectNear(BurtsConstraint(Complete(3)), {1.125, 1.125, 1.125});
  ExpectNear(ConvergenceDegree(Path(3)), {1.0 / 3, 1.0 / 3});
  ExpectNear(Degree(Star(3)), {3, 1, 1, 1});
  // Star hub is the first vertex; the leaves get 1/sqrt(leaves).
  ExpectNear(EigenvectorCentrality(Star(4)), {1, 0.5, 0.5, 0.5, 0.5});
  ExpectNear(EigenvectorCentrality(Graph(3)), {0, 0, 0});
}

TEST(FeaturesTest, BetweennessMatchesPathCounting) {
  std::mt19937_64 rng(30);
  for (int i = 0; i < 80; ++i) {
    Graph g = testing::RandomGraph(rng, 2 + i % 9, 0.35);
    ExpectNear(Betweenness(g), BruteBetweenness(g));
    ExpectNear(EdgeBetweenness(g), BruteEdgeBetweenness(g));
  }
}

TEST(FeaturesTest, SubstructureCountsMatchSequenceEnumeration) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 30; ++i) {
    Graph g = testing::RandomGraph(rng, 4 + i % 4, 0.5);
    for (Target t : {Target::kNode, Target::kEdge}) {
      for (int size = 3; size <= 5; ++size) {
        EXPECT_EQ(SubstructureCount(g, Pattern::kClique, size, t),
                  BruteCount(g, Pattern::kClique, size, t));
        EXPECT_EQ(SubstructureCount(g, Pattern::kCycle, size, t),
                  BruteCount(g, Pattern::kCycle, size, t));
        EXPECT_EQ(SubstructureCount(g, Pattern::kPath, size, t),
                  BruteCount(g, Pattern::kPath, size + 1, t));
        EXPECT_EQ(SubstructureCount(g, Pattern::kPath, size, t, PathUnit::kVertices),
                  BruteCount(g, Pattern::kPath, size, t));
      }
    }
  }
}

TEST(FeaturesTest, SubstructureCountsOnKnownGraphs) {
  EXPECT_EQ(SubstructureCount(Complete(4), Pattern::kClique, 3, Target::kNode),
            (std::vector<int64_t>{3, 3, 3, 3}));
  EXPECT_EQ(SubstructureCount(Cycle(6), Pattern::kCycle, 6, Target::kEdge),
            std::vector<int64_t>(6, 1));
  EXPECT_EQ(SubstructureCount(Petersen(), Pattern::kCycle, 5, Target::kNode),
            std::vector<int64_t>(10, 6));
  try {
    SubstructureCount(Complete(8), Pattern::kPath, 7, Target::kNode,
                      PathUnit::kEdges, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  }
}

TEST(FeaturesTest, RandomWalkReturnProbabilities) {
  auto c4 = RandomWalkReturn(Cycle(4), 4);
  for (const auto& row : c4) {
    EXPECT_NEAR(row[0], 0.0, 1e-12);
    EXPECT_NEAR(row[1], 0.5, 1e-12);
    EXPECT_NEAR(row[2], 0.0, 1e-12);
    EXPECT_NEAR(row[3], 0.5, 1e-12);
  }
  auto iso = RandomWalkReturn(Graph(2), 2);
  EXPECT_EQ(iso.size(), 2u);
}

TEST(FeaturesTest, SpectrumOfNormalizedLaplacian) {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 30; ++i) {
    Graph g = testing::RandomGraph(rng, 3 + i % 8, 0.25);
    Eigen e = SymmetricEigen(NormalizedLaplacian(g));
    int zeros = 0;
    for (double v : e.values) {
      EXPECT_GT(v, -1e-9);
      EXPECT_LT(v, 2 + 1e-9);
      zeros += std::abs(v) < 1e-8;
    }
    int isolated = 0;
    for (int v = 0; v < g.node_count(); ++v) isolated += g.Degree(v) == 0;
    EXPECT_EQ(zeros, CountComponents(g)) << "isolated " << isolated;
    EXPECT_TRUE(std::is_sorted(e.values.begin(), e.values.end()));
  }
}

TEST(FeaturesTest, LaplacianEncodingIsSignInvariant) {
  auto pe = LaplacianEncoding(Cycle(6), 2);
  ASSERT_EQ(pe.size(), 6u);
  // The first nontrivial eigenvalue of C6 is doubled; every vertex gets the
  // same projection norm.
  for (const auto& row : pe) EXPECT_NEAR(row[0], pe[0][0], 1e-9);
  try {
    LaplacianEncoding(Path(3), 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimExceedsOrder);
  }
}

TEST(FeaturesTest, SubconstituentSignatures) {
  for (const auto& row : SubconstituentBetweenness(Complete(4), 1)) {
    EXPECT_EQ(row, (std::vector<double>{1, 1, 1}));
  }
  for (const auto& row : SubconstituentBetweenness(Petersen(), 1)) EXPECT_TRUE(row.empty());
  // Distance-2 layer of a Petersen vertex induces a hexagon.
  for (const auto& row : SubconstituentBetweenness(Petersen(), 2)) {
    ExpectNear(row, BruteEdgeBetweenness(Cycle(6)));
  }
  int64_t ops = 0;
  SubconstituentBetweenness(Petersen(), 2, &ops);
  EXPECT_GT(ops, 0);
}

TEST(FeaturesTest, SubconstituentCostIsBoundedByNodesTimesEdgesCubed) {
  // Operation count stays below c * n * m^3 with one fixed constant.
  constexpr double kCeiling = 4.0;
  std::mt19937_64 rng(34);
  for (int i = 0; i < 60; ++i) {
    const int n = 4 + i % 27;
    Graph g = testing::RandomGraph(rng, n, 0.1 + 0.05 * (i % 8));
    const double m = std::max(1, g.edge_count());
    for (int dist : {1, 2}) {
      int64_t ops = 0;
      SubconstituentBetweenness(g, dist, &ops);
      EXPECT_LE(static_cast<double>(ops), kCeiling * n * m * m * m)
          << "n=" << n << " m=" << m << " dist=" << dist;
    }
  }
}

TEST(FeaturesTest, FeaturesAreEquivariant) {
  std::mt19937_64 rng(33);
  auto specs = ParseFeatures(
      "degree,closeness,harmonic,eigenvector,betweenness,eccentricity,"
      "transitivity,burt,edge_betweenness,convergence,"
      "count:pattern=cycle,size=4,target=edge,rwse:steps=6,subconst:n=1");
  for (int i = 0; i < 20; ++i) {
    int n = 4 + i % 7;
    Graph g = testing::RandomGraph(rng, n, 0.4);
    std::vector<int> perm = testing::RandomPermutation(rng, n);
    Graph h = Permute(g, perm);
    for (const FeatureSpec& spec : specs) {
      FeatureVector a = ComputeFeature(g, spec), b = ComputeFeature(h, spec);
      ASSERT_EQ(a.tokens.size(), b.tokens.size());
      for (size_t x = 0; x < a.tokens.size(); ++x) {
        size_t y = spec.target == Target::kNode ? perm[x] : x;
        EXPECT_EQ(a.tokens[x], b.tokens[y]) << spec.ToString();
      }
    }
  }
}

TEST(FeaturesTest, ApplyFeaturesAppendsTokens) {
  Graph g = ApplyFeatures(Path(3), ParseFeatures("degree,edge_betweenness"), "f");
  EXPECT_EQ(g.NodeAttrTuple(1), (AttrRow{"f=2"}));
  EXPECT_EQ(g.EdgeAttrTuple(0), (AttrRow{"f=2"}));
  Graph two = ApplyFeatures(Path(3), ParseFeatures("degree,eccentricity"));
  EXPECT_EQ(two.NodeAttrTuple(0).size(), 2u);
  EXPECT_THROW(ApplyFeatures(Path(3), {}), Error);
}

}  // namespace
}  // namespace wlbound
