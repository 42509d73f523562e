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

#ifndef WLBOUND_FEATURES_H_
#define WLBOUND_FEATURES_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wlbound/dataset.h"
#include "wlbound/graph.h"

namespace wlbound {

enum class FeatureKind {
  kDegree,
  kCloseness,
  kHarmonic,
  kEigenvector,
  kBetweenness,
  kEccentricity,
  kLocalTransitivity,
  kBurtsConstraint,
  kEdgeBetweenness,
  kConvergenceDegree,
  kSubstructureCount,
  kRwse,
  kLapPe,
  kSubconstituentSignature,
};

enum class Target { kNode, kEdge };
enum class Pattern { kClique, kPath, kCycle };
// What the size of a path pattern counts.
enum class PathUnit { kEdges, kVertices };

inline constexpr int kMaxPatternSize = 8;
inline constexpr int kMaxRwseSteps = 32;
inline constexpr int64_t kDefaultEnumerationBudget = 200'000'000;

struct FeatureSpec {
  FeatureKind kind = FeatureKind::kDegree;
  Target target = Target::kNode;
  Pattern pattern = Pattern::kClique;
  int size = 3;
  PathUnit path_unit = PathUnit::kEdges;
  int steps = 16;  // RWSE
  int dims = 4;    // LapPE
  int n = 1;       // subconstituent distance
  int digits = kDefaultPrecision;

  // Canonical grammar form, e.g. "count:pattern=cycle,size=6,target=node".
  std::string ToString() const;
  bool operator==(const FeatureSpec&) const = default;
};

// Comma-separated `kind[:key=value,...]`. A segment holding only key=value
// continues the previous spec. Throws kInvalidArgument.
std::vector<FeatureSpec> ParseFeatures(std::string_view grammar);
std::string FormatFeatures(const std::vector<FeatureSpec>& specs);

struct FeatureVector {
  Target target = Target::kNode;
  std::vector<Token> tokens;
};

// Raw (unquantized) values; one row per node or edge.
std::vector<double> Degree(const Graph& g);
std::vector<double> Closeness(const Graph& g);
std::vector<double> Harmonic(const Graph& g);
std::vector<double> EigenvectorCentrality(const Graph& g);
std::vector<double> Betweenness(const Graph& g);
std::vector<double> EdgeBetweenness(const Graph& g);
std::vector<double> Eccentricity(const Graph& g);
std::vector<double> LocalTransitivity(const Graph& g);
std::vector<double> BurtsConstraint(const Graph& g);
std::vector<double> ConvergenceDegree(const Graph& g);

// Number of pattern occurrences containing each node (edge).
std::vector<int64_t> SubstructureCount(
    const Graph& g, Pattern pattern, int size, Target target,
    PathUnit unit = PathUnit::kEdges,
    int64_t budget = kDefaultEnumerationBudget);

// Per node, return probabilities (P^1)_vv .. (P^steps)_vv with P = D^-1 A.
std::vector<std::vector<double>> RandomWalkReturn(const Graph& g, int steps);

// Eigenvalues ascending and eigenvectors (column j of `vectors` pairs with
// values[j]) of a dense symmetric matrix by cyclic Jacobi rotations.
struct Eigen {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;  // vectors[row][col]
};
Eigen SymmetricEigen(std::vector<std::vector<double>> a, double tol = 1e-10);

// Symmetric normalized Laplacian; isolated vertices get a zero row.
std::vector<std::vector<double>> NormalizedLaplacian(const Graph& g);

// Per node, `dims` absolute eigenvector coordinates after the kernel. Within
// a repeated eigenvalue the coordinate is replaced by the norm of the
// node's projection onto the whole eigenspace.
std::vector<std::vector<double>> LaplacianEncoding(const Graph& g, int dims);

// Per node, sorted edge betweenness values of the subgraph induced by the
// vertices at distance exactly n. `ops` (optional) accumulates the number of
// elementary steps.
std::vector<std::vector<double>> SubconstituentBetweenness(const Graph& g,
                                                           int n,
                                                           int64_t* ops = nullptr);

int CountComponents(const Graph& g);

FeatureVector ComputeFeature(const Graph& g, const FeatureSpec& spec);

// Appends one token per spec to the node (edge) label group of every graph,
// in spec order. A non-empty `tag` is prefixed to every token as "tag=".
Dataset ApplyFeatures(const Dataset& dataset,
                      const std::vector<FeatureSpec>& specs,
                      const std::string& tag = "");
Graph ApplyFeatures(const Graph& g, const std::vector<FeatureSpec>& specs,
                    const std::string& tag = "");

}  // namespace wlbound

#endif  // WLBOUND_FEATURES_H_
