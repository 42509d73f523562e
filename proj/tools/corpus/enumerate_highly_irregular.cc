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

// Enumerates connected highly irregular graphs of a given order and prints
// them as graph6, one per line, sorted by canonical form.
//
// In such a graph every vertex has at most one neighbour of each degree, so
// once the degree of every vertex is fixed the edges between two degree
// classes form a partial matching. The search fixes a degree composition,
// then fills the adjacency row by row. Later vertices of the same class with
// identical rows so far are interchangeable; only the first of each such
// group is offered as a neighbour.

#include <cstdio>
#include <cstdlib>
#include <map>
#include <vector>

#include "wlbound/canon.h"
#include "wlbound/classes.h"
#include "wlbound/graph6.h"

namespace {

using wlbound::CanonicalForm;
using wlbound::Edge;
using wlbound::Graph;

class Search {
 public:
  Search(int n, const std::vector<int>& degree, std::map<CanonicalForm, Graph>* out)
      : n_(n), degree_(degree), out_(out), adj_(n, std::vector<char>(n, 0)),
        deg_(n, 0), has_class_(n, std::vector<char>(n + 1, 0)) {}

  void Run() { Row(0); }

 private:
  void Row(int i) {
    if (i == n_) {
      Emit();
      return;
    }
    if (deg_[i] > degree_[i]) return;
    Pick(i, i + 1, degree_[i] - deg_[i]);
  }

  bool SameRow(int a, int b) const {
    for (int x = 0; x < n_; ++x) {
      if (x != a && x != b && adj_[a][x] != adj_[b][x]) return false;
    }
    return adj_[a][b] == 0;
  }

  void Pick(int i, int from, int remaining) {
    if (remaining == 0) {
      // Every later vertex must still be able to reach its degree.
      for (int j = i + 1; j < n_; ++j) {
        if (degree_[j] - deg_[j] > n_ - 1 - i) return;
      }
      Row(i + 1);
      return;
    }
    for (int j = from; j < n_; ++j) {
      if (n_ - j < remaining) return;
      if (deg_[j] >= degree_[j]) continue;
      if (has_class_[i][degree_[j]] || has_class_[j][degree_[i]]) continue;
      bool dominated = false;
      for (int p = i + 1; p < j && !dominated; ++p) {
        dominated = degree_[p] == degree_[j] && SameRow(p, j);
      }
      if (dominated) continue;
      Link(i, j, 1);
      Pick(i, j + 1, remaining - 1);
      Link(i, j, 0);
    }
  }

  void Link(int i, int j, int on) {
    adj_[i][j] = adj_[j][i] = static_cast<char>(on);
    int d = on ? 1 : -1;
    deg_[i] += d;
    deg_[j] += d;
    has_class_[i][degree_[j]] = static_cast<char>(on);
    has_class_[j][degree_[i]] = static_cast<char>(on);
  }

  void Emit() {
    std::vector<Edge> edges;
    for (int u = 0; u < n_; ++u) {
      if (deg_[u] != degree_[u]) return;
      for (int v = u + 1; v < n_; ++v) {
        if (adj_[u][v]) edges.push_back({u, v});
      }
    }
    Graph g(n_, std::move(edges));
    if (!wlbound::IsHighlyIrregular(g)) return;
    wlbound::CanonResult r = wlbound::Canonicalize(g);
    if (out_->count(r.form)) return;
    out_->emplace(r.form, wlbound::SortedEdges(wlbound::Permute(g, r.labeling)));
  }

  int n_;
  std::vector<int> degree_;
  std::map<CanonicalForm, Graph>* out_;
  std::vector<std::vector<char>> adj_;
  std::vector<int> deg_;
  std::vector<std::vector<char>> has_class_;
};

// Class sizes for degrees max_degree..1, each at least one.
void Compositions(int n, int max_degree, std::vector<int>& sizes,
                  std::map<CanonicalForm, Graph>* out) {
  const int d = max_degree - static_cast<int>(sizes.size());
  if (d == 0) {
    if (n != 0) return;
    std::vector<int> degree;
    long long sum = 0;
    for (size_t c = 0; c < sizes.size(); ++c) {
      for (int i = 0; i < sizes[c]; ++i) degree.push_back(max_degree - static_cast<int>(c));
      sum += static_cast<long long>(sizes[c]) * (max_degree - static_cast<int>(c));
    }
    if (sum % 2 != 0) return;
    Search(static_cast<int>(degree.size()), degree, out).Run();
    return;
  }
  for (int s = 1; s <= n - (d - 1); ++s) {
    sizes.push_back(s);
    Compositions(n - s, max_degree, sizes, out);
    sizes.pop_back();
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: %s ORDER\n", argv[0]);
    return 2;
  }
  const int n = std::atoi(argv[1]);
  std::map<CanonicalForm, Graph> found;
  for (int max_degree = 1; 2 * max_degree <= n || max_degree == 1; ++max_degree) {
    std::vector<int> sizes;
    Compositions(n, max_degree, sizes, &found);
  }
  for (const auto& [form, g] : found) {
    std::printf("%s\n", wlbound::EncodeGraph6(g).c_str());
  }
  std::fprintf(stderr, "order %d: %zu graphs\n", n, found.size());
  return 0;
}
