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

#include "wlbound/canon.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace wlbound {
namespace {

using Cells = std::vector<std::vector<int>>;

class Canonizer {
 public:
  Canonizer(const Graph& g, const std::vector<int>* colors)
      : n_(g.node_count()), words_((g.node_count() + 63) / 64) {
    adj_.assign(static_cast<size_t>(n_) * words_, 0);
    for (const Edge& e : g.edges()) {
      adj_[e.u * words_ + e.v / 64] |= uint64_t{1} << (e.v % 64);
      adj_[e.v * words_ + e.u / 64] |= uint64_t{1} << (e.u % 64);
    }
    if (colors) {
      result_.form.colors = *colors;
      std::sort(result_.form.colors.begin(), result_.form.colors.end());
      std::vector<int> order(n_);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return (*colors)[a] < (*colors)[b];
      });
      for (int i = 0; i < n_; ++i) {
        if (i == 0 || (*colors)[order[i]] != (*colors)[order[i - 1]]) {
          root_.emplace_back();
        }
        root_.back().push_back(order[i]);
      }
    } else if (n_ > 0) {
      root_.emplace_back(n_);
      std::iota(root_[0].begin(), root_[0].end(), 0);
    }
  }

  CanonResult Run() {
    result_.form.n = n_;
    Cells p = root_;
    Refine(p);
    std::vector<int> path;
    Search(p, path);
    result_.labeling = best_labeling_;
    result_.form.bits = best_bits_;
    return std::move(result_);
  }

 private:
  bool Bit(int u, int v) const {
    return (adj_[u * words_ + v / 64] >> (v % 64)) & 1;
  }

  // Splits cells by neighbor counts into splitter cells until equitable.
  void Refine(Cells& cells) const {
    std::vector<uint64_t> mask(words_);
    std::vector<int> count(n_);
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t s = 0; s < cells.size() && !changed; ++s) {
        std::fill(mask.begin(), mask.end(), 0);
        for (int v : cells[s]) mask[v / 64] |= uint64_t{1} << (v % 64);
        for (size_t c = 0; c < cells.size(); ++c) {
          if (cells[c].size() < 2) continue;
          bool uniform = true;
          for (int v : cells[c]) {
            int k = 0;
            for (int w = 0; w < words_; ++w) {
              k += std::popcount(adj_[v * words_ + w] & mask[w]);
            }
            count[v] = k;
            if (count[v] != count[cells[c][0]]) uniform = false;
          }
          if (uniform) continue;
          std::vector<int> members = cells[c];
          std::stable_sort(members.begin(), members.end(),
                           [&](int a, int b) { return count[a] < count[b]; });
          Cells parts;
          for (size_t i = 0; i < members.size(); ++i) {
            if (i == 0 || count[members[i]] != count[members[i - 1]]) {
              parts.emplace_back();
            }
            parts.back().push_back(members[i]);
          }
          cells.erase(cells.begin() + c);
          cells.insert(cells.begin() + c, parts.begin(), parts.end());
          changed = true;
          break;
        }
      }
    }
  }

  std::vector<uint64_t> LeafBits(const std::vector<int>& order) const {
    std::vector<uint64_t> bits((static_cast<size_t>(n_) * (n_ - 1) / 2 + 63) / 64);
    size_t pos = 0;
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j, ++pos) {
        if (Bit(order[i], order[j])) bits[pos / 64] |= uint64_t{1} << (63 - pos % 64);
      }
    }
    return bits;
  }

  int Find(std::vector<int>& parent, int x) const {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  // Returns the level to unwind to, or -1 to continue normally.
  int Search(const Cells& cells, std::vector<int>& path) {
    const int level = static_cast<int>(path.size());
    int target = -1;
    for (size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].size() > 1 &&
          (target < 0 || cells[c].size() < cells[target].size())) {
        target = static_cast<int>(c);
      }
    }
    if (target < 0) return Leaf(cells, path);

    std::vector<int> candidates = cells[target];
    std::sort(candidates.begin(), candidates.end());
    std::vector<int> tried;
    for (int v : candidates) {
      // Orbits of the automorphisms found so far that fix the path.
      std::vector<int> parent(n_);
      std::iota(parent.begin(), parent.end(), 0);
      for (const auto& gamma : result_.automorphisms) {
        bool fixes = true;
        for (int x : path) fixes = fixes && gamma[x] == x;
        if (!fixes) continue;
        for (int x = 0; x < n_; ++x) {
          int a = Find(parent, x), b = Find(parent, gamma[x]);
          if (a != b) parent[a] = b;
        }
      }
      bool skip = false;
      for (int u : tried) skip = skip || Find(parent, u) == Find(parent, v);
      if (skip) continue;
      tried.push_back(v);

      Cells next;
      next.reserve(cells.size() + 1);
      for (size_t c = 0; c < cells.size(); ++c) {
        if (static_cast<int>(c) != target) {
          next.push_back(cells[c]);
          continue;
        }
        next.push_back({v});
        std::vector<int> rest;
        for (int x : cells[c]) {
          if (x != v) rest.push_back(x);
        }
        next.push_back(std::move(rest));
      }
      Refine(next);
      path.push_back(v);
      int jump = Search(next, path);
      path.pop_back();
      if (jump >= 0 && jump < level) return jump;
    }
    return -1;
  }

  int Leaf(const Cells& cells, const std::vector<int>& path) {
    ++result_.leaves;
    std::vector<int> order;
    order.reserve(n_);
    for (const auto& c : cells) order.push_back(c[0]);
    std::vector<uint64_t> bits = LeafBits(order);
    std::vector<int> labeling(n_);
    for (int i = 0; i < n_; ++i) labeling[order[i]] = i;
    if (best_path_.empty() && best_labeling_.empty()) {
      Accept(bits, labeling, path);
      return -1;
    }
    if (bits > best_bits_) {
      Accept(bits, labeling, path);
      return -1;
    }
    if (bits == best_bits_) {
      // gamma maps this leaf's vertex order onto the best leaf's.
      std::vector<int> best_order(n_);
      for (int v = 0; v < n_; ++v) best_order[best_labeling_[v]] = v;
      std::vector<int> gamma(n_);
      for (int i = 0; i < n_; ++i) gamma[order[i]] = best_order[i];
      bool identity = true;
      for (int v = 0; v < n_; ++v) identity = identity && gamma[v] == v;
      if (!identity) result_.automorphisms.push_back(std::move(gamma));
      size_t d = 0;
      while (d < path.size() && d < best_path_.size() &&
             path[d] == best_path_[d]) {
        ++d;
      }
      return static_cast<int>(d);
    }
    return -1;
  }

  void Accept(std::vector<uint64_t> bits, std::vector<int> labeling,
              const std::vector<int>& path) {
    best_bits_ = std::move(bits);
    best_labeling_ = std::move(labeling);
    best_path_ = path;
  }

  int n_;
  int words_;
  std::vector<uint64_t> adj_;
  Cells root_;
  CanonResult result_;
  std::vector<uint64_t> best_bits_;
  std::vector<int> best_labeling_;
  std::vector<int> best_path_;
};

}  // namespace

CanonResult Canonicalize(const Graph& g, const std::vector<int>* colors) {
  Canonizer c(g, colors);
  return c.Run();
}

bool IsIsomorphic(const Graph& a, const Graph& b) {
  if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count()) {
    return false;
  }
  std::vector<int> da, db;
  for (int v = 0; v < a.node_count(); ++v) da.push_back(a.Degree(v));
  for (int v = 0; v < b.node_count(); ++v) db.push_back(b.Degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return Canonicalize(a).form == Canonicalize(b).form;
}

Graph CanonicalGraph(const Graph& g) {
  CanonResult r = Canonicalize(g);
  return SortedEdges(Permute(Graph(g.node_count(), g.edges()), r.labeling));
}

}  // namespace wlbound
