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

#include "wlbound/refine.h"

#include <algorithm>
#include <cstdint>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wlbound/error.h"

namespace wlbound {

std::string_view VariantName(Variant v) {
  switch (v) {
    case Variant::kWl1: return "1wl";
    case Variant::kWle1: return "1wle";
    case Variant::kKwl: return "kwl";
    case Variant::kFolkloreKwl: return "fkwl";
  }
  return "?";
}

const std::vector<ColorId>& ColoringTrace::Round(int round) const {
  int r = std::min(round, last_round());
  if (r < first_round) {
    throw Error(ErrorCode::kInvalidArgument,
                "round " + std::to_string(round) + " was not retained");
  }
  return per_round[r - first_round];
}

ColorId AttrDigest(const AttrRow& row) {
  KeyBuilder key(tag::kAttrTuple);
  key.AddU64(row.size());
  for (const Token& t : row) key.AddString(t);
  return key.Digest();
}

int CountClasses(const std::vector<ColorId>& colors) {
  std::vector<ColorId> c = colors;
  std::sort(c.begin(), c.end());
  return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
}

std::vector<int> PartitionLabels(const std::vector<ColorId>& colors) {
  std::unordered_map<ColorId, int, ColorIdHash> ids;
  std::vector<int> out;
  out.reserve(colors.size());
  for (const ColorId& c : colors) {
    auto [it, inserted] = ids.emplace(c, static_cast<int>(ids.size()));
    out.push_back(it->second);
  }
  return out;
}

bool Refines(const std::vector<ColorId>& fine,
             const std::vector<ColorId>& coarse) {
  if (fine.size() != coarse.size()) return false;
  std::unordered_map<ColorId, ColorId, ColorIdHash> parent;
  for (size_t i = 0; i < fine.size(); ++i) {
    auto [it, inserted] = parent.emplace(fine[i], coarse[i]);
    if (!inserted && it->second != coarse[i]) return false;
  }
  return true;
}

ColorId Certificate(const ColoringTrace& trace, int round) {
  return SortedDigest(tag::kCertificate, trace.Round(round));
}

ColorId Certificate(const ColoringTrace& trace) {
  return Certificate(trace, trace.last_round());
}

ColoringTrace Refine(const Graph& g, const RefineOptions& options) {
  const int n = g.node_count();
  if (options.init && static_cast<int>(options.init->size()) != n) {
    throw Error(ErrorCode::kInitLengthMismatch,
                "init has " + std::to_string(options.init->size()) +
                    " entries for " + std::to_string(n) + " nodes");
  }
  const int cap = options.rounds ? *options.rounds : std::max(n - 1, 1);
  if (cap < 0) throw Error(ErrorCode::kLayerNegative, "negative round cap");

  ColoringTrace trace;
  trace.variant = options.use_edge_attrs ? Variant::kWle1 : Variant::kWl1;

  std::vector<ColorId> colors(n);
  for (int v = 0; v < n; ++v) {
    KeyBuilder key(tag::kAttrTuple);
    AttrRow row;
    if (options.use_node_attrs) row = g.NodeAttrTuple(v);
    key.AddU64(row.size());
    for (const Token& t : row) key.AddString(t);
    if (options.init) {
      key.AddU64(1);
      key.AddString((*options.init)[v]);
    }
    colors[v] = key.Digest();
  }

  std::vector<ColorId> edge_token;
  if (options.use_edge_attrs) {
    edge_token.resize(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
      edge_token[e] = AttrDigest(g.EdgeAttrTuple(e));
    }
  }

  int classes = CountClasses(colors);
  trace.per_round.push_back(colors);
  std::vector<ColorId> bag;
  std::vector<std::pair<ColorId, ColorId>> pairs;
  for (int round = 1; round <= cap; ++round) {
    std::vector<ColorId> next(n);
    for (int v = 0; v < n; ++v) {
      auto nb = g.Neighbors(v);
      if (options.use_edge_attrs) {
        auto inc = g.IncidentEdges(v);
        pairs.clear();
        for (size_t i = 0; i < nb.size(); ++i) {
          pairs.emplace_back(edge_token[inc[i]], colors[nb[i]]);
        }
        std::sort(pairs.begin(), pairs.end());
        KeyBuilder key(tag::kRefineEdge);
        key.Add(colors[v]).AddU64(pairs.size());
        for (const auto& [t, c] : pairs) key.Add(t).Add(c);
        next[v] = key.Digest();
      } else {
        bag.clear();
        for (int u : nb) bag.push_back(colors[u]);
        std::sort(bag.begin(), bag.end());
        KeyBuilder key(tag::kRefine);
        key.Add(colors[v]).AddColors(bag);
        next[v] = key.Digest();
      }
    }
    colors = std::move(next);
    trace.per_round.push_back(colors);
    int next_classes = CountClasses(colors);
    if (next_classes == classes && !trace.converged_at) {
      trace.converged_at = round;
      if (options.stop_at_convergence) break;
    }
    classes = next_classes;
  }
  return trace;
}

namespace {

// Per-round state of one k-tuple refinement instance.
class TupleRefiner {
 public:
  TupleRefiner(const Graph& g, const KwlOptions& options)
      : g_(g), options_(options), n_(g.node_count()), k_(options.k) {
    pow_.assign(k_, 1);
    for (int i = k_ - 2; i >= 0; --i) pow_[i] = pow_[i + 1] * n_;
    total_ = k_ == 0 ? 1 : pow_[0] * n_;
  }

  int64_t total() const { return total_; }

  std::vector<ColorId> Initial() const {
    // Atomic code of every ordered vertex pair.
    std::vector<ColorId> pair_code(static_cast<size_t>(n_) * n_);
    for (int u = 0; u < n_; ++u) {
      for (int v = 0; v < n_; ++v) {
        ColorId& c = pair_code[u * n_ + v];
        if (u == v) {
          c = ColorId{0, 0};
          continue;
        }
        int e = g_.EdgeIndex(u, v);
        if (e < 0) {
          c = ColorId{0, 1};
          continue;
        }
        KeyBuilder key(tag::kAtomicPair);
        if (options_.use_edge_attrs) key.Add(AttrDigest(g_.EdgeAttrTuple(e)));
        c = key.Digest();
      }
    }
    std::vector<ColorId> node_code(n_);
    for (int v = 0; v < n_; ++v) {
      node_code[v] =
          AttrDigest(options_.use_node_attrs ? g_.NodeAttrTuple(v) : AttrRow{});
    }
    std::vector<ColorId> out(total_);
    ParallelFor([&](int64_t begin, int64_t end) {
      std::vector<int> v(k_);
      for (int64_t t = begin; t < end; ++t) {
        Decode(t, v);
        KeyBuilder key(tag::kTupleInit);
        for (int i = 0; i < k_; ++i) {
          for (int j = i + 1; j < k_; ++j) key.Add(pair_code[v[i] * n_ + v[j]]);
        }
        for (int i = 0; i < k_; ++i) key.Add(node_code[v[i]]);
        out[t] = key.Digest();
      }
    });
    return out;
  }

  std::vector<ColorId> Step(const std::vector<ColorId>& colors) const {
    // Dense ranks in color order; sorting ranks sorts the colors.
    std::vector<ColorId> uniq = colors;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<int32_t> rank(total_);
    ParallelFor([&](int64_t begin, int64_t end) {
      for (int64_t t = begin; t < end; ++t) {
        rank[t] = static_cast<int32_t>(
            std::lower_bound(uniq.begin(), uniq.end(), colors[t]) -
            uniq.begin());
      }
    });
    std::vector<ColorId> out(total_);
    ParallelFor([&](int64_t begin, int64_t end) {
      std::vector<int> v(k_);
      std::vector<int32_t> scratch;
      std::vector<std::vector<int32_t>> seqs(n_, std::vector<int32_t>(k_));
      std::vector<int> order(n_);
      const uint8_t key_tag =
          options_.folklore ? tag::kFolkloreRefine : tag::kTupleRefine;
      KeyBuilder key(key_tag);
      for (int64_t t = begin; t < end; ++t) {
        Decode(t, v);
        key.Clear(key_tag);
        key.Add(colors[t]);
        if (!options_.folklore) {
          for (int j = 0; j < k_; ++j) {
            scratch.clear();
            int64_t base = t - static_cast<int64_t>(v[j]) * pow_[j];
            for (int w = 0; w < n_; ++w) scratch.push_back(rank[base + w * pow_[j]]);
            std::sort(scratch.begin(), scratch.end());
            key.AddU64(scratch.size());
            for (int32_t r : scratch) key.Add(uniq[r]);
          }
        } else {
          for (int w = 0; w < n_; ++w) {
            for (int j = 0; j < k_; ++j) {
              seqs[w][j] = rank[t + (static_cast<int64_t>(w) - v[j]) * pow_[j]];
            }
            order[w] = w;
          }
          std::sort(order.begin(), order.end(),
                    [&](int a, int b) { return seqs[a] < seqs[b]; });
          key.AddU64(n_);
          for (int w : order) {
            for (int j = 0; j < k_; ++j) key.Add(uniq[seqs[w][j]]);
          }
        }
        out[t] = key.Digest();
      }
    });
    return out;
  }

 private:
  void Decode(int64_t t, std::vector<int>& v) const {
    for (int i = k_ - 1; i >= 0; --i) {
      v[i] = static_cast<int>(t % n_);
      t /= n_;
    }
  }

  template <typename F>
  void ParallelFor(F&& body) const {
    int workers = std::max(1, options_.workers);
    if (workers == 1 || total_ < 4096) {
      body(int64_t{0}, total_);
      return;
    }
    std::vector<std::thread> threads;
    int64_t chunk = (total_ + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      int64_t begin = w * chunk;
      int64_t end = std::min(total_, begin + chunk);
      if (begin >= end) break;
      threads.emplace_back([&body, begin, end] { body(begin, end); });
    }
    for (auto& th : threads) th.join();
  }

  const Graph& g_;
  const KwlOptions& options_;
  int n_;
  int k_;
  std::vector<int64_t> pow_;
  int64_t total_ = 0;
};

}  // namespace

ColoringTrace KwlRefine(const Graph& g, const KwlOptions& options) {
  if (options.k < 2 || options.k > 6) {
    throw Error(ErrorCode::kInvalidArgument,
                "k must be in 2..6, got " + std::to_string(options.k));
  }
  const int n = g.node_count();
  double tuples = 1;
  for (int i = 0; i < options.k; ++i) tuples *= n;
  if (tuples > static_cast<double>(options.tuple_budget)) {
    throw Error(ErrorCode::kTupleBudgetExceeded,
                "k=" + std::to_string(options.k) + " on " + std::to_string(n) +
                    " nodes needs " + std::to_string(int64_t(tuples)) +
                    " tuples, budget " + std::to_string(options.tuple_budget));
  }
  TupleRefiner refiner(g, options);
  const int64_t cap64 =
      options.rounds ? *options.rounds : std::max<int64_t>(refiner.total() - 1, 1);
  const int cap = static_cast<int>(std::min<int64_t>(cap64, 1 << 30));

  ColoringTrace trace;
  trace.variant = options.folklore ? Variant::kFolkloreKwl : Variant::kKwl;
  trace.k = options.k;
  std::vector<ColorId> colors = refiner.Initial();
  int classes = CountClasses(colors);
  trace.per_round.push_back(colors);
  for (int round = 1; round <= cap; ++round) {
    colors = refiner.Step(colors);
    int next_classes = CountClasses(colors);
    if (options.keep_history) {
      trace.per_round.push_back(colors);
    } else {
      trace.per_round.back() = colors;
      trace.first_round = round;
    }
    if (next_classes == classes) {
      trace.converged_at = round;
      break;
    }
    classes = next_classes;
  }
  return trace;
}

}  // namespace wlbound
