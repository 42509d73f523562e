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

// Command-line front end: evaluate, bench, transform, gen.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wlbound/bench.h"
#include "wlbound/canon.h"
#include "wlbound/classes.h"
#include "wlbound/dataset.h"
#include "wlbound/error.h"
#include "wlbound/evaluate.h"
#include "wlbound/features.h"
#include "wlbound/generate.h"
#include "wlbound/graph6.h"
#include "wlbound/run_config.h"

namespace fs = std::filesystem;
using namespace wlbound;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

std::string DataRoot() {
  const char* env = std::getenv("WLBOUND_DATA");
  return env && *env ? env : "data";
}

std::vector<std::string> SplitList(const std::string& s) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos <= s.size() && !s.empty()) {
    size_t comma = std::min(s.find(',', pos), s.size());
    out.push_back(s.substr(pos, comma - pos));
    pos = comma + 1;
  }
  return out;
}

int ParseIntArg(const std::string& s, const std::string& what) {
  try {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::kInvalidArgument, what + ": not an integer '" + s + "'");
}

// "a..b" or a single layer.
std::pair<int, int> ParseLayers(const std::string& s) {
  size_t dots = s.find("..");
  if (dots == std::string::npos) {
    int l = ParseIntArg(s, "--layers");
    return {l, l};
  }
  int a = ParseIntArg(s.substr(0, dots), "--layers");
  int b = ParseIntArg(s.substr(dots + 2), "--layers");
  if (a < 0 || b < 0) throw Error(ErrorCode::kLayerNegative, "--layers " + s);
  if (a > b) throw Error(ErrorCode::kInvalidArgument, "--layers " + s + " is empty");
  return {a, b};
}

// A path to a TU directory or JSONL file, or a dataset name under the data
// root (tu/<name>/ or <name>.jsonl).
Dataset LoadDatasetArg(std::string arg, int digits) {
  while (arg.size() > 1 && arg.back() == '/') arg.pop_back();
  std::vector<fs::path> candidates = {arg};
  const fs::path root = DataRoot();
  candidates.push_back(root / "tu" / arg);
  candidates.push_back(root / (arg + ".jsonl"));
  candidates.push_back(root / "jsonl" / (arg + ".jsonl"));
  for (const fs::path& p : candidates) {
    if (fs::is_directory(p)) return LoadTuDataset(p.string(), digits);
    if (fs::is_regular_file(p)) return LoadJsonl(p.string());
  }
  throw Error(ErrorCode::kMissingFile, "no dataset at '" + arg + "'");
}

std::string ManifestDigest(const std::string& corpus_root) {
  if (!fs::exists(fs::path(corpus_root) / "manifest.json")) return "none";
  return CorpusManifest::Load(corpus_root).Digest();
}

void WriteOutput(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
}

std::string ResolveFormat(const std::string& format, const std::string& out) {
  if (format != "auto") return format;
  return out.ends_with(".json") ? "json" : "csv";
}

std::vector<std::string> Header(const RunConfig& run, const std::string& manifest) {
  return {"wlbound " + std::string(Version()), "run " + run.ToCanonical(),
          "manifest " + manifest};
}

struct EvaluateArgs {
  std::string dataset;
  std::string layers = "0..3";
  std::string configs = "all";
  std::vector<std::string> features;
  std::string metric = "auto";
  std::string mode = "graph";
  std::string out;
  std::string format = "auto";
  int digits = kDefaultPrecision;
  int workers = 1;
};

int CmdEvaluate(const EvaluateArgs& a) {
  Dataset ds = LoadDatasetArg(a.dataset, a.digits);
  if (ds.size() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "dataset '" + a.dataset + "' is empty");
  }
  auto [lo, hi] = ParseLayers(a.layers);
  std::optional<Metric> metric;
  if (a.metric != "auto") metric = ParseMetric(a.metric);
  std::vector<std::vector<FeatureSpec>> feature_sets;
  for (const std::string& f : a.features) feature_sets.push_back(ParseFeatures(f));
  std::vector<AttrConfig> attrs = ParseAttrConfigs(a.configs);

  RunConfig run;
  run.command = "evaluate";
  run.inputs = {a.dataset};
  for (const auto& set : feature_sets) run.features.push_back(FormatFeatures(set));
  run.layers_min = lo;
  run.layers_max = hi;
  for (AttrConfig c : attrs) {
    run.configs += (run.configs.empty() ? "" : ",") + std::string(AttrConfigName(c));
  }
  run.metric = a.metric;
  run.mode = a.mode;
  run.format = ResolveFormat(a.format, a.out);
  run.digits = a.digits;
  run.workers = a.workers;
  run.output = a.out;

  EvaluationReport report;
  if (a.mode == "graph") {
    std::vector<EvalConfig> configs;
    for (AttrConfig c : attrs) {
      if (feature_sets.empty()) configs.push_back({c, {}});
      for (const auto& set : feature_sets) configs.push_back({c, set});
    }
    report = UpperBound(ds, hi, configs, metric, a.workers, lo);
  } else if (a.mode == "node-to-graph") {
    if (attrs.size() != 1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "node-to-graph mode takes exactly one --configs entry");
    }
    if (feature_sets.empty()) feature_sets.push_back({});
    for (int layer = lo; layer <= hi; ++layer) {
      EvaluationReport part =
          FeatureMse(ds, feature_sets, layer, attrs[0], metric, a.workers);
      report.dataset = part.dataset;
      report.rows.insert(report.rows.end(), part.rows.begin(), part.rows.end());
    }
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown --mode '" + a.mode + "'");
  }
  report.digits = ds.precision;
  report.header = Header(run, ManifestDigest((fs::path(DataRoot()) / "corpus").string()));
  report.header.push_back("dataset " + DigestBytes(SerializeJsonl(ds)).Hex());
  if (ds.task == Task::kNodeClassification) {
    report.header.push_back("scoring nodes pooled over all graphs");
  }
  if (ds.task == Task::kLinkPrediction) {
    report.header.push_back(
        "link_hash sorted endpoint colors, plus edge token in edge-aware configs");
  }
  WriteOutput(a.out, run.format == "json" ? report.ToJson() : report.ToCsv());
  return 0;
}

struct BenchArgs {
  std::string corpus;
  std::string tests = "1wl";
  std::string features;
  std::string classes = "all";
  std::string orders;
  std::string out;
  int workers = 1;
  int64_t tuple_budget = kDefaultTupleBudget;
};

int CmdBench(const BenchArgs& a) {
  const std::string root =
      a.corpus.empty() ? (fs::path(DataRoot()) / "corpus").string() : a.corpus;
  CorpusManifest corpus = CorpusManifest::Load(root);
  std::vector<FeatureSpec> features;
  if (!a.features.empty()) features = ParseFeatures(a.features);
  std::vector<TestConfig> tests;
  for (const std::string& t : SplitList(a.tests)) {
    TestConfig test = TestConfig::Parse(t);
    test.features = features;
    tests.push_back(test);
  }
  std::vector<GraphClass> classes;
  if (a.classes == "all") {
    classes = corpus.Classes();
  } else {
    for (const std::string& c : SplitList(a.classes)) classes.push_back(ParseClass(c));
  }
  std::vector<int> orders;
  for (const std::string& o : SplitList(a.orders)) orders.push_back(ParseIntArg(o, "--orders"));

  RunConfig run;
  run.command = "bench";
  run.inputs = {root};
  if (!features.empty()) run.features = {FormatFeatures(features)};
  for (const TestConfig& t : tests) {
    run.tests += (run.tests.empty() ? "" : ",") + TestConfig{t.variant, t.k, {}}.Name();
  }
  for (GraphClass c : classes) {
    run.classes += (run.classes.empty() ? "" : ",") + std::string(ClassName(c));
  }
  run.orders = a.orders;
  run.format = "csv";
  run.tuple_budget = a.tuple_budget;
  run.workers = a.workers;
  run.output = a.out;

  FailureTable table =
      FailureCounts(corpus, classes, orders, tests, a.workers, a.tuple_budget);
  table.header = Header(run, corpus.Digest());
  WriteOutput(a.out, table.ToCsv());
  return 0;
}

struct TransformArgs {
  std::string dataset;
  std::string features;
  std::string out;
  int digits = kDefaultPrecision;
};

int CmdTransform(const TransformArgs& a) {
  Dataset ds = LoadDatasetArg(a.dataset, a.digits);
  std::vector<FeatureSpec> specs = ParseFeatures(a.features);
  const std::string grammar = FormatFeatures(specs);
  // Tokens carry a short digest of the grammar, which makes a repeated
  // transform detectable.
  const std::string tag = "f" + DigestBytes(grammar).Hex().substr(0, 8);
  const std::string prefix = tag + "=";
  bool repeated = false;
  for (const Graph& g : ds.graphs) {
    for (const auto* rows : {&g.node_labels(), &g.edge_labels()}) {
      if (!rows->has_value()) continue;
      for (const AttrRow& row : **rows) {
        for (const Token& t : row) repeated |= t.starts_with(prefix);
      }
    }
  }
  if (repeated) {
    std::cerr << "warning: dataset already holds features from '" << grammar
              << "'; appending them again\n";
  }
  SaveJsonl(ApplyFeatures(ds, specs, tag), a.out);
  return 0;
}

struct GenArgs {
  std::string cls;
  int min_order = kMinGeneratedOrder;
  int max_order = 0;
  std::string out;
  std::vector<std::string> imports;
  int64_t expected_total = -1;
};

int CmdGen(const GenArgs& a) {
  const GraphClass c = ParseClass(a.cls);
  const std::string root =
      a.out.empty() ? (fs::path(DataRoot()) / "corpus").string() : a.out;
  std::map<int, std::vector<Graph>> by_order;
  if (a.imports.empty()) {
    if (a.max_order < kMinGeneratedOrder) {
      throw Error(ErrorCode::kOrderOutOfRange,
                  "--max-order " + std::to_string(a.max_order) + " is below " +
                      std::to_string(kMinGeneratedOrder));
    }
    for (int n = std::max(a.min_order, kMinGeneratedOrder); n <= a.max_order; ++n) {
      by_order[n] = GenerateClass(c, n);
    }
  } else {
    // Shipped classes: check membership, deduplicate and canonically order.
    std::map<int, std::map<CanonicalForm, Graph>> forms;
    for (const std::string& path : a.imports) {
      for (const Graph& g : LoadGraph6File(path)) {
        if (a.max_order > 0 && g.node_count() > a.max_order) continue;
        if (g.node_count() < a.min_order) continue;
        if (!CheckClass(g, c)) {
          throw Error(ErrorCode::kInvalidGraph,
                      path + ": graph " + EncodeGraph6(g) + " is not " +
                          std::string(ClassName(c)));
        }
        CanonResult r = Canonicalize(g);
        forms[g.node_count()].emplace(r.form, SortedEdges(Permute(g, r.labeling)));
      }
    }
    for (auto& [n, graphs] : forms) {
      for (auto& [form, g] : graphs) by_order[n].push_back(g);
    }
  }
  CorpusManifest manifest = fs::exists(fs::path(root) / "manifest.json")
                                ? CorpusManifest::Load(root)
                                : CorpusManifest(root);
  int64_t total = 0;
  for (const auto& [n, graphs] : by_order) {
    manifest.WriteCell(c, n, graphs);
    std::cerr << ClassName(c) << " order " << n << ": " << graphs.size() << "\n";
  }
  for (int n : manifest.Orders(c)) total += manifest.Find(c, n)->count;
  manifest.SetExpectedTotal(c, a.expected_total >= 0 ? a.expected_total : total);
  manifest.Save();
  std::cerr << ClassName(c) << " total: " << total << "\n";
  manifest.VerifyAll();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Expressivity bounds for WL-style graph hashing"};
  app.set_version_flag("--version", std::string(Version()));
  app.require_subcommand(1);

  EvaluateArgs ev;
  auto* evaluate = app.add_subcommand("evaluate", "Score upper bounds of hash-constant predictors");
  evaluate->add_option("--dataset", ev.dataset, "TU directory, JSONL file or dataset name")->required();
  evaluate->add_option("--layers", ev.layers, "Layer range a..b or a single layer");
  evaluate->add_option("--configs", ev.configs, "none,node,edge,both or all");
  evaluate->add_option("--features", ev.features, "Feature grammar; repeat for several sets");
  evaluate->add_option("--metric", ev.metric, "auto, accuracy, f1 or mse");
  evaluate->add_option("--mode", ev.mode, "graph or node-to-graph");
  evaluate->add_option("--out", ev.out, "Output file (stdout if omitted)");
  evaluate->add_option("--format", ev.format, "auto, csv or json");
  evaluate->add_option("--digits", ev.digits, "Quantization digits for real attributes");
  evaluate->add_option("--workers", ev.workers, "Worker threads");

  BenchArgs bn;
  auto* bench = app.add_subcommand("bench", "Count pairs a test fails to distinguish");
  bench->add_option("--corpus", bn.corpus, "Corpus directory with manifest.json");
  bench->add_option("--tests", bn.tests, "Comma list of 1wl, 1wle, <k>wl, <k>fwl");
  bench->add_option("--features", bn.features, "Feature grammar added to every test");
  bench->add_option("--classes", bn.classes, "Comma list of classes or all");
  bench->add_option("--orders", bn.orders, "Comma list of orders (all if omitted)");
  bench->add_option("--out", bn.out, "Output CSV (stdout if omitted)");
  bench->add_option("--workers", bn.workers, "Worker threads");
  bench->add_option("--tuple-budget", bn.tuple_budget, "Largest tuple count for k-WL");

  TransformArgs tr;
  auto* transform = app.add_subcommand("transform", "Append feature tokens and write JSONL");
  transform->add_option("--dataset", tr.dataset, "TU directory, JSONL file or dataset name")->required();
  transform->add_option("--features", tr.features, "Feature grammar")->required();
  transform->add_option("--out", tr.out, "Output JSONL")->required();
  transform->add_option("--digits", tr.digits, "Quantization digits for real attributes");

  GenArgs gn;
  auto* gen = app.add_subcommand("gen", "Write a graph class corpus");
  gen->add_option("--class", gn.cls, "Graph class")->required();
  gen->add_option("--max-order", gn.max_order, "Largest order");
  gen->add_option("--min-order", gn.min_order, "Smallest order");
  gen->add_option("--out", gn.out, "Corpus directory");
  gen->add_option("--import", gn.imports, "graph6 files with members of a shipped class");
  gen->add_option("--expected-total", gn.expected_total, "Expected class total for the manifest");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*evaluate) return CmdEvaluate(ev);
    if (*bench) return CmdBench(bn);
    if (*transform) return CmdTransform(tr);
    if (*gen) return CmdGen(gn);
  } catch (const Error& e) {
    std::cerr << "wlbound: " << e.what() << "\n";
    return IsBudgetError(e.code()) ? kExitBudget : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "wlbound: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
