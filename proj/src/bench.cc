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

#include "wlbound/bench.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "wlbound/error.h"
#include "wlbound/evaluate.h"
#include "wlbound/graph6.h"
#include "wlbound/parallel.h"

namespace wlbound {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kMissingFile, path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

[[noreturn]] void Mismatch(const std::string& what) {
  throw Error(ErrorCode::kManifestMismatch, what);
}

std::string CellName(const CorpusCell& c) {
  return std::string(ClassName(c.cls)) + "/" + std::to_string(c.order);
}

}  // namespace

CorpusManifest CorpusManifest::Load(const std::string& root) {
  const std::string path = (fs::path(root) / "manifest.json").string();
  CorpusManifest m(root);
  Json j;
  try {
    j = Json::parse(ReadFile(path));
    if (j.at("schema").get<std::string>() != kCorpusSchema) {
      throw Error(ErrorCode::kSchemaViolation, path + ": unknown schema");
    }
    for (const Json& cls : j.at("classes")) {
      GraphClass c = ParseClass(cls.at("class").get<std::string>());
      m.totals_[c] = cls.at("expected_total").get<int64_t>();
      for (const Json& cell : cls.at("cells")) {
        m.cells_.push_back({c, cell.at("order").get<int>(),
                            cell.at("file").get<std::string>(),
                            cell.at("count").get<int>(),
                            cell.at("xxh3").get<std::string>()});
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kSchemaViolation, path + ": " + e.what());
  }
  return m;
}

std::string CorpusManifest::ToJson() const {
  Json j;
  j["schema"] = kCorpusSchema;
  j["classes"] = Json::array();
  for (GraphClass c : Classes()) {
    Json cls;
    cls["class"] = ClassName(c);
    cls["expected_total"] = ExpectedTotal(c);
    cls["cells"] = Json::array();
    for (int order : Orders(c)) {
      const CorpusCell* cell = Find(c, order);
      cls["cells"].push_back({{"order", cell->order},
                              {"file", cell->file},
                              {"count", cell->count},
                              {"xxh3", cell->xxh3}});
    }
    j["classes"].push_back(cls);
  }
  return j.dump(2) + "\n";
}

void CorpusManifest::Save() const {
  fs::create_directories(root_);
  std::ofstream out(fs::path(root_) / "manifest.json", std::ios::binary);
  out << ToJson();
  if (!out) throw Error(ErrorCode::kIoError, root_ + "/manifest.json");
}

std::string CorpusManifest::Digest() const { return DigestBytes(ToJson()).Hex(); }

const CorpusCell* CorpusManifest::Find(GraphClass c, int order) const {
  for (const CorpusCell& cell : cells_) {
    if (cell.cls == c && cell.order == order) return &cell;
  }
  return nullptr;
}

std::vector<int> CorpusManifest::Orders(GraphClass c) const {
  std::vector<int> out;
  for (const CorpusCell& cell : cells_) {
    if (cell.cls == c) out.push_back(cell.order);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GraphClass> CorpusManifest::Classes() const {
  std::set<GraphClass> seen;
  for (const CorpusCell& cell : cells_) seen.insert(cell.cls);
  for (const auto& [c, total] : totals_) seen.insert(c);
  return {seen.begin(), seen.end()};
}

int64_t CorpusManifest::ExpectedTotal(GraphClass c) const {
  auto it = totals_.find(c);
  if (it != totals_.end()) return it->second;
  int64_t sum = 0;
  for (const CorpusCell& cell : cells_) {
    if (cell.cls == c) sum += cell.count;
  }
  return sum;
}

void CorpusManifest::WriteCell(GraphClass c, int order,
                               const std::vector<Graph>& graphs) {
  CorpusCell cell{c, order,
                  std::string(ClassName(c)) + "/" + std::to_string(order) + ".g6",
                  static_cast<int>(graphs.size()), ""};
  const fs::path path = fs::path(root_) / cell.file;
  fs::create_directories(path.parent_path());
  SaveGraph6File(path.string(), graphs);
  cell.xxh3 = DigestBytes(ReadFile(path.string())).Hex();
  auto it = std::find_if(cells_.begin(), cells_.end(), [&](const CorpusCell& x) {
    return x.cls == c && x.order == order;
  });
  if (it != cells_.end()) {
    *it = cell;
  } else {
    cells_.push_back(cell);
  }
}

void CorpusManifest::Verify(const std::vector<const CorpusCell*>& cells) const {
  std::set<GraphClass> classes;
  for (const CorpusCell* cell : cells) {
    classes.insert(cell->cls);
    const std::string path = (fs::path(root_) / cell->file).string();
    std::string bytes;
    try {
      bytes = ReadFile(path);
    } catch (const Error&) {
      Mismatch(CellName(*cell) + ": missing file " + path);
    }
    if (DigestBytes(bytes).Hex() != cell->xxh3) {
      Mismatch(CellName(*cell) + ": digest differs from manifest");
    }
    std::vector<Graph> graphs = LoadGraph6(bytes);
    if (static_cast<int>(graphs.size()) != cell->count) {
      Mismatch(CellName(*cell) + ": " + std::to_string(graphs.size()) +
               " graphs, manifest says " + std::to_string(cell->count));
    }
    for (const Graph& g : graphs) {
      if (g.node_count() != cell->order) {
        Mismatch(CellName(*cell) + ": graph of order " +
                 std::to_string(g.node_count()));
      }
    }
  }
  for (GraphClass c : classes) {
    int64_t sum = 0;
    for (const CorpusCell& cell : cells_) {
      if (cell.cls == c) sum += cell.count;
    }
    if (sum != ExpectedTotal(c)) {
      Mismatch(std::string(ClassName(c)) + ": cells hold " + std::to_string(sum) +
               " graphs, expected total " + std::to_string(ExpectedTotal(c)));
    }
  }
}

void CorpusManifest::VerifyAll() const {
  std::vector<const CorpusCell*> all;
  for (const CorpusCell& cell : cells_) all.push_back(&cell);
  Verify(all);
}

std::vector<Graph> CorpusManifest::LoadCell(const CorpusCell& cell) const {
  return LoadGraph6File((fs::path(root_) / cell.file).string());
}

TestConfig TestConfig::Parse(std::string_view name) {
  TestConfig t;
  if (name == "1wl") return t;
  if (name == "1wle") {
    t.variant = Variant::kWle1;
    return t;
  }
  bool folklore = name.ends_with("fwl");
  std::string_view digits = name.substr(0, name.size() - (folklore ? 3 : 2));
  if ((folklore || name.ends_with("wl")) && digits.size() == 1 &&
      digits[0] >= '2' && digits[0] <= '6') {
    t.k = digits[0] - '0';
    t.variant = folklore ? Variant::kFolkloreKwl : Variant::kKwl;
    return t;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown test '" + std::string(name) +
                  "' (expected 1wl, 1wle, <k>wl or <k>fwl with k in 2..6)");
}

Variant TestConfig::EffectiveVariant() const {
  if (variant == Variant::kWl1 && EvalConfig{AttrConfig::kNone, features}.UsesEdges()) {
    return Variant::kWle1;
  }
  return variant;
}

std::string TestConfig::Name() const {
  std::string name;
  switch (variant) {
    case Variant::kWl1: name = "1wl"; break;
    case Variant::kWle1: name = "1wle"; break;
    case Variant::kKwl: name = std::to_string(k) + "wl"; break;
    case Variant::kFolkloreKwl: name = std::to_string(k) + "fwl"; break;
  }
  if (!features.empty()) name += "+" + FormatFeatures(features);
  return name;
}

ColorId GraphCertificate(const Graph& g, const TestConfig& test,
                         int64_t tuple_budget) {
  const Graph prepared =
      test.features.empty() ? g : ApplyFeatures(g, test.features);
  switch (test.EffectiveVariant()) {
    case Variant::kWl1:
    case Variant::kWle1: {
      RefineOptions opts;
      opts.use_edge_attrs = test.EffectiveVariant() == Variant::kWle1;
      return Certificate(Refine(prepared, opts));
    }
    case Variant::kKwl:
    case Variant::kFolkloreKwl: {
      KwlOptions opts;
      opts.k = test.k;
      opts.folklore = test.variant == Variant::kFolkloreKwl;
      opts.tuple_budget = tuple_budget;
      return Certificate(KwlRefine(prepared, opts));
    }
  }
  return {};
}

int64_t CountFailures(std::vector<ColorId> certificates) {
  std::sort(certificates.begin(), certificates.end());
  int64_t failures = 0;
  for (size_t i = 0; i < certificates.size();) {
    size_t j = i;
    while (j < certificates.size() && certificates[j] == certificates[i]) ++j;
    int64_t g = static_cast<int64_t>(j - i);
    failures += g * (g - 1) / 2;
    i = j;
  }
  return failures;
}

const FailureRow* FailureTable::Find(GraphClass c, int order,
                                     std::string_view test) const {
  for (const FailureRow& r : rows) {
    if (r.cls == c && r.order == order && r.test == test) return &r;
  }
  return nullptr;
}

std::string FailureTable::ToCsv() const {
  std::string out;
  for (const std::string& h : header) out += "# " + h + "\n";
  out += "class,order,graphs,test,failures\n";
  for (const FailureRow& r : rows) {
    std::string test = r.test;
    if (test.find_first_of(",\"") != std::string::npos) {
      std::string quoted = "\"";
      for (char ch : test) {
        if (ch == '"') quoted += '"';
        quoted += ch;
      }
      test = quoted + "\"";
    }
    out += std::string(ClassName(r.cls)) + "," + std::to_string(r.order) + "," +
           std::to_string(r.graphs) + "," + test + "," +
           std::to_string(r.failures) + "\n";
  }
  return out;
}

std::vector<int64_t> FailureCounts(const std::vector<Graph>& graphs,
                                   const std::vector<TestConfig>& tests,
                                   int workers, int64_t tuple_budget) {
  std::vector<int64_t> out;
  std::vector<ColorId> certs(graphs.size());
  for (const TestConfig& test : tests) {
    ParallelFor(static_cast<int>(graphs.size()), workers, [&](int i) {
      certs[i] = GraphCertificate(graphs[i], test, tuple_budget);
    });
    out.push_back(CountFailures(certs));
  }
  return out;
}

FailureTable FailureCounts(const CorpusManifest& corpus,
                           const std::vector<GraphClass>& classes,
                           const std::vector<int>& orders,
                           const std::vector<TestConfig>& tests, int workers,
                           int64_t tuple_budget) {
  std::vector<const CorpusCell*> cells;
  for (GraphClass c : classes) {
    for (int order : orders.empty() ? corpus.Orders(c) : orders) {
      if (const CorpusCell* cell = corpus.Find(c, order)) cells.push_back(cell);
    }
  }
  if (cells.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "selection names no corpus cell");
  }
  corpus.Verify(cells);
  FailureTable table;
  for (const CorpusCell* cell : cells) {
    std::vector<Graph> graphs = corpus.LoadCell(*cell);
    std::vector<int64_t> counts = FailureCounts(graphs, tests, workers, tuple_budget);
    for (size_t t = 0; t < tests.size(); ++t) {
      table.rows.push_back({cell->cls, cell->order, cell->count, tests[t].Name(),
                            counts[t]});
    }
  }
  return table;
}

}  // namespace wlbound
