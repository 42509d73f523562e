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

#include "wlbound/graph6.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "wlbound/error.h"

namespace wlbound {
namespace {

[[noreturn]] void Fail(int line_no, const std::string& what) {
  throw Error(ErrorCode::kInvalidGraph6,
              "line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph DecodeGraph6(std::string_view record, int line_no) {
  if (!record.empty() && record.back() == '\r') record.remove_suffix(1);
  for (char ch : record) {
    if (ch < 63 || ch > 126) {
      Fail(line_no, "byte " + std::to_string(static_cast<unsigned char>(ch)) +
                        " outside 63..126");
    }
  }
  if (record.empty()) Fail(line_no, "empty record");
  size_t pos = 0;
  auto take = [&](int count) {
    long long value = 0;
    for (int i = 0; i < count; ++i) {
      if (pos >= record.size()) Fail(line_no, "truncated size prefix");
      value = (value << 6) | (record[pos++] - 63);
    }
    return value;
  };
  long long n = 0;
  if (record[0] != 126) {
    n = take(1);
  } else if (record.size() > 1 && record[1] != 126) {
    pos = 1;
    n = take(3);
  } else {
    pos = 2;
    n = take(6);
  }
  if (n > 100000) Fail(line_no, "order " + std::to_string(n) + " too large");
  const long long bits = n * (n - 1) / 2;
  const long long bytes = (bits + 5) / 6;
  if (static_cast<long long>(record.size() - pos) != bytes) {
    Fail(line_no, "expected " + std::to_string(bytes) + " adjacency bytes, got " +
                      std::to_string(record.size() - pos));
  }
  std::vector<Edge> edges;
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = record[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  for (; k < bytes * 6; ++k) {
    int byte = record[pos + k / 6] - 63;
    if ((byte >> (5 - k % 6)) & 1) Fail(line_no, "non-zero padding bits");
  }
  std::sort(edges.begin(), edges.end());
  return Graph(static_cast<int>(n), std::move(edges));
}

std::vector<Graph> LoadGraph6(std::string_view bytes) {
  std::vector<Graph> out;
  int line_no = 0;
  size_t start = 0;
  while (start < bytes.size()) {
    size_t end = bytes.find('\n', start);
    if (end == std::string_view::npos) end = bytes.size();
    std::string_view line = bytes.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    out.push_back(DecodeGraph6(line, line_no));
  }
  return out;
}

std::vector<Graph> LoadGraph6File(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kMissingFile, path);
  std::stringstream ss;
  ss << in.rdbuf();
  return LoadGraph6(ss.str());
}

std::string EncodeGraph6(const Graph& g) {
  const long long n = g.node_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(63 + ((n >> s) & 63));
  } else {
    out += "~~";
    for (int s = 30; s >= 0; s -= 6) out.push_back(63 + ((n >> s) & 63));
  }
  const long long bits = n * (n - 1) / 2;
  std::vector<int> packed((bits + 5) / 6, 0);
  for (const Edge& e : g.edges()) {
    long long k = static_cast<long long>(e.v) * (e.v - 1) / 2 + e.u;
    packed[k / 6] |= 1 << (5 - k % 6);
  }
  for (int b : packed) out.push_back(static_cast<char>(63 + b));
  return out;
}

void SaveGraph6File(const std::string& path, const std::vector<Graph>& graphs) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  for (const Graph& g : graphs) out << EncodeGraph6(g) << '\n';
}

}  // namespace wlbound
