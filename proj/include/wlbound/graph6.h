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

#ifndef WLBOUND_GRAPH6_H_
#define WLBOUND_GRAPH6_H_

#include <string>
#include <string_view>
#include <vector>

#include "wlbound/graph.h"

namespace wlbound {

// Decodes one graph6 record (no trailing newline). Edges come out sorted.
Graph DecodeGraph6(std::string_view record, int line_no = 1);

// One graph per non-empty line; an optional ">>graph6<<" header is skipped.
std::vector<Graph> LoadGraph6(std::string_view bytes);
std::vector<Graph> LoadGraph6File(const std::string& path);

// Record without the trailing newline. Attributes are dropped.
std::string EncodeGraph6(const Graph& g);

void SaveGraph6File(const std::string& path, const std::vector<Graph>& graphs);

}  // namespace wlbound

#endif  // WLBOUND_GRAPH6_H_
