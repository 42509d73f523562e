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

#ifndef WLBOUND_RUN_CONFIG_H_
#define WLBOUND_RUN_CONFIG_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wlbound {

std::string_view Version();

// Everything a CLI run was asked to do. The canonical string leaves out the
// worker count and output location, which do not change report contents,
// so runs that differ only in those produce byte-identical reports.
struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::vector<std::string> features;  // canonical grammar per feature set
  int layers_min = 0;
  int layers_max = 0;
  std::string configs;
  std::string metric;
  std::string mode;
  std::string tests;
  std::string classes;
  std::string orders;
  std::string format;
  int64_t tuple_budget = 0;
  int digits = 0;
  int workers = 1;
  std::string output;

  // Compact JSON with a fixed key order.
  std::string ToCanonical() const;
  // Inverse of ToCanonical; workers and output keep their defaults.
  static RunConfig FromCanonical(std::string_view text);
  bool operator==(const RunConfig&) const = default;
};

}  // namespace wlbound

#endif  // WLBOUND_RUN_CONFIG_H_
