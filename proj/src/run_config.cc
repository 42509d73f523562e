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

#include "wlbound/run_config.h"

#include "json.hpp"

#include "wlbound/error.h"

namespace wlbound {

std::string_view Version() { return WLBOUND_VERSION; }

std::string RunConfig::ToCanonical() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["features"] = features;
  j["layers_min"] = layers_min;
  j["layers_max"] = layers_max;
  j["configs"] = configs;
  j["metric"] = metric;
  j["mode"] = mode;
  j["tests"] = tests;
  j["classes"] = classes;
  j["orders"] = orders;
  j["format"] = format;
  j["tuple_budget"] = tuple_budget;
  j["digits"] = digits;
  return j.dump();
}

RunConfig RunConfig::FromCanonical(std::string_view text) {
  RunConfig c;
  try {
    auto j = nlohmann::json::parse(text);
    c.command = j.at("command");
    c.inputs = j.at("inputs").get<std::vector<std::string>>();
    c.features = j.at("features").get<std::vector<std::string>>();
    c.layers_min = j.at("layers_min");
    c.layers_max = j.at("layers_max");
    c.configs = j.at("configs");
    c.metric = j.at("metric");
    c.mode = j.at("mode");
    c.tests = j.at("tests");
    c.classes = j.at("classes");
    c.orders = j.at("orders");
    c.format = j.at("format");
    c.tuple_budget = j.at("tuple_budget");
    c.digits = j.at("digits");
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kSchemaViolation, std::string("run config: ") + e.what());
  }
  return c;
}

}  // namespace wlbound
