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

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "test_util.h"
#include "wlbound/dataset.h"

namespace wlbound {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code = -1;
  std::string out;
};

// Runs the CLI with stderr folded into the captured output.
Result RunCli(const std::string& args) {
  std::string cmd = "WLBOUND_DATA='" + testing::DataDir() + "' '" WLBOUND_CLI "' " +
                    args + " 2>&1";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string Slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("wlbound_cli_" + std::to_string(getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string Tmp(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, EvaluateIsIndependentOfWorkers) {
  Result a = RunCli("evaluate --dataset MUTAG --layers 0..2 --workers 1 --out " + Tmp("a.csv"));
  Result b = RunCli("evaluate --dataset MUTAG --layers 0..2 --workers 3 --out " + Tmp("b.csv"));
  ASSERT_EQ(a.code, 0) << a.out;
  ASSERT_EQ(b.code, 0) << b.out;
  std::string csv = Slurp(Tmp("a.csv"));
  EXPECT_EQ(csv, Slurp(Tmp("b.csv")));
  EXPECT_NE(csv.find("MUTAG,none,1,accuracy,0.9149,"), std::string::npos) << csv;
  EXPECT_EQ(csv.rfind("# wlbound ", 0), 0u);
}

TEST_F(CliTest, EvaluateWritesJson) {
  Result r = RunCli("evaluate --dataset MUTAG --layers 1 --configs node --out " + Tmp("r.json"));
  ASSERT_EQ(r.code, 0) << r.out;
  std::string json = Slurp(Tmp("r.json"));
  EXPECT_NE(json.find("\"schema\": \"wlbound-report-v1\""), std::string::npos);
  EXPECT_NE(json.find("\"value\": \"0.9574\""), std::string::npos) << json;
}

TEST_F(CliTest, InputErrorsExitWithTwo) {
  Dataset empty;
  empty.name = "empty";
  SaveJsonl(empty, Tmp("empty.jsonl"));
  EXPECT_EQ(RunCli("evaluate --dataset " + Tmp("empty.jsonl")).code, 2);
  EXPECT_EQ(RunCli("evaluate --dataset " + Tmp("nothing.jsonl")).code, 2);
  EXPECT_EQ(RunCli("evaluate --dataset MUTAG --features nope").code, 2);
  EXPECT_EQ(RunCli("evaluate --dataset MUTAG --metric mse").code, 2);
  EXPECT_EQ(RunCli("bench --tests 1wl --orders 99").code, 2);
  EXPECT_EQ(RunCli("bench --tests 9wl").code, 2);
  EXPECT_EQ(RunCli("frobnicate").code, 2);
}

TEST_F(CliTest, BudgetErrorsExitWithThree) {
  EXPECT_EQ(RunCli("gen --class all --max-order 2 --out " + Tmp("c")).code, 3);
  EXPECT_EQ(RunCli("bench --tests 3wl --classes all_nonisomorphic --orders 8 "
                "--tuple-budget 10")
                .code,
            3);
}

TEST_F(CliTest, BenchReportsFailures) {
  Result r = RunCli("bench --tests 1wl,3wl --classes all_nonisomorphic --orders 6,7 --out " +
                 Tmp("f.csv"));
  ASSERT_EQ(r.code, 0) << r.out;
  std::string csv = Slurp(Tmp("f.csv"));
  EXPECT_NE(csv.find("all_nonisomorphic,6,156,1wl,4\n"), std::string::npos) << csv;
  EXPECT_NE(csv.find("all_nonisomorphic,7,1044,1wl,22\n"), std::string::npos) << csv;
  EXPECT_NE(csv.find("all_nonisomorphic,7,1044,3wl,0\n"), std::string::npos) << csv;
}

TEST_F(CliTest, GenWritesAVerifiedCorpus) {
  Result r = RunCli("gen --class eulerian --max-order 6 --out " + Tmp("corpus"));
  ASSERT_EQ(r.code, 0) << r.out;
  Result b = RunCli("bench --corpus " + Tmp("corpus") + " --tests 1wl --classes eulerian");
  ASSERT_EQ(b.code, 0) << b.out;
  EXPECT_NE(b.out.find("eulerian,6,16,1wl,"), std::string::npos) << b.out;
}

TEST_F(CliTest, TransformTagsTokensAndWarnsOnRepeats) {
  Result r = RunCli("transform --dataset MUTAG --features degree --out " + Tmp("t.jsonl"));
  ASSERT_EQ(r.code, 0) << r.out;
  Dataset d = LoadJsonl(Tmp("t.jsonl"));
  EXPECT_EQ(d.size(), 188);
  Result again = RunCli("transform --dataset " + Tmp("t.jsonl") +
                     " --features degree --out " + Tmp("u.jsonl"));
  ASSERT_EQ(again.code, 0) << again.out;
  EXPECT_NE(again.out.find("warning"), std::string::npos) << again.out;
}

}  // namespace
}  // namespace wlbound
