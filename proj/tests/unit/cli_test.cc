// Copyright 2026 The DFEP Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Drives the dfep binary through the shell.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "fixtures.h"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run Dfep(const std::string& args) {
  const std::string cmd = std::string(DFEP_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("dfep_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

std::string Slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST_F(CliTest, HelpAndBadUsage) {
  EXPECT_EQ(Dfep("--help").code, 0);
  EXPECT_EQ(Dfep("").code, 2);
  EXPECT_EQ(Dfep("frobnicate").code, 2);
  EXPECT_EQ(Dfep("build").code, 2);
}

TEST_F(CliTest, MissingFileIsInputError) {
  EXPECT_EQ(Dfep("stats --in " + Path("nope.json")).code, 2);
}

TEST_F(CliTest, StatsOnFiveObjects) {
  const auto r = Dfep("stats --in " + dfep::testing::DataPath("five_objects.json"));
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("P(S) 8"), std::string::npos) << r.out;
  const auto j = Dfep("stats --json --in " + dfep::testing::DataPath("five_objects.json"));
  ASSERT_EQ(j.code, 0);
  EXPECT_EQ(nlohmann::json::parse(j.out)["pairs"], 8);
}

TEST_F(CliTest, GenBuildEvalRoundTrip) {
  ASSERT_EQ(Dfep("gen random --seed 7 --n 8 --m 3 --tests 7 --out " + Path("i.json")).code, 0);
  ASSERT_EQ(Dfep("build --in " + Path("i.json") + " --out " + Path("t.json") + " --dot " +
                 Path("t.dot")).code,
            0);
  const auto built = Dfep("build --json --in " + Path("i.json") + " --out " + Path("t2.json"));
  ASSERT_EQ(built.code, 0);
  EXPECT_EQ(Slurp(Path("t.json")), Slurp(Path("t2.json")));
  EXPECT_NE(Slurp(Path("t.dot")).find("digraph"), std::string::npos);
  const auto eval = Dfep("eval --json --in " + Path("i.json") + " --tree " + Path("t.json"));
  ASSERT_EQ(eval.code, 0);
  const auto report = nlohmann::json::parse(eval.out);
  const auto summary = nlohmann::json::parse(built.out);
  EXPECT_EQ(report["cost_W"], summary["cost_W"]);
  EXPECT_EQ(report["cost_E"], summary["cost_E"]["exact"]);
}

TEST_F(CliTest, GenIsByteStable) {
  ASSERT_EQ(Dfep("gen random --seed 3 --out " + Path("a.json")).code, 0);
  ASSERT_EQ(Dfep("gen random --seed 3 --out " + Path("b.json")).code, 0);
  EXPECT_EQ(Slurp(Path("a.json")), Slurp(Path("b.json")));
}

TEST_F(CliTest, BrokenTreeIsRejected) {
  const std::string inst = dfep::testing::DataPath("five_objects.json");
  {
    std::ofstream out(Path("bad.json"));
    out << R"({"root": 0, "nodes": [{"kind": "leaf", "class": 0, "objects": [0, 1, 2, 3, 4]}]})";
  }
  EXPECT_EQ(Dfep("eval --in " + inst + " --tree " + Path("bad.json")).code, 2);
  {
    std::ofstream out(Path("junk.json"));
    out << "{";
  }
  EXPECT_EQ(Dfep("eval --in " + inst + " --tree " + Path("junk.json")).code, 2);
}

TEST_F(CliTest, OracleOnHuffmanEight) {
  ASSERT_EQ(Dfep("gen huffman --n 8 --out " + Path("h.json")).code, 0);
  // 254 tests exceed the sequence oracles' limit but not the tree oracles'.
  EXPECT_EQ(Dfep("oracle --which totcost --in " + Path("h.json")).code, 2);
  const auto r = Dfep("oracle --json --which opt_w --in " + Path("h.json"));
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(nlohmann::json::parse(r.out)["opt_w"]["value"], "3");
  EXPECT_EQ(Dfep("gen huffman --n 11 --out " + Path("x.json")).code, 2);
}

TEST_F(CliTest, OracleUnknownWhich) {
  EXPECT_EQ(Dfep("oracle --which nope --in " + dfep::testing::DataPath("five_objects.json")).code,
            2);
}

TEST_F(CliTest, CompareReportsBound) {
  const auto r = Dfep("compare --json --in " + dfep::testing::DataPath("five_objects.json"));
  ASSERT_EQ(r.code, 0);
  EXPECT_NO_THROW((void)nlohmann::json::parse(r.out));
  const auto range = Dfep("compare --seed-range 1:4 --n 6");
  ASSERT_EQ(range.code, 0);
  EXPECT_NE(range.out.find("worst_bound_violations 0"), std::string::npos) << range.out;
}

TEST_F(CliTest, SetCoverReduction) {
  {
    std::ofstream out(Path("sc.json"));
    out << R"({"universe": 3, "sets": [[0, 1], [2]]})";
  }
  ASSERT_EQ(Dfep("gen setcover --in " + Path("sc.json") + " --b 2 --out " + Path("r.json")).code,
            0);
  const auto stats = Dfep("stats --json --in " + Path("r.json"));
  ASSERT_EQ(stats.code, 0);
  EXPECT_EQ(nlohmann::json::parse(stats.out)["n"], 4);
  {
    std::ofstream out(Path("gap.json"));
    out << R"({"universe": 3, "sets": [[0, 1]]})";
  }
  EXPECT_EQ(Dfep("gen setcover --in " + Path("gap.json") + " --b 2").code, 2);
}

}  // namespace
