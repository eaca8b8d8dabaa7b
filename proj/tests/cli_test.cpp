// Copyright 2026 The treesub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "json.hpp"
#include "treesub/instance_io.hpp"

namespace treesub::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
  nlohmann::json Json() const { return nlohmann::json::parse(out); }
};

Outcome Call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::path(::testing::TempDir()) /
           ("treesub_cli_" + std::string(::testing::UnitTest::GetInstance()
                                             ->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  std::string Catalog(const std::string& name) {
    const std::string path = (dir_ / (name + ".json")).string();
    EXPECT_EQ(Call({"generate", "--kind", "fixture-catalog", "--name", name,
                    "--out", path}).code, kOk);
    return path;
  }
  std::string Write(const std::string& name, const std::string& text) {
    const std::string path = (dir_ / name).string();
    WriteFile(path, text);
    return path;
  }
  fs::path dir_;
};

TEST_F(CliTest, CheckExitCodes) {
  EXPECT_EQ(Call({"check", Catalog("constant-b3"), "--property", "strong"}).code, kOk);
  const Outcome bad = Call({"check", Catalog("concave-chain"), "--property", "strong"});
  ASSERT_EQ(bad.code, kViolation);
  const auto w = bad.Json()["witness"];
  EXPECT_EQ(w["x"], nlohmann::json::array({0}));
  EXPECT_EQ(w["y"], nlohmann::json::array({2}));
  EXPECT_EQ(w["lhs"]["num"], -4);
  EXPECT_EQ(w["rhs"]["num"], -2);
  const std::string malformed = Write(
      "bad.json",
      R"({"format_version": "1.0", "trees": [{"parent": [0, 0]}],
          "function": {"type": "table", "denominator": 1, "values": [0, 0]}})");
  const Outcome input = Call({"check", malformed});
  EXPECT_EQ(input.code, kInputError);
  EXPECT_NE(input.err.find("/trees/0/parent"), std::string::npos);
  EXPECT_EQ(Call({"check", (dir_ / "missing.json").string()}).code, kInputError);
  EXPECT_EQ(Call({"check"}).code, kInputError);
  EXPECT_EQ(Call({"frobnicate"}).code, kInputError);
}

TEST_F(CliTest, CheckOtherProperties) {
  const std::string f = Catalog("t7-distance");
  for (const char* p : {"weak", "translation", "multimorphism"}) {
    EXPECT_EQ(Call({"check", f, "--property", p}).code, kOk) << p;
  }
  EXPECT_EQ(Call({"check", f, "--property", "multimorphism", "--ops", "projections"}).code,
            kOk);
  const Outcome sampled = Call({"check", f, "--mode", "sampled", "--samples", "100",
                                "--seed", "4"});
  EXPECT_EQ(sampled.code, kOk);
  EXPECT_EQ(sampled.Json()["pairs_checked"], 100);
  EXPECT_EQ(Call({"check", Catalog("b3-root-indicator"), "--property", "weak"}).code,
            kViolation);
}

TEST_F(CliTest, BudgetFailureIsExitThree) {
  const std::string f = (dir_ / "big.json").string();
  // Generation verifies exhaustively and refuses the same size.
  EXPECT_EQ(Call({"generate", "--kind", "chain-separable", "--n", "3", "--tree-spec",
                  "chain:33"}).code, kSolverFailure);
  WriteFile(f, R"({"format_version": "1.0",
    "trees": [{"parent": [-1, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32]},
              {"parent": [-1, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32]},
              {"parent": [-1, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32]}],
    "function": {"type": "sum", "denominator": 1, "terms": []}})");
  EXPECT_EQ(Call({"check", f}).code, kSolverFailure);
}

TEST_F(CliTest, MinimizeSolversAgree) {
  const std::string f = Catalog("c5sq-separable");
  const Outcome brute = Call({"minimize", f, "--solver", "brute"});
  const Outcome descent = Call({"minimize", f, "--solver", "descent", "--trace"});
  const Outcome minnorm = Call({"minimize", f, "--engine", "minnorm"});
  const Outcome weak = Call({"minimize", f, "--weak"});
  for (const Outcome* o : {&brute, &descent, &minnorm, &weak}) {
    ASSERT_EQ(o->code, kOk) << o->err;
    EXPECT_EQ(o->Json()["value"], brute.Json()["value"]);
  }
  const auto d = descent.Json();
  EXPECT_EQ(d["s1_steps"], 0);
  EXPECT_LE(d["s2_steps"].get<int>(), 4);
  EXPECT_EQ(d["certificate"]["inward_optimal"], true);
  EXPECT_EQ(d["certificate"]["outward_optimal"], true);
  EXPECT_TRUE(d.contains("trace"));
  const Outcome started = Call({"minimize", f, "--start", "4,4", "--diagnostics"});
  ASSERT_EQ(started.code, kOk);
  EXPECT_EQ(started.Json()["value"], brute.Json()["value"]);
  EXPECT_EQ(Call({"minimize", f, "--start", "4,x"}).code, kInputError);
  EXPECT_EQ(Call({"minimize", f, "--start", "9,0"}).code, kInputError);
  EXPECT_EQ(Call({"minimize", f, "--solver", "nope"}).code, kInputError);
}

TEST_F(CliTest, MinimizeUnsupportedStructures) {
  const std::string star = Catalog("ternary-star");
  EXPECT_EQ(Call({"minimize", star}).code, kInputError);
  EXPECT_EQ(Call({"minimize", star, "--solver", "brute"}).code, kOk);
  EXPECT_EQ(Call({"minimize", Catalog("t7-distance"), "--weak"}).code, kInputError);
}

TEST_F(CliTest, GenerateIsDeterministicAndVerified) {
  const std::string a = (dir_ / "a.json").string();
  const std::string b = (dir_ / "b.json").string();
  for (const std::string& path : {a, b}) {
    ASSERT_EQ(Call({"generate", "--kind", "random-verified-weak", "--n", "2",
                    "--tree-spec", "fork:2", "--seed", "5", "--out", path}).code, kOk);
  }
  const Outcome text_a = Call({"canonicalize", a});
  EXPECT_EQ(text_a.out, Call({"canonicalize", b}).out);
  EXPECT_EQ(Call({"check", a, "--property", "weak"}).code, kOk);
  const Outcome sep = Call({"generate", "--kind", "chain-separable", "--n", "2",
                            "--tree-spec", "chain:5", "--seed", "3"});
  ASSERT_EQ(sep.code, kOk);
  const std::string s = Write("sep.json", sep.out);
  EXPECT_EQ(Call({"check", s, "--property", "strong"}).code, kOk);
  const Outcome fail = Call({"generate", "--kind", "random-verified-strong", "--n", "2",
                             "--tree-spec", "chain:6", "--whole-table", "--attempts", "3"});
  EXPECT_EQ(fail.code, kSolverFailure);
  EXPECT_NE(fail.err.find("acceptance rate"), std::string::npos);
  EXPECT_EQ(Call({"generate", "--kind", "nope"}).code, kInputError);
}

TEST_F(CliTest, CanonicalizeIsIdempotent) {
  const std::string raw = Write("raw.json", R"({"metadata": {"z": 1, "a": [1, 2]},
    "function": {"values": [3, 1, 2], "type": "table", "denominator": 1},
    "trees": [{"parent": [-1, 0, 1]}], "format_version": "1.0"})");
  const Outcome once = Call({"canonicalize", raw});
  ASSERT_EQ(once.code, kOk);
  const std::string c = Write("canon.json", once.out);
  EXPECT_EQ(Call({"canonicalize", c}).out, once.out);
}

TEST_F(CliTest, BenchReportsBoundsAndTrajectories) {
  const fs::path suite = dir_ / "suite";
  fs::create_directories(suite);
  EXPECT_EQ(Call({"generate", "--kind", "random-verified-strong", "--n", "2",
                  "--tree-spec", "chain:6", "--seed", "1", "--out",
                  (suite / "chain.json").string()}).code, kOk);
  EXPECT_EQ(Call({"generate", "--kind", "fixture-catalog", "--name", "ternary-star",
                  "--out", (suite / "star.json").string()}).code, kOk);
  const Outcome report = Call({"bench", "--suite", suite.string(), "--diagnostics",
                               "--jobs", "2"});
  ASSERT_EQ(report.code, kOk) << report.err;
  const auto rows = report.Json()["rows"];
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0]["instance"], "chain.json");
  EXPECT_EQ(rows[0]["bound_ok"], true);
  EXPECT_EQ(rows[0]["rho_minus_s1"].back(), 0);
  EXPECT_NE(rows[1]["status"].get<std::string>().find("skipped"), std::string::npos);
  EXPECT_EQ(Call({"bench", "--suite", suite.string(), "--format", "tsv"}).code, kOk);

  const fs::path empty = dir_ / "empty";
  fs::create_directories(empty);
  const Outcome none = Call({"bench", "--suite", empty.string()});
  EXPECT_EQ(none.code, kOk);
  EXPECT_TRUE(none.Json()["rows"].empty());
  EXPECT_EQ(Call({"bench", "--suite", (dir_ / "nowhere").string()}).code, kInputError);
}

TEST_F(CliTest, BenchFlagsBoundViolations) {
  const fs::path suite = dir_ / "suite";
  fs::create_directories(suite);
  // Adversarial staircase on C3^4 that needs five inward steps.
  nlohmann::json doc;
  doc["format_version"] = "1.0";
  doc["trees"] = nlohmann::json::array();
  for (int i = 0; i < 4; ++i) doc["trees"].push_back({{"parent", {-1, 0, 1}}});
  std::vector<int> values(81, 100);
  const int path[6][4] = {{2, 2, 2, 2}, {1, 2, 2, 2}, {0, 1, 2, 2},
                          {0, 0, 1, 2}, {0, 0, 0, 1}, {0, 0, 0, 0}};
  for (int k = 0; k < 6; ++k) {
    values[path[k][0] * 27 + path[k][1] * 9 + path[k][2] * 3 + path[k][3]] = 10 - k;
  }
  doc["function"] = {{"type", "table"}, {"denominator", 1}, {"values", values}};
  doc["metadata"] = {{"start", {2, 2, 2, 2}}};
  WriteFile((suite / "stairs.json").string(), doc.dump());
  const Outcome report = Call({"bench", "--suite", suite.string()});
  EXPECT_EQ(report.code, kViolation);
  EXPECT_EQ(report.Json()["all_bounds_ok"], false);
  EXPECT_EQ(Call({"minimize", (suite / "stairs.json").string(), "--start", "2,2,2,2"}).code,
            kSolverFailure);
}

TEST_F(CliTest, EncodeWeak) {
  const Outcome o = Call({"encode-weak", "--tree-spec", "fork:2"});
  ASSERT_EQ(o.code, kOk);
  const auto psi = o.Json()["trees"][0]["psi"];
  EXPECT_EQ(psi[3]["code"], nlohmann::json::array({1, 1, -1}));
  EXPECT_EQ(Call({"encode-weak", "--tree-spec", "t7"}).code, kInputError);
  EXPECT_EQ(Call({"encode-weak"}).code, kInputError);
}

}  // namespace
}  // namespace treesub::cli
