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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "treesub/error.hpp"
#include "treesub/generate.hpp"
#include "treesub/instance_io.hpp"

namespace treesub {
namespace {

constexpr const char* kSmall = R"({
  "format_version": "1.0",
  "trees": [{"parent": [-1, 0, 1]}, {"parent": [-1, 0, 0]}],
  "function": {"type": "table", "denominator": 2,
               "values": [0, 1, {"num": 3, "den": 2}, 3, 4, 5, 6, 7, 8]}
})";

TEST(GenerateTest, ChainSeparableIsStrong) {
  GenerateParams p;
  p.trees = {trees::Chain(5), trees::Chain(5)};
  const InstanceFixture fx = Generate(GeneratorKind::kChainSeparable, p, 1);
  EXPECT_TRUE(fx.Declares(Property::kStrong));
  EXPECT_TRUE(oracle::StronglySubmodular(fx.function, fx.domain));
}

TEST(GenerateTest, RandomStrongOnTruncatedTree) {
  GenerateParams p;
  const RootedTree t5 = RootedTree::FromParents({-1, 0, 0, 1, 1});
  p.trees = {t5, t5};
  const InstanceFixture fx = Generate(GeneratorKind::kRandomVerifiedStrong, p, 42);
  EXPECT_TRUE(oracle::StronglySubmodular(fx.function, fx.domain));
  EXPECT_GT(fx.accepted, 0u);
}

TEST(GenerateTest, WholeTableModeRejectsUntilStrong) {
  GenerateParams p;
  p.trees = {trees::Chain(2), trees::Chain(2)};
  p.whole_table = true;
  const InstanceFixture fx = Generate(GeneratorKind::kRandomVerifiedStrong, p, 6);
  EXPECT_TRUE(fx.function.is_dense());
  EXPECT_TRUE(oracle::StronglySubmodular(fx.function, fx.domain));
}

TEST(GenerateTest, ReportsAcceptanceRateOnFailure) {
  GenerateParams p;
  p.trees = {trees::Chain(6), trees::Chain(6)};
  p.whole_table = true;
  p.attempt_budget = 5;
  try {
    Generate(GeneratorKind::kRandomVerifiedStrong, p, 0);
    FAIL() << "expected GenerationFailure";
  } catch (const GenerationFailure& e) {
    EXPECT_EQ(e.attempts(), 5u);
    EXPECT_LT(e.acceptance_rate(), 1.0);
  }
}

TEST(GenerateTest, DeterministicPerSeed) {
  GenerateParams p;
  p.trees = {trees::Fork(1), trees::Fork(1), trees::Fork(1)};
  const auto a = SerializeInstance(
      ToDocument(Generate(GeneratorKind::kRandomVerifiedWeak, p, 9), "w"));
  const auto b = SerializeInstance(
      ToDocument(Generate(GeneratorKind::kRandomVerifiedWeak, p, 9), "w"));
  const auto c = SerializeInstance(
      ToDocument(Generate(GeneratorKind::kRandomVerifiedWeak, p, 10), "w"));
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
}

TEST(GenerateTest, CatalogFixturesVerify) {
  for (const std::string& name : CatalogNames()) {
    const InstanceFixture fx = CatalogFixture(name);
    for (Property p : fx.verified_properties) {
      EXPECT_TRUE(Check(p, fx.function, fx.domain).holds()) << name;
    }
  }
  EXPECT_THROW(CatalogFixture("nope"), InputError);
}

TEST(TreeSpecTest, Parses) {
  Rng rng(0);
  EXPECT_EQ(ParseTreeSpec("chain:3", 2, rng).size(), 2u);
  const auto mixed = ParseTreeSpec("bisub;fork:2;t7;parents:-1,0,0,0", 0, rng);
  ASSERT_EQ(mixed.size(), 4u);
  EXPECT_EQ(mixed[1], trees::Fork(2));
  EXPECT_EQ(mixed[2], trees::CompleteBinary(2));
  EXPECT_EQ(mixed[3].node_count(), 4);
  EXPECT_THROW(ParseTreeSpec("chain:x", 1, rng), InputError);
  EXPECT_THROW(ParseTreeSpec("mystery:3", 1, rng), InputError);
}

TEST(InstanceIoTest, ParsesRationals) {
  const InstanceDocument doc = ParseInstance(kSmall);
  EXPECT_EQ(doc.function().denominator(), 2);
  EXPECT_EQ(doc.function().Evaluate(Labeling{0, 2}), 3);
  EXPECT_EQ(doc.domain().n(), 2);
}

TEST(InstanceIoTest, CanonicalRoundTrip) {
  const std::string once = SerializeInstance(ParseInstance(kSmall));
  EXPECT_EQ(SerializeInstance(ParseInstance(once)), once);
  for (const std::string& name : CatalogNames()) {
    const std::string text = SerializeInstance(ToDocument(CatalogFixture(name), "fixture-catalog"));
    EXPECT_EQ(SerializeInstance(ParseInstance(text)), text) << name;
  }
}

TEST(InstanceIoTest, PositionedErrors) {
  auto error_of = [](std::string_view text) {
    try {
      ParseInstance(text);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(error_of("{\n  \"trees\": [,]\n}").find("line 2"), std::string::npos);
  std::string bad_parent = kSmall;
  bad_parent.replace(bad_parent.find("[-1, 0, 1]"), 10, "[-1, 7, 1]");
  EXPECT_NE(error_of(bad_parent).find("/trees/0"), std::string::npos);
  std::string bad_rational = kSmall;
  bad_rational.replace(bad_rational.find("\"den\": 2}"), 9, "\"den\": 4}");
  EXPECT_NE(error_of(bad_rational).find("/function/values/2"), std::string::npos);
  std::string bad_size = kSmall;
  bad_size.replace(bad_size.find(", 8]"), 4, "]");
  EXPECT_NE(error_of(bad_size).find("/function"), std::string::npos);
  EXPECT_NE(error_of(R"({"format_version": "9"})").find("format_version"),
            std::string::npos);
}

}  // namespace
}  // namespace treesub
