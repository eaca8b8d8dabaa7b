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

#include "treesub/weak_encoder.hpp"

#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "treesub/descent.hpp"
#include "treesub/error.hpp"
#include "treesub/generate.hpp"
#include "treesub/property_checker.hpp"

namespace treesub {
namespace {

ForkTree Fork(const RootedTree& t) {
  auto r = Recognize(t);
  EXPECT_TRUE(std::holds_alternative<ForkTree>(r));
  return std::get<ForkTree>(r);
}

TEST(RecognizeTest, Shapes) {
  const ForkTree chain = Fork(trees::Chain(5));
  EXPECT_EQ(chain.K, 4);
  EXPECT_FALSE(chain.has_fork());
  const ForkTree f2 = Fork(trees::Fork(2));
  EXPECT_EQ(f2.K, 2);
  EXPECT_EQ(f2.fork_minus, 3);
  EXPECT_EQ(f2.fork_plus, 4);
  EXPECT_TRUE(std::holds_alternative<NotFork>(Recognize(trees::CompleteBinary(2))));
  EXPECT_TRUE(std::holds_alternative<NotFork>(
      Recognize(RootedTree::FromParents({-1, 0, 0, 0}))));
  EXPECT_EQ(Fork(trees::Bisubmodular()).K, 0);
}

TEST(PsiTest, ForkExamples) {
  const ForkTree f2 = Fork(trees::Fork(2));
  EXPECT_EQ(Psi(f2, 3), (SignVector{1, 1, -1}));
  EXPECT_EQ(Psi(f2, 4), (SignVector{1, 1, 1}));
  EXPECT_EQ(Psi(f2, 0), (SignVector{0, 0, 0}));
  EXPECT_EQ(Psi(f2, 1), (SignVector{1, 0, 0}));
  EXPECT_EQ(Psi(f2, 2), (SignVector{1, 1, 0}));
  EXPECT_THROW(PsiInverse(f2, SignVector{0, 1, 0}), NotInImage);
  EXPECT_THROW(PsiInverse(f2, SignVector{1, 0, 1}), NotInImage);
  EXPECT_THROW(PsiInverse(f2, SignVector{1, 1}), NotInImage);
  EXPECT_THROW(PsiInverse(Fork(trees::Chain(3)), SignVector{1, 1, 1}), NotInImage);
}

// Injectivity, inverse and homomorphism, exhaustively for K <= 3.
TEST(PsiTest, InjectiveAndPreservesOperations) {
  for (int K = 0; K <= 3; ++K) {
    for (const RootedTree& t : {trees::Chain(K + 1), trees::Fork(K)}) {
      const ForkTree fork = Fork(t);
      std::set<SignVector> images;
      for (Node a = 0; a < t.node_count(); ++a) {
        images.insert(Psi(fork, a));
        EXPECT_EQ(PsiInverse(fork, Psi(fork, a)), a);
        for (Node b = 0; b < t.node_count(); ++b) {
          const auto [wedge, vee] = WedgeVee(t, a, b);
          EXPECT_EQ(EncodedWedge(fork, Psi(fork, a), Psi(fork, b)), Psi(fork, wedge));
          EXPECT_EQ(EncodedVee(fork, Psi(fork, a), Psi(fork, b)), Psi(fork, vee));
        }
      }
      EXPECT_EQ(static_cast<int>(images.size()), t.node_count());
    }
  }
}

TEST(MinimizeWeakTest, Constant) {
  const ProductDomain d({trees::Fork(2), trees::Chain(3)});
  EXPECT_EQ(MinimizeWeak(CostFunction::Constant(d), d).value, 0);
}

TEST(MinimizeWeakTest, RejectsNonFork) {
  const ProductDomain d({trees::CompleteBinary(2)});
  EXPECT_THROW(MinimizeWeak(CostFunction::Constant(d), d), UnsupportedStructure);
}

TEST(MinimizeWeakTest, CatalogFixture) {
  const InstanceFixture fx = CatalogFixture("f2-weak");
  const WeakResult r = MinimizeWeak(fx.function, fx.domain);
  EXPECT_EQ(r.value, oracle::MinValue(fx.function, fx.domain));
  EXPECT_EQ(r.value, fx.function.Evaluate(r.minimizer));
}

TEST(MinimizeWeakTest, MatchesBruteForceOnWeakFixtures) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GenerateParams p;
    p.trees = {trees::Fork(2), trees::Fork(2)};
    const InstanceFixture fx = Generate(GeneratorKind::kRandomVerifiedWeak, p, seed);
    ASSERT_TRUE(CheckWeak(fx.function, fx.domain).holds());
    EXPECT_EQ(MinimizeWeak(fx.function, fx.domain).value,
              oracle::MinValue(fx.function, fx.domain));
  }
}

TEST(MinimizeWeakTest, AgreesWithDescentOnChains) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    GenerateParams p;
    p.trees = {trees::Chain(4), trees::Chain(3), trees::Chain(4)};
    p.verify_all = true;
    const InstanceFixture fx = Generate(GeneratorKind::kRandomVerifiedStrong, p, seed);
    ASSERT_TRUE(fx.Declares(Property::kWeak));
    EXPECT_EQ(MinimizeWeak(fx.function, fx.domain).value,
              Minimize(fx.function, fx.domain).value);
  }
}

}  // namespace
}  // namespace treesub
