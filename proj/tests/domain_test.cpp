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
#include "treesub/cost_function.hpp"
#include "treesub/domain.hpp"
#include "treesub/error.hpp"

namespace treesub {
namespace {

ProductDomain C3B3() { return ProductDomain({trees::Chain(3), trees::Bisubmodular()}); }

TEST(ProductDomainTest, RankRoundTrip) {
  const ProductDomain d = C3B3();
  EXPECT_EQ(d.size(), 9);
  for (std::int64_t k = 0; k < d.size(); ++k) EXPECT_EQ(d.Rank(d.Unrank(k)), k);
  EXPECT_EQ(d.Unrank(0), (Labeling{0, 0}));
}

TEST(ProductDomainTest, VariableZeroIsMostSignificant) {
  const ProductDomain d({trees::Chain(3), trees::Chain(3)});
  EXPECT_EQ(d.Rank(Labeling{2, 0}), 6);
  std::int64_t k = 0;
  oracle::ForEachLabeling(oracle::Radices(d), [&](const Labeling& x) {
    EXPECT_EQ(d.Rank(x), k++);
  });
}

TEST(ProductDomainTest, Validation) {
  const ProductDomain d = C3B3();
  EXPECT_THROW(d.Validate(Labeling{0}), DomainError);
  EXPECT_THROW(d.Validate(Labeling{0, 3}), DomainError);
  EXPECT_NO_THROW(d.Validate(Labeling{2, 2}));
  EXPECT_THROW(ProductDomain({}), InputError);
  EXPECT_EQ(d.max_label_count(), 3);
  EXPECT_TRUE(d.all_binary());
  EXPECT_EQ(d.Roots(), (Labeling{0, 0}));
}

TEST(ProductDomainTest, RhoInfAndOrder) {
  const ProductDomain d({trees::CompleteBinary(2), trees::Chain(5)});
  EXPECT_EQ(RhoInf(d, Labeling{3, 1}, Labeling{5, 2}), 4);
  EXPECT_TRUE(Precedes(d, Labeling{1, 1}, Labeling{3, 4}));
  EXPECT_FALSE(Precedes(d, Labeling{2, 1}, Labeling{3, 4}));
  EXPECT_THROW(RhoInf(d, Labeling{0}, Labeling{0, 0}), DomainError);
}

TEST(CostFunctionTest, DenseAndSumAgree) {
  const ProductDomain d = C3B3();
  SumOfTerms sum;
  sum.terms.push_back({{0}, {5, 1, 2}});
  sum.terms.push_back({{1, 0}, {0, 1, 2, 3, 4, 5, 6, 7, 8}});
  const CostFunction f(d, sum, 3);
  EXPECT_EQ(f.denominator(), 3);
  EXPECT_FALSE(f.is_dense());
  // term (1,0) is indexed with x1 most significant.
  EXPECT_EQ(f.Evaluate(Labeling{2, 1}), 2 + (1 * 3 + 2));
  const CostFunction g = f.Materialize();
  EXPECT_TRUE(g.is_dense());
  oracle::ForEachLabeling(oracle::Radices(d), [&](const Labeling& x) {
    EXPECT_EQ(f.Evaluate(x), g.Evaluate(x));
  });
  EXPECT_EQ(f.Tabulate(), g.dense()->values);
}

TEST(CostFunctionTest, RejectsBadShapes) {
  const ProductDomain d = C3B3();
  EXPECT_THROW(CostFunction(d, DenseTable{{1, 2}}), InputError);
  EXPECT_THROW(CostFunction(d, SumOfTerms{{{{0, 0}, std::vector<Value>(9)}}}), InputError);
  EXPECT_THROW(CostFunction(d, SumOfTerms{{{{2}, {1, 2, 3}}}}), InputError);
  EXPECT_THROW(CostFunction(d, SumOfTerms{{{{0}, {1, 2}}}}), InputError);
  EXPECT_THROW(CostFunction(d, SumOfTerms{{{{}, {}}}}), InputError);
  EXPECT_THROW(CostFunction(d, DenseTable{std::vector<Value>(9)}, 0), InputError);
  EXPECT_THROW(CostFunction::Constant(d).Evaluate(Labeling{5, 0}), DomainError);
}

}  // namespace
}  // namespace treesub
