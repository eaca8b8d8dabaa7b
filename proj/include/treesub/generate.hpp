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

#ifndef TREESUB_GENERATE_HPP_
#define TREESUB_GENERATE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "treesub/cost_function.hpp"
#include "treesub/property_checker.hpp"
#include "treesub/random.hpp"

namespace treesub {

// A generated or catalogued instance together with the properties that were
// verified on it by the exhaustive checker.
struct InstanceFixture {
  ProductDomain domain;
  CostFunction function;
  std::vector<Property> verified_properties;
  std::string provenance;
  std::uint64_t seed = 0;
  std::uint64_t attempts = 0;
  std::uint64_t accepted = 0;

  bool Declares(Property p) const;
};

enum class GeneratorKind {
  kRandomVerifiedStrong,
  kRandomVerifiedWeak,
  kChainSeparable,
  kFixtureCatalog,
};

const char* GeneratorKindName(GeneratorKind kind);
GeneratorKind ParseGeneratorKind(const std::string& name);

struct GenerateParams {
  std::vector<RootedTree> trees;
  // Unary tables and pairwise weights are drawn from [0, max_value].
  Value max_value = 20;
  // Total number of sampled candidates before GenerationFailure.
  std::uint64_t attempt_budget = 10'000;
  // Probability (in percent) that a variable pair receives a coupling term.
  int pair_percent = 50;
  // Sample the whole dense table uniformly instead of term by term.
  bool whole_table = false;
  // Verify every property, not only the target one.
  bool verify_all = false;
  std::uint64_t pair_budget = 0;  // 0 = default
  // Name for kFixtureCatalog.
  std::string fixture_name;
};

// Deterministic given `seed`. Random kinds build a sum of terms, each drawn
// and accepted by rejection against the target property on its own scope,
// and then re-verify the whole function. Throws GenerationFailure (with the
// acceptance rate) when the attempt budget runs out.
InstanceFixture Generate(GeneratorKind kind, const GenerateParams& params,
                         std::uint64_t seed);

// Named fixtures: "c5sq-separable", "concave-chain", "constant-b3",
// "b3-root-indicator", "c3c3-table", "t7-distance", "ternary-star",
// "f2-weak".
std::vector<std::string> CatalogNames();
InstanceFixture CatalogFixture(const std::string& name);

// Uniformly attaches node v (v = 1..n-1) under an earlier node that has
// fewer than two children.
RootedTree RandomBinaryTree(Rng& rng, int node_count);

// Tree spec grammar, one item per tree:
//   chain:N | bisub | fork:K | binary:H | t7 | random-binary:N |
//   parents:p0,p1,...
// Items are separated by ';'. A single item is repeated n times.
std::vector<RootedTree> ParseTreeSpec(const std::string& spec, int n, Rng& rng);

}  // namespace treesub

#endif  // TREESUB_GENERATE_HPP_
