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

#ifndef TREESUB_PROPERTY_CHECKER_HPP_
#define TREESUB_PROPERTY_CHECKER_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "treesub/cost_function.hpp"
#include "treesub/domain.hpp"
#include "treesub/tree.hpp"

namespace treesub {

enum class Property { kStrong, kWeak, kTranslation, kMultimorphism };

const char* PropertyName(Property p);
// Accepts "strong", "weak", "translation", "multimorphism".
Property ParseProperty(const std::string& name);

struct CheckOptions {
  enum class Mode { kExhaustive, kSampled };
  Mode mode = Mode::kExhaustive;
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 0;
  // Exhaustive mode refuses when |D|^2 exceeds this; TREESUB_BUDGET
  // overrides the default.
  std::uint64_t pair_budget = 0;  // 0 = default

  static CheckOptions Sampled(std::uint64_t samples, std::uint64_t seed) {
    CheckOptions o;
    o.mode = Mode::kSampled;
    o.samples = samples;
    o.seed = seed;
    return o;
  }
};

// A genuine violation: f(x) + f(y) = lhs < rhs = f(first) + f(second).
struct ViolationWitness {
  Property property = Property::kStrong;
  Labeling x;
  Labeling y;
  std::optional<int> d;  // translation offset
  Labeling first;        // x ⊓ y, x ∧ y, x ↑^d y or OP1(x, y)
  Labeling second;
  Value lhs = 0;
  Value rhs = 0;
};

struct CheckReport {
  Property property = Property::kStrong;
  bool exhaustive = true;
  std::uint64_t pairs_checked = 0;
  std::optional<ViolationWitness> witness;
  std::string note;

  bool holds() const { return !witness.has_value(); }
};

// f(x) + f(y) >= f(x ⊓ y) + f(x ⊔ y).
CheckReport CheckStrong(const CostFunction& f, const ProductDomain& domain,
                        const CheckOptions& options = {});
// f(x) + f(y) >= f(x ∧ y) + f(x ∨ y).
CheckReport CheckWeak(const CostFunction& f, const ProductDomain& domain,
                      const CheckOptions& options = {});
// f(x) + f(y) >= f(x ↑^d y) + f(x ↓_d y) for d in 0..rho_inf(x, y); larger d
// saturate every coordinate and give equality.
CheckReport CheckTranslation(const CostFunction& f, const ProductDomain& domain,
                             const CheckOptions& options = {});
// Translation inequality for a single fixed d.
CheckReport CheckTranslationAt(const CostFunction& f,
                               const ProductDomain& domain, int d,
                               const CheckOptions& options = {});

// Generic binary multimorphism <OP1, OP2> given as one table pair per tree.
// Enumerates every ordered pair and evaluates through f directly.
CheckReport CheckMultimorphism(const CostFunction& f,
                               const ProductDomain& domain,
                               const std::vector<OpTable>& ops,
                               const CheckOptions& options = {});

CheckReport Check(Property property, const CostFunction& f,
                  const ProductDomain& domain,
                  const CheckOptions& options = {});

// Recomputes the operation results (tree operations, or `ops` for a
// multimorphism witness) and both sides of the inequality; true iff they
// match the witness and lhs < rhs.
bool ReplayWitness(const CostFunction& f, const ProductDomain& domain,
                   const ViolationWitness& w,
                   const std::vector<OpTable>* ops = nullptr);

}  // namespace treesub

#endif  // TREESUB_PROPERTY_CHECKER_HPP_
