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

#ifndef TREESUB_DESCENT_HPP_
#define TREESUB_DESCENT_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "treesub/cost_function.hpp"
#include "treesub/domain.hpp"
#include "treesub/inner_solvers.hpp"

namespace treesub {

// Restriction of f to INWARD(x) = {y in NEIB(x) : y ⪯ x}. Coordinate i is free
// iff x_i is not the root; setting it moves x_i to its parent. The returned
// oracle refers to `f`, which must outlive it.
BinaryCubeFunction InwardRestrict(const CostFunction& f,
                                  const ProductDomain& domain,
                                  const Labeling& x);

// Restriction of f to OUTWARD(x) = {y in NEIB(x) : y ⪰ x}. Sign -1 moves x_i to
// its first child, +1 to its second. Throws UnsupportedStructure when a tree
// is not binary. The returned oracle refers to `f`.
SignBoxFunction OutwardRestrict(const CostFunction& f,
                                const ProductDomain& domain,
                                const Labeling& x);

// Labeling reached by applying a cube point / sign point at x.
Labeling ApplyInward(const ProductDomain& domain, const Labeling& x,
                     std::span<const std::int8_t> indicator);
Labeling ApplyOutward(const ProductDomain& domain, const Labeling& x,
                      std::span<const std::int8_t> signs);

enum class Engine { kBrute, kMinNorm };

struct DescentOptions {
  std::optional<Labeling> start;  // default: every variable at its root
  Engine engine = Engine::kBrute;
  MinNormOptions min_norm;
  // Record rho-/rho+ after every accepted step (exponential enumeration).
  bool diagnostics = false;
  std::uint64_t ideal_budget = 0;  // 0 = default
};

struct DescentStep {
  int stage = 1;  // 1 = INWARD (S1), 2 = OUTWARD (S2)
  Labeling x;     // labeling after the step
  Value value = 0;
  // Diagnostics only.
  std::optional<int> rho_minus;
  std::optional<int> rho_plus;
  // For stage-2 steps with diagnostics: whether x stays INWARD-optimal.
  std::optional<bool> inward_optimal;
};

struct DescentTrace {
  int s1_steps = 0;
  int s2_steps = 0;
  int K = 0;  // max_i |D_i|
  // Value at the start followed by the value after each accepted step.
  std::vector<Value> values;
  std::vector<DescentStep> steps;
  std::optional<int> start_rho_minus;
  std::optional<int> start_rho_plus;
  bool inward_optimal = false;
  bool outward_optimal = false;

  bool certified() const { return inward_optimal && outward_optimal; }
};

struct DescentResult {
  Labeling minimizer;
  Value value = 0;
  DescentTrace trace;
};

// Steepest descent: repeat INWARD moves while they strictly improve, then
// OUTWARD moves while they strictly improve. At termination both
// neighborhoods are re-solved to fill the optimality certificate. More than
// K+1 accepted steps in a stage raises IterationBoundViolation.
DescentResult Minimize(const CostFunction& f, const ProductDomain& domain,
                       const DescentOptions& options = {});

struct BruteResult {
  Labeling minimizer;
  Value value = 0;
};

// Global scan over D (any tree shape); ties go to the smallest rank.
BruteResult BruteForceMinimize(const CostFunction& f,
                               const ProductDomain& domain,
                               std::uint64_t budget = 0);

// Distance from x to the nearest minimizer of f over {y ⪯ x} / {y ⪰ x}.
int RhoMinus(const CostFunction& f, const ProductDomain& domain,
             const Labeling& x, std::uint64_t budget = 0);
int RhoPlus(const CostFunction& f, const ProductDomain& domain,
            const Labeling& x, std::uint64_t budget = 0);

}  // namespace treesub

#endif  // TREESUB_DESCENT_HPP_
