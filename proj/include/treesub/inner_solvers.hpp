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

#ifndef TREESUB_INNER_SOLVERS_HPP_
#define TREESUB_INNER_SOLVERS_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "treesub/cost_function.hpp"

namespace treesub {

// Point of a cube or sign box: entries in {0, 1} or {-1, 0, +1}.
using SignVector = std::vector<std::int8_t>;
using SignOracle = std::function<Value(std::span<const std::int8_t>)>;

// g over {0,1}^m where only coordinates in `free` may be 1.
struct BinaryCubeFunction {
  int m = 0;
  std::vector<int> free;  // ascending
  SignOracle evaluate;    // called with an indicator vector of length m
};

struct AllowedSigns {
  bool minus = false;
  bool plus = false;  // 0 is always allowed
};

// h over the box prod_i allowed_i ⊆ {-1,0,+1}^m.
struct SignBoxFunction {
  int m = 0;
  std::vector<AllowedSigns> allowed;
  SignOracle evaluate;

  bool Allows(int i, int sign) const {
    return sign == 0 || (sign < 0 ? allowed[i].minus : allowed[i].plus);
  }
  std::uint64_t BoxSize() const;
};

struct InnerResult {
  SignVector point;
  Value value = 0;
};

struct MinNormOptions {
  // Stop once ||x||^2 - <x, q> <= epsilon * max(1, max_s ||s||^2).
  double epsilon = 1e-10;
  int max_iterations = 10'000;
  // Also run the brute-force solver and throw SolverFailure on disagreement.
  bool cross_check = false;
};

// Exact minimizer over all 2^|free| subsets; ties go to the smallest subset
// rank (free[0] is the least significant bit). Requires |free| <= 20.
InnerResult SfmBrute(const BinaryCubeFunction& g);

// Fujishige-Wolfe minimum-norm-point algorithm on the base polytope of
// g - g(empty). The minimizer is read off the negative coordinates of the
// min-norm point; the result is certified through the duality bound
// x^-(V) <= min g, and SolverFailure is thrown when the gap is >= 1 (the
// oracle values are integers) or the iteration cap is hit.
InnerResult SfmWolfe(const BinaryCubeFunction& g,
                     const MinNormOptions& options = {});

// Exact minimizer over the box. Enumerates mixed-radix with coordinate 0 most
// significant and per-coordinate order (-1, 0, +1); the first minimizer wins.
// `member`, when given, restricts the search to points it accepts.
// Requires BoxSize() <= budget (0 = default 3^12, TREESUB_BUDGET overrides).
InnerResult BisubBrute(
    const SignBoxFunction& h, std::uint64_t budget = 0,
    const std::function<bool(std::span<const std::int8_t>)>& member = {});

// Experimental. Min-norm-point loop over the bisubmodular polyhedron of
// h - h(0), driven by a signed greedy restricted to the allowed signs. The
// minimizer is s_i = -sign(x_i) clipped to the allowed signs.
InnerResult BisubMinNorm(const SignBoxFunction& h,
                         const MinNormOptions& options = {});

}  // namespace treesub

#endif  // TREESUB_INNER_SOLVERS_HPP_
