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

#ifndef TREESUB_COST_FUNCTION_HPP_
#define TREESUB_COST_FUNCTION_HPP_

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "treesub/domain.hpp"

namespace treesub {

// Costs are exact rationals value / denominator with a shared denominator per
// function, so every comparison in the library is an integer comparison.
using Value = std::int64_t;

struct DenseTable {
  // Indexed by ProductDomain::Rank.
  std::vector<Value> values;
};

struct Term {
  // Ordered variable indices, arity 1..3.
  std::vector<int> scope;
  // Mixed-radix over the scope's domains, scope[0] most significant.
  std::vector<Value> values;
};

struct SumOfTerms {
  std::vector<Term> terms;
};

// An evaluation oracle over a fixed product domain. Immutable; Evaluate is
// safe to call concurrently.
class CostFunction {
 public:
  static constexpr int kMaxArity = 3;

  // Both constructors validate the table shapes against `domain` and throw
  // InputError on mismatch.
  CostFunction(const ProductDomain& domain, DenseTable table,
               Value denominator = 1);
  CostFunction(const ProductDomain& domain, SumOfTerms sum,
               Value denominator = 1);

  static CostFunction Constant(const ProductDomain& domain, Value value = 0);

  // Numerator of f(x). Throws DomainError for an invalid labeling.
  Value Evaluate(std::span<const Node> x) const;
  // Skips validation; x must be valid.
  Value EvaluateUnchecked(std::span<const Node> x) const;

  Value denominator() const { return denominator_; }
  bool is_dense() const { return std::holds_alternative<DenseTable>(body_); }
  const DenseTable* dense() const { return std::get_if<DenseTable>(&body_); }
  const SumOfTerms* sum() const { return std::get_if<SumOfTerms>(&body_); }
  std::span<const int> radices() const { return radices_; }

  // Dense values for every labeling in rank order.
  std::vector<Value> Tabulate() const;
  CostFunction Materialize() const;

 private:
  CostFunction(std::vector<int> radices, std::variant<DenseTable, SumOfTerms> body,
               Value denominator);
  void Validate() const;

  std::vector<int> radices_;
  std::variant<DenseTable, SumOfTerms> body_;
  Value denominator_ = 1;
};

// A domain together with a function over it, as read from or written to an
// instance document.
struct Instance {
  ProductDomain domain;
  CostFunction function;
};

}  // namespace treesub

#endif  // TREESUB_COST_FUNCTION_HPP_
