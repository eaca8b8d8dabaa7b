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

#include "treesub/cost_function.hpp"

#include <string>

#include "treesub/error.hpp"

namespace treesub {

CostFunction::CostFunction(std::vector<int> radices,
                           std::variant<DenseTable, SumOfTerms> body,
                           Value denominator)
    : radices_(std::move(radices)),
      body_(std::move(body)),
      denominator_(denominator) {
  Validate();
}

CostFunction::CostFunction(const ProductDomain& domain, DenseTable table,
                           Value denominator)
    : CostFunction({domain.radices().begin(), domain.radices().end()},
                   std::move(table), denominator) {}

CostFunction::CostFunction(const ProductDomain& domain, SumOfTerms sum,
                           Value denominator)
    : CostFunction({domain.radices().begin(), domain.radices().end()},
                   std::move(sum), denominator) {}

CostFunction CostFunction::Constant(const ProductDomain& domain, Value value) {
  return CostFunction(
      domain, DenseTable{std::vector<Value>(domain.size(), value)});
}

void CostFunction::Validate() const {
  if (denominator_ <= 0) throw InputError("denominator must be positive");
  std::int64_t size = 1;
  for (int r : radices_) size *= r;
  if (const auto* table = std::get_if<DenseTable>(&body_)) {
    if (static_cast<std::int64_t>(table->values.size()) != size) {
      throw InputError("table has " + std::to_string(table->values.size()) +
                       " values, domain size is " + std::to_string(size));
    }
    return;
  }
  const auto& sum = std::get<SumOfTerms>(body_);
  for (std::size_t t = 0; t < sum.terms.size(); ++t) {
    const Term& term = sum.terms[t];
    const std::string where = "term " + std::to_string(t) + ": ";
    if (term.scope.empty() || term.scope.size() > kMaxArity) {
      throw InputError(where + "arity must be between 1 and 3");
    }
    std::int64_t term_size = 1;
    for (std::size_t k = 0; k < term.scope.size(); ++k) {
      const int v = term.scope[k];
      if (v < 0 || v >= static_cast<int>(radices_.size())) {
        throw InputError(where + "scope variable " + std::to_string(v) +
                         " out of range");
      }
      for (std::size_t j = 0; j < k; ++j) {
        if (term.scope[j] == v) {
          throw InputError(where + "scope repeats variable " +
                           std::to_string(v));
        }
      }
      term_size *= radices_[v];
    }
    if (static_cast<std::int64_t>(term.values.size()) != term_size) {
      throw InputError(where + "has " + std::to_string(term.values.size()) +
                       " values, scope size is " + std::to_string(term_size));
    }
  }
}

Value CostFunction::Evaluate(std::span<const Node> x) const {
  if (x.size() != radices_.size()) {
    throw DomainError("labeling length " + std::to_string(x.size()) +
                      " does not match function arity " +
                      std::to_string(radices_.size()));
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0 || x[i] >= radices_[i]) {
      throw DomainError("label " + std::to_string(x[i]) + " of variable " +
                        std::to_string(i) + " out of range");
    }
  }
  return EvaluateUnchecked(x);
}

Value CostFunction::EvaluateUnchecked(std::span<const Node> x) const {
  if (const auto* table = std::get_if<DenseTable>(&body_)) {
    return table->values[MixedRadixRank(radices_, x)];
  }
  Value total = 0;
  for (const Term& term : std::get<SumOfTerms>(body_).terms) {
    std::int64_t rank = 0;
    for (int v : term.scope) rank = rank * radices_[v] + x[v];
    total += term.values[rank];
  }
  return total;
}

std::vector<Value> CostFunction::Tabulate() const {
  if (const auto* table = std::get_if<DenseTable>(&body_)) return table->values;
  std::int64_t size = 1;
  for (int r : radices_) size *= r;
  std::vector<Value> values(size);
  Labeling x(radices_.size(), 0);
  for (std::int64_t k = 0; k < size; ++k) {
    values[k] = EvaluateUnchecked(x);
    // Increment x as a mixed-radix counter, last variable fastest.
    for (int i = static_cast<int>(x.size()) - 1; i >= 0; --i) {
      if (++x[i] < radices_[i]) break;
      x[i] = 0;
    }
  }
  return values;
}

CostFunction CostFunction::Materialize() const {
  return CostFunction(radices_, DenseTable{Tabulate()}, denominator_);
}

}  // namespace treesub
