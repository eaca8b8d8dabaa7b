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

#include "treesub/domain.hpp"

#include <algorithm>
#include <string>

#include "treesub/error.hpp"

namespace treesub {

namespace {
constexpr std::int64_t kMaxDomainSize = std::int64_t{1} << 62;
}  // namespace

ProductDomain::ProductDomain(std::vector<RootedTree> trees)
    : trees_(std::move(trees)) {
  if (trees_.empty()) throw InputError("domain needs at least one variable");
  radices_.reserve(trees_.size());
  for (const RootedTree& t : trees_) {
    radices_.push_back(t.node_count());
    if (size_ > kMaxDomainSize / t.node_count()) {
      throw InputError("domain size overflows 2^62");
    }
    size_ *= t.node_count();
  }
}

int ProductDomain::max_label_count() const {
  return *std::max_element(radices_.begin(), radices_.end());
}

bool ProductDomain::all_binary() const {
  return std::all_of(trees_.begin(), trees_.end(),
                     [](const RootedTree& t) { return t.is_binary(); });
}

void ProductDomain::Validate(std::span<const Node> x) const {
  if (static_cast<int>(x.size()) != n()) {
    throw DomainError("labeling has " + std::to_string(x.size()) +
                      " labels, domain has " + std::to_string(n()) +
                      " variables");
  }
  for (int i = 0; i < n(); ++i) {
    if (!trees_[i].is_valid(x[i])) {
      throw DomainError("label " + std::to_string(x[i]) + " of variable " +
                        std::to_string(i) + " out of range [0, " +
                        std::to_string(radices_[i]) + ")");
    }
  }
}

std::int64_t ProductDomain::Rank(std::span<const Node> x) const {
  Validate(x);
  return MixedRadixRank(radices_, x);
}

Labeling ProductDomain::Unrank(std::int64_t k) const {
  if (k < 0 || k >= size_) {
    throw DomainError("rank " + std::to_string(k) + " out of range [0, " +
                      std::to_string(size_) + ")");
  }
  Labeling x(n());
  for (int i = n() - 1; i >= 0; --i) {
    x[i] = static_cast<Node>(k % radices_[i]);
    k /= radices_[i];
  }
  return x;
}

Labeling ProductDomain::Roots() const {
  Labeling x(n());
  for (int i = 0; i < n(); ++i) x[i] = trees_[i].root();
  return x;
}

int RhoInf(const ProductDomain& domain, std::span<const Node> x,
           std::span<const Node> y) {
  domain.Validate(x);
  domain.Validate(y);
  int rho = 0;
  for (int i = 0; i < domain.n(); ++i) {
    rho = std::max(rho, Rho(domain.tree(i), x[i], y[i]));
  }
  return rho;
}

bool Precedes(const ProductDomain& domain, std::span<const Node> x,
              std::span<const Node> y) {
  domain.Validate(x);
  domain.Validate(y);
  for (int i = 0; i < domain.n(); ++i) {
    if (!domain.tree(i).IsAncestor(x[i], y[i])) return false;
  }
  return true;
}

std::int64_t MixedRadixRank(std::span<const int> radices,
                            std::span<const Node> digits) {
  std::int64_t rank = 0;
  for (std::size_t i = 0; i < radices.size(); ++i) {
    rank = rank * radices[i] + digits[i];
  }
  return rank;
}

}  // namespace treesub
