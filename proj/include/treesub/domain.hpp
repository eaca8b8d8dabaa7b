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

#ifndef TREESUB_DOMAIN_HPP_
#define TREESUB_DOMAIN_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "treesub/tree.hpp"

namespace treesub {

// One point of the product domain: labels[i] is a node of tree i.
using Labeling = std::vector<Node>;

// D = D_1 x ... x D_n. Labelings are ranked mixed-radix with variable 0 as
// the most significant digit.
class ProductDomain {
 public:
  // Throws InputError when `trees` is empty or the product overflows 2^62.
  explicit ProductDomain(std::vector<RootedTree> trees);

  int n() const { return static_cast<int>(trees_.size()); }
  const RootedTree& tree(int i) const { return trees_.at(i); }
  const std::vector<RootedTree>& trees() const { return trees_; }
  std::int64_t size() const { return size_; }
  // |D_i| for each variable.
  std::span<const int> radices() const { return radices_; }
  // K = max_i |D_i|.
  int max_label_count() const;
  bool all_binary() const;

  // Throws DomainError unless x has length n and every label is valid.
  void Validate(std::span<const Node> x) const;

  std::int64_t Rank(std::span<const Node> x) const;
  Labeling Unrank(std::int64_t k) const;
  Labeling Roots() const;

  friend bool operator==(const ProductDomain& a, const ProductDomain& b) {
    return a.trees_ == b.trees_;
  }

 private:
  std::vector<RootedTree> trees_;
  std::vector<int> radices_;
  std::int64_t size_ = 1;
};

// l_inf distance max_i rho(x_i, y_i).
int RhoInf(const ProductDomain& domain, std::span<const Node> x,
           std::span<const Node> y);

// Coordinatewise ancestor order x ⪯ y.
bool Precedes(const ProductDomain& domain, std::span<const Node> x,
              std::span<const Node> y);

// Mixed-radix rank of `digits` against `radices` (first digit most
// significant). Shared by labelings and sum-of-terms scopes.
std::int64_t MixedRadixRank(std::span<const int> radices,
                            std::span<const Node> digits);

}  // namespace treesub

#endif  // TREESUB_DOMAIN_HPP_
