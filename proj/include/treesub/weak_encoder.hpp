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

#ifndef TREESUB_WEAK_ENCODER_HPP_
#define TREESUB_WEAK_ENCODER_HPP_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "treesub/cost_function.hpp"
#include "treesub/domain.hpp"
#include "treesub/inner_solvers.hpp"

namespace treesub {

// A chain 0..K with two optional leaves K_{-1}, K_{+1} under the last chain
// node. Plain chains have no fork leaves.
struct ForkTree {
  int K = 0;
  std::vector<Node> chain;        // chain[k] is the node at chain position k
  std::optional<Node> fork_minus;  // first child of chain[K]
  std::optional<Node> fork_plus;   // second child of chain[K]

  bool has_fork() const { return fork_minus.has_value(); }
};

struct NotFork {
  std::string reason;
};

std::variant<ForkTree, NotFork> Recognize(const RootedTree& tree);

// psi(x): K binary coordinates followed by one ternary coordinate. Label k
// of the chain gives k leading ones; the fork leaves give all ones and a
// last coordinate of -1 / +1.
SignVector Psi(const ForkTree& fork, Node x);
// Throws NotInImage for vectors outside Im psi.
Node PsiInverse(const ForkTree& fork, std::span<const std::int8_t> y);

// The encoded domain of one fork tree: K two-node chains ({0,1}, root 0)
// and one star {-1,0,+1} (root 0; node ids 0 -> 0, 1 -> -1, 2 -> +1), or a
// single-node tree when there is no fork. Coordinates map to node ids via
// SignToNode / NodeToSign.
std::vector<RootedTree> EncodedTrees(const ForkTree& fork);
Node SignToNode(std::int8_t s);
std::int8_t NodeToSign(Node v);

// Coordinatewise ∧ / ∨ on encoded vectors of one fork tree.
SignVector EncodedWedge(const ForkTree& fork, std::span<const std::int8_t> a,
                        std::span<const std::int8_t> b);
SignVector EncodedVee(const ForkTree& fork, std::span<const std::int8_t> a,
                      std::span<const std::int8_t> b);

struct WeakResult {
  Labeling minimizer;
  Value value = 0;
};

// Minimizes g(psi(x)) = f(x) over the signed ring family Im psi (one block
// per variable) by brute force over the encoded box with an Im psi
// membership predicate. Every tree must be a fork tree.
WeakResult MinimizeWeak(const CostFunction& f, const ProductDomain& domain,
                        std::uint64_t budget = 0);

}  // namespace treesub

#endif  // TREESUB_WEAK_ENCODER_HPP_
