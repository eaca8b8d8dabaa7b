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

#include "treesub/weak_encoder.hpp"

#include <string>

#include "treesub/error.hpp"

namespace treesub {

std::variant<ForkTree, NotFork> Recognize(const RootedTree& tree) {
  ForkTree fork;
  Node v = tree.root();
  for (;;) {
    fork.chain.push_back(v);
    const auto children = tree.children(v);
    if (children.size() == 1) {
      v = children[0];
      continue;
    }
    if (children.empty()) break;
    if (children.size() > 2) {
      return NotFork{"node " + std::to_string(v) + " has " +
                     std::to_string(children.size()) + " children"};
    }
    for (Node c : children) {
      if (!tree.children(c).empty()) {
        return NotFork{"node " + std::to_string(v) +
                       " branches but child " + std::to_string(c) +
                       " is not a leaf"};
      }
    }
    fork.fork_minus = children[0];
    fork.fork_plus = children[1];
    break;
  }
  fork.K = static_cast<int>(fork.chain.size()) - 1;
  return fork;
}

namespace {

// Chain position of node x, or -1 / +1 marker via the out parameter.
int ChainPosition(const ForkTree& fork, Node x, int* fork_sign) {
  *fork_sign = 0;
  if (fork.fork_minus == x) {
    *fork_sign = -1;
    return fork.K;
  }
  if (fork.fork_plus == x) {
    *fork_sign = 1;
    return fork.K;
  }
  for (int k = 0; k <= fork.K; ++k) {
    if (fork.chain[k] == x) return k;
  }
  throw DomainError("label " + std::to_string(x) + " is not in the fork tree");
}

}  // namespace

SignVector Psi(const ForkTree& fork, Node x) {
  int fork_sign = 0;
  const int k = ChainPosition(fork, x, &fork_sign);
  SignVector y(fork.K + 1, 0);
  for (int j = 0; j < k; ++j) y[j] = 1;
  y[fork.K] = static_cast<std::int8_t>(fork_sign);
  return y;
}

Node PsiInverse(const ForkTree& fork, std::span<const std::int8_t> y) {
  if (static_cast<int>(y.size()) != fork.K + 1) {
    throw NotInImage("encoded vector has length " + std::to_string(y.size()) +
                     ", expected " + std::to_string(fork.K + 1));
  }
  int ones = 0;
  while (ones < fork.K && y[ones] == 1) ++ones;
  for (int j = ones; j < fork.K; ++j) {
    if (y[j] != 0) throw NotInImage("binary coordinates are not a prefix of ones");
  }
  const std::int8_t last = y[fork.K];
  if (last == 0) return fork.chain[ones];
  if (ones != fork.K || !fork.has_fork() || (last != 1 && last != -1)) {
    throw NotInImage("ternary coordinate set outside the fork");
  }
  return last < 0 ? *fork.fork_minus : *fork.fork_plus;
}

namespace {

bool InPsiImage(const ForkTree& fork, std::span<const std::int8_t> y) {
  int ones = 0;
  while (ones < fork.K && y[ones] == 1) ++ones;
  for (int j = ones; j < fork.K; ++j) {
    if (y[j] != 0) return false;
  }
  return y[fork.K] == 0 || (ones == fork.K && fork.has_fork());
}

}  // namespace

Node SignToNode(std::int8_t s) { return s == 0 ? 0 : (s < 0 ? 1 : 2); }
std::int8_t NodeToSign(Node v) { return v == 0 ? 0 : (v == 1 ? -1 : 1); }

std::vector<RootedTree> EncodedTrees(const ForkTree& fork) {
  std::vector<RootedTree> trees(fork.K, trees::Chain(2));
  trees.push_back(fork.has_fork() ? trees::Bisubmodular() : trees::Chain(1));
  return trees;
}

namespace {

template <typename Op>
SignVector EncodedOp(const ForkTree& fork, std::span<const std::int8_t> a,
                     std::span<const std::int8_t> b, Op op) {
  const std::vector<RootedTree> trees = EncodedTrees(fork);
  SignVector out(fork.K + 1);
  for (int j = 0; j <= fork.K; ++j) {
    const bool ternary = j == fork.K;
    const Node u = ternary ? SignToNode(a[j]) : a[j];
    const Node v = ternary ? SignToNode(b[j]) : b[j];
    const Node r = op(trees[j], u, v);
    out[j] = ternary ? NodeToSign(r) : static_cast<std::int8_t>(r);
  }
  return out;
}

}  // namespace

SignVector EncodedWedge(const ForkTree& fork, std::span<const std::int8_t> a,
                        std::span<const std::int8_t> b) {
  return EncodedOp(fork, a, b, [](const RootedTree& t, Node u, Node v) {
    return WedgeVee(t, u, v).first;
  });
}

SignVector EncodedVee(const ForkTree& fork, std::span<const std::int8_t> a,
                      std::span<const std::int8_t> b) {
  return EncodedOp(fork, a, b, [](const RootedTree& t, Node u, Node v) {
    return WedgeVee(t, u, v).second;
  });
}

WeakResult MinimizeWeak(const CostFunction& f, const ProductDomain& domain,
                        std::uint64_t budget) {
  std::vector<ForkTree> forks;
  for (int i = 0; i < domain.n(); ++i) {
    auto r = Recognize(domain.tree(i));
    if (auto* bad = std::get_if<NotFork>(&r)) {
      throw UnsupportedStructure("tree " + std::to_string(i) +
                                 " is not a fork tree: " + bad->reason);
    }
    forks.push_back(std::get<ForkTree>(std::move(r)));
  }
  // Encoded box: block i occupies offset[i] .. offset[i] + K_i.
  std::vector<int> offset;
  SignBoxFunction g;
  for (const ForkTree& fork : forks) {
    offset.push_back(g.m);
    for (int j = 0; j < fork.K; ++j) g.allowed.push_back({false, true});
    g.allowed.push_back({fork.has_fork(), fork.has_fork()});
    g.m += fork.K + 1;
  }
  auto decode = [&](std::span<const std::int8_t> y) {
    Labeling x(domain.n());
    for (int i = 0; i < domain.n(); ++i) {
      x[i] = PsiInverse(forks[i], y.subspan(offset[i], forks[i].K + 1));
    }
    return x;
  };
  auto member = [&](std::span<const std::int8_t> y) {
    for (int i = 0; i < domain.n(); ++i) {
      if (!InPsiImage(forks[i], y.subspan(offset[i], forks[i].K + 1))) {
        return false;
      }
    }
    return true;
  };
  g.evaluate = [&](std::span<const std::int8_t> y) {
    return f.EvaluateUnchecked(decode(y));
  };
  const InnerResult best = BisubBrute(g, budget, member);
  return {decode(best.point), best.value};
}

}  // namespace treesub
