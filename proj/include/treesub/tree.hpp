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

#ifndef TREESUB_TREE_HPP_
#define TREESUB_TREE_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace treesub {

// Nodes are dense ids 0..node_count-1.
using Node = std::int32_t;
inline constexpr Node kNoParent = -1;

// A rooted tree used as the label domain of one variable. Children keep the
// order in which they appear in the parent array; for binary nodes child 0
// reads as sign -1 and child 1 as sign +1.
class RootedTree {
 public:
  // Validates `parent` (exactly one -1 entry, all other entries in range,
  // acyclic). Throws InputError on failure.
  static RootedTree FromParents(std::vector<Node> parent);

  int node_count() const { return static_cast<int>(parent_.size()); }
  Node root() const { return root_; }
  Node parent(Node v) const { return parent_[Checked(v)]; }
  std::span<const Node> children(Node v) const { return children_[Checked(v)]; }
  int depth(Node v) const { return depth_[Checked(v)]; }
  int height() const { return height_; }
  const std::vector<Node>& parents() const { return parent_; }

  bool is_binary() const;
  bool is_valid(Node v) const { return v >= 0 && v < node_count(); }

  // a ⪯ b: a lies on the path from b to the root.
  bool IsAncestor(Node a, Node b) const;

  // Throws DomainError if v is not a node of this tree.
  Node Checked(Node v) const;

  friend bool operator==(const RootedTree& a, const RootedTree& b) {
    return a.parent_ == b.parent_;
  }

 private:
  RootedTree() = default;

  std::vector<Node> parent_;
  std::vector<std::vector<Node>> children_;
  std::vector<int> depth_;
  Node root_ = 0;
  int height_ = 0;
};

// The unique path a -> b. `nodes[0] == a`, `nodes[length()] == b`.
struct PathView {
  Node a = 0;
  Node b = 0;
  Node apex = 0;  // highest common ancestor of a and b
  int apex_index = 0;  // position of apex in `nodes`, i.e. rho(a, apex)
  std::vector<Node> nodes;

  int length() const { return static_cast<int>(nodes.size()) - 1; }
  // Renamed coordinate of nodes[k]: apex is 0, a is <= 0, b is >= 0.
  int Renamed(int k) const { return k - apex_index; }
  // Inverse of Renamed().
  Node AtRenamed(int r) const { return nodes[r + apex_index]; }
};

PathView Path(const RootedTree& tree, Node a, Node b);

// P[a->b, d]; saturates at b when d > rho(a, b).
Node PathNode(const RootedTree& tree, Node a, Node b, int d);

int Rho(const RootedTree& tree, Node a, Node b);

// (a ⊓ b, a ⊔ b): the midpoint pair of the path, ancestor first.
std::pair<Node, Node> MeetJoin(const RootedTree& tree, Node a, Node b);

// (a ∧ b, a ∨ b): apex, and the path label at distance rho(apex, b) from a.
std::pair<Node, Node> WedgeVee(const RootedTree& tree, Node a, Node b);

// (a ↑^d b, a ↓_d b). With the path renamed so that the apex is 0:
// up = max(0, min(a + d, b)), down = a + b - up.
std::pair<Node, Node> UpDown(const RootedTree& tree, Node a, Node b, int d);

// Per-tree |D|x|D| tables of a binary operation pair, row-major in (a, b).
struct OpTable {
  int size = 0;
  std::vector<Node> first;
  std::vector<Node> second;

  Node First(Node a, Node b) const { return first[a * size + b]; }
  Node Second(Node a, Node b) const { return second[a * size + b]; }
};

OpTable MeetJoinTable(const RootedTree& tree);
OpTable WedgeVeeTable(const RootedTree& tree);
OpTable UpDownTable(const RootedTree& tree, int d);
OpTable ProjectionTable(const RootedTree& tree);

// Canonical small trees used throughout tests, fixtures and the CLI.
namespace trees {

// 0 - 1 - ... - (k-1), rooted at 0; node id equals depth.
RootedTree Chain(int node_count);
// Root 0 with children 1 (-1) and 2 (+1).
RootedTree Bisubmodular();
// Chain 0..k plus two leaves under k (ids k+1 -> K_{-1}, k+2 -> K_{+1}).
RootedTree Fork(int k);
// Complete binary tree of the given height, breadth-first ids.
RootedTree CompleteBinary(int height);

}  // namespace trees

std::string DescribeTree(const RootedTree& tree);

}  // namespace treesub

#endif  // TREESUB_TREE_HPP_
