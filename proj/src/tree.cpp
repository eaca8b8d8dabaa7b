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

#include "treesub/tree.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "treesub/error.hpp"

namespace treesub {

std::uint64_t BudgetFromEnv(std::uint64_t fallback) {
  const char* env = std::getenv("TREESUB_BUDGET");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || value == 0) return fallback;
  return value;
}

RootedTree RootedTree::FromParents(std::vector<Node> parent) {
  const int n = static_cast<int>(parent.size());
  if (n == 0) throw InputError("tree must have at least one node");
  RootedTree tree;
  int roots = 0;
  for (int v = 0; v < n; ++v) {
    if (parent[v] == kNoParent) {
      ++roots;
      tree.root_ = v;
    } else if (parent[v] < 0 || parent[v] >= n) {
      throw InputError("node " + std::to_string(v) + ": parent " +
                       std::to_string(parent[v]) + " out of range");
    } else if (parent[v] == v) {
      throw InputError("node " + std::to_string(v) + " is its own parent");
    }
  }
  if (roots != 1) {
    throw InputError("expected exactly one root (parent -1), found " +
                     std::to_string(roots));
  }
  tree.children_.assign(n, {});
  for (int v = 0; v < n; ++v) {
    if (parent[v] != kNoParent) tree.children_[parent[v]].push_back(v);
  }
  // Depths by BFS from the root; nodes never reached sit on a cycle.
  tree.depth_.assign(n, -1);
  std::vector<Node> queue = {tree.root_};
  tree.depth_[tree.root_] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Node u = queue[head];
    for (Node c : tree.children_[u]) {
      tree.depth_[c] = tree.depth_[u] + 1;
      tree.height_ = std::max(tree.height_, tree.depth_[c]);
      queue.push_back(c);
    }
  }
  if (static_cast<int>(queue.size()) != n) {
    throw InputError("parent array contains a cycle");
  }
  tree.parent_ = std::move(parent);
  return tree;
}

bool RootedTree::is_binary() const {
  return std::all_of(children_.begin(), children_.end(),
                     [](const auto& c) { return c.size() <= 2; });
}

bool RootedTree::IsAncestor(Node a, Node b) const {
  Checked(a);
  Checked(b);
  while (depth_[b] > depth_[a]) b = parent_[b];
  return a == b;
}

Node RootedTree::Checked(Node v) const {
  if (!is_valid(v)) {
    throw DomainError("node id " + std::to_string(v) + " out of range [0, " +
                      std::to_string(node_count()) + ")");
  }
  return v;
}

PathView Path(const RootedTree& tree, Node a, Node b) {
  tree.Checked(a);
  tree.Checked(b);
  // Walk the deeper endpoint up to equal depth, then both in lockstep.
  std::vector<Node> from_a = {a};
  std::vector<Node> from_b = {b};
  while (tree.depth(from_a.back()) > tree.depth(from_b.back())) {
    from_a.push_back(tree.parent(from_a.back()));
  }
  while (tree.depth(from_b.back()) > tree.depth(from_a.back())) {
    from_b.push_back(tree.parent(from_b.back()));
  }
  while (from_a.back() != from_b.back()) {
    from_a.push_back(tree.parent(from_a.back()));
    from_b.push_back(tree.parent(from_b.back()));
  }
  PathView view;
  view.a = a;
  view.b = b;
  view.apex = from_a.back();
  view.apex_index = static_cast<int>(from_a.size()) - 1;
  view.nodes = std::move(from_a);
  view.nodes.insert(view.nodes.end(), from_b.rbegin() + 1, from_b.rend());
  return view;
}

Node PathNode(const RootedTree& tree, Node a, Node b, int d) {
  if (d < 0) throw DomainError("path offset must be non-negative");
  const PathView path = Path(tree, a, b);
  return path.nodes[std::min(d, path.length())];
}

int Rho(const RootedTree& tree, Node a, Node b) {
  tree.Checked(a);
  tree.Checked(b);
  int rho = 0;
  while (tree.depth(a) > tree.depth(b)) a = tree.parent(a), ++rho;
  while (tree.depth(b) > tree.depth(a)) b = tree.parent(b), ++rho;
  while (a != b) a = tree.parent(a), b = tree.parent(b), rho += 2;
  return rho;
}

std::pair<Node, Node> MeetJoin(const RootedTree& tree, Node a, Node b) {
  const PathView path = Path(tree, a, b);
  const int d = path.length();
  const Node lo = path.nodes[d / 2];
  const Node hi = path.nodes[(d + 1) / 2];
  // The midpoint pair is equal or adjacent; the ancestor is the meet.
  if (tree.depth(lo) <= tree.depth(hi)) return {lo, hi};
  return {hi, lo};
}

std::pair<Node, Node> WedgeVee(const RootedTree& tree, Node a, Node b) {
  const PathView path = Path(tree, a, b);
  const int apex_to_b = path.length() - path.apex_index;
  return {path.apex, path.nodes[apex_to_b]};
}

std::pair<Node, Node> UpDown(const RootedTree& tree, Node a, Node b, int d) {
  if (d < 0) throw DomainError("translation offset must be non-negative");
  const PathView path = Path(tree, a, b);
  const int ra = path.Renamed(0);
  const int rb = path.Renamed(path.length());
  const int up = std::max(0, std::min(ra + d, rb));
  const int down = ra + rb - up;
  return {path.AtRenamed(up), path.AtRenamed(down)};
}

namespace {

template <typename Op>
OpTable Tabulate(const RootedTree& tree, Op op) {
  OpTable table;
  table.size = tree.node_count();
  table.first.resize(table.size * table.size);
  table.second.resize(table.size * table.size);
  for (Node a = 0; a < table.size; ++a) {
    for (Node b = 0; b < table.size; ++b) {
      const auto [p, q] = op(a, b);
      table.first[a * table.size + b] = p;
      table.second[a * table.size + b] = q;
    }
  }
  return table;
}

}  // namespace

OpTable MeetJoinTable(const RootedTree& tree) {
  return Tabulate(tree, [&](Node a, Node b) { return MeetJoin(tree, a, b); });
}

OpTable WedgeVeeTable(const RootedTree& tree) {
  return Tabulate(tree, [&](Node a, Node b) { return WedgeVee(tree, a, b); });
}

OpTable UpDownTable(const RootedTree& tree, int d) {
  return Tabulate(tree, [&](Node a, Node b) { return UpDown(tree, a, b, d); });
}

OpTable ProjectionTable(const RootedTree& tree) {
  return Tabulate(tree, [](Node a, Node b) { return std::pair{a, b}; });
}

namespace trees {

RootedTree Chain(int node_count) {
  std::vector<Node> parent(node_count);
  for (int v = 0; v < node_count; ++v) parent[v] = v - 1;
  return RootedTree::FromParents(std::move(parent));
}

RootedTree Bisubmodular() { return RootedTree::FromParents({-1, 0, 0}); }

RootedTree Fork(int k) {
  std::vector<Node> parent(k + 3);
  for (int v = 0; v <= k; ++v) parent[v] = v - 1;
  parent[k + 1] = k;
  parent[k + 2] = k;
  return RootedTree::FromParents(std::move(parent));
}

RootedTree CompleteBinary(int height) {
  const int n = (1 << (height + 1)) - 1;
  std::vector<Node> parent(n);
  parent[0] = kNoParent;
  for (int v = 1; v < n; ++v) parent[v] = (v - 1) / 2;
  return RootedTree::FromParents(std::move(parent));
}

}  // namespace trees

std::string DescribeTree(const RootedTree& tree) {
  std::ostringstream out;
  out << "[";
  for (int v = 0; v < tree.node_count(); ++v) {
    out << (v ? "," : "") << tree.parent(v);
  }
  out << "]";
  return out.str();
}

}  // namespace treesub
