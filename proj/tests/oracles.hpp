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

// Reference implementations used only by the tests. They follow the
// definitions literally (walk to the root, enumerate, compare) and share no
// code with the library beyond the data types, so agreement between the two
// is meaningful.

#ifndef TREESUB_TESTS_ORACLES_HPP_
#define TREESUB_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "treesub/cost_function.hpp"
#include "treesub/inner_solvers.hpp"
#include "treesub/random.hpp"
#include "treesub/tree.hpp"

namespace treesub::oracle {

// v, parent(v), ..., root.
inline std::vector<Node> ToRoot(const RootedTree& t, Node v) {
  std::vector<Node> out{v};
  while (t.parents()[out.back()] != kNoParent) out.push_back(t.parents()[out.back()]);
  return out;
}

inline bool Ancestor(const RootedTree& t, Node a, Node b) {
  const auto up = ToRoot(t, b);
  return std::find(up.begin(), up.end(), a) != up.end();
}

inline std::vector<Node> PathNodes(const RootedTree& t, Node a, Node b) {
  const auto ua = ToRoot(t, a);
  const auto ub = ToRoot(t, b);
  std::size_t ia = 0;
  std::size_t ib = 0;
  for (ia = 0; ia < ua.size(); ++ia) {
    const auto it = std::find(ub.begin(), ub.end(), ua[ia]);
    if (it != ub.end()) {
      ib = static_cast<std::size_t>(it - ub.begin());
      break;
    }
  }
  std::vector<Node> path(ua.begin(), ua.begin() + ia + 1);
  for (std::size_t k = ib; k-- > 0;) path.push_back(ub[k]);
  return path;
}

inline int Distance(const RootedTree& t, Node a, Node b) {
  return static_cast<int>(PathNodes(t, a, b).size()) - 1;
}

inline Node NodeAt(const RootedTree& t, Node a, Node b, int d) {
  const auto p = PathNodes(t, a, b);
  return p[std::min<std::size_t>(d, p.size() - 1)];
}

inline std::pair<Node, Node> MeetJoin(const RootedTree& t, Node a, Node b) {
  const int d = Distance(t, a, b);
  Node p = NodeAt(t, a, b, d / 2);
  Node q = NodeAt(t, a, b, (d + 1) / 2);
  if (!Ancestor(t, p, q)) std::swap(p, q);
  return {p, q};
}

inline std::pair<Node, Node> WedgeVee(const RootedTree& t, Node a, Node b) {
  // The apex is the path node of least depth.
  const auto p = PathNodes(t, a, b);
  Node apex = p[0];
  for (Node v : p) {
    if (ToRoot(t, v).size() < ToRoot(t, apex).size()) apex = v;
  }
  return {apex, NodeAt(t, a, b, Distance(t, apex, b))};
}

// a up^d b = P[a->b, d] wedge b, and a down_d b = P[a->b, rho(up, b)].
inline std::pair<Node, Node> UpDown(const RootedTree& t, Node a, Node b, int d) {
  const Node up = oracle::WedgeVee(t, NodeAt(t, a, b, d), b).first;
  return {up, NodeAt(t, a, b, Distance(t, up, b))};
}

// Calls visit(x) for every labeling, variable 0 most significant.
inline void ForEachLabeling(const std::vector<int>& radices,
                            const std::function<void(const Labeling&)>& visit) {
  Labeling x(radices.size(), 0);
  for (;;) {
    visit(x);
    int i = static_cast<int>(x.size()) - 1;
    while (i >= 0 && ++x[i] == radices[i]) x[i--] = 0;
    if (i < 0) return;
  }
}

inline std::vector<int> Radices(const ProductDomain& domain) {
  return {domain.radices().begin(), domain.radices().end()};
}

inline Value MinValue(const CostFunction& f, const ProductDomain& domain) {
  Value best = INT64_MAX;
  ForEachLabeling(Radices(domain), [&](const Labeling& x) {
    best = std::min(best, f.Evaluate(x));
  });
  return best;
}

using BinaryOp = std::function<std::pair<Node, Node>(const RootedTree&, Node, Node)>;

// Exhaustive f(x)+f(y) >= f(first)+f(second) over all ordered pairs.
inline bool Holds(const CostFunction& f, const ProductDomain& domain,
                  const BinaryOp& op) {
  std::vector<Labeling> all;
  ForEachLabeling(Radices(domain), [&](const Labeling& x) { all.push_back(x); });
  for (const Labeling& x : all) {
    for (const Labeling& y : all) {
      Labeling p(x.size());
      Labeling q(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) {
        std::tie(p[i], q[i]) = op(domain.tree(static_cast<int>(i)), x[i], y[i]);
      }
      if (f.Evaluate(x) + f.Evaluate(y) < f.Evaluate(p) + f.Evaluate(q)) return false;
    }
  }
  return true;
}

inline bool StronglySubmodular(const CostFunction& f, const ProductDomain& d) {
  return Holds(f, d, oracle::MeetJoin);
}
inline bool WeaklySubmodular(const CostFunction& f, const ProductDomain& d) {
  return Holds(f, d, oracle::WedgeVee);
}
inline bool TranslationSubmodular(const CostFunction& f, const ProductDomain& d) {
  int max_height = 0;
  for (const RootedTree& t : d.trees()) max_height = std::max(max_height, 2 * t.height());
  for (int s = 0; s <= max_height; ++s) {
    const auto op = [s](const RootedTree& t, Node a, Node b) {
      return oracle::UpDown(t, a, b, s);
    };
    if (!Holds(f, d, op)) return false;
  }
  return true;
}

// Submodularity of a set function over the free coordinates.
inline bool CubeSubmodular(const BinaryCubeFunction& g) {
  const int k = static_cast<int>(g.free.size());
  auto at = [&](std::uint32_t mask) {
    SignVector v(g.m, 0);
    for (int j = 0; j < k; ++j) v[g.free[j]] = (mask >> j) & 1;
    return g.evaluate(v);
  };
  for (std::uint32_t a = 0; a < (1u << k); ++a) {
    for (std::uint32_t b = 0; b < (1u << k); ++b) {
      if (at(a) + at(b) < at(a & b) + at(a | b)) return false;
    }
  }
  return true;
}

inline std::vector<SignVector> BoxPoints(const SignBoxFunction& h) {
  std::vector<SignVector> out{SignVector{}};
  for (int i = 0; i < h.m; ++i) {
    std::vector<SignVector> next;
    for (const SignVector& p : out) {
      for (int s = -1; s <= 1; ++s) {
        if (!h.Allows(i, s)) continue;
        SignVector q = p;
        q.push_back(static_cast<std::int8_t>(s));
        next.push_back(std::move(q));
      }
    }
    out = std::move(next);
  }
  return out;
}

// Bisubmodularity: meet keeps agreeing signs, join is sign(a + b).
inline bool Bisubmodular(const SignBoxFunction& h) {
  const auto points = BoxPoints(h);
  for (const SignVector& x : points) {
    for (const SignVector& y : points) {
      SignVector meet(h.m);
      SignVector join(h.m);
      for (int i = 0; i < h.m; ++i) {
        meet[i] = x[i] == y[i] ? x[i] : 0;
        const int s = x[i] + y[i];
        join[i] = static_cast<std::int8_t>((s > 0) - (s < 0));
      }
      if (h.evaluate(x) + h.evaluate(y) < h.evaluate(meet) + h.evaluate(join)) {
        return false;
      }
    }
  }
  return true;
}

inline Value BoxMin(const SignBoxFunction& h) {
  Value best = INT64_MAX;
  for (const SignVector& p : BoxPoints(h)) best = std::min(best, h.evaluate(p));
  return best;
}

inline Value CubeMin(const BinaryCubeFunction& g) {
  Value best = INT64_MAX;
  const int k = static_cast<int>(g.free.size());
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    SignVector v(g.m, 0);
    for (int j = 0; j < k; ++j) v[g.free[j]] = (mask >> j) & 1;
    best = std::min(best, g.evaluate(v));
  }
  return best;
}

// Weighted graph cut plus modular terms: submodular by construction.
inline BinaryCubeFunction RandomCutFunction(Rng& rng, int m) {
  std::vector<Value> weight(m * m, 0);
  std::vector<Value> modular(m);
  for (int i = 0; i < m; ++i) {
    modular[i] = rng.Uniform(-10, 10);
    for (int j = i + 1; j < m; ++j) weight[i * m + j] = rng.Uniform(0, 6);
  }
  BinaryCubeFunction g;
  g.m = m;
  for (int i = 0; i < m; ++i) g.free.push_back(i);
  g.evaluate = [m, weight, modular](std::span<const std::int8_t> v) {
    Value total = 0;
    for (int i = 0; i < m; ++i) {
      if (v[i]) total += modular[i];
      for (int j = i + 1; j < m; ++j) {
        if (v[i] != v[j]) total += weight[i * m + j];
      }
    }
    return total;
  };
  return g;
}

// Sum of rejection-sampled bisubmodular unary and pairwise tables.
inline SignBoxFunction RandomBisubmodular(Rng& rng, int m) {
  using Table = std::vector<Value>;  // 3 or 9 entries, sign + 1 indexed
  auto sample_unary = [&] {
    for (;;) {
      Table t{rng.Uniform(-8, 8), rng.Uniform(-8, 8), rng.Uniform(-8, 8)};
      if (t[0] + t[2] >= 2 * t[1]) return t;
    }
  };
  auto pair_ok = [](const Table& t) {
    SignBoxFunction h;
    h.m = 2;
    h.allowed = {{true, true}, {true, true}};
    h.evaluate = [&t](std::span<const std::int8_t> s) {
      return t[(s[0] + 1) * 3 + (s[1] + 1)];
    };
    return Bisubmodular(h);
  };
  auto sample_pair = [&] {
    for (;;) {
      Table t(9);
      for (Value& v : t) v = rng.Uniform(0, 8);
      if (pair_ok(t)) return t;
    }
  };
  std::vector<Table> unary;
  std::vector<std::pair<std::pair<int, int>, Table>> pairs;
  for (int i = 0; i < m; ++i) unary.push_back(sample_unary());
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (rng.Chance(1, 2)) pairs.push_back({{i, j}, sample_pair()});
    }
  }
  SignBoxFunction h;
  h.m = m;
  h.allowed.assign(m, {true, true});
  h.evaluate = [unary, pairs](std::span<const std::int8_t> s) {
    Value total = 0;
    for (std::size_t i = 0; i < unary.size(); ++i) total += unary[i][s[i] + 1];
    for (const auto& [scope, t] : pairs) {
      total += t[(s[scope.first] + 1) * 3 + (s[scope.second] + 1)];
    }
    return total;
  };
  return h;
}

}  // namespace treesub::oracle

#endif  // TREESUB_TESTS_ORACLES_HPP_
