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

#include "treesub/descent.hpp"

#include <algorithm>
#include <string>

#include "treesub/error.hpp"

namespace treesub {

Labeling ApplyInward(const ProductDomain& domain, const Labeling& x,
                     std::span<const std::int8_t> indicator) {
  Labeling y = x;
  for (int i = 0; i < domain.n(); ++i) {
    if (indicator[i] != 0) y[i] = domain.tree(i).parent(x[i]);
  }
  return y;
}

Labeling ApplyOutward(const ProductDomain& domain, const Labeling& x,
                      std::span<const std::int8_t> signs) {
  Labeling y = x;
  for (int i = 0; i < domain.n(); ++i) {
    if (signs[i] != 0) {
      y[i] = domain.tree(i).children(x[i])[signs[i] < 0 ? 0 : 1];
    }
  }
  return y;
}

BinaryCubeFunction InwardRestrict(const CostFunction& f,
                                  const ProductDomain& domain,
                                  const Labeling& x) {
  domain.Validate(x);
  BinaryCubeFunction g;
  g.m = domain.n();
  for (int i = 0; i < domain.n(); ++i) {
    if (x[i] != domain.tree(i).root()) g.free.push_back(i);
  }
  g.evaluate = [&f, &domain, x](std::span<const std::int8_t> indicator) {
    return f.EvaluateUnchecked(ApplyInward(domain, x, indicator));
  };
  return g;
}

namespace {

void RequireBinary(const ProductDomain& domain) {
  for (int i = 0; i < domain.n(); ++i) {
    const RootedTree& t = domain.tree(i);
    for (Node v = 0; v < t.node_count(); ++v) {
      if (t.children(v).size() > 2) {
        throw UnsupportedStructure(
            "tree " + std::to_string(i) + " is not binary: node " +
            std::to_string(v) + " has " + std::to_string(t.children(v).size()) +
            " children");
      }
    }
  }
}

}  // namespace

SignBoxFunction OutwardRestrict(const CostFunction& f,
                                const ProductDomain& domain,
                                const Labeling& x) {
  domain.Validate(x);
  RequireBinary(domain);
  SignBoxFunction h;
  h.m = domain.n();
  h.allowed.resize(h.m);
  for (int i = 0; i < domain.n(); ++i) {
    const auto children = domain.tree(i).children(x[i]);
    h.allowed[i].minus = !children.empty();
    h.allowed[i].plus = children.size() > 1;
  }
  h.evaluate = [&f, &domain, x](std::span<const std::int8_t> signs) {
    return f.EvaluateUnchecked(ApplyOutward(domain, x, signs));
  };
  return h;
}

namespace {

InnerResult SolveInward(const CostFunction& f, const ProductDomain& domain,
                        const Labeling& x, const DescentOptions& options) {
  const BinaryCubeFunction g = InwardRestrict(f, domain, x);
  return options.engine == Engine::kBrute ? SfmBrute(g)
                                          : SfmWolfe(g, options.min_norm);
}

InnerResult SolveOutward(const CostFunction& f, const ProductDomain& domain,
                         const Labeling& x, const DescentOptions& options) {
  const SignBoxFunction h = OutwardRestrict(f, domain, x);
  return options.engine == Engine::kBrute ? BisubBrute(h)
                                          : BisubMinNorm(h, options.min_norm);
}

}  // namespace

DescentResult Minimize(const CostFunction& f, const ProductDomain& domain,
                       const DescentOptions& options) {
  RequireBinary(domain);
  DescentResult result;
  result.minimizer = options.start.value_or(domain.Roots());
  domain.Validate(result.minimizer);
  Labeling& x = result.minimizer;
  Value value = f.EvaluateUnchecked(x);

  DescentTrace& trace = result.trace;
  trace.K = domain.max_label_count();
  trace.values.push_back(value);
  if (options.diagnostics) {
    trace.start_rho_minus = RhoMinus(f, domain, x, options.ideal_budget);
    trace.start_rho_plus = RhoPlus(f, domain, x, options.ideal_budget);
  }

  auto record = [&](int stage) {
    DescentStep step{stage, x, value, {}, {}, {}};
    if (options.diagnostics) {
      step.rho_minus = RhoMinus(f, domain, x, options.ideal_budget);
      step.rho_plus = RhoPlus(f, domain, x, options.ideal_budget);
      if (stage == 2) {
        step.inward_optimal =
            SolveInward(f, domain, x, options).value == value;
      }
    }
    trace.steps.push_back(std::move(step));
    trace.values.push_back(value);
  };

  const int cap = trace.K + 1;
  for (;;) {
    const InnerResult in = SolveInward(f, domain, x, options);
    if (in.value >= value) break;
    if (trace.s1_steps == cap) {
      throw IterationBoundViolation(
          "INWARD stage exceeded " + std::to_string(cap) +
          " accepted steps; the function is not strongly tree-submodular");
    }
    x = ApplyInward(domain, x, in.point);
    value = in.value;
    ++trace.s1_steps;
    record(1);
  }
  for (;;) {
    const InnerResult out = SolveOutward(f, domain, x, options);
    if (out.value >= value) break;
    if (trace.s2_steps == cap) {
      throw IterationBoundViolation(
          "OUTWARD stage exceeded " + std::to_string(cap) +
          " accepted steps; the function is not strongly tree-submodular");
    }
    x = ApplyOutward(domain, x, out.point);
    value = out.value;
    ++trace.s2_steps;
    record(2);
  }
  trace.inward_optimal = SolveInward(f, domain, x, options).value == value;
  trace.outward_optimal = SolveOutward(f, domain, x, options).value == value;
  result.value = value;
  return result;
}

BruteResult BruteForceMinimize(const CostFunction& f,
                               const ProductDomain& domain,
                               std::uint64_t budget) {
  if (budget == 0) budget = BudgetFromEnv(kDefaultIdealBudget);
  if (static_cast<std::uint64_t>(domain.size()) > budget) {
    throw BudgetExceeded("global scan over " + std::to_string(domain.size()) +
                         " labelings exceeds budget " + std::to_string(budget));
  }
  const std::vector<Value> values = f.Tabulate();
  const auto best = std::min_element(values.begin(), values.end());
  return {domain.Unrank(best - values.begin()), *best};
}

namespace {

// Minimum distance from x to an argmin of f over the product of the given
// per-variable candidate lists (node, distance to x_i).
int RhoOverBox(const CostFunction& f,
               const std::vector<std::vector<std::pair<Node, int>>>& options,
               std::uint64_t budget) {
  if (budget == 0) budget = BudgetFromEnv(kDefaultIdealBudget);
  std::uint64_t size = 1;
  for (const auto& o : options) {
    size *= o.size();
    if (size > budget) {
      throw BudgetExceeded("order ideal/filter enumeration exceeds budget " +
                           std::to_string(budget));
    }
  }
  const int n = static_cast<int>(options.size());
  std::vector<std::size_t> pos(n, 0);
  Labeling y(n);
  Value best_value = 0;
  int best_rho = 0;
  for (std::uint64_t step = 0; step < size; ++step) {
    int rho = 0;
    for (int i = 0; i < n; ++i) {
      y[i] = options[i][pos[i]].first;
      rho = std::max(rho, options[i][pos[i]].second);
    }
    const Value v = f.EvaluateUnchecked(y);
    if (step == 0 || v < best_value || (v == best_value && rho < best_rho)) {
      best_value = v;
      best_rho = rho;
    }
    for (int i = n - 1; i >= 0; --i) {
      if (++pos[i] < options[i].size()) break;
      pos[i] = 0;
    }
  }
  return best_rho;
}

}  // namespace

int RhoMinus(const CostFunction& f, const ProductDomain& domain,
             const Labeling& x, std::uint64_t budget) {
  domain.Validate(x);
  std::vector<std::vector<std::pair<Node, int>>> options(domain.n());
  for (int i = 0; i < domain.n(); ++i) {
    const RootedTree& t = domain.tree(i);
    int dist = 0;
    for (Node v = x[i]; v != kNoParent; v = t.parent(v)) {
      options[i].push_back({v, dist++});
    }
  }
  return RhoOverBox(f, options, budget);
}

int RhoPlus(const CostFunction& f, const ProductDomain& domain,
            const Labeling& x, std::uint64_t budget) {
  domain.Validate(x);
  std::vector<std::vector<std::pair<Node, int>>> options(domain.n());
  for (int i = 0; i < domain.n(); ++i) {
    const RootedTree& t = domain.tree(i);
    std::vector<Node> stack = {x[i]};
    while (!stack.empty()) {
      const Node v = stack.back();
      stack.pop_back();
      options[i].push_back({v, t.depth(v) - t.depth(x[i])});
      for (Node c : t.children(v)) stack.push_back(c);
    }
  }
  return RhoOverBox(f, options, budget);
}

}  // namespace treesub
