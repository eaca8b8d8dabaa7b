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

#include "treesub/inner_solvers.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "treesub/error.hpp"

namespace treesub {

std::uint64_t SignBoxFunction::BoxSize() const {
  std::uint64_t size = 1;
  for (const AllowedSigns& a : allowed) {
    const std::uint64_t options = 1 + a.minus + a.plus;
    if (size > (~std::uint64_t{0}) / 3) return ~std::uint64_t{0};
    size *= options;
  }
  return size;
}

InnerResult SfmBrute(const BinaryCubeFunction& g) {
  constexpr int kMaxFree = 20;
  const int k = static_cast<int>(g.free.size());
  if (k > kMaxFree) {
    throw BudgetExceeded("brute-force submodular minimization over " +
                         std::to_string(k) + " free coordinates (limit " +
                         std::to_string(kMaxFree) + ")");
  }
  SignVector indicator(g.m, 0);
  InnerResult best{indicator, g.evaluate(indicator)};
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    for (int j = 0; j < k; ++j) indicator[g.free[j]] = (mask >> j) & 1;
    const Value v = g.evaluate(indicator);
    if (v < best.value) best = {indicator, v};
  }
  return best;
}

InnerResult BisubBrute(
    const SignBoxFunction& h, std::uint64_t budget,
    const std::function<bool(std::span<const std::int8_t>)>& member) {
  if (budget == 0) budget = BudgetFromEnv(kDefaultBoxBudget);
  const std::uint64_t size = h.BoxSize();
  if (size > budget) {
    throw BudgetExceeded("sign box has " + std::to_string(size) +
                         " points, budget is " + std::to_string(budget));
  }
  // Per-coordinate digit alphabets in (-1, 0, +1) order.
  std::vector<std::vector<std::int8_t>> digits(h.m);
  for (int i = 0; i < h.m; ++i) {
    for (int s = -1; s <= 1; ++s) {
      if (h.Allows(i, s)) digits[i].push_back(static_cast<std::int8_t>(s));
    }
  }
  std::vector<int> pos(h.m, 0);
  SignVector point(h.m);
  bool found = false;
  InnerResult best;
  for (std::uint64_t step = 0; step < size; ++step) {
    for (int i = 0; i < h.m; ++i) point[i] = digits[i][pos[i]];
    if (!member || member(point)) {
      const Value v = h.evaluate(point);
      if (!found || v < best.value) best = {point, v};
      found = true;
    }
    for (int i = h.m - 1; i >= 0; --i) {
      if (++pos[i] < static_cast<int>(digits[i].size())) break;
      pos[i] = 0;
    }
  }
  if (!found) throw SolverFailure("no point of the box satisfies the membership predicate");
  return best;
}

namespace {

// Wolfe's minimum-norm-point algorithm over conv(V) + cone(R), where V is
// reached through `vertex(x) = argmin_{q in V} <x, q>` and R holds rays
// -e_j. `ray(x)` names a ray that still decreases the norm, or returns -1;
// the vertex oracle is only consulted once no ray does.
class MinNormPoint {
 public:
  using VertexOracle = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;
  using RayOracle = std::function<int(const Eigen::VectorXd&)>;

  MinNormPoint(int dim, VertexOracle vertex, RayOracle ray,
               const MinNormOptions& options)
      : dim_(dim), vertex_(std::move(vertex)), ray_(std::move(ray)),
        options_(options) {}

  Eigen::VectorXd Run() {
    Eigen::VectorXd x = vertex_(Eigen::VectorXd::Zero(dim_));
    gens_ = {{x, false}};
    weights_ = {1.0};
    double scale = std::max(1.0, x.squaredNorm());
    for (int iter = 0; iter < options_.max_iterations; ++iter) {
      if (ray_) {
        const int j = ray_(x);
        if (j >= 0) {
          Eigen::VectorXd r = Eigen::VectorXd::Zero(dim_);
          r(j) = -1.0;
          if (Contains(r, true)) return x;
          gens_.push_back({r, true});
          weights_.push_back(0.0);
          x = MinorCycles();
          continue;
        }
      }
      const Eigen::VectorXd q = vertex_(x);
      scale = std::max(scale, q.squaredNorm());
      if (x.squaredNorm() - x.dot(q) <= options_.epsilon * scale) return x;
      if (Contains(q, false)) return x;  // no progress possible in floating point
      gens_.push_back({q, false});
      weights_.push_back(0.0);
      x = MinorCycles();
    }
    throw SolverFailure("min-norm-point iteration cap of " +
                        std::to_string(options_.max_iterations) + " reached");
  }

 private:
  struct Generator {
    Eigen::VectorXd v;
    bool ray;
  };

  bool Contains(const Eigen::VectorXd& q, bool ray) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Generator& g) {
      return g.ray == ray && (g.v - q).template lpNorm<Eigen::Infinity>() < 1e-12;
    });
  }

  // Minimizes ||sum a_i g_i|| subject to the point weights summing to 1;
  // ray weights are unconstrained here.
  Eigen::VectorXd AffineMinimizer() const {
    const int k = static_cast<int>(gens_.size());
    Eigen::MatrixXd system = Eigen::MatrixXd::Zero(k + 1, k + 1);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) system(i, j) = gens_[i].v.dot(gens_[j].v);
      if (!gens_[i].ray) {
        system(i, k) = 1.0;
        system(k, i) = 1.0;
      }
    }
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k + 1);
    rhs(k) = 1.0;
    const Eigen::VectorXd sol =
        system.completeOrthogonalDecomposition().solve(rhs);
    return sol.head(k);
  }

  Eigen::VectorXd MinorCycles() {
    constexpr double kTiny = 1e-12;
    for (;;) {
      const Eigen::VectorXd alpha = AffineMinimizer();
      const int k = static_cast<int>(gens_.size());
      if ((alpha.array() > kTiny).all()) {
        for (int i = 0; i < k; ++i) weights_[i] = alpha(i);
        break;
      }
      double theta = 1.0;
      for (int i = 0; i < k; ++i) {
        if (alpha(i) <= kTiny) {
          const double denom = weights_[i] - alpha(i);
          if (denom > 0) theta = std::min(theta, weights_[i] / denom);
        }
      }
      for (int i = 0; i < k; ++i) {
        weights_[i] = theta * alpha(i) + (1.0 - theta) * weights_[i];
      }
      // Drop generators whose weight vanished; at least one always does.
      std::vector<Generator> gens;
      std::vector<double> weights;
      for (int i = 0; i < k; ++i) {
        if (weights_[i] > kTiny) {
          gens.push_back(gens_[i]);
          weights.push_back(weights_[i]);
        }
      }
      if (gens.size() == gens_.size()) {
        // Degenerate step; drop the smallest weight explicitly.
        const auto it = std::min_element(weights.begin(), weights.end());
        const auto idx = it - weights.begin();
        gens.erase(gens.begin() + idx);
        weights.erase(weights.begin() + idx);
      }
      double total = 0.0;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (!gens[i].ray) total += weights[i];
      }
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (!gens[i].ray) weights[i] /= total;
      }
      gens_ = std::move(gens);
      weights_ = std::move(weights);
    }
    Eigen::VectorXd x = Eigen::VectorXd::Zero(dim_);
    for (std::size_t i = 0; i < gens_.size(); ++i) x += weights_[i] * gens_[i].v;
    return x;
  }

  int dim_;
  VertexOracle vertex_;
  RayOracle ray_;
  MinNormOptions options_;
  std::vector<Generator> gens_;
  std::vector<double> weights_;
};

// Orders coordinates by descending key, ties by index.
std::vector<int> DescendingOrder(const std::vector<double>& key) {
  std::vector<int> order(key.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return key[a] > key[b]; });
  return order;
}

}  // namespace

InnerResult SfmWolfe(const BinaryCubeFunction& g, const MinNormOptions& options) {
  const int k = static_cast<int>(g.free.size());
  SignVector indicator(g.m, 0);
  const Value base = g.evaluate(indicator);
  if (k == 0) return {indicator, base};

  // Greedy vertex of B(g - g(empty)) minimizing <x, q>: add coordinates in
  // ascending order of x.
  auto oracle = [&](const Eigen::VectorXd& x) {
    std::vector<double> key(k);
    for (int j = 0; j < k; ++j) key[j] = -x(j);
    SignVector s(g.m, 0);
    Eigen::VectorXd q(k);
    Value prev = base;
    for (int j : DescendingOrder(key)) {
      s[g.free[j]] = 1;
      const Value cur = g.evaluate(s);
      q(j) = static_cast<double>(cur - prev);
      prev = cur;
    }
    return q;
  };
  const Eigen::VectorXd x = MinNormPoint(k, oracle, {}, options).Run();

  const double tau = std::sqrt(options.epsilon);
  InnerResult best;
  bool have = false;
  for (const bool strict : {true, false}) {
    SignVector s(g.m, 0);
    for (int j = 0; j < k; ++j) {
      if (strict ? x(j) < -tau : x(j) <= tau) s[g.free[j]] = 1;
    }
    const Value v = g.evaluate(s);
    if (!have || v < best.value) best = {s, v};
    have = true;
  }
  double lower = static_cast<double>(base);
  for (int j = 0; j < k; ++j) lower += std::min(0.0, x(j));
  if (static_cast<double>(best.value) - lower >= 1.0 - 1e-6) {
    throw SolverFailure("min-norm point does not certify the extracted set (gap " +
                        std::to_string(static_cast<double>(best.value) - lower) +
                        ")");
  }
  if (options.cross_check) {
    const InnerResult brute = SfmBrute(g);
    if (brute.value != best.value) {
      throw SolverFailure("Wolfe value " + std::to_string(best.value) +
                          " disagrees with brute force " +
                          std::to_string(brute.value));
    }
  }
  return best;
}

InnerResult BisubMinNorm(const SignBoxFunction& h,
                         const MinNormOptions& options) {
  // Ground coordinates have a nonzero allowed sign. A coordinate with a
  // single nonzero sign is one-sided: it is read in the direction of that
  // sign, its polyhedron is unbounded along -e_j, and it behaves like a
  // submodular coordinate.
  std::vector<int> ground;
  std::vector<std::int8_t> fixed;  // 0 for two-sided coordinates
  for (int i = 0; i < h.m; ++i) {
    const AllowedSigns& a = h.allowed[i];
    if (!a.minus && !a.plus) continue;
    ground.push_back(i);
    fixed.push_back(a.minus && a.plus ? 0 : (a.plus ? 1 : -1));
  }
  const int k = static_cast<int>(ground.size());
  SignVector zero(h.m, 0);
  const Value base = h.evaluate(zero);
  if (k == 0) return {zero, base};

  // Signed greedy maximizing <w, q> with w = -x. Two-sided coordinates take
  // sign(w_j) and key |w_j|; one-sided ones keep their sign and key w_j,
  // which is nonnegative whenever the ray oracle has nothing to add.
  auto vertex = [&](const Eigen::VectorXd& x) {
    std::vector<double> key(k);
    std::vector<std::int8_t> sign(k);
    for (int j = 0; j < k; ++j) {
      const double w = -x(j);
      if (fixed[j] == 0) {
        sign[j] = w >= 0 ? 1 : -1;
        key[j] = std::abs(w);
      } else {
        sign[j] = fixed[j];
        key[j] = std::max(w, 0.0);
      }
    }
    SignVector s(h.m, 0);
    Eigen::VectorXd q(k);
    Value prev = base;
    for (int j : DescendingOrder(key)) {
      s[ground[j]] = sign[j];
      const Value cur = h.evaluate(s);
      // One-sided coordinates are measured along their own sign.
      q(j) = (fixed[j] == 0 ? sign[j] : 1) * static_cast<double>(cur - prev);
      prev = cur;
    }
    return q;
  };
  const double ray_tol = 1e-9;
  auto ray = [&](const Eigen::VectorXd& x) {
    int best = -1;
    for (int j = 0; j < k; ++j) {
      if (fixed[j] != 0 && x(j) > ray_tol && (best < 0 || x(j) > x(best))) best = j;
    }
    return best;
  };
  const Eigen::VectorXd x = MinNormPoint(k, vertex, ray, options).Run();

  const double tau = std::sqrt(options.epsilon);
  SignVector s(h.m, 0);
  double lower = static_cast<double>(base);
  for (int j = 0; j < k; ++j) {
    const int i = ground[j];
    if (fixed[j] != 0) {
      if (x(j) < -tau) s[i] = fixed[j];
      lower += std::min(0.0, x(j));
    } else {
      if (x(j) < -tau) s[i] = 1;
      if (x(j) > tau) s[i] = -1;
      lower -= std::abs(x(j));
    }
  }
  InnerResult best{s, h.evaluate(s)};
  if (static_cast<double>(best.value) - lower >= 1.0 - 1e-6) {
    throw SolverFailure("bisubmodular min-norm point does not certify the "
                        "extracted signs (gap " +
                        std::to_string(static_cast<double>(best.value) - lower) +
                        ")");
  }
  if (options.cross_check) {
    const InnerResult brute = BisubBrute(h);
    if (brute.value != best.value) {
      throw SolverFailure("bisubmodular min-norm value " +
                          std::to_string(best.value) +
                          " disagrees with brute force " +
                          std::to_string(brute.value));
    }
  }
  return best;
}

}  // namespace treesub
