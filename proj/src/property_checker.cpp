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

#include "treesub/property_checker.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <string>

#include "treesub/error.hpp"
#include "treesub/random.hpp"

namespace treesub {

const char* PropertyName(Property p) {
  switch (p) {
    case Property::kStrong:
      return "strong";
    case Property::kWeak:
      return "weak";
    case Property::kTranslation:
      return "translation";
    case Property::kMultimorphism:
      return "multimorphism";
  }
  return "unknown";
}

Property ParseProperty(const std::string& name) {
  if (name == "strong") return Property::kStrong;
  if (name == "weak") return Property::kWeak;
  if (name == "translation") return Property::kTranslation;
  if (name == "multimorphism") return Property::kMultimorphism;
  throw InputError("unknown property '" + name + "'");
}

namespace {

std::uint64_t PairBudget(const CheckOptions& options) {
  return options.pair_budget != 0 ? options.pair_budget
                                  : BudgetFromEnv(kDefaultPairBudget);
}

void RequireExhaustiveBudget(const ProductDomain& domain,
                             const CheckOptions& options) {
  const auto size = static_cast<std::uint64_t>(domain.size());
  const std::uint64_t budget = PairBudget(options);
  if (size > std::numeric_limits<std::uint32_t>::max() ||
      size * size > budget) {
    throw BudgetExceeded("exhaustive check needs |D|^2 = " +
                         std::to_string(size) + "^2 pairs, budget is " +
                         std::to_string(budget) +
                         "; use sampled mode or raise TREESUB_BUDGET");
  }
}

// Per-tree operation tables for every offset a check may use. Strong and
// weak have a single slot; translation has one slot per d.
struct OpFamily {
  Property property;
  std::vector<std::vector<OpTable>> by_d;  // by_d[d][tree]
  bool commutative = true;
};

OpFamily BuildFamily(Property property, const ProductDomain& domain,
                     std::optional<int> fixed_d) {
  OpFamily family{property, {}, property != Property::kTranslation};
  auto tables = [&](auto make) {
    std::vector<OpTable> row;
    for (const RootedTree& t : domain.trees()) row.push_back(make(t));
    return row;
  };
  switch (property) {
    case Property::kStrong:
      family.by_d.push_back(tables(MeetJoinTable));
      break;
    case Property::kWeak:
      family.by_d.push_back(tables(WedgeVeeTable));
      break;
    case Property::kTranslation: {
      int max_d = 0;
      for (const RootedTree& t : domain.trees()) {
        max_d = std::max(max_d, 2 * t.height());
      }
      if (fixed_d) max_d = std::min(max_d, *fixed_d);
      for (int d = 0; d <= max_d; ++d) {
        family.by_d.push_back(
            tables([d](const RootedTree& t) { return UpDownTable(t, d); }));
      }
      break;
    }
    case Property::kMultimorphism:
      throw InputError("multimorphism needs explicit operation tables");
  }
  return family;
}

// Distances per tree, row-major.
std::vector<std::vector<int>> DistanceTables(const ProductDomain& domain) {
  std::vector<std::vector<int>> out;
  for (const RootedTree& t : domain.trees()) {
    const int s = t.node_count();
    std::vector<int> rho(s * s);
    for (Node a = 0; a < s; ++a) {
      for (Node b = 0; b < s; ++b) rho[a * s + b] = Rho(t, a, b);
    }
    out.push_back(std::move(rho));
  }
  return out;
}

class TableChecker {
 public:
  TableChecker(Property property, const CostFunction& f,
               const ProductDomain& domain, std::optional<int> fixed_d)
      : f_(f),
        domain_(domain),
        family_(BuildFamily(property, domain, fixed_d)),
        rho_(property == Property::kTranslation ? DistanceTables(domain)
                                                : decltype(rho_){}),
        fixed_d_(fixed_d) {}

  // Offsets to test for the pair (x, y).
  std::pair<int, int> OffsetRange(std::span<const Node> x,
                                  std::span<const Node> y) const {
    if (family_.property != Property::kTranslation) return {0, 0};
    if (fixed_d_) return {*fixed_d_, *fixed_d_};
    int rho = 0;
    for (int i = 0; i < domain_.n(); ++i) {
      const int s = domain_.tree(i).node_count();
      rho = std::max(rho, rho_[i][x[i] * s + y[i]]);
    }
    return {0, rho};
  }

  // Slot in by_d for offset d; offsets past the table saturate.
  const std::vector<OpTable>& Tables(int d) const {
    return family_.by_d[std::min<std::size_t>(d, family_.by_d.size() - 1)];
  }

  CheckReport Exhaustive(const CheckOptions& options) const {
    RequireExhaustiveBudget(domain_, options);
    const int n = domain_.n();
    const std::int64_t size = domain_.size();
    const std::vector<Value> values = f_.Tabulate();
    std::vector<Node> labels(size * n);
    for (std::int64_t k = 0; k < size; ++k) {
      const Labeling x = domain_.Unrank(k);
      std::copy(x.begin(), x.end(), labels.begin() + k * n);
    }
    std::vector<std::int64_t> stride(n, 1);
    for (int i = n - 2; i >= 0; --i) stride[i] = stride[i + 1] * domain_.radices()[i + 1];

    CheckReport report = Empty(true);
    for (std::int64_t kx = 0; kx < size; ++kx) {
      const std::span<const Node> x(labels.data() + kx * n, n);
      for (std::int64_t ky = family_.commutative ? kx + 1 : 0; ky < size;
           ++ky) {
        if (ky == kx) continue;
        const std::span<const Node> y(labels.data() + ky * n, n);
        const Value lhs = values[kx] + values[ky];
        const auto [d_lo, d_hi] = OffsetRange(x, y);
        for (int d = d_lo; d <= d_hi; ++d) {
          const std::vector<OpTable>& ops = Tables(d);
          std::int64_t r1 = 0;
          std::int64_t r2 = 0;
          for (int i = 0; i < n; ++i) {
            r1 += stride[i] * ops[i].First(x[i], y[i]);
            r2 += stride[i] * ops[i].Second(x[i], y[i]);
          }
          ++report.pairs_checked;
          const Value rhs = values[r1] + values[r2];
          if (lhs < rhs) {
            report.witness =
                MakeWitness(x, y, d, domain_.Unrank(r1), domain_.Unrank(r2),
                            lhs, rhs);
            return report;
          }
        }
      }
    }
    return report;
  }

  CheckReport Sampled(const CheckOptions& options) const {
    const int n = domain_.n();
    Rng rng(options.seed);
    CheckReport report = Empty(false);
    Labeling first(n);
    Labeling second(n);
    for (std::uint64_t s = 0; s < options.samples; ++s) {
      const Labeling x = domain_.Unrank(rng.Uniform(0, domain_.size() - 1));
      const Labeling y = domain_.Unrank(rng.Uniform(0, domain_.size() - 1));
      const Value lhs = f_.EvaluateUnchecked(x) + f_.EvaluateUnchecked(y);
      const auto [d_lo, d_hi] = OffsetRange(x, y);
      for (int d = d_lo; d <= d_hi; ++d) {
        const std::vector<OpTable>& ops = Tables(d);
        for (int i = 0; i < n; ++i) {
          first[i] = ops[i].First(x[i], y[i]);
          second[i] = ops[i].Second(x[i], y[i]);
        }
        ++report.pairs_checked;
        const Value rhs =
            f_.EvaluateUnchecked(first) + f_.EvaluateUnchecked(second);
        if (lhs < rhs) {
          report.witness = MakeWitness(x, y, d, first, second, lhs, rhs);
          return report;
        }
      }
    }
    report.note = "no violation found in " + std::to_string(options.samples) +
                  " sampled pairs (sampling proves nothing)";
    return report;
  }

 private:
  CheckReport Empty(bool exhaustive) const {
    CheckReport report;
    report.property = family_.property;
    report.exhaustive = exhaustive;
    if (exhaustive) {
      report.note = family_.commutative
                        ? "all unordered pairs (operations are commutative)"
                        : "all ordered pairs";
    }
    if (family_.property == Property::kTranslation && !fixed_d_) {
      report.note +=
          "; d ranges over 0..rho_inf(x, y), beyond which every coordinate "
          "saturates and the inequality is an equality";
    }
    return report;
  }

  ViolationWitness MakeWitness(std::span<const Node> x, std::span<const Node> y,
                               int d, Labeling first, Labeling second,
                               Value lhs, Value rhs) const {
    ViolationWitness w;
    w.property = family_.property;
    w.x.assign(x.begin(), x.end());
    w.y.assign(y.begin(), y.end());
    if (family_.property == Property::kTranslation) w.d = d;
    w.first = std::move(first);
    w.second = std::move(second);
    w.lhs = lhs;
    w.rhs = rhs;
    return w;
  }

  const CostFunction& f_;
  const ProductDomain& domain_;
  OpFamily family_;
  std::vector<std::vector<int>> rho_;
  std::optional<int> fixed_d_;
};

CheckReport RunTableCheck(Property property, const CostFunction& f,
                          const ProductDomain& domain,
                          const CheckOptions& options,
                          std::optional<int> fixed_d = std::nullopt) {
  TableChecker checker(property, f, domain, fixed_d);
  return options.mode == CheckOptions::Mode::kExhaustive
             ? checker.Exhaustive(options)
             : checker.Sampled(options);
}

void ValidateOps(const ProductDomain& domain, const std::vector<OpTable>& ops) {
  if (static_cast<int>(ops.size()) != domain.n()) {
    throw InputError("expected " + std::to_string(domain.n()) +
                     " operation tables, got " + std::to_string(ops.size()));
  }
  for (int i = 0; i < domain.n(); ++i) {
    const int s = domain.tree(i).node_count();
    const OpTable& t = ops[i];
    const auto cells = static_cast<std::size_t>(s) * s;
    if (t.size != s || t.first.size() != cells || t.second.size() != cells) {
      throw InputError("operation table " + std::to_string(i) +
                       " is not a total " + std::to_string(s) + "x" +
                       std::to_string(s) + " table");
    }
    for (std::size_t c = 0; c < cells; ++c) {
      if (t.first[c] < 0 || t.first[c] >= s || t.second[c] < 0 ||
          t.second[c] >= s) {
        throw InputError("operation table " + std::to_string(i) +
                         " has an entry outside the tree");
      }
    }
  }
}

}  // namespace

CheckReport CheckStrong(const CostFunction& f, const ProductDomain& domain,
                        const CheckOptions& options) {
  return RunTableCheck(Property::kStrong, f, domain, options);
}

CheckReport CheckWeak(const CostFunction& f, const ProductDomain& domain,
                      const CheckOptions& options) {
  return RunTableCheck(Property::kWeak, f, domain, options);
}

CheckReport CheckTranslation(const CostFunction& f, const ProductDomain& domain,
                             const CheckOptions& options) {
  return RunTableCheck(Property::kTranslation, f, domain, options);
}

CheckReport CheckTranslationAt(const CostFunction& f,
                               const ProductDomain& domain, int d,
                               const CheckOptions& options) {
  if (d < 0) throw DomainError("translation offset must be non-negative");
  return RunTableCheck(Property::kTranslation, f, domain, options, d);
}

CheckReport CheckMultimorphism(const CostFunction& f,
                               const ProductDomain& domain,
                               const std::vector<OpTable>& ops,
                               const CheckOptions& options) {
  ValidateOps(domain, ops);
  const int n = domain.n();
  CheckReport report;
  report.property = Property::kMultimorphism;
  report.exhaustive = options.mode == CheckOptions::Mode::kExhaustive;
  Labeling first(n);
  Labeling second(n);
  auto visit = [&](const Labeling& x, const Labeling& y) {
    for (int i = 0; i < n; ++i) {
      first[i] = ops[i].First(x[i], y[i]);
      second[i] = ops[i].Second(x[i], y[i]);
    }
    ++report.pairs_checked;
    const Value lhs = f.Evaluate(x) + f.Evaluate(y);
    const Value rhs = f.Evaluate(first) + f.Evaluate(second);
    if (lhs >= rhs) return false;
    report.witness = ViolationWitness{Property::kMultimorphism,
                                      x,
                                      y,
                                      std::nullopt,
                                      first,
                                      second,
                                      lhs,
                                      rhs};
    return true;
  };
  if (report.exhaustive) {
    RequireExhaustiveBudget(domain, options);
    report.note = "all ordered pairs";
    for (std::int64_t kx = 0; kx < domain.size(); ++kx) {
      const Labeling x = domain.Unrank(kx);
      for (std::int64_t ky = 0; ky < domain.size(); ++ky) {
        if (visit(x, domain.Unrank(ky))) return report;
      }
    }
    return report;
  }
  Rng rng(options.seed);
  for (std::uint64_t s = 0; s < options.samples; ++s) {
    const Labeling x = domain.Unrank(rng.Uniform(0, domain.size() - 1));
    const Labeling y = domain.Unrank(rng.Uniform(0, domain.size() - 1));
    if (visit(x, y)) return report;
  }
  report.note = "no violation found in " + std::to_string(options.samples) +
                " sampled pairs (sampling proves nothing)";
  return report;
}

CheckReport Check(Property property, const CostFunction& f,
                  const ProductDomain& domain, const CheckOptions& options) {
  switch (property) {
    case Property::kStrong:
      return CheckStrong(f, domain, options);
    case Property::kWeak:
      return CheckWeak(f, domain, options);
    case Property::kTranslation:
      return CheckTranslation(f, domain, options);
    case Property::kMultimorphism: {
      std::vector<OpTable> ops;
      for (const RootedTree& t : domain.trees()) ops.push_back(MeetJoinTable(t));
      return CheckMultimorphism(f, domain, ops, options);
    }
  }
  throw InputError("unknown property");
}

bool ReplayWitness(const CostFunction& f, const ProductDomain& domain,
                   const ViolationWitness& w,
                   const std::vector<OpTable>* ops) {
  domain.Validate(w.x);
  domain.Validate(w.y);
  Labeling first(domain.n());
  Labeling second(domain.n());
  for (int i = 0; i < domain.n(); ++i) {
    const RootedTree& t = domain.tree(i);
    std::pair<Node, Node> r;
    switch (w.property) {
      case Property::kStrong:
        r = MeetJoin(t, w.x[i], w.y[i]);
        break;
      case Property::kWeak:
        r = WedgeVee(t, w.x[i], w.y[i]);
        break;
      case Property::kTranslation:
        r = UpDown(t, w.x[i], w.y[i], w.d.value_or(0));
        break;
      case Property::kMultimorphism:
        if (ops == nullptr) {
          r = {w.first.at(i), w.second.at(i)};
        } else {
          r = {(*ops)[i].First(w.x[i], w.y[i]), (*ops)[i].Second(w.x[i], w.y[i])};
        }
        break;
    }
    first[i] = r.first;
    second[i] = r.second;
  }
  if (first != w.first || second != w.second) return false;
  const Value lhs = f.Evaluate(w.x) + f.Evaluate(w.y);
  const Value rhs = f.Evaluate(first) + f.Evaluate(second);
  return lhs == w.lhs && rhs == w.rhs && lhs < rhs;
}

}  // namespace treesub
