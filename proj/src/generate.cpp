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

#include "treesub/generate.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "treesub/error.hpp"

namespace treesub {

bool InstanceFixture::Declares(Property p) const {
  return std::find(verified_properties.begin(), verified_properties.end(), p) !=
         verified_properties.end();
}

const char* GeneratorKindName(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::kRandomVerifiedStrong:
      return "random-verified-strong";
    case GeneratorKind::kRandomVerifiedWeak:
      return "random-verified-weak";
    case GeneratorKind::kChainSeparable:
      return "chain-separable";
    case GeneratorKind::kFixtureCatalog:
      return "fixture-catalog";
  }
  return "unknown";
}

GeneratorKind ParseGeneratorKind(const std::string& name) {
  for (GeneratorKind k :
       {GeneratorKind::kRandomVerifiedStrong, GeneratorKind::kRandomVerifiedWeak,
        GeneratorKind::kChainSeparable, GeneratorKind::kFixtureCatalog}) {
    if (name == GeneratorKindName(k)) return k;
  }
  throw InputError("unknown generator kind '" + name + "'");
}

namespace {

bool IsCanonicalChain(const RootedTree& t) {
  for (Node v = 0; v < t.node_count(); ++v) {
    if (t.parent(v) != v - 1) return false;
  }
  return true;
}

// Convex in the label: sorted random slopes, shifted to a zero minimum.
std::vector<Value> ConvexProfile(Rng& rng, int len, Value max_value) {
  std::vector<Value> slopes(std::max(0, len - 1));
  for (Value& s : slopes) s = rng.Uniform(-max_value, max_value);
  std::sort(slopes.begin(), slopes.end());
  std::vector<Value> values(len, 0);
  for (int k = 1; k < len; ++k) values[k] = values[k - 1] + slopes[k - 1];
  const Value lowest = *std::min_element(values.begin(), values.end());
  for (Value& v : values) v -= lowest;
  return values;
}

bool Passes(Property p, const CostFunction& f, const ProductDomain& domain,
            std::uint64_t pair_budget) {
  CheckOptions options;
  options.pair_budget = pair_budget;
  return Check(p, f, domain, options).holds();
}

// Records every property in `candidates` that holds on the fixture.
void VerifyProperties(InstanceFixture& fixture,
                      const std::vector<Property>& candidates,
                      std::uint64_t pair_budget) {
  fixture.verified_properties.clear();
  for (Property p : candidates) {
    if (Passes(p, fixture.function, fixture.domain, pair_budget)) {
      fixture.verified_properties.push_back(p);
    }
  }
}

const std::vector<Property> kAllProperties = {
    Property::kStrong, Property::kWeak, Property::kTranslation};

class TermSampler {
 public:
  TermSampler(const GenerateParams& params, Property target, Rng& rng)
      : params_(params), target_(target), rng_(rng) {}

  std::uint64_t attempts() const { return attempts_; }
  std::uint64_t accepted() const { return accepted_; }

  // Counts one candidate; throws once the budget is spent.
  void Charge() {
    if (attempts_ >= params_.attempt_budget) {
      std::ostringstream msg;
      msg << "attempt budget of " << params_.attempt_budget
          << " exhausted; acceptance rate " << accepted_ << "/" << attempts_;
      throw GenerationFailure(msg.str(), attempts_, accepted_);
    }
    ++attempts_;
  }

  bool Accept(const std::vector<RootedTree>& scope_trees,
              const std::vector<Value>& values) {
    const ProductDomain domain(scope_trees);
    const CostFunction f(domain, DenseTable{values});
    if (!Passes(target_, f, domain, params_.pair_budget)) return false;
    ++accepted_;
    return true;
  }

  // Candidates: a uniform table, a weighted sum of distances to random
  // centers, and on chains a convex profile. Uniform tables alone are almost
  // never accepted on chains longer than a handful of nodes.
  Term Unary(int var) {
    const RootedTree& t = params_.trees[var];
    const Value m = params_.max_value;
    const int families = IsCanonicalChain(t) ? 3 : 2;
    for (;;) {
      Charge();
      std::vector<Value> values(t.node_count());
      switch (rng_.Uniform(0, families - 1)) {
        case 0:
          for (Value& v : values) v = rng_.Uniform(0, m);
          break;
        case 1: {
          const Value base = rng_.Uniform(0, m);
          const int centers = static_cast<int>(rng_.Uniform(1, 2));
          std::fill(values.begin(), values.end(), base);
          for (int c = 0; c < centers; ++c) {
            const Node center = static_cast<Node>(rng_.Uniform(0, t.node_count() - 1));
            const Value w = rng_.Uniform(1, std::max<Value>(1, m / 4));
            for (Node v = 0; v < t.node_count(); ++v) values[v] += w * Rho(t, v, center);
          }
          break;
        }
        default:
          values = ConvexProfile(rng_, t.node_count(), m);
          break;
      }
      if (Accept({t}, values)) return Term{{var}, std::move(values)};
    }
  }

  // One candidate coupling for (i, j); empty when rejected or when no
  // family applies to this pair of trees.
  std::optional<Term> Pair(int i, int j) {
    const RootedTree& ti = params_.trees[i];
    const RootedTree& tj = params_.trees[j];
    std::vector<std::function<Value(Node, Node)>> families;
    const Value w = rng_.Uniform(1, std::max<Value>(1, params_.max_value / 4));
    if (ti == tj) {
      families.push_back([&ti, w](Node a, Node b) { return w * Rho(ti, a, b); });
    }
    if (target_ == Property::kWeak) {
      const Node ci = static_cast<Node>(rng_.Uniform(0, ti.node_count() - 1));
      const Node cj = static_cast<Node>(rng_.Uniform(0, tj.node_count() - 1));
      families.push_back([&ti, &tj, ci, cj, w](Node a, Node b) {
        return ti.IsAncestor(ci, a) && tj.IsAncestor(cj, b) ? Value{0} : w;
      });
    } else if (IsCanonicalChain(ti) && IsCanonicalChain(tj)) {
      const int shift = static_cast<int>(rng_.Uniform(-2, 2));
      families.push_back([w, shift](Node a, Node b) {
        return w * std::max(0, a - b - shift);
      });
    }
    if (families.empty()) return std::nullopt;
    const auto& family = families[rng_.Uniform(0, families.size() - 1)];
    Charge();
    std::vector<Value> values;
    values.reserve(ti.node_count() * tj.node_count());
    for (Node a = 0; a < ti.node_count(); ++a) {
      for (Node b = 0; b < tj.node_count(); ++b) values.push_back(family(a, b));
    }
    if (!Accept({ti, tj}, values)) return std::nullopt;
    return Term{{i, j}, std::move(values)};
  }

 private:
  const GenerateParams& params_;
  Property target_;
  Rng& rng_;
  std::uint64_t attempts_ = 0;
  std::uint64_t accepted_ = 0;
};

InstanceFixture RandomVerified(Property target, const GenerateParams& params,
                               std::uint64_t seed) {
  if (params.trees.empty()) throw InputError("generator needs at least one tree");
  Rng rng(seed);
  const ProductDomain domain(params.trees);
  const int n = domain.n();
  TermSampler sampler(params, target, rng);
  for (;;) {
    std::optional<CostFunction> f;
    if (params.whole_table) {
      sampler.Charge();
      std::vector<Value> values(domain.size());
      for (Value& v : values) v = rng.Uniform(0, params.max_value);
      f.emplace(domain, DenseTable{std::move(values)});
    } else {
      SumOfTerms sum;
      for (int i = 0; i < n; ++i) sum.terms.push_back(sampler.Unary(i));
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          if (!rng.Chance(params.pair_percent, 100)) continue;
          if (auto term = sampler.Pair(i, j)) sum.terms.push_back(std::move(*term));
        }
      }
      f.emplace(domain, std::move(sum));
    }
    // The whole function is re-verified even when built from verified terms.
    if (!Passes(target, *f, domain, params.pair_budget)) continue;
    InstanceFixture fixture{domain, std::move(*f), {target}, "", seed, 0, 0};
    if (params.verify_all) VerifyProperties(fixture, kAllProperties, params.pair_budget);
    fixture.attempts = sampler.attempts();
    fixture.accepted = sampler.accepted() + (params.whole_table ? 1 : 0);
    std::ostringstream prov;
    prov << (target == Property::kStrong ? "random-verified-strong"
                                          : "random-verified-weak")
         << " seed=" << seed << " max_value=" << params.max_value
         << (params.whole_table ? " whole-table" : " term-wise")
         << " acceptance=" << fixture.accepted << "/" << fixture.attempts;
    fixture.provenance = prov.str();
    return fixture;
  }
}

InstanceFixture ChainSeparable(const GenerateParams& params, std::uint64_t seed) {
  if (params.trees.empty()) throw InputError("generator needs at least one tree");
  for (const RootedTree& t : params.trees) {
    if (!IsCanonicalChain(t)) {
      throw InputError("chain-separable needs chain trees (parent[v] = v - 1)");
    }
  }
  Rng rng(seed);
  const ProductDomain domain(params.trees);
  const int n = domain.n();
  SumOfTerms sum;
  for (int i = 0; i < n; ++i) {
    sum.terms.push_back(
        Term{{i}, ConvexProfile(rng, params.trees[i].node_count(), params.max_value)});
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!rng.Chance(params.pair_percent, 100)) continue;
      const Value w = rng.Uniform(1, std::max<Value>(1, params.max_value / 4));
      std::vector<Value> values;
      for (Node a = 0; a < params.trees[i].node_count(); ++a) {
        for (Node b = 0; b < params.trees[j].node_count(); ++b) {
          values.push_back(w * std::abs(a - b));
        }
      }
      sum.terms.push_back(Term{{i, j}, std::move(values)});
    }
  }
  InstanceFixture fixture{domain, CostFunction(domain, std::move(sum)), {}, "",
                          seed, 1, 0};
  if (!Passes(Property::kStrong, fixture.function, domain, params.pair_budget)) {
    throw GenerationFailure("chain-separable instance failed the strong check",
                            1, 0);
  }
  fixture.accepted = 1;
  fixture.verified_properties = {Property::kStrong};
  if (params.verify_all) VerifyProperties(fixture, kAllProperties, params.pair_budget);
  fixture.provenance = "chain-separable seed=" + std::to_string(seed);
  return fixture;
}

// Builds a single-term (per entry) sum from a callback over the scope.
Term Tabulated(std::vector<int> scope, const std::vector<RootedTree>& trees,
               const std::function<Value(std::span<const Node>)>& fn) {
  std::vector<RootedTree> scope_trees;
  for (int v : scope) scope_trees.push_back(trees[v]);
  const ProductDomain d(scope_trees);
  std::vector<Value> values(d.size());
  for (std::int64_t k = 0; k < d.size(); ++k) values[k] = fn(d.Unrank(k));
  return Term{std::move(scope), std::move(values)};
}

}  // namespace

std::vector<std::string> CatalogNames() {
  return {"c5sq-separable", "concave-chain", "constant-b3", "b3-root-indicator",
          "c3c3-table",     "t7-distance",   "ternary-star", "f2-weak"};
}

InstanceFixture CatalogFixture(const std::string& name) {
  std::vector<RootedTree> trees;
  std::optional<CostFunction> f;
  auto sum_of = [&](std::vector<Term> terms) {
    f.emplace(ProductDomain(trees), SumOfTerms{std::move(terms)});
  };
  if (name == "c5sq-separable") {
    trees = {trees::Chain(5), trees::Chain(5)};
    sum_of({Tabulated({0}, trees, [](auto x) { return Value{(x[0] - 3) * (x[0] - 3)}; }),
            Tabulated({1}, trees, [](auto x) { return Value{(x[0] - 1) * (x[0] - 1)}; }),
            Tabulated({0, 1}, trees,
                      [](auto x) { return Value{2 * std::abs(x[0] - x[1])}; })});
  } else if (name == "concave-chain") {
    trees = {trees::Chain(5)};
    sum_of({Tabulated({0}, trees, [](auto x) { return Value{-x[0] * x[0]}; })});
  } else if (name == "constant-b3") {
    trees = {trees::Bisubmodular(), trees::Bisubmodular()};
    f.emplace(CostFunction::Constant(ProductDomain(trees), 0));
  } else if (name == "b3-root-indicator") {
    trees = {trees::Bisubmodular()};
    f.emplace(ProductDomain(trees), DenseTable{{1, 0, 0}});
  } else if (name == "c3c3-table") {
    trees = {trees::Chain(3), trees::Chain(3)};
    f.emplace(ProductDomain(trees), DenseTable{{0, 1, 2, 3, 4, 5, 6, 7, 8}});
  } else if (name == "t7-distance") {
    const RootedTree t7 = trees::CompleteBinary(2);
    trees = {t7, t7};
    sum_of({Tabulated({0}, trees, [&](auto x) { return Value{2 * Rho(t7, x[0], 3)}; }),
            Tabulated({1}, trees, [&](auto x) { return Value{Rho(t7, x[0], 5)}; }),
            Tabulated({0, 1}, trees,
                      [&](auto x) { return Value{3 * Rho(t7, x[0], x[1])}; })});
  } else if (name == "ternary-star") {
    trees = {RootedTree::FromParents({-1, 0, 0, 0})};
    f.emplace(ProductDomain(trees), DenseTable{{2, 0, 1, 3}});
  } else if (name == "f2-weak") {
    const RootedTree f2 = trees::Fork(2);
    trees = {f2, f2};
    sum_of({Tabulated({0}, trees,
                      [](auto x) { return Value{std::vector<Value>{4, 2, 3, 1, 5}[x[0]]}; }),
            Tabulated({1}, trees,
                      [](auto x) { return Value{std::vector<Value>{3, 1, 0, 4, 2}[x[0]]}; }),
            Tabulated({0, 1}, trees, [&](auto x) {
              return f2.IsAncestor(2, x[0]) && f2.IsAncestor(1, x[1]) ? Value{0}
                                                                      : Value{3};
            })});
  } else {
    throw InputError("unknown catalog fixture '" + name + "'");
  }
  InstanceFixture fixture{ProductDomain(trees), std::move(*f), {}, "fixture-catalog:" + name,
                          0, 0, 0};
  VerifyProperties(fixture, kAllProperties, 0);
  return fixture;
}

InstanceFixture Generate(GeneratorKind kind, const GenerateParams& params,
                         std::uint64_t seed) {
  switch (kind) {
    case GeneratorKind::kRandomVerifiedStrong:
      return RandomVerified(Property::kStrong, params, seed);
    case GeneratorKind::kRandomVerifiedWeak:
      return RandomVerified(Property::kWeak, params, seed);
    case GeneratorKind::kChainSeparable:
      return ChainSeparable(params, seed);
    case GeneratorKind::kFixtureCatalog: {
      InstanceFixture fixture = CatalogFixture(params.fixture_name);
      fixture.seed = seed;
      return fixture;
    }
  }
  throw InputError("unknown generator kind");
}

RootedTree RandomBinaryTree(Rng& rng, int node_count) {
  if (node_count < 1) throw InputError("tree needs at least one node");
  std::vector<Node> parent(node_count, kNoParent);
  std::vector<int> child_count(node_count, 0);
  std::vector<Node> open = {0};  // nodes with fewer than two children
  for (Node v = 1; v < node_count; ++v) {
    const auto idx = rng.Uniform(0, open.size() - 1);
    const Node p = open[idx];
    parent[v] = p;
    if (++child_count[p] == 2) open.erase(open.begin() + idx);
    open.push_back(v);
  }
  return RootedTree::FromParents(std::move(parent));
}

namespace {

int ParsePositive(const std::string& text, const std::string& item) {
  char* end = nullptr;
  const long value = std::strtol(text.c_str(), &end, 10);
  if (text.empty() || *end != '\0' || value < 0 || value > 1'000'000) {
    throw InputError("bad number in tree spec item '" + item + "'");
  }
  return static_cast<int>(value);
}

RootedTree ParseTreeItem(const std::string& item, Rng& rng) {
  const auto colon = item.find(':');
  const std::string head = item.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : item.substr(colon + 1);
  if (head == "chain") return trees::Chain(std::max(1, ParsePositive(arg, item)));
  if (head == "bisub") return trees::Bisubmodular();
  if (head == "fork") return trees::Fork(ParsePositive(arg, item));
  if (head == "binary") return trees::CompleteBinary(ParsePositive(arg, item));
  if (head == "t7") return trees::CompleteBinary(2);
  if (head == "random-binary") {
    return RandomBinaryTree(rng, std::max(1, ParsePositive(arg, item)));
  }
  if (head == "parents") {
    std::vector<Node> parent;
    std::stringstream in(arg);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      char* end = nullptr;
      const long v = std::strtol(tok.c_str(), &end, 10);
      if (tok.empty() || *end != '\0') {
        throw InputError("bad parent entry '" + tok + "' in tree spec");
      }
      parent.push_back(static_cast<Node>(v));
    }
    return RootedTree::FromParents(std::move(parent));
  }
  throw InputError("unknown tree spec item '" + item + "'");
}

}  // namespace

std::vector<RootedTree> ParseTreeSpec(const std::string& spec, int n, Rng& rng) {
  std::vector<std::string> items;
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ';')) {
    if (!item.empty()) items.push_back(item);
  }
  if (items.empty()) throw InputError("empty tree spec");
  if (items.size() == 1 && n > 1) {
    // A random item is drawn once and shared so couplings see equal trees.
    const RootedTree t = ParseTreeItem(items[0], rng);
    return std::vector<RootedTree>(n, t);
  }
  if (n > 0 && static_cast<int>(items.size()) != n) {
    throw InputError("tree spec lists " + std::to_string(items.size()) +
                     " trees but n = " + std::to_string(n));
  }
  std::vector<RootedTree> trees;
  for (const std::string& it : items) trees.push_back(ParseTreeItem(it, rng));
  return trees;
}

}  // namespace treesub
