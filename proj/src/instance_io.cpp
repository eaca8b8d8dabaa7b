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

#include "treesub/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "treesub/error.hpp"

namespace treesub {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void Fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

const json& Field(const json& obj, const std::string& key,
                  const std::string& where) {
  if (!obj.is_object()) Fail(where, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) Fail(where, "missing field '" + key + "'");
  return *it;
}

std::int64_t Integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) Fail(where, "expected an integer");
  if (v.is_number_unsigned() &&
      v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    Fail(where, "integer out of range");
  }
  return v.get<std::int64_t>();
}

// A cost entry: integer numerator, or {"num", "den"} rational scaled to the
// declared denominator.
Value Cost(const json& v, Value denominator, const std::string& where) {
  if (v.is_number_integer()) return Integer(v, where);
  if (!v.is_object()) Fail(where, "expected an integer or {num, den}");
  const std::int64_t num = Integer(Field(v, "num", where), where + "/num");
  const std::int64_t den = Integer(Field(v, "den", where), where + "/den");
  if (den <= 0) Fail(where + "/den", "must be positive");
  const __int128 scaled = static_cast<__int128>(num) * denominator;
  if (scaled % den != 0) {
    Fail(where, "rational " + std::to_string(num) + "/" + std::to_string(den) +
                    " is not a multiple of 1/" + std::to_string(denominator));
  }
  return static_cast<Value>(scaled / den);
}

std::vector<Value> Costs(const json& arr, Value denominator,
                         const std::string& where) {
  if (!arr.is_array()) Fail(where, "expected an array");
  std::vector<Value> out;
  out.reserve(arr.size());
  for (std::size_t k = 0; k < arr.size(); ++k) {
    out.push_back(Cost(arr[k], denominator, where + "/" + std::to_string(k)));
  }
  return out;
}

}  // namespace

InstanceDocument ParseInstance(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError(std::string("JSON syntax error: ") + e.what());
  }
  if (!root.is_object()) Fail("/", "instance must be a JSON object");

  const json& version = Field(root, "format_version", "");
  if (!version.is_string()) Fail("/format_version", "expected a string");
  if (version.get<std::string>() != kFormatVersion) {
    Fail("/format_version", "unsupported version '" +
                                version.get<std::string>() + "'");
  }

  const json& trees_json = Field(root, "trees", "");
  if (!trees_json.is_array() || trees_json.empty()) {
    Fail("/trees", "expected a non-empty array");
  }
  std::vector<RootedTree> trees;
  for (std::size_t i = 0; i < trees_json.size(); ++i) {
    const std::string where = "/trees/" + std::to_string(i) + "/parent";
    const json& parent_json = Field(trees_json[i], "parent", "/trees/" + std::to_string(i));
    if (!parent_json.is_array()) Fail(where, "expected an array");
    std::vector<Node> parent;
    for (std::size_t k = 0; k < parent_json.size(); ++k) {
      const std::int64_t p = Integer(parent_json[k], where + "/" + std::to_string(k));
      if (p < -1 || p > INT32_MAX) Fail(where + "/" + std::to_string(k), "out of range");
      parent.push_back(static_cast<Node>(p));
    }
    try {
      trees.push_back(RootedTree::FromParents(std::move(parent)));
    } catch (const InputError& e) {
      Fail(where, e.what());
    }
  }

  const json& fn = Field(root, "function", "");
  const json& type = Field(fn, "type", "/function");
  const Value denominator = Integer(Field(fn, "denominator", "/function"),
                                    "/function/denominator");
  if (denominator <= 0) Fail("/function/denominator", "must be positive");

  InstanceDocument doc{kFormatVersion,
                       Instance{ProductDomain(trees), CostFunction(ProductDomain(trees), SumOfTerms{})},
                       json()};
  const ProductDomain& domain = doc.instance.domain;
  try {
    if (type == "table") {
      doc.instance.function = CostFunction(
          domain,
          DenseTable{Costs(Field(fn, "values", "/function"), denominator,
                           "/function/values")},
          denominator);
    } else if (type == "sum") {
      const json& terms_json = Field(fn, "terms", "/function");
      if (!terms_json.is_array()) Fail("/function/terms", "expected an array");
      SumOfTerms sum;
      for (std::size_t t = 0; t < terms_json.size(); ++t) {
        const std::string where = "/function/terms/" + std::to_string(t);
        const json& scope_json = Field(terms_json[t], "scope", where);
        if (!scope_json.is_array()) Fail(where + "/scope", "expected an array");
        Term term;
        for (std::size_t k = 0; k < scope_json.size(); ++k) {
          term.scope.push_back(static_cast<int>(
              Integer(scope_json[k], where + "/scope/" + std::to_string(k))));
        }
        term.values = Costs(Field(terms_json[t], "values", where), denominator,
                            where + "/values");
        sum.terms.push_back(std::move(term));
      }
      doc.instance.function = CostFunction(domain, std::move(sum), denominator);
    } else {
      Fail("/function/type", "expected \"table\" or \"sum\"");
    }
  } catch (const InputError& e) {
    const std::string what = e.what();
    if (!what.empty() && what[0] == '/') throw;
    Fail("/function", what);
  }

  if (const auto it = root.find("metadata"); it != root.end() && !it->is_null()) {
    if (!it->is_object()) Fail("/metadata", "expected an object");
    doc.metadata = *it;
  }
  return doc;
}

InstanceDocument ReadInstanceFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return ParseInstance(buf.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path + ": cannot open file for writing");
  out << contents;
  if (!out) throw InputError(path + ": write failed");
}

namespace {

bool IsScalar(const ordered_json& v) { return !v.is_object() && !v.is_array(); }

void Print(const ordered_json& v, int indent, std::ostream& out) {
  const std::string pad(indent + 2, ' ');
  if (v.is_object()) {
    if (v.empty()) {
      out << "{}";
      return;
    }
    out << "{\n";
    bool first = true;
    for (const auto& [key, item] : v.items()) {
      out << (first ? "" : ",\n") << pad << ordered_json(key).dump() << ": ";
      Print(item, indent + 2, out);
      first = false;
    }
    out << "\n" << std::string(indent, ' ') << "}";
  } else if (v.is_array()) {
    if (std::all_of(v.begin(), v.end(), IsScalar)) {
      out << "[";
      for (std::size_t k = 0; k < v.size(); ++k) out << (k ? ", " : "") << v[k].dump();
      out << "]";
      return;
    }
    out << "[\n";
    for (std::size_t k = 0; k < v.size(); ++k) {
      out << (k ? ",\n" : "") << pad;
      Print(v[k], indent + 2, out);
    }
    out << "\n" << std::string(indent, ' ') << "]";
  } else {
    out << v.dump();
  }
}

ordered_json Sorted(const json& v) {
  // nlohmann::json keeps object keys sorted, so a plain copy into
  // ordered_json preserves that order.
  return ordered_json::parse(v.dump());
}

}  // namespace

std::string CanonicalJson(const ordered_json& value) {
  std::ostringstream out;
  Print(value, 0, out);
  out << "\n";
  return out.str();
}

std::string SerializeInstance(const InstanceDocument& doc) {
  ordered_json root;
  root["format_version"] = doc.format_version;
  root["trees"] = ordered_json::array();
  for (const RootedTree& t : doc.domain().trees()) {
    ordered_json tree;
    tree["parent"] = t.parents();
    root["trees"].push_back(std::move(tree));
  }
  const CostFunction& f = doc.function();
  ordered_json fn;
  if (const DenseTable* table = f.dense()) {
    fn["type"] = "table";
    fn["denominator"] = f.denominator();
    fn["values"] = table->values;
  } else {
    fn["type"] = "sum";
    fn["denominator"] = f.denominator();
    fn["terms"] = ordered_json::array();
    for (const Term& term : f.sum()->terms) {
      ordered_json t;
      t["scope"] = term.scope;
      t["values"] = term.values;
      fn["terms"].push_back(std::move(t));
    }
  }
  root["function"] = std::move(fn);
  if (doc.metadata.is_object()) root["metadata"] = Sorted(doc.metadata);
  return CanonicalJson(root);
}

InstanceDocument ToDocument(const InstanceFixture& fixture,
                            const std::string& kind) {
  json metadata = json::object();
  metadata["kind"] = kind;
  metadata["seed"] = fixture.seed;
  metadata["provenance"] = fixture.provenance;
  json props = json::array();
  for (Property p : fixture.verified_properties) props.push_back(PropertyName(p));
  metadata["verified_properties"] = props;
  return InstanceDocument{kFormatVersion,
                          Instance{fixture.domain, fixture.function},
                          std::move(metadata)};
}

}  // namespace treesub
