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

#ifndef TREESUB_INSTANCE_IO_HPP_
#define TREESUB_INSTANCE_IO_HPP_

#include <string>
#include <string_view>

#include "json.hpp"
#include "treesub/cost_function.hpp"
#include "treesub/generate.hpp"

namespace treesub {

inline constexpr const char* kFormatVersion = "1.0";

// UTF-8 JSON instance file:
//
//   {
//     "format_version": "1.0",
//     "trees": [{"parent": [-1, 0, 1]}, ...],
//     "function": {"type": "table", "denominator": 1, "values": [...]}
//              | {"type": "sum", "denominator": 1,
//                 "terms": [{"scope": [0, 1], "values": [...]}, ...]},
//     "metadata": {...}                                   (optional)
//   }
//
// The cost of a table entry v is v / denominator. Entries may also be written
// as {"num": p, "den": q}, meaning the rational p/q; it must be a multiple of
// 1/denominator. Tables are indexed mixed-radix with variable 0 (or scope[0])
// as the most significant digit.
struct InstanceDocument {
  std::string format_version = kFormatVersion;
  Instance instance;
  nlohmann::json metadata;  // null or object

  const ProductDomain& domain() const { return instance.domain; }
  const CostFunction& function() const { return instance.function; }
};

// Throws InputError carrying a line/column (syntax) or a JSON pointer
// (structure) locating the problem.
InstanceDocument ParseInstance(std::string_view text);
InstanceDocument ReadInstanceFile(const std::string& path);

// Canonical form: fixed key order, two-space indentation, scalar arrays on
// one line, metadata keys sorted, trailing newline. Idempotent under
// ParseInstance.
std::string SerializeInstance(const InstanceDocument& doc);
void WriteFile(const std::string& path, const std::string& contents);

// Metadata records the seed, provenance, and verified properties.
InstanceDocument ToDocument(const InstanceFixture& fixture,
                            const std::string& kind);

// Pretty printer shared with the CLI reports.
std::string CanonicalJson(const nlohmann::ordered_json& value);

}  // namespace treesub

#endif  // TREESUB_INSTANCE_IO_HPP_
