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

#ifndef TREESUB_RANDOM_HPP_
#define TREESUB_RANDOM_HPP_

#include <cstdint>
#include <random>

namespace treesub {

// All randomness in the project flows through this generator: the standard
// mt19937_64 engine seeded with a single 64-bit value, with bounded integers
// drawn by rejection (v uniform on [0, 2^64), rejected when
// v >= 2^64 - (2^64 mod r), result lo + v mod r). Both pieces are fully
// specified, so sequences reproduce across platforms and languages.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }

  // Uniform on the closed range [lo, hi].
  std::int64_t Uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t range =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (range == 0) return static_cast<std::int64_t>(Next());
    constexpr std::uint64_t kMax = ~std::uint64_t{0};
    const std::uint64_t rem = (kMax % range + 1) % range;
    std::uint64_t v = Next();
    while (rem != 0 && v > kMax - rem) v = Next();
    return lo + static_cast<std::int64_t>(v % range);
  }

  // True with probability num/den.
  bool Chance(std::int64_t num, std::int64_t den) {
    return Uniform(0, den - 1) < num;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace treesub

#endif  // TREESUB_RANDOM_HPP_
