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

#ifndef TREESUB_ERROR_HPP_
#define TREESUB_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace treesub {

// Root of the library's exception hierarchy. The CLI maps subclasses onto
// its exit codes: input-side errors -> 2, budget/solver failures -> 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid node id, labeling length mismatch, rank out of range.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed instance document or command-line value.
class InputError : public Error {
 public:
  using Error::Error;
};

// Tree shape not supported by the requested algorithm (non-binary tree for
// descent, non-fork tree for the weak route).
class UnsupportedStructure : public Error {
 public:
  using Error::Error;
};

// Vector passed to an inverse encoding is not in the image.
class NotInImage : public DomainError {
 public:
  using DomainError::DomainError;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class SolverFailure : public Error {
 public:
  using Error::Error;
};

// A descent stage took more accepted steps than the K+1 safety cap.
class IterationBoundViolation : public SolverFailure {
 public:
  using SolverFailure::SolverFailure;
};

class GenerationFailure : public Error {
 public:
  GenerationFailure(const std::string& what, std::uint64_t attempts,
                    std::uint64_t accepted)
      : Error(what), attempts_(attempts), accepted_(accepted) {}

  std::uint64_t attempts() const { return attempts_; }
  std::uint64_t accepted() const { return accepted_; }
  double acceptance_rate() const {
    return attempts_ == 0 ? 0.0 : static_cast<double>(accepted_) / attempts_;
  }

 private:
  std::uint64_t attempts_;
  std::uint64_t accepted_;
};

// Enumeration budgets. The environment variable TREESUB_BUDGET, when set to
// a positive integer, replaces every default below.
inline constexpr std::uint64_t kDefaultPairBudget = 1'000'000;
inline constexpr std::uint64_t kDefaultBoxBudget = 531'441;  // 3^12
inline constexpr std::uint64_t kDefaultIdealBudget = 1'000'000;

// Returns `fallback` unless TREESUB_BUDGET overrides it.
std::uint64_t BudgetFromEnv(std::uint64_t fallback);

}  // namespace treesub

#endif  // TREESUB_ERROR_HPP_
