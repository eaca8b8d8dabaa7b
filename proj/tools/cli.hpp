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

#ifndef TREESUB_TOOLS_CLI_HPP_
#define TREESUB_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace treesub::cli {

// Exit codes.
inline constexpr int kOk = 0;               // property holds / run succeeded
inline constexpr int kViolation = 1;        // witness found / bound violated
inline constexpr int kInputError = 2;       // malformed or unsupported input
inline constexpr int kSolverFailure = 3;    // budget, solver or generation failure

// Runs the tool with `args` (excluding the program name). Reports go to
// `out`, diagnostics to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace treesub::cli

#endif  // TREESUB_TOOLS_CLI_HPP_
