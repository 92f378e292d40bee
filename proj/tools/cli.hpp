// Copyright 2026 The ufrac Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UFRAC_TOOLS_CLI_HPP
#define UFRAC_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ufrac::cli {

// Exit codes shared by every command.
inline constexpr int kFound = 0;
inline constexpr int kNotFound = 1;
inline constexpr int kInvalidInput = 2;

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ufrac::cli

#endif  // UFRAC_TOOLS_CLI_HPP
