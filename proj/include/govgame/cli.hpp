// Copyright 2026 The govgame Authors
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

#ifndef GOVGAME_CLI_HPP_
#define GOVGAME_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace govgame {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;     // bad flags, unreadable or invalid input
inline constexpr int kExitMismatch = 2;  // a reproduction or expectation check failed

enum class OutputFormat { Table, Json, Csv };

// Runs the command line `args` (without the program name). Requested data goes
// to `out`, diagnostics and warnings to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace govgame

#endif  // GOVGAME_CLI_HPP_
