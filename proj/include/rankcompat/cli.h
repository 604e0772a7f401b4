/*
 * Copyright 2026 The rankcompat Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef RANKCOMPAT_CLI_H_
#define RANKCOMPAT_CLI_H_

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace rankcompat {

// Exit codes of RunCli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;
inline constexpr int kExitNumeric = 3;

// Parses `start..end[:step]` (step defaults to 0.1), a comma-separated list,
// or a single number. Throws InvalidConfig on malformed input.
std::vector<double> ParseGridSpec(std::string_view text);

// Entry point behind the `rankcompat` binary. Regular output goes to `out`,
// diagnostics and the resolved configuration to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace rankcompat

#endif  // RANKCOMPAT_CLI_H_
