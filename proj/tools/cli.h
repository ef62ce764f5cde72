// Copyright 2026 The noisymagic Authors
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


#ifndef NOISYMAGIC_TOOLS_CLI_H
#define NOISYMAGIC_TOOLS_CLI_H

#include <ostream>
#include <span>
#include <string>

namespace noisymagic {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInvalid = 2;

/// Runs one command. `args` excludes the program name. Data goes to `out`,
/// single-line diagnostics to `err`.
int run_cli(std::span<const std::string> args, std::ostream &out, std::ostream &err);

/// Runs the named validation suite ("all" or a module name), printing one
/// PASS/FAIL line per check. Returns the number of failures.
int run_validation(std::string_view suite, std::ostream &out);

}  // namespace noisymagic

#endif
