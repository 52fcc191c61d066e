// Copyright 2026 The dupcode Authors
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


#ifndef DUPCODE_CLI_HPP
#define DUPCODE_CLI_HPP

#include <iosfwd>

namespace dupcode::cli {

/// Exit codes. Verification maps its status onto 0, 2 and 3; decode uses 2
/// for a detected error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCounterexample = 2;
inline constexpr int kExitInconclusive = 3;
inline constexpr int kExitCap = 4;

/// Parses argv and runs one subcommand. `in` backs the "-" input.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace dupcode::cli

#endif  // DUPCODE_CLI_HPP
