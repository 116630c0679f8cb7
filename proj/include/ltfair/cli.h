// Copyright 2026 The ltfair Authors
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

#ifndef LTFAIR_CLI_H_
#define LTFAIR_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace ltfair::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInfeasible = 1;
inline constexpr int kExitInputError = 2;

// Subcommands: solve-det, solve-greedy, solve-rand, oracle, check, bench.
// `args` excludes the program name. Results go to `out` unless --out is
// given; diagnostics go to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);
int Run(int argc, const char* const* argv);

}  // namespace ltfair::cli

#endif  // LTFAIR_CLI_H_
