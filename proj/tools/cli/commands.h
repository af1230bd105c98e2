// Copyright 2026 The Apollonius Authors
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

// Subcommands of the `apollonius` tool.

#ifndef APOLLONIUS_TOOLS_CLI_COMMANDS_H_
#define APOLLONIUS_TOOLS_CLI_COMMANDS_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "apollonius/verify.h"

namespace apollonius::cli {

// Stable exit-code contract, also listed by --help.
enum ExitCode : int {
  kExitOk = 0,
  kExitViolations = 1,
  kExitUsage = 2,     // bad arguments or unparsable input
  kExitInfinite = 3,  // solution set is an infinite family
  kExitTooFewObjects = 4,
  kExitUnrealizable = 5,  // tangency graph ruled out by a count bound
  kExitGeometry = 6,      // invalid parameters, unknown scenario, ...
};

// Runs the tool on `args` (without the program name). Documents go to
// `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// Registry scenarios plus one tangency-graph witness, re-validated.
VerificationReport check_scenarios();

// Every K(m, n) cell with 1 <= n <= m <= max_side: witnesses must validate,
// ruled-out cells must cite the bound of their smaller side.
VerificationReport check_kmn(int max_side);

}  // namespace apollonius::cli

#endif  // APOLLONIUS_TOOLS_CLI_COMMANDS_H_
