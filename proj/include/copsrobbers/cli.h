// Copyright 2026 The copsrobbers Authors.
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

#ifndef COPSROBBERS_CLI_H_
#define COPSROBBERS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace copsrobbers {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitInfeasible = 3,
  kExitNonConvergence = 4,
  kExitInfinite = 5,
};

// Environment variable consulted for the default state cap.
inline constexpr const char* kStateCapEnv = "COPSROBBERS_STATE_CAP";

// Runs the command line `args` (args[0] is the program name) and returns the
// process exit code. Normal output goes to `out`, diagnostics to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace copsrobbers

#endif  // COPSROBBERS_CLI_H_
