// Copyright 2026 The qsim Authors
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

#ifndef QSIM_TOOLS_CLI_H_
#define QSIM_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace qsim::cli {

enum ExitCode : int {
  kOk = 0,
  kUsageError = 2,
  kRuntimeError = 3,
};

/// Runs the command line `args` (args[0] is the program name). Data goes
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qsim::cli

#endif  // QSIM_TOOLS_CLI_H_
