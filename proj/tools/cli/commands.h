// Copyright 2026 The qfid Authors
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

#ifndef QFID_CLI_COMMANDS_H
#define QFID_CLI_COMMANDS_H

#include <iosfwd>
#include <string>
#include <vector>

namespace qfid::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitParse = 1,
    kExitValidation = 2,
    kExitNotCptp = 3,
};

/// Runs `qfid <args...>` (args excludes the program name), writing reports to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qfid::cli

#endif
