// Copyright 2026 The qtmlab Authors
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


#ifndef QTMLAB_TOOLS_CLI_H
#define QTMLAB_TOOLS_CLI_H

#include <ostream>

namespace qtmlab {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitFinding = 2;

/// Runs the `qtmlab` command line. Reports go to `out` unless redirected to a
/// file by an option; diagnostics go to `err`.
int cli_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace qtmlab

#endif
