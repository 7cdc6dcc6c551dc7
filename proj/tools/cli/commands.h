// Copyright 2026 The qarrow Authors
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

#ifndef QARROW_TOOLS_CLI_COMMANDS_H
#define QARROW_TOOLS_CLI_COMMANDS_H

#include <iosfwd>

namespace qarrow::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitConfig = 1,
    kExitIo = 2,
    kExitNumeric = 3,
};

/// Entry point of the qarrow command line. Results without an --out path go
/// to `out`; diagnostics go to `err`.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace qarrow::cli

#endif
