// Copyright 2026 The wfeval Authors.
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

// Command-line front end. Subcommands: report, compare, weights,
// dataset-stats.
//
// Exit codes: 0 success, 1 unexpected failure, 2 usage or configuration
// error, 3 unreadable or malformed input, 4 inconsistent input, 5 degenerate
// data (entropy over one class, zero variance in both run groups).

#ifndef WFEVAL_CLI_H_
#define WFEVAL_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "wfeval/error.h"

namespace wfeval {

// `args` excludes the program name. Reports go to `out`, diagnostics to
// `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

int exit_code_for(ErrorKind kind);

}  // namespace wfeval

#endif  // WFEVAL_CLI_H_
