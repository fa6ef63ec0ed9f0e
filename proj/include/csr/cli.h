// Copyright 2026 The Authors.
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

// Command-line front end. Subcommands: winners, score, classify, audit and
// gen. Output is plain text, one record per line, and depends only on the
// flags (never on the thread count).

#ifndef CSR_CLI_H_
#define CSR_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace csr {

// Process exit codes.
inline constexpr int kExitOk = 0;  // also "verified"
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitPartial = 3;

// Runs one invocation. `args` excludes the program name. Results go to
// `out`, diagnostics to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace csr

#endif  // CSR_CLI_H_
