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

// Reading and writing the ".elec" text format:
//
//   # comment
//   candidates: a b c d
//   3: a > b > c > d
//   1: d > c > a > b

#ifndef CSR_ELECTION_IO_H_
#define CSR_ELECTION_IO_H_

#include <string>
#include <string_view>

#include "csr/model.h"

namespace csr {

// Throws Error(kParse) on malformed text and Error(kInput) on rankings that
// are incomplete or repeat a candidate.
Election ParseElection(std::string_view text);
Election LoadElection(const std::string& path);

// One line per vote, in stored order.
std::string FormatElection(const Election& election);
void SaveElection(const Election& election, const std::string& path);

// Shared helpers for the line-oriented formats.
namespace io_internal {
std::string Trim(std::string_view s);
std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, const std::string& contents);
}  // namespace io_internal

}  // namespace csr

#endif  // CSR_ELECTION_IO_H_
