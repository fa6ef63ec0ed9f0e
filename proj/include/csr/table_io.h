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

// The ".fmk" scoring-table format:
//
//   m: 5
//   k: 2
//   1 2 : 3
//   1 3 : 5/2
//
// with exactly C(m,k) rows. Values are integers, "p/q" rationals or
// decimals; any decimal makes the table real-valued.

#ifndef CSR_TABLE_IO_H_
#define CSR_TABLE_IO_H_

#include <string>
#include <string_view>

#include "csr/scoring.h"

namespace csr {

// Throws Error(kParse) on missing or duplicate rows and malformed values.
// With `validate`, also throws Error(kInput) listing monotonicity or
// nonnegativity violations.
ScoringFunction ParseTable(std::string_view text, bool validate = true,
                           std::string name = "table");
ScoringFunction LoadTable(const std::string& path, bool validate = true);

// Rows in lexicographic order. Reals keep full precision.
std::string FormatTable(const ScoringFunction& f);
void SaveTable(const ScoringFunction& f, const std::string& path);

}  // namespace csr

#endif  // CSR_TABLE_IO_H_
