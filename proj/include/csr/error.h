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

#ifndef CSR_ERROR_H_
#define CSR_ERROR_H_

#include <stdexcept>
#include <string>

namespace csr {

enum class ErrorKind {
  kInput,            // malformed arguments: unknown candidate, size mismatch
  kParse,            // malformed text in .elec/.fmk files or rule specs
  kInvalidShift,     // shifting a candidate that is already ranked first
  kRange,            // a value left its admissible range (negative score)
  kUnsupportedRule,  // the requested algorithm does not apply to the rule
  kResource,         // a construction exceeds the supported size
};

const char* ErrorKindName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace csr

#endif  // CSR_ERROR_H_
