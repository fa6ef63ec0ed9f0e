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

#ifndef CSR_RULE_H_
#define CSR_RULE_H_

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "csr/scoring.h"

namespace csr {

// A committee scoring rule: a family of scoring functions, one per (m, k).
class Rule {
 public:
  using Factory = std::function<ScoringFunction(int m, int k)>;

  Rule(std::string spec, Factory factory)
      : spec_(std::move(spec)), factory_(std::move(factory)) {}

  const std::string& spec() const { return spec_; }

  // f_{m,k}. Throws Error(kParse) when the rule parameters do not fit
  // (m, k), for example a threshold above m.
  ScoringFunction At(int m, int k) const { return factory_(m, k); }

  // True iff f_{m,k} is constant.
  bool IsDegenerate(int m, int k) const { return At(m, k).IsConstant(); }

 private:
  std::string spec_;
  Factory factory_;
};

// Parses a rule spec:
//   sntv | bloc | kborda | cc-borda | cc-approval | pav:<t> | qhb:<q> |
//   lpborda:<p> | perfectionist | sntv+perf | trivial |
//   multithreshold:<l1,...,lk>;<t1,...,tk> | maxthreshold:<t1,...,tk> |
//   table:<path>
// The literal "pav:<k>" (or "pav:k") binds t = k at every (m, k).
// Throws Error(kParse) on malformed specs.
Rule ParseRule(std::string_view spec);
// Parses and checks that the rule is defined at (m, k).
Rule ParseRule(std::string_view spec, int m, int k);

// Specs of the built-in catalog used for sweeps.
std::vector<std::string> CatalogSpecs();

}  // namespace csr

#endif  // CSR_RULE_H_
