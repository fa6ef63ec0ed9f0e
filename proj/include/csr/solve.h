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

// Winner determination for committee scoring rules.

#ifndef CSR_SOLVE_H_
#define CSR_SOLVE_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "csr/model.h"
#include "csr/rule.h"
#include "csr/score.h"
#include "csr/scoring.h"

namespace csr {

struct SolveOptions {
  // Worker threads for committee enumeration; 0 means all cores. Results
  // do not depend on this value.
  int threads = 0;
};

// Resolves SolveOptions::threads to a positive count.
int ResolveThreads(int threads);

struct WinnerSet {
  // Sorted by the token sequence of their (token-sorted) members. Empty in
  // count-only mode.
  std::vector<Committee> committees;
  Score optimum;
  // Single-winner scores indexed by candidate; set by the separable path.
  std::optional<std::vector<Score>> candidate_scores;
  uint64_t count = 0;
};

// Scores of EnumerateCommittees(m, k), in that order.
std::vector<Score> AllCommitteeScores(const Election& election,
                                      const ScoringFunction& f,
                                      const SolveOptions& options = {});

// Enumerates every committee; winners are the committees within the
// comparison tolerance of the maximum.
WinnerSet WinnersExact(const Election& election, const ScoringFunction& f,
                       const SolveOptions& options = {});
WinnerSet WinnersExact(const Election& election, const Rule& rule, int k,
                       const SolveOptions& options = {});

// Scores candidates independently with the function's separable witness
// and expands ties combinatorially. Throws Error(kUnsupportedRule) if the
// function carries no witness, and Error(kResource) if expansion would
// exceed `max_expand` committees (use count_only then).
WinnerSet WinnersSeparable(const Election& election, const ScoringFunction& f,
                           bool count_only = false,
                           uint64_t max_expand = 1'000'000);
// Same with an explicit witness gamma over [m] (e.g. from classification).
WinnerSet WinnersSeparable(const Election& election,
                           const std::vector<Score>& gamma, int k,
                           bool count_only = false,
                           uint64_t max_expand = 1'000'000);

struct GreedyResult {
  Committee committee;
  Score score;
  // True when the rule is greedy-eligible, so score >= (1 - 1/e) * optimum.
  bool guaranteed = false;
};

// Adds the candidate with the largest marginal gain k times; ties go to the
// lexicographically smallest token. Throws Error(kUnsupportedRule) for
// ineligible rules unless `force` is set.
GreedyResult WinnersGreedy(const Election& election, const ScoringFunction& f,
                           bool force = false);

struct WinningCheck {
  bool winning = false;
  Score margin;  // optimum - score(W), never negative
};

WinningCheck IsWinning(const Election& election, const ScoringFunction& f,
                       const Committee& committee,
                       const SolveOptions& options = {});

// Sorts committees into the canonical display order.
void SortCommittees(const Election& election,
                    std::vector<Committee>& committees);

}  // namespace csr

#endif  // CSR_SOLVE_H_
