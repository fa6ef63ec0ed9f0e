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

// Empirical axiom audits over bounded election domains. Exhaustive search
// enumerates profiles as multisets of rankings; random search draws
// impartial-culture profiles from per-item seeds. Both report either
// "verified" over the searched domain, a replayable counterexample, or a
// partial result when the evaluation budget runs out.

#ifndef CSR_AXIOMS_H_
#define CSR_AXIOMS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "csr/model.h"
#include "csr/rule.h"
#include "csr/score.h"

namespace csr {

enum class Axiom {
  kNonCrossing,
  kPrefix,  // t-prefix; t = 1 is top-member monotonicity
  kNarrowTop,
  kEnlargement,
  kCandidate,
  kConsistency,
  kNonimposition,
};

struct AxiomSpec {
  Axiom axiom = Axiom::kNonCrossing;
  int t = 1;  // prefix length for kPrefix

  // "non-crossing", "prefix:<t>", "top-member", "narrow-top", "enlargement",
  // "candidate", "consistency", "nonimposition".
  std::string Name() const;
};

// Parses the names above. Throws Error(kInput) otherwise.
AxiomSpec ParseAxiom(const std::string& name);

enum class SearchMode { kExhaustive, kRandom };

// Committee-score evaluations allowed per audit by default. One evaluation
// is one committee's score updated for one vote.
inline constexpr uint64_t kDefaultBudget = 100'000'000;

struct SearchDomain {
  int min_m = 2;
  int max_m = 4;
  int min_n = 1;  // unit voters per profile
  int max_n = 3;
  // Fixed committee size; otherwise every k in [1, m - 1].
  std::optional<int> k;
  SearchMode mode = SearchMode::kExhaustive;
  int64_t samples = 1000;
  uint64_t seed = 0;
  uint64_t budget = kDefaultBudget;
  int threads = 0;  // 0 = all cores; results do not depend on it

  // "m=2..4,n=1..3,k=1..m-1,mode=exhaustive" (random adds samples, seed).
  std::string ToString() const;
};

// Forward shifts of one unit of vote `vote_index`, applied in order; each
// listed candidate swaps with its current predecessor.
struct Mutation {
  int vote_index = 0;
  std::vector<int> shifted;
};

struct Counterexample {
  AxiomSpec axiom;
  int k = 0;
  Election election;
  // Second profile for consistency.
  std::optional<Election> second;
  // The committee the violation is about: the winning committee that stops
  // winning, the winner missing a narrow top set, or the committee without
  // a nested partner (of size k or k + 1) for enlargement.
  Committee committee;
  std::optional<Mutation> mutation;
  // Filled when the counterexample is (re)checked.
  std::optional<Election> mutated;
  std::vector<Committee> winners_before;
  std::vector<Committee> winners_after;
  // Mutation axioms: score of the committee before and after the change.
  // Other axioms: score of the committee and the optimum it is judged
  // against.
  Score score_before;
  Score score_after;
  std::string description;
};

enum class AuditVerdict { kVerified, kCounterexample, kPartial };

// "verified", "counterexample", "partial".
const char* AuditVerdictName(AuditVerdict verdict);

struct AuditOutcome {
  AxiomSpec axiom;
  std::string rule;
  SearchDomain domain;
  AuditVerdict verdict = AuditVerdict::kVerified;
  std::optional<Counterexample> counterexample;
  uint64_t evaluations = 0;
  uint64_t items_checked = 0;
  uint64_t items_total = 0;
  std::string coverage;
};

// Runs the audit named by `axiom`. Nonimposition ignores n and mode.
AuditOutcome Audit(const Rule& rule, const AxiomSpec& axiom,
                   const SearchDomain& domain);

AuditOutcome AuditNonCrossing(const Rule& rule, const SearchDomain& domain);
AuditOutcome AuditPrefix(const Rule& rule, int t, const SearchDomain& domain);
AuditOutcome AuditNarrowTop(const Rule& rule, const SearchDomain& domain);
AuditOutcome AuditCommitteeEnlargement(const Rule& rule,
                                       const SearchDomain& domain);
AuditOutcome AuditCandidateMonotonicity(const Rule& rule,
                                        const SearchDomain& domain);
AuditOutcome AuditConsistency(const Rule& rule, const SearchDomain& domain);
// For every m in [max(min_m, k + 1), max_m] and every size-k committee W,
// zeta(W) must elect exactly W when the rule is non-degenerate at (m, k);
// a degenerate (m, k) is itself a counterexample.
AuditOutcome AuditNonimposition(const Rule& rule, const SearchDomain& domain);

// Checks one election (two for consistency) at committee size k; the
// scoring functions come from `rule`. Returns the first violation in
// enumeration order.
std::optional<Counterexample> CheckElection(
    const Rule& rule, const AxiomSpec& axiom, const Election& election, int k,
    const std::optional<Election>& second = std::nullopt);

// Shifts the top-t members of W forward in one unit of vote `vote_index`
// and reports a counterexample if W was winning and stops winning.
std::optional<Counterexample> CheckPrefixShift(const Rule& rule,
                                               const Election& election,
                                               int k, const Committee& w,
                                               int vote_index, int t);

// Recomputes both winner sets from the stored data. Returns the refreshed
// counterexample if the violation (and the mutation's legality) holds.
std::optional<Counterexample> Recheck(const Rule& rule,
                                      const Counterexample& cx);
bool Replays(const Rule& rule, const Counterexample& cx);

// Greedily lowers vote weights and removes candidates outside the
// committee and the mutation while the violation persists.
Counterexample MinimizeCounterexample(const Rule& rule,
                                      const Counterexample& cx);

// Header line, commented details and the ".elec" counterexample block.
std::string FormatAuditReport(const AuditOutcome& outcome);

}  // namespace csr

#endif  // CSR_AXIOMS_H_
