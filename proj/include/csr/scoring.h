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

// Committee scoring functions f_{m,k}: [m]_k -> R+. Every function is
// materialized into a table indexed by the lexicographic rank of the
// committee position, so evaluation is a lookup regardless of family.

#ifndef CSR_SCORING_H_
#define CSR_SCORING_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "csr/model.h"
#include "csr/score.h"

namespace csr {

enum class Family {
  kSntv,
  kBloc,
  kKBorda,
  kCcBorda,
  kCcApproval,
  kPav,
  kQhb,
  kLpBorda,
  kPerfectionist,
  kSntvPerf,
  kMultiThreshold,
  kMaxThreshold,
  kOwa,
  kDecomposable,
  kTopKCounting,
  kTrivial,
  kTable,
};

// t-approval: 1 if i <= t, else 0.
Score Alpha(int t, int i);
// Borda: m - i.
Score Beta(int m, int i);

// An ordered weighted average form sum_t weights[t] * gamma(i_t).
// gamma[i - 1] is the single-winner score of position i.
struct OwaForm {
  std::vector<Score> weights;
  std::vector<Score> gamma;
};

// How committee scores are accumulated internally.
enum class NumericMode {
  kInteger,   // exact, all values share a small common denominator
  kRational,  // exact, arbitrary precision
  kReal,      // doubles compared with relative tolerance
};

class ScoringFunction {
 public:
  // Scores a partial committee given its sorted positions (length <= k).
  using PartialFn = std::function<Score(const std::vector<int>&)>;

  // values[r] is f at PositionAtRank(m, k, r). No monotonicity check; use
  // the factories in `families` or MakeTable for validated construction.
  ScoringFunction(int m, int k, Family family, std::string name,
                  std::vector<Score> values,
                  std::optional<std::vector<Score>> separable_gamma = {},
                  std::optional<OwaForm> owa = {}, PartialFn partial = {});

  int m() const { return m_; }
  int k() const { return k_; }
  Family family() const { return family_; }
  const std::string& name() const { return name_; }
  uint64_t size() const { return values_.size(); }
  bool is_exact() const { return mode_ != NumericMode::kReal; }

  // Throws Error(kInput) if I is not in [m]_k for this function.
  const Score& Evaluate(const CommitteePosition& position) const;
  const Score& ValueAtRank(uint64_t rank) const { return values_[rank]; }
  const std::vector<Score>& values() const { return values_; }

  // f(I) = sum_t gamma(i_t), when known by construction.
  const std::optional<std::vector<Score>>& separable_gamma() const {
    return gamma_;
  }
  const std::optional<OwaForm>& owa_form() const { return owa_; }

  // True for OWA forms with nonnegative, nonincreasing weights; these have
  // monotone submodular committee scores and greedy is a 1 - 1/e
  // approximation.
  bool GreedyEligible() const;

  // Score of a committee with fewer than k members, used by greedy. OWA
  // forms use the weight prefix; other families either have a natural
  // truncation or complete the committee with the worst free positions.
  Score PartialScore(const std::vector<int>& sorted_positions) const;

  // f(I_max) == f(I_min); by monotonicity this means f is constant.
  bool IsConstant() const;

  NumericMode numeric_mode() const { return mode_; }
  // kInteger mode: values()[r] == scaled()[r] / denominator().
  const std::vector<int64_t>& scaled() const { return scaled_; }
  int64_t denominator() const { return denominator_; }
  // Always populated.
  const std::vector<double>& doubles() const { return doubles_; }

 private:
  int m_;
  int k_;
  Family family_;
  std::string name_;
  std::vector<Score> values_;
  std::optional<std::vector<Score>> gamma_;
  std::optional<OwaForm> owa_;
  PartialFn partial_;
  NumericMode mode_ = NumericMode::kInteger;
  std::vector<int64_t> scaled_;
  int64_t denominator_ = 1;
  std::vector<double> doubles_;
};

// A violation of the scoring-function axioms found in a table.
struct TableViolation {
  enum Kind { kDominance, kNegative } kind;
  CommitteePosition dominating;  // I (or the negative row for kNegative)
  CommitteePosition dominated;   // J with I dominating J but f(I) < f(J)
  std::string ToString() const;
};

// Lists every dominating pair (I, J) with f(I) < f(J) and every negative
// value, up to `limit` entries (0 means unlimited).
std::vector<TableViolation> ValidateTable(const ScoringFunction& f,
                                          size_t limit = 0);

// Builds a table function; throws Error(kInput) listing violations if the
// values are not monotone and nonnegative.
ScoringFunction MakeTable(int m, int k, std::vector<Score> values,
                          std::string name = "table");
// Same, without validation (negative controls only).
ScoringFunction MakeTableUnchecked(int m, int k, std::vector<Score> values,
                                   std::string name = "table");

// x -> a * x + b pointwise. Throws Error(kInput) unless a > 0 and
// Error(kRange) if a value turns negative.
ScoringFunction AffineTransform(const ScoringFunction& f, const Score& a,
                                const Score& b);

// Sum over votes of weight * f(committee position).
Score ScoreOf(const Election& election, const ScoringFunction& f,
              const Committee& committee);

namespace families {

ScoringFunction Sntv(int m, int k);
ScoringFunction Bloc(int m, int k);
ScoringFunction KBorda(int m, int k);
ScoringFunction CcBorda(int m, int k);
ScoringFunction CcApproval(int m, int k);
// sum_j alpha_t(i_j) / j.
ScoringFunction Pav(int m, int k, int t);
// sum_j beta_m(i_j) / j^q; exact for integer q.
ScoringFunction Qhb(int m, int k, const Score& q);
// (sum_j beta_m(i_j)^p)^(1/p); exact for p = 1.
ScoringFunction LpBorda(int m, int k, const Score& p);
ScoringFunction Perfectionist(int m, int k);
ScoringFunction SntvPerf(int m, int k);
// sum_j lambdas[j] * alpha_{thresholds[j]}(i_j).
ScoringFunction MultiThreshold(int m, int k, std::vector<Score> lambdas,
                               std::vector<int> thresholds);
// max_j alpha_{thresholds[j]}(i_j).
ScoringFunction MaxThreshold(int m, int k, std::vector<int> thresholds);
// sum_j weights[j] * gamma(i_j); weights >= 0, gamma nonincreasing.
ScoringFunction Owa(int m, int k, std::vector<Score> weights,
                    std::vector<Score> gamma);
// sum_j gammas[j](i_j); each gammas[j] has m entries and is nonincreasing.
ScoringFunction Decomposable(int m, int k,
                             std::vector<std::vector<Score>> gammas);
// g(|{j : i_j <= k}|); g has k + 1 entries and is nondecreasing.
ScoringFunction TopKCounting(int m, int k, std::vector<Score> g);
ScoringFunction Trivial(int m, int k);

}  // namespace families

}  // namespace csr

#endif  // CSR_SCORING_H_
