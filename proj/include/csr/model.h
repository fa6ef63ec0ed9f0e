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

// Core election data model: candidates, weighted votes, committees and
// committee positions. Candidates are identified by their index in the
// election roster; positions are 1-based.

#ifndef CSR_MODEL_H_
#define CSR_MODEL_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace csr {

// Binomial coefficient C(n, r); zero when r < 0 or r > n.
uint64_t Binomial(int n, int r);

// A strictly increasing sequence 1 <= p_1 < ... < p_k <= m.
class CommitteePosition {
 public:
  // Throws Error(kInput) unless the sequence is a valid member of [m]_k.
  CommitteePosition(int m, std::vector<int> positions);

  int m() const { return m_; }
  int k() const { return static_cast<int>(p_.size()); }
  // 0-based slot access: operator[](0) is i_1.
  int operator[](int t) const { return p_[t]; }
  const std::vector<int>& positions() const { return p_; }

  // Index of this sequence in the lexicographic enumeration of [m]_k.
  uint64_t Rank() const;

  friend bool operator==(const CommitteePosition& a,
                         const CommitteePosition& b) {
    return a.m_ == b.m_ && a.p_ == b.p_;
  }
  friend bool operator!=(const CommitteePosition& a,
                         const CommitteePosition& b) {
    return !(a == b);
  }

  std::string ToString() const;  // "(1,3,4)"

 private:
  int m_;
  std::vector<int> p_;
};

// Lexicographic rank of a valid sorted position sequence in [m]_k. No
// validation; callers pass sequences they built themselves.
uint64_t PositionRank(int m, const std::vector<int>& positions);
// Inverse of PositionRank.
std::vector<int> PositionAtRank(int m, int k, uint64_t rank);

// All of [m]_k in lexicographic order. Throws Error(kInput) unless
// 1 <= k <= m.
std::vector<CommitteePosition> EnumeratePositions(int m, int k);

// Componentwise i_t <= j_t. Throws Error(kInput) on a length or m mismatch.
bool WeaklyDominates(const CommitteePosition& i, const CommitteePosition& j);
// Weak dominance with at least one strict inequality.
bool Dominates(const CommitteePosition& i, const CommitteePosition& j);

// A size-k set of candidate indices, kept sorted.
class Committee {
 public:
  // Throws Error(kInput) on duplicates or indices outside [0, m).
  Committee(int m, std::vector<int> members);

  int size() const { return static_cast<int>(members_.size()); }
  const std::vector<int>& members() const { return members_; }
  bool Contains(int candidate) const;
  uint64_t mask() const { return mask_; }

  friend bool operator==(const Committee& a, const Committee& b) {
    return a.members_ == b.members_;
  }
  friend bool operator!=(const Committee& a, const Committee& b) {
    return !(a == b);
  }
  friend bool operator<(const Committee& a, const Committee& b) {
    return a.members_ < b.members_;
  }

 private:
  std::vector<int> members_;
  uint64_t mask_ = 0;
};

// All size-k subsets of {0..m-1}, lexicographic in sorted member indices.
std::vector<Committee> EnumerateCommittees(int m, int k);

// A strict ranking of the full roster with a positive integer multiplicity.
class Vote {
 public:
  // ranking[0] is the most preferred candidate. Throws Error(kInput) unless
  // ranking is a permutation of {0..m-1} and weight >= 1.
  explicit Vote(std::vector<int> ranking, int64_t weight = 1);

  int m() const { return static_cast<int>(ranking_.size()); }
  const std::vector<int>& ranking() const { return ranking_; }
  int64_t weight() const { return weight_; }

  // 1-based position. Throws Error(kInput) for an unknown candidate.
  int PositionOf(int candidate) const;
  CommitteePosition PositionOf(const Committee& committee) const;

 private:
  std::vector<int> ranking_;
  std::vector<int> position_;  // position_[c] is 1-based
  int64_t weight_;
};

class Election {
 public:
  // Throws Error(kInput) on invalid or duplicate tokens, votes that do not
  // rank exactly the roster, or an empty vote list.
  Election(std::vector<std::string> candidates, std::vector<Vote> votes);

  int m() const { return static_cast<int>(candidates_.size()); }
  // Total voter count (sum of weights).
  int64_t n() const { return total_weight_; }
  const std::vector<std::string>& candidates() const { return candidates_; }
  const std::vector<Vote>& votes() const { return votes_; }
  const std::string& Token(int candidate) const {
    return candidates_[candidate];
  }

  // Throws Error(kInput) for an unknown token.
  int IndexOf(std::string_view token) const;
  // Parses a token list such as {"a", "c"}.
  Committee MakeCommittee(const std::vector<std::string>& tokens) const;
  // "{a,c}" with members sorted by token.
  std::string Format(const Committee& committee) const;

  // Identical rankings merged into one weighted vote, sorted by ranking.
  Election Compacted() const;

  // Multiset equality of votes over the same roster.
  friend bool operator==(const Election& a, const Election& b);
  friend bool operator!=(const Election& a, const Election& b) {
    return !(a == b);
  }

 private:
  std::vector<std::string> candidates_;
  std::vector<Vote> votes_;
  int64_t total_weight_ = 0;
};

// Checks that a token is a non-empty alphanumeric (or '_') string.
bool IsValidToken(std::string_view token);

// Moves `candidate` one position up in a single unit of vote `vote_index`.
// A weighted vote is split: the remaining weight keeps the original ranking.
// Throws Error(kInvalidShift) if the candidate is already ranked first and
// Error(kInput) for a bad vote index.
Election ShiftForward(const Election& election, int vote_index,
                      int candidate);

}  // namespace csr

#endif  // CSR_MODEL_H_
