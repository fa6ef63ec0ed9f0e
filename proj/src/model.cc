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

#include "csr/model.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <utility>

#include "csr/error.h"

namespace csr {

namespace {

constexpr int kMaxCandidates = 64;

void Require(bool condition, const std::string& message) {
  if (!condition) throw Error(ErrorKind::kInput, message);
}

}  // namespace

uint64_t Binomial(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  uint64_t result = 1;
  for (int i = 1; i <= r; ++i) {
    result = result * static_cast<uint64_t>(n - r + i) / i;
  }
  return result;
}

CommitteePosition::CommitteePosition(int m, std::vector<int> positions)
    : m_(m), p_(std::move(positions)) {
  Require(m >= 1, "m must be positive");
  Require(!p_.empty() && static_cast<int>(p_.size()) <= m,
          "committee position length must lie in [1, m]");
  for (size_t t = 0; t < p_.size(); ++t) {
    Require(p_[t] >= 1 && p_[t] <= m, "position outside [1, m]");
    Require(t == 0 || p_[t - 1] < p_[t],
            "committee position must be strictly increasing");
  }
}

uint64_t CommitteePosition::Rank() const { return PositionRank(m_, p_); }

std::string CommitteePosition::ToString() const {
  std::string s = "(";
  for (size_t t = 0; t < p_.size(); ++t) {
    if (t > 0) s += ",";
    s += std::to_string(p_[t]);
  }
  return s + ")";
}

uint64_t PositionRank(int m, const std::vector<int>& positions) {
  const int k = static_cast<int>(positions.size());
  uint64_t rank = 0;
  int prev = 0;
  for (int t = 1; t <= k; ++t) {
    for (int v = prev + 1; v < positions[t - 1]; ++v) {
      rank += Binomial(m - v, k - t);
    }
    prev = positions[t - 1];
  }
  return rank;
}

std::vector<int> PositionAtRank(int m, int k, uint64_t rank) {
  std::vector<int> out;
  out.reserve(k);
  int v = 1;
  for (int t = 1; t <= k; ++t) {
    while (true) {
      uint64_t block = Binomial(m - v, k - t);
      if (rank < block) break;
      rank -= block;
      ++v;
    }
    out.push_back(v);
    ++v;
  }
  return out;
}

std::vector<CommitteePosition> EnumeratePositions(int m, int k) {
  Require(k >= 1 && k <= m, "enumeration requires 1 <= k <= m");
  std::vector<CommitteePosition> out;
  out.reserve(Binomial(m, k));
  std::vector<int> p(k);
  for (int t = 0; t < k; ++t) p[t] = t + 1;
  while (true) {
    out.emplace_back(m, p);
    int t = k - 1;
    while (t >= 0 && p[t] == m - k + t + 1) --t;
    if (t < 0) break;
    ++p[t];
    for (int u = t + 1; u < k; ++u) p[u] = p[u - 1] + 1;
  }
  return out;
}

bool WeaklyDominates(const CommitteePosition& i, const CommitteePosition& j) {
  Require(i.k() == j.k() && i.m() == j.m(),
          "dominance needs positions of equal length over the same m");
  for (int t = 0; t < i.k(); ++t) {
    if (i[t] > j[t]) return false;
  }
  return true;
}

bool Dominates(const CommitteePosition& i, const CommitteePosition& j) {
  return WeaklyDominates(i, j) && i != j;
}

Committee::Committee(int m, std::vector<int> members)
    : members_(std::move(members)) {
  Require(m <= kMaxCandidates, "at most 64 candidates are supported");
  std::sort(members_.begin(), members_.end());
  for (size_t i = 0; i < members_.size(); ++i) {
    Require(members_[i] >= 0 && members_[i] < m,
            "committee member outside the roster");
    Require(i == 0 || members_[i - 1] != members_[i],
            "duplicate committee member");
    mask_ |= uint64_t{1} << members_[i];
  }
}

bool Committee::Contains(int candidate) const {
  return candidate >= 0 && candidate < kMaxCandidates &&
         (mask_ >> candidate & 1) != 0;
}

std::vector<Committee> EnumerateCommittees(int m, int k) {
  std::vector<Committee> out;
  for (const CommitteePosition& p : EnumeratePositions(m, k)) {
    std::vector<int> members(p.positions());
    for (int& c : members) --c;
    out.emplace_back(m, std::move(members));
  }
  return out;
}

Vote::Vote(std::vector<int> ranking, int64_t weight)
    : ranking_(std::move(ranking)), weight_(weight) {
  Require(weight_ >= 1, "vote weight must be at least 1");
  const int m = static_cast<int>(ranking_.size());
  Require(m >= 1, "empty ranking");
  position_.assign(m, 0);
  for (int p = 0; p < m; ++p) {
    int c = ranking_[p];
    Require(c >= 0 && c < m, "ranking mentions an unknown candidate");
    Require(position_[c] == 0, "ranking repeats a candidate");
    position_[c] = p + 1;
  }
}

int Vote::PositionOf(int candidate) const {
  Require(candidate >= 0 && candidate < m(), "unknown candidate");
  return position_[candidate];
}

CommitteePosition Vote::PositionOf(const Committee& committee) const {
  std::vector<int> p;
  p.reserve(committee.size());
  for (int c : committee.members()) p.push_back(PositionOf(c));
  std::sort(p.begin(), p.end());
  return CommitteePosition(m(), std::move(p));
}

bool IsValidToken(std::string_view token) {
  if (token.empty()) return false;
  return std::all_of(token.begin(), token.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

Election::Election(std::vector<std::string> candidates,
                   std::vector<Vote> votes)
    : candidates_(std::move(candidates)), votes_(std::move(votes)) {
  Require(!candidates_.empty(), "empty candidate roster");
  Require(m() <= kMaxCandidates, "at most 64 candidates are supported");
  std::set<std::string> seen;
  for (const std::string& c : candidates_) {
    Require(IsValidToken(c), "invalid candidate token '" + c + "'");
    Require(seen.insert(c).second, "duplicate candidate '" + c + "'");
  }
  Require(!votes_.empty(), "election has no votes");
  for (const Vote& v : votes_) {
    Require(v.m() == m(), "vote does not rank exactly the roster");
    total_weight_ += v.weight();
  }
}

int Election::IndexOf(std::string_view token) const {
  for (int i = 0; i < m(); ++i) {
    if (candidates_[i] == token) return i;
  }
  throw Error(ErrorKind::kInput,
              "unknown candidate '" + std::string(token) + "'");
}

Committee Election::MakeCommittee(
    const std::vector<std::string>& tokens) const {
  std::vector<int> members;
  members.reserve(tokens.size());
  for (const std::string& t : tokens) members.push_back(IndexOf(t));
  return Committee(m(), std::move(members));
}

std::string Election::Format(const Committee& committee) const {
  std::vector<std::string> tokens;
  for (int c : committee.members()) tokens.push_back(candidates_[c]);
  std::sort(tokens.begin(), tokens.end());
  std::string s = "{";
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) s += ",";
    s += tokens[i];
  }
  return s + "}";
}

Election Election::Compacted() const {
  std::map<std::vector<int>, int64_t> merged;
  for (const Vote& v : votes_) merged[v.ranking()] += v.weight();
  std::vector<Vote> votes;
  votes.reserve(merged.size());
  for (auto& [ranking, weight] : merged) votes.emplace_back(ranking, weight);
  return Election(candidates_, std::move(votes));
}

bool operator==(const Election& a, const Election& b) {
  if (a.candidates_ != b.candidates_ || a.n() != b.n()) return false;
  const Election ca = a.Compacted();
  const Election cb = b.Compacted();
  if (ca.votes_.size() != cb.votes_.size()) return false;
  for (size_t i = 0; i < ca.votes_.size(); ++i) {
    if (ca.votes_[i].ranking() != cb.votes_[i].ranking() ||
        ca.votes_[i].weight() != cb.votes_[i].weight()) {
      return false;
    }
  }
  return true;
}

Election ShiftForward(const Election& election, int vote_index,
                      int candidate) {
  const auto& votes = election.votes();
  Require(vote_index >= 0 && vote_index < static_cast<int>(votes.size()),
          "vote index out of range");
  const Vote& v = votes[vote_index];
  const int p = v.PositionOf(candidate);
  if (p == 1) {
    throw Error(ErrorKind::kInvalidShift,
                "candidate '" + election.Token(candidate) +
                    "' is already ranked first");
  }
  std::vector<int> shifted = v.ranking();
  std::swap(shifted[p - 1], shifted[p - 2]);
  std::vector<Vote> out;
  out.reserve(votes.size() + 1);
  for (int i = 0; i < static_cast<int>(votes.size()); ++i) {
    if (i != vote_index) {
      out.push_back(votes[i]);
      continue;
    }
    if (v.weight() > 1) out.emplace_back(v.ranking(), v.weight() - 1);
    out.emplace_back(shifted, 1);
  }
  return Election(election.candidates(), std::move(out));
}

}  // namespace csr
