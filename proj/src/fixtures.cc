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

#include "csr/fixtures.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "csr/error.h"

namespace csr {

namespace {

int IndexIn(const std::vector<std::string>& roster, const std::string& c) {
  auto it = std::find(roster.begin(), roster.end(), c);
  if (it == roster.end()) {
    throw Error(ErrorKind::kInput, "unknown candidate '" + c + "'");
  }
  return static_cast<int>(it - roster.begin());
}

void CheckZetaSize(int m) {
  if (m < 2) throw Error(ErrorKind::kInput, "zeta needs at least 2 candidates");
  if (m > kMaxZetaCandidates) {
    throw Error(ErrorKind::kResource,
                "zeta constructions support at most " +
                    std::to_string(kMaxZetaCandidates) + " candidates");
  }
}

void AppendZeta(int m, int center, std::vector<Vote>& votes) {
  std::vector<int> rest;
  for (int c = 0; c < m; ++c) {
    if (c != center) rest.push_back(c);
  }
  do {
    std::vector<int> ranking{center};
    ranking.insert(ranking.end(), rest.begin(), rest.end());
    votes.emplace_back(std::move(ranking), 1);
  } while (std::next_permutation(rest.begin(), rest.end()));
}

std::set<int> Indices(const std::vector<std::string>& roster,
                      const std::vector<std::string>& members) {
  std::set<int> out;
  for (const std::string& c : members) {
    if (!out.insert(IndexIn(roster, c)).second) {
      throw Error(ErrorKind::kInput, "duplicate candidate '" + c + "'");
    }
  }
  return out;
}

// Unbiased draw from [0, bound) independent of the standard library's
// distribution implementations.
uint64_t Below(std::mt19937_64& rng, uint64_t bound) {
  const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace

std::vector<std::string> DefaultRoster(int m) {
  std::vector<std::string> out;
  for (int i = 0; i < m; ++i) {
    out.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i))
                         : "c" + std::to_string(i));
  }
  return out;
}

Election ZetaCandidate(const std::vector<std::string>& roster,
                       const std::string& center) {
  return ZetaSet(roster, {center});
}

Election ZetaSet(const std::vector<std::string>& roster,
                 const std::vector<std::string>& members) {
  const int m = static_cast<int>(roster.size());
  CheckZetaSize(m);
  if (members.empty()) throw Error(ErrorKind::kInput, "zeta(S) needs S != {}");
  Indices(roster, members);
  std::vector<Vote> votes;
  for (const std::string& c : members) {
    AppendZeta(m, IndexIn(roster, c), votes);
  }
  return Election(roster, std::move(votes));
}

Election TwoWinnerElection(const std::vector<std::string>& roster,
                           const std::vector<std::string>& w1,
                           const std::vector<std::string>& w2) {
  const std::set<int> a = Indices(roster, w1);
  const std::set<int> b = Indices(roster, w2);
  const size_t k = a.size();
  if (k == 0 || b.size() != k) {
    throw Error(ErrorKind::kInput, "two-winner committees need equal size");
  }
  std::vector<std::string> both;
  std::vector<std::string> either;
  for (int c = 0; c < static_cast<int>(roster.size()); ++c) {
    bool in_a = a.count(c) > 0;
    bool in_b = b.count(c) > 0;
    if (in_a && in_b) both.push_back(roster[c]);
    if (in_a || in_b) either.push_back(roster[c]);
  }
  if (both.size() + 1 != k) {
    throw Error(ErrorKind::kInput,
                "two-winner committees must share exactly k-1 members");
  }
  Election e = ZetaSet(roster, either);
  if (both.empty()) return e;
  return Concat(e, ZetaSet(roster, both));
}

Election AllPermutations(const std::vector<std::string>& roster) {
  const int m = static_cast<int>(roster.size());
  if (m > kMaxZetaCandidates) {
    throw Error(ErrorKind::kResource, "at most 8 candidates for all "
                                      "permutations");
  }
  std::vector<int> ranking(m);
  std::iota(ranking.begin(), ranking.end(), 0);
  std::vector<Vote> votes;
  do {
    votes.emplace_back(ranking, 1);
  } while (std::next_permutation(ranking.begin(), ranking.end()));
  return Election(roster, std::move(votes));
}

Election Concat(const Election& a, const Election& b) {
  if (a.candidates() != b.candidates()) {
    throw Error(ErrorKind::kInput, "cannot merge elections over different "
                                   "rosters");
  }
  std::vector<Vote> votes = a.votes();
  votes.insert(votes.end(), b.votes().begin(), b.votes().end());
  return Election(a.candidates(), std::move(votes));
}

Election Scale(const Election& e, int64_t lambda) {
  if (lambda < 1) throw Error(ErrorKind::kInput, "scale factor must be >= 1");
  std::vector<Vote> votes;
  for (const Vote& v : e.votes()) {
    votes.emplace_back(v.ranking(), v.weight() * lambda);
  }
  return Election(e.candidates(), std::move(votes));
}

Election ImpartialCulture(const std::vector<std::string>& roster, int64_t n,
                          uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::kInput, "impartial culture needs n >= 1");
  const int m = static_cast<int>(roster.size());
  std::mt19937_64 rng(seed);
  std::vector<Vote> votes;
  votes.reserve(n);
  for (int64_t i = 0; i < n; ++i) {
    std::vector<int> ranking(m);
    std::iota(ranking.begin(), ranking.end(), 0);
    for (int j = m - 1; j > 0; --j) {
      std::swap(ranking[j], ranking[Below(rng, j + 1)]);
    }
    votes.emplace_back(std::move(ranking), 1);
  }
  return Election(roster, std::move(votes));
}

}  // namespace csr
