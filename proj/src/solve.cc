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

#include "csr/solve.h"

#include <algorithm>
#include <numeric>
#include <thread>

#include "csr/error.h"
#include "tally.h"

namespace csr {

namespace {

// Below this many (committee, vote) evaluations threads cost more than
// they save.
constexpr uint64_t kParallelThreshold = 200'000;

void CheckDimensions(const Election& election, const ScoringFunction& f) {
  if (election.m() != f.m()) {
    throw Error(ErrorKind::kInput,
                "rule is defined for m=" + std::to_string(f.m()) +
                    " but the election has " + std::to_string(election.m()) +
                    " candidates");
  }
}

std::vector<std::string> Tokens(const Election& election,
                                const Committee& committee) {
  std::vector<std::string> tokens;
  for (int c : committee.members()) tokens.push_back(election.Token(c));
  std::sort(tokens.begin(), tokens.end());
  return tokens;
}

// Candidate indices sorted by token.
std::vector<int> TokenOrder(const Election& election) {
  std::vector<int> order(election.m());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return election.Token(a) < election.Token(b);
  });
  return order;
}

}  // namespace

int ResolveThreads(int threads) {
  if (threads > 0) return threads;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void SortCommittees(const Election& election,
                    std::vector<Committee>& committees) {
  std::sort(committees.begin(), committees.end(),
            [&](const Committee& a, const Committee& b) {
              return Tokens(election, a) < Tokens(election, b);
            });
}

std::vector<Score> AllCommitteeScores(const Election& election,
                                      const ScoringFunction& f,
                                      const SolveOptions& options) {
  CheckDimensions(election, f);
  const std::vector<Committee> committees =
      EnumerateCommittees(f.m(), f.k());
  const size_t total = committees.size();
  std::vector<Score> out(total);
  int threads = ResolveThreads(options.threads);
  if (static_cast<uint64_t>(total) * election.votes().size() <
      kParallelThreshold) {
    threads = 1;
  }
  threads = static_cast<int>(std::min<size_t>(threads, total));
  // Each chunk sums the same votes in the same order, so every committee's
  // score is bitwise independent of the chunking.
  auto run = [&](size_t begin, size_t end) {
    internal::CommitteeTally tally(f, committees, begin, end);
    tally.AddElection(election);
    for (size_t i = 0; i < tally.size(); ++i) out[begin + i] = tally.ScoreAt(i);
  };
  if (threads <= 1) {
    run(0, total);
    return out;
  }
  std::vector<std::thread> workers;
  const size_t chunk = (total + threads - 1) / threads;
  for (size_t begin = 0; begin < total; begin += chunk) {
    workers.emplace_back(run, begin, std::min(total, begin + chunk));
  }
  for (std::thread& w : workers) w.join();
  return out;
}

WinnerSet WinnersExact(const Election& election, const ScoringFunction& f,
                       const SolveOptions& options) {
  const std::vector<Score> scores = AllCommitteeScores(election, f, options);
  size_t best = 0;
  for (size_t i = 1; i < scores.size(); ++i) {
    if (Compare(scores[i], scores[best], 0.0) > 0) best = i;
  }
  const std::vector<Committee> committees =
      EnumerateCommittees(f.m(), f.k());
  WinnerSet result;
  result.optimum = scores[best];
  for (size_t i = 0; i < scores.size(); ++i) {
    if (Compare(scores[i], scores[best]) == 0) {
      result.committees.push_back(committees[i]);
    }
  }
  SortCommittees(election, result.committees);
  result.count = result.committees.size();
  return result;
}

WinnerSet WinnersExact(const Election& election, const Rule& rule, int k,
                       const SolveOptions& options) {
  return WinnersExact(election, rule.At(election.m(), k), options);
}

WinnerSet WinnersSeparable(const Election& election, const ScoringFunction& f,
                           bool count_only, uint64_t max_expand) {
  CheckDimensions(election, f);
  if (!f.separable_gamma()) {
    throw Error(ErrorKind::kUnsupportedRule,
                "rule '" + f.name() + "' has no separable witness at m=" +
                    std::to_string(f.m()) + ", k=" + std::to_string(f.k()));
  }
  return WinnersSeparable(election, *f.separable_gamma(), f.k(), count_only,
                          max_expand);
}

WinnerSet WinnersSeparable(const Election& election,
                           const std::vector<Score>& gamma, int k,
                           bool count_only, uint64_t max_expand) {
  const int m = election.m();
  if (static_cast<int>(gamma.size()) != m || k < 1 || k > m) {
    throw Error(ErrorKind::kInput, "separable witness does not match m, k");
  }
  std::vector<Score> scores(m);
  for (const Vote& v : election.votes()) {
    for (int p = 0; p < m; ++p) {
      scores[v.ranking()[p]].AddScaled(gamma[p], v.weight());
    }
  }
  std::vector<int> order = TokenOrder(election);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return Compare(scores[a], scores[b], 0.0) > 0;
  });
  const Score& threshold = scores[order[k - 1]];
  std::vector<int> above;
  std::vector<int> tied;
  for (int c : order) {
    int cmp = Compare(scores[c], threshold);
    if (cmp > 0) {
      above.push_back(c);
    } else if (cmp == 0) {
      tied.push_back(c);
    }
  }
  const int need = k - static_cast<int>(above.size());
  WinnerSet result;
  for (int i = 0; i < k; ++i) result.optimum += scores[order[i]];
  result.candidate_scores = scores;
  result.count = Binomial(static_cast<int>(tied.size()), need);
  if (count_only) return result;
  if (result.count > max_expand) {
    throw Error(ErrorKind::kResource,
                "tie expansion yields " + std::to_string(result.count) +
                    " committees; use count-only mode");
  }
  if (need == 0) {
    result.committees.emplace_back(m, above);
  } else {
    for (const CommitteePosition& pick :
         EnumeratePositions(static_cast<int>(tied.size()), need)) {
      std::vector<int> members = above;
      for (int p : pick.positions()) members.push_back(tied[p - 1]);
      result.committees.emplace_back(m, std::move(members));
    }
  }
  SortCommittees(election, result.committees);
  return result;
}

GreedyResult WinnersGreedy(const Election& election, const ScoringFunction& f,
                           bool force) {
  CheckDimensions(election, f);
  const bool eligible = f.GreedyEligible();
  if (!eligible && !force) {
    throw Error(ErrorKind::kUnsupportedRule,
                "rule '" + f.name() +
                    "' is not greedy-eligible (needs an OWA form with "
                    "nonincreasing weights); pass --force to run anyway");
  }
  const int m = election.m();
  const std::vector<int> order = TokenOrder(election);
  std::vector<int> chosen;
  std::vector<bool> taken(m, false);
  for (int step = 0; step < f.k(); ++step) {
    int best = -1;
    Score best_score;
    for (int c : order) {
      if (taken[c]) continue;
      Score total;
      for (const Vote& v : election.votes()) {
        std::vector<int> positions;
        for (int member : chosen) positions.push_back(v.PositionOf(member));
        positions.push_back(v.PositionOf(c));
        std::sort(positions.begin(), positions.end());
        total.AddScaled(f.PartialScore(positions), v.weight());
      }
      if (best < 0 || Compare(total, best_score, 0.0) > 0) {
        best = c;
        best_score = total;
      }
    }
    chosen.push_back(best);
    taken[best] = true;
  }
  Committee committee(m, chosen);
  Score score = ScoreOf(election, f, committee);
  return GreedyResult{std::move(committee), std::move(score), eligible};
}

WinningCheck IsWinning(const Election& election, const ScoringFunction& f,
                       const Committee& committee,
                       const SolveOptions& options) {
  if (committee.size() != f.k()) {
    throw Error(ErrorKind::kInput, "committee size differs from k");
  }
  WinnerSet winners = WinnersExact(election, f, options);
  Score own = ScoreOf(election, f, committee);
  WinningCheck check;
  check.winning = Compare(own, winners.optimum) == 0;
  check.margin = check.winning ? Score(0) : winners.optimum - own;
  if (check.margin.IsNegative()) check.margin = Score(0);
  if (!winners.optimum.is_exact() || !own.is_exact()) {
    check.margin = Score::Real(check.margin.ToDouble());
  }
  return check;
}

}  // namespace csr
