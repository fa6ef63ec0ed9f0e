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

#include "csr/axioms.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <thread>
#include <utility>

#include "csr/election_io.h"
#include "csr/error.h"
#include "csr/fixtures.h"
#include "csr/solve.h"
#include "tally.h"

namespace csr {

namespace {

// Winning is decided at kEps. A committee that must keep winning counts as
// winning up to kLenient; a committee that must not win counts as winning
// only up to kStrict. Exact scores ignore all three.
constexpr double kEps = Score::kEpsilon;
constexpr double kLenient = 10 * Score::kEpsilon;
constexpr double kStrict = Score::kEpsilon / 10;

// Items per wave. Waves are the unit of parallel work and of budget checks,
// so their layout must not depend on the thread count.
constexpr uint64_t kWave = 256;

// Largest roster for exhaustive profile enumeration.
constexpr int kMaxExhaustiveM = 8;

std::string Itos(int64_t v) { return std::to_string(v); }

// ---------------------------------------------------------------------------
// Fresh (non-incremental) scoring used to confirm and replay violations.

struct Scored {
  std::vector<Committee> committees;
  std::vector<Score> scores;
  size_t best = 0;

  bool Wins(size_t i, double eps) const {
    return Compare(scores[i], scores[best], eps) == 0;
  }
  size_t Find(const Committee& c) const {
    auto it = std::find(committees.begin(), committees.end(), c);
    if (it == committees.end()) {
      throw Error(ErrorKind::kInput, "committee size does not match k");
    }
    return static_cast<size_t>(it - committees.begin());
  }
  std::vector<Committee> Winners(const Election& e, double eps) const {
    std::vector<Committee> out;
    for (size_t i = 0; i < committees.size(); ++i) {
      if (Wins(i, eps)) out.push_back(committees[i]);
    }
    SortCommittees(e, out);
    return out;
  }
};

Scored ScoreAll(const Election& e, const ScoringFunction& f) {
  Scored s;
  s.committees = EnumerateCommittees(f.m(), f.k());
  s.scores = AllCommitteeScores(e, f, SolveOptions{1});
  for (size_t i = 1; i < s.scores.size(); ++i) {
    if (Compare(s.scores[i], s.scores[s.best], 0.0) > 0) s.best = i;
  }
  return s;
}

// Applies the forward shifts of `mutation` to one unit of its vote. The
// remaining weight keeps the original ranking at the same index and the
// shifted unit vote follows it. Returns nullopt if a shift would leave
// position 1 or names an unknown candidate.
std::optional<Election> ApplyMutation(const Election& e,
                                      const Mutation& mutation) {
  if (mutation.vote_index < 0 ||
      mutation.vote_index >= static_cast<int>(e.votes().size()) ||
      mutation.shifted.empty()) {
    return std::nullopt;
  }
  const Vote& vote = e.votes()[mutation.vote_index];
  std::vector<int> ranking = vote.ranking();
  for (int c : mutation.shifted) {
    auto it = std::find(ranking.begin(), ranking.end(), c);
    if (it == ranking.end() || it == ranking.begin()) return std::nullopt;
    std::iter_swap(it, it - 1);
  }
  std::vector<Vote> votes = e.votes();
  if (vote.weight() > 1) {
    votes[mutation.vote_index] = Vote(vote.ranking(), vote.weight() - 1);
    votes.insert(votes.begin() + mutation.vote_index + 1, Vote(ranking, 1));
  } else {
    votes[mutation.vote_index] = Vote(ranking, 1);
  }
  return Election(e.candidates(), std::move(votes));
}

// Members of `w` in the order vote ranks them, truncated to t.
std::vector<int> TopMembers(const std::vector<int>& ranking,
                            const Committee& w, int t) {
  std::vector<int> out;
  for (int c : ranking) {
    if (static_cast<int>(out.size()) == t) break;
    if (w.Contains(c)) out.push_back(c);
  }
  return out;
}

uint64_t TopMask(const Election& e) {
  uint64_t mask = 0;
  for (const Vote& v : e.votes()) mask |= uint64_t{1} << v.ranking()[0];
  return mask;
}

std::string FormatList(const Election& e, const std::vector<Committee>& cs) {
  std::string out;
  for (const Committee& c : cs) {
    if (!out.empty()) out += ' ';
    out += e.Format(c);
  }
  return out.empty() ? "-" : out;
}

std::string FormatMask(const Election& e, uint64_t mask) {
  std::vector<int> members;
  for (int c = 0; c < e.m(); ++c) {
    if (mask >> c & 1) members.push_back(c);
  }
  return e.Format(Committee(e.m(), members));
}

std::string Shifted(const Election& e, const std::vector<int>& cs) {
  std::string out;
  for (int c : cs) {
    if (!out.empty()) out += ',';
    out += e.Token(c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Replay of a stored counterexample.

using FunctionAt = std::function<ScoringFunction(int, int)>;

std::optional<Counterexample> RecheckShift(const FunctionAt& at,
                                           Counterexample cx) {
  const Election& e = cx.election;
  if (!cx.mutation || cx.committee.size() != cx.k) return std::nullopt;
  const Mutation& mut = *cx.mutation;
  if (mut.vote_index < 0 ||
      mut.vote_index >= static_cast<int>(e.votes().size())) {
    return std::nullopt;
  }
  const std::vector<int>& ranking = e.votes()[mut.vote_index].ranking();
  const Committee& w = cx.committee;
  switch (cx.axiom.axiom) {
    case Axiom::kNonCrossing: {
      if (mut.shifted.size() != 1 || !w.Contains(mut.shifted[0])) {
        return std::nullopt;
      }
      auto it = std::find(ranking.begin(), ranking.end(), mut.shifted[0]);
      if (it == ranking.begin() || w.Contains(*(it - 1))) return std::nullopt;
      break;
    }
    case Axiom::kPrefix:
      if (cx.axiom.t > cx.k ||
          mut.shifted != TopMembers(ranking, w, cx.axiom.t)) {
        return std::nullopt;
      }
      break;
    case Axiom::kCandidate:
      if (mut.shifted.size() != 1) return std::nullopt;
      break;
    default:
      return std::nullopt;
  }
  std::optional<Election> mutated = ApplyMutation(e, mut);
  if (!mutated) return std::nullopt;
  const ScoringFunction f = at(e.m(), cx.k);
  const Scored before = ScoreAll(e, f);
  const Scored after = ScoreAll(*mutated, f);
  const size_t wi = before.Find(w);
  if (!before.Wins(wi, kEps)) return std::nullopt;
  if (cx.axiom.axiom == Axiom::kCandidate) {
    const int c = mut.shifted[0];
    if (!w.Contains(c)) return std::nullopt;
    for (size_t i = 0; i < after.committees.size(); ++i) {
      if (after.committees[i].Contains(c) && after.Wins(i, kLenient)) {
        return std::nullopt;
      }
    }
  } else if (after.Wins(wi, kLenient)) {
    return std::nullopt;
  }
  cx.winners_before = before.Winners(e, kEps);
  cx.winners_after = after.Winners(*mutated, kEps);
  cx.score_before = before.scores[wi];
  cx.score_after = after.scores[wi];
  cx.mutated = std::move(mutated);
  return cx;
}

std::optional<Counterexample> RecheckNarrowTop(const FunctionAt& at,
                                               Counterexample cx) {
  const Election& e = cx.election;
  const uint64_t top = TopMask(e);
  if (std::popcount(top) > cx.k || cx.committee.size() != cx.k) {
    return std::nullopt;
  }
  if ((cx.committee.mask() & top) == top) return std::nullopt;
  const Scored s = ScoreAll(e, at(e.m(), cx.k));
  const size_t wi = s.Find(cx.committee);
  if (!s.Wins(wi, kStrict)) return std::nullopt;
  cx.winners_before = s.Winners(e, kEps);
  cx.winners_after.clear();
  cx.score_before = s.scores[wi];
  cx.score_after = s.scores[s.best];
  return cx;
}

std::optional<Counterexample> RecheckEnlargement(const FunctionAt& at,
                                                 Counterexample cx) {
  const Election& e = cx.election;
  const int k = cx.k;
  if (k < 1 || k + 1 >= e.m()) return std::nullopt;
  const Scored small = ScoreAll(e, at(e.m(), k));
  const Scored large = ScoreAll(e, at(e.m(), k + 1));
  const Committee& w = cx.committee;
  auto subset = [](const Committee& a, const Committee& b) {
    return (a.mask() & b.mask()) == a.mask();
  };
  if (w.size() == k) {
    const size_t wi = small.Find(w);
    if (!small.Wins(wi, kStrict)) return std::nullopt;
    for (size_t i = 0; i < large.committees.size(); ++i) {
      if (subset(w, large.committees[i]) && large.Wins(i, kLenient)) {
        return std::nullopt;
      }
    }
    cx.score_before = small.scores[wi];
    cx.score_after = small.scores[small.best];
  } else if (w.size() == k + 1) {
    const size_t wi = large.Find(w);
    if (!large.Wins(wi, kStrict)) return std::nullopt;
    for (size_t i = 0; i < small.committees.size(); ++i) {
      if (subset(small.committees[i], w) && small.Wins(i, kLenient)) {
        return std::nullopt;
      }
    }
    cx.score_before = large.scores[wi];
    cx.score_after = large.scores[large.best];
  } else {
    return std::nullopt;
  }
  cx.winners_before = small.Winners(e, kEps);
  cx.winners_after = large.Winners(e, kEps);
  return cx;
}

std::optional<Counterexample> RecheckConsistency(const FunctionAt& at,
                                                 Counterexample cx) {
  if (!cx.second || cx.committee.size() != cx.k) return std::nullopt;
  const Election& e1 = cx.election;
  const Election& e2 = *cx.second;
  const Election merged = Concat(e1, e2);
  const ScoringFunction f = at(e1.m(), cx.k);
  const Scored s1 = ScoreAll(e1, f);
  const Scored s2 = ScoreAll(e2, f);
  const Scored sm = ScoreAll(merged, f);
  std::vector<Committee> both;
  for (size_t i = 0; i < s1.committees.size(); ++i) {
    if (s1.Wins(i, kEps) && s2.Wins(i, kEps)) both.push_back(s1.committees[i]);
  }
  if (both.empty()) return std::nullopt;
  const size_t wi = sm.Find(cx.committee);
  const bool in_both = std::find(both.begin(), both.end(), cx.committee) !=
                       both.end();
  const bool violated =
      in_both ? !sm.Wins(wi, kLenient) : sm.Wins(wi, kStrict);
  if (!violated) return std::nullopt;
  SortCommittees(e1, both);
  cx.winners_before = std::move(both);
  cx.winners_after = sm.Winners(merged, kEps);
  cx.score_before = sm.scores[wi];
  cx.score_after = sm.scores[sm.best];
  cx.mutated = merged;
  return cx;
}

std::optional<Counterexample> RecheckNonimposition(const FunctionAt& at,
                                                   Counterexample cx) {
  const Election& e = cx.election;
  const ScoringFunction f = at(e.m(), cx.k);
  const Scored s = ScoreAll(e, f);
  const size_t wi = s.Find(cx.committee);
  cx.winners_before = {cx.committee};
  cx.winners_after = s.Winners(e, kEps);
  cx.score_before = s.scores[wi];
  cx.score_after = s.scores[s.best];
  if (f.IsConstant()) return cx;
  if (cx.winners_after.size() == 1 && cx.winners_after[0] == cx.committee) {
    return std::nullopt;
  }
  return cx;
}

std::optional<Counterexample> RecheckWith(const FunctionAt& at,
                                          const Counterexample& cx) {
  try {
    switch (cx.axiom.axiom) {
      case Axiom::kNonCrossing:
      case Axiom::kPrefix:
      case Axiom::kCandidate:
        return RecheckShift(at, cx);
      case Axiom::kNarrowTop:
        return RecheckNarrowTop(at, cx);
      case Axiom::kEnlargement:
        return RecheckEnlargement(at, cx);
      case Axiom::kConsistency:
        return RecheckConsistency(at, cx);
      case Axiom::kNonimposition:
        return RecheckNonimposition(at, cx);
    }
  } catch (const Error&) {
    // A malformed counterexample (for example after candidate removal made
    // k >= m) does not replay.
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Search domain plumbing.

// Cached f_{m,k} with its committee list, shared read-only by workers.
struct Slot {
  ScoringFunction f;
  std::vector<Committee> committees;
};

class Functions {
 public:
  const Slot* Get(int m, int k) const {
    auto it = slots_.find({m, k});
    return it == slots_.end() ? nullptr : &it->second;
  }
  // Returns false (and records the reason) if the rule is undefined there.
  bool Load(const Rule& rule, int m, int k) {
    if (slots_.count({m, k})) return true;
    try {
      ScoringFunction f = rule.At(m, k);
      std::vector<Committee> committees = EnumerateCommittees(m, k);
      slots_.emplace(std::make_pair(m, k),
                     Slot{std::move(f), std::move(committees)});
      return true;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kInput && e.kind() != ErrorKind::kParse) {
        throw;
      }
      skipped_.push_back("m=" + Itos(m) + ",k=" + Itos(k));
      return false;
    }
  }
  const std::vector<std::string>& skipped() const { return skipped_; }

 private:
  std::map<std::pair<int, int>, Slot> slots_;
  std::vector<std::string> skipped_;
};

// Committee sizes audited at m.
std::vector<int> SizesAt(const SearchDomain& d, const AxiomSpec& axiom, int m) {
  std::vector<int> out;
  const int top = axiom.axiom == Axiom::kEnlargement ? m - 2 : m - 1;
  for (int k = 1; k <= top; ++k) {
    if (d.k && *d.k != k) continue;
    if (axiom.axiom == Axiom::kPrefix && k < axiom.t) continue;
    out.push_back(k);
  }
  return out;
}

void ValidateDomain(const SearchDomain& d, const AxiomSpec& axiom) {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::kInput, "invalid search domain: " + what);
  };
  require(d.min_m >= 2 && d.max_m >= d.min_m, "need 2 <= min m <= max m");
  require(d.min_n >= 1 && d.max_n >= d.min_n, "need 1 <= min n <= max n");
  require(!d.k || *d.k >= 1, "k must be positive");
  require(d.mode != SearchMode::kRandom || d.samples >= 1,
          "samples must be positive");
  require(d.max_m <= 64, "at most 64 candidates");
  if (axiom.axiom == Axiom::kPrefix) {
    require(axiom.t >= 1, "prefix length must be positive");
    require(!d.k || *d.k >= axiom.t, "prefix length exceeds k");
  }
  if (d.mode == SearchMode::kExhaustive &&
      axiom.axiom != Axiom::kNonimposition) {
    if (d.max_m > kMaxExhaustiveM) {
      throw Error(ErrorKind::kResource,
                  "exhaustive search supports at most " +
                      Itos(kMaxExhaustiveM) + " candidates; use random mode");
    }
  }
}

// Multisets of n unit rankings for every (m, n) in the domain, ordered by
// m, then n, then lexicographic combination rank. Each profile is produced
// in compacted form.
class ProfileSpace {
 public:
  ProfileSpace(const std::vector<int>& ms, int min_n, int max_n) {
    for (int m : ms) {
      rosters_[m] = DefaultRoster(m);
      std::vector<int> perm(m);
      for (int i = 0; i < m; ++i) perm[i] = i;
      auto& list = rankings_[m];
      do {
        list.push_back(perm);
      } while (std::next_permutation(perm.begin(), perm.end()));
      const int count = static_cast<int>(list.size());
      const uint64_t first = total_;
      for (int n = min_n; n <= max_n; ++n) {
        const uint64_t size = Binomial(count + n - 1, n);
        blocks_.push_back(Block{m, n, total_, size});
        total_ += size;
      }
      ranges_[m] = {first, total_ - first};
    }
  }

  uint64_t size() const { return total_; }
  // First index and count of the profiles with m candidates.
  std::pair<uint64_t, uint64_t> Range(int m) const { return ranges_.at(m); }

  Election At(uint64_t index) const {
    const Block* block = &blocks_.front();
    for (const Block& b : blocks_) {
      if (index >= b.offset && index < b.offset + b.count) block = &b;
    }
    const auto& list = rankings_.at(block->m);
    const int count = static_cast<int>(list.size());
    const std::vector<int> picks =
        PositionAtRank(count + block->n - 1, block->n, index - block->offset);
    std::vector<Vote> votes;
    int last = -1;
    for (int j = 0; j < block->n; ++j) {
      const int r = picks[j] - 1 - j;
      if (r == last) {
        votes.back() = Vote(list[r], votes.back().weight() + 1);
      } else {
        votes.emplace_back(list[r], 1);
        last = r;
      }
    }
    return Election(rosters_.at(block->m), std::move(votes));
  }

 private:
  struct Block {
    int m;
    int n;
    uint64_t offset;
    uint64_t count;
  };
  std::map<int, std::vector<std::vector<int>>> rankings_;
  std::map<int, std::vector<std::string>> rosters_;
  std::map<int, std::pair<uint64_t, uint64_t>> ranges_;
  std::vector<Block> blocks_;
  uint64_t total_ = 0;
};

// Per-item generator for random mode.
std::mt19937_64 ItemRng(uint64_t seed, uint64_t item) {
  std::seed_seq seq{static_cast<uint32_t>(seed),
                    static_cast<uint32_t>(seed >> 32),
                    static_cast<uint32_t>(item),
                    static_cast<uint32_t>(item >> 32)};
  return std::mt19937_64(seq);
}

// Unbiased draw from [lo, hi] by rejection, so samples do not depend on
// the standard library's distribution implementations.
int Draw(std::mt19937_64& rng, int lo, int hi) {
  const uint64_t bound = static_cast<uint64_t>(hi - lo) + 1;
  const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<int>(x % bound);
}

Election RandomProfile(std::mt19937_64& rng, int m, const SearchDomain& d) {
  const int n = Draw(rng, d.min_n, d.max_n);
  return ImpartialCulture(DefaultRoster(m), n, rng()).Compacted();
}

struct ItemResult {
  uint64_t evaluations = 0;
  std::optional<Counterexample> cx;
};

struct SearchStats {
  uint64_t checked = 0;
  uint64_t evaluations = 0;
  bool exhausted = false;
  std::optional<Counterexample> cx;
};

// Processes items [0, total) in fixed waves; the lowest-index
// counterexample wins, so the outcome does not depend on `threads`.
SearchStats RunSearch(uint64_t total, uint64_t budget, int threads,
                      const std::function<ItemResult(uint64_t)>& check) {
  SearchStats stats;
  for (uint64_t begin = 0; begin < total; begin += kWave) {
    if (stats.evaluations >= budget) {
      stats.exhausted = true;
      break;
    }
    const uint64_t end = std::min(total, begin + kWave);
    std::vector<ItemResult> results(end - begin);
    std::vector<std::exception_ptr> errors(end - begin);
    std::atomic<uint64_t> next{begin};
    auto worker = [&] {
      for (;;) {
        const uint64_t i = next.fetch_add(1);
        if (i >= end) break;
        try {
          results[i - begin] = check(i);
        } catch (...) {
          errors[i - begin] = std::current_exception();
        }
      }
    };
    const int extra =
        static_cast<int>(std::min<uint64_t>(threads, end - begin)) - 1;
    std::vector<std::thread> pool;
    for (int t = 0; t < extra; ++t) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();
    for (uint64_t i = 0; i < end - begin; ++i) {
      if (errors[i]) std::rethrow_exception(errors[i]);
      stats.evaluations += results[i].evaluations;
      ++stats.checked;
      if (results[i].cx) {
        stats.cx = std::move(results[i].cx);
        return stats;
      }
    }
  }
  return stats;
}

// ---------------------------------------------------------------------------
// Per-election checks on incremental tallies. Each returns a candidate
// violation, which the caller confirms with a fresh replay.

class Checker {
 public:
  Checker(const Rule& rule, const AxiomSpec& axiom, const Functions& fns)
      : rule_(rule), axiom_(axiom), fns_(fns) {}

  // Checks one profile (or pair) at every audited k; returns the first
  // confirmed violation.
  ItemResult Check(const Election& e, const std::optional<Election>& second,
                   const std::vector<int>& sizes) const {
    ItemResult result;
    for (int k : sizes) {
      const Slot* slot = fns_.Get(e.m(), k);
      if (slot == nullptr) continue;
      std::optional<Counterexample> cx;
      switch (axiom_.axiom) {
        case Axiom::kNonCrossing:
        case Axiom::kPrefix:
        case Axiom::kCandidate:
          cx = CheckShifts(e, k, *slot, result.evaluations);
          break;
        case Axiom::kNarrowTop:
          cx = CheckNarrowTop(e, k, *slot, result.evaluations);
          break;
        case Axiom::kEnlargement: {
          const Slot* larger = fns_.Get(e.m(), k + 1);
          if (larger != nullptr) {
            cx = CheckEnlargement(e, k, *slot, *larger, result.evaluations);
          }
          break;
        }
        case Axiom::kConsistency:
          cx = CheckConsistency(e, *second, k, *slot, result.evaluations);
          break;
        case Axiom::kNonimposition:
          break;
      }
      if (cx) {
        result.cx = std::move(cx);
        return result;
      }
    }
    return result;
  }

 private:
  Counterexample Base(const Election& e, int k, const Committee& w) const {
    Counterexample cx{axiom_, k, e, std::nullopt, w, std::nullopt,
                      std::nullopt, {}, {}, Score(), Score(), ""};
    return cx;
  }

  std::optional<Counterexample> Confirm(const Counterexample& cx) const {
    return RecheckWith([this](int m, int k) { return rule_.At(m, k); }, cx);
  }

  std::optional<Counterexample> CheckShifts(const Election& e, int k,
                                            const Slot& slot,
                                            uint64_t& evals) const {
    internal::CommitteeTally tally(slot.f, slot.committees);
    tally.AddElection(e);
    evals += tally.size() * e.votes().size();
    const std::vector<size_t> winners = tally.Winners(kEps);
    const uint64_t cost = 2 * tally.size();
    for (int j = 0; j < static_cast<int>(e.votes().size()); ++j) {
      const std::vector<int>& ranking = e.votes()[j].ranking();
      // Distinct mutations of this vote with the committees they test.
      std::vector<std::pair<std::vector<int>, std::vector<size_t>>> groups;
      auto add = [&](std::vector<int> shifted, size_t w) {
        for (auto& g : groups) {
          if (g.first == shifted) {
            g.second.push_back(w);
            return;
          }
        }
        groups.push_back({std::move(shifted), {w}});
      };
      for (size_t w : winners) {
        const Committee& c = slot.committees[w];
        if (axiom_.axiom == Axiom::kPrefix) {
          std::vector<int> top = TopMembers(ranking, c, axiom_.t);
          if (ranking[0] == top[0]) continue;
          add(std::move(top), w);
        } else {
          for (int p = 1; p < e.m(); ++p) {
            if (!c.Contains(ranking[p])) continue;
            if (axiom_.axiom == Axiom::kNonCrossing &&
                c.Contains(ranking[p - 1])) {
              continue;
            }
            add({ranking[p]}, w);
          }
        }
      }
      for (const auto& [shifted, tested] : groups) {
        std::vector<int> moved = ranking;
        for (int c : shifted) {
          auto it = std::find(moved.begin(), moved.end(), c);
          std::iter_swap(it, it - 1);
        }
        tally.AddVote(ranking, -1);
        tally.AddVote(moved, 1);
        evals += cost;
        const size_t best = tally.ArgMax();
        std::optional<size_t> violated;
        if (axiom_.axiom == Axiom::kCandidate) {
          bool kept = false;
          for (size_t i = 0; i < tally.size() && !kept; ++i) {
            kept = slot.committees[i].Contains(shifted[0]) &&
                   tally.IsMax(i, best, kLenient);
          }
          if (!kept) violated = tested.front();
        } else {
          for (size_t w : tested) {
            if (!tally.IsMax(w, best, kLenient)) {
              violated = w;
              break;
            }
          }
        }
        tally.AddVote(moved, -1);
        tally.AddVote(ranking, 1);
        evals += cost;
        if (!violated) continue;
        Counterexample cx = Base(e, k, slot.committees[*violated]);
        cx.mutation = Mutation{j, shifted};
        if (auto confirmed = Confirm(cx)) return confirmed;
      }
    }
    return std::nullopt;
  }

  std::optional<Counterexample> CheckNarrowTop(const Election& e, int k,
                                               const Slot& slot,
                                               uint64_t& evals) const {
    const uint64_t top = TopMask(e);
    if (std::popcount(top) > k) return std::nullopt;
    internal::CommitteeTally tally(slot.f, slot.committees);
    tally.AddElection(e);
    evals += tally.size() * e.votes().size();
    for (size_t w : tally.Winners(kStrict)) {
      if ((slot.committees[w].mask() & top) == top) continue;
      if (auto confirmed = Confirm(Base(e, k, slot.committees[w]))) {
        return confirmed;
      }
    }
    return std::nullopt;
  }

  std::optional<Counterexample> CheckEnlargement(const Election& e, int k,
                                                 const Slot& small,
                                                 const Slot& large,
                                                 uint64_t& evals) const {
    internal::CommitteeTally ts(small.f, small.committees);
    internal::CommitteeTally tl(large.f, large.committees);
    ts.AddElection(e);
    tl.AddElection(e);
    evals += (ts.size() + tl.size()) * e.votes().size();
    auto masks = [](const Slot& slot, const std::vector<size_t>& idx) {
      std::vector<uint64_t> out;
      for (size_t i : idx) out.push_back(slot.committees[i].mask());
      return out;
    };
    const std::vector<uint64_t> small_loose =
        masks(small, ts.Winners(kLenient));
    const std::vector<uint64_t> large_loose =
        masks(large, tl.Winners(kLenient));
    for (size_t w : ts.Winners(kStrict)) {
      const uint64_t m = small.committees[w].mask();
      const bool ok = std::any_of(large_loose.begin(), large_loose.end(),
                                  [m](uint64_t l) { return (m & l) == m; });
      if (ok) continue;
      if (auto confirmed = Confirm(Base(e, k, small.committees[w]))) {
        return confirmed;
      }
    }
    for (size_t w : tl.Winners(kStrict)) {
      const uint64_t m = large.committees[w].mask();
      const bool ok = std::any_of(small_loose.begin(), small_loose.end(),
                                  [m](uint64_t s) { return (s & m) == s; });
      if (ok) continue;
      if (auto confirmed = Confirm(Base(e, k, large.committees[w]))) {
        return confirmed;
      }
    }
    return std::nullopt;
  }

  std::optional<Counterexample> CheckConsistency(const Election& e1,
                                                 const Election& e2, int k,
                                                 const Slot& slot,
                                                 uint64_t& evals) const {
    internal::CommitteeTally t1(slot.f, slot.committees);
    internal::CommitteeTally t2(slot.f, slot.committees);
    t1.AddElection(e1);
    t2.AddElection(e2);
    evals += t1.size() * (e1.votes().size() + e2.votes().size());
    const size_t b1 = t1.ArgMax();
    const size_t b2 = t2.ArgMax();
    std::vector<bool> both(t1.size());
    bool any = false;
    for (size_t i = 0; i < t1.size(); ++i) {
      both[i] = t1.IsMax(i, b1, kEps) && t2.IsMax(i, b2, kEps);
      any = any || both[i];
    }
    if (!any) return std::nullopt;
    internal::CommitteeTally merged(slot.f, slot.committees);
    merged.AddElection(e1);
    merged.AddElection(e2);
    evals += merged.size() * (e1.votes().size() + e2.votes().size());
    const size_t bm = merged.ArgMax();
    for (size_t i = 0; i < merged.size(); ++i) {
      const bool violated = both[i] ? !merged.IsMax(i, bm, kLenient)
                                    : merged.IsMax(i, bm, kStrict);
      if (!violated) continue;
      Counterexample cx = Base(e1, k, slot.committees[i]);
      cx.second = e2;
      if (auto confirmed = Confirm(cx)) return confirmed;
    }
    return std::nullopt;
  }

  const Rule& rule_;
  const AxiomSpec& axiom_;
  const Functions& fns_;
};

void Describe(Counterexample& cx) {
  const Election& e = cx.election;
  const std::string w = e.Format(cx.committee);
  switch (cx.axiom.axiom) {
    case Axiom::kNonCrossing:
      cx.description = "shifting " + Shifted(e, cx.mutation->shifted) +
                       " forward in vote " + Itos(cx.mutation->vote_index + 1) +
                       " without passing another member drops " + w +
                       " from the winners";
      break;
    case Axiom::kPrefix:
      cx.description = "shifting the top-" + Itos(cx.axiom.t) +
                       " members " + Shifted(e, cx.mutation->shifted) +
                       " of " + w + " forward in vote " +
                       Itos(cx.mutation->vote_index + 1) + " drops " + w +
                       " from the winners";
      break;
    case Axiom::kCandidate:
      cx.description = "after shifting " + Shifted(e, cx.mutation->shifted) +
                       " forward in vote " + Itos(cx.mutation->vote_index + 1) +
                       " it belongs to no winning committee";
      break;
    case Axiom::kNarrowTop:
      cx.description = "every vote ranks a member of " +
                       FormatMask(e, TopMask(e)) +
                       " first, yet winner " + w + " does not contain it";
      break;
    case Axiom::kEnlargement:
      cx.description =
          cx.committee.size() == cx.k
              ? "winner " + w + " at k=" + Itos(cx.k) +
                    " is contained in no winner at k=" + Itos(cx.k + 1)
              : "winner " + w + " at k=" + Itos(cx.k + 1) +
                    " contains no winner at k=" + Itos(cx.k);
      break;
    case Axiom::kConsistency: {
      const bool in_both =
          std::find(cx.winners_before.begin(), cx.winners_before.end(),
                    cx.committee) != cx.winners_before.end();
      cx.description =
          in_both ? w + " wins both elections but not their union"
                  : w + " wins the union without winning both elections";
      break;
    }
    case Axiom::kNonimposition:
      cx.description =
          cx.winners_after.size() == EnumerateCommittees(e.m(), cx.k).size()
              ? "the scoring function is constant at m=" + Itos(e.m()) +
                    ", k=" + Itos(cx.k) + ": no election elects " + w +
                    " alone"
              : "the witness election for " + w + " elects " +
                    FormatList(e, cx.winners_after);
      break;
  }
}

AuditOutcome Finish(const Rule& rule, const AxiomSpec& axiom,
                    const SearchDomain& domain, const SearchStats& stats,
                    uint64_t total, const std::string& unit,
                    const Functions& fns) {
  AuditOutcome out;
  out.axiom = axiom;
  out.rule = rule.spec();
  out.domain = domain;
  out.evaluations = stats.evaluations;
  out.items_checked = stats.checked;
  out.items_total = total;
  if (stats.cx) {
    out.verdict = AuditVerdict::kCounterexample;
    out.counterexample =
        axiom.axiom == Axiom::kNonimposition
            ? *stats.cx
            : MinimizeCounterexample(rule, *stats.cx);
    Describe(*out.counterexample);
    out.coverage = "counterexample at " + unit + " " + Itos(stats.checked) +
                   " of " + Itos(total);
  } else if (stats.exhausted) {
    out.verdict = AuditVerdict::kPartial;
    out.coverage = "budget of " + Itos(domain.budget) +
                   " evaluations exhausted after " + Itos(stats.checked) +
                   " of " + Itos(total) + " " + unit + "s";
  } else {
    out.verdict = AuditVerdict::kVerified;
    out.coverage = "checked all " + Itos(total) + " " + unit + "s";
  }
  if (!fns.skipped().empty()) {
    out.coverage += "; rule undefined at";
    for (const std::string& s : fns.skipped()) out.coverage += " " + s;
  }
  return out;
}

AuditOutcome AuditProfiles(const Rule& rule, const AxiomSpec& axiom,
                           const SearchDomain& domain) {
  ValidateDomain(domain, axiom);
  Functions fns;
  std::vector<int> ms;
  for (int m = domain.min_m; m <= domain.max_m; ++m) {
    bool any = false;
    for (int k : SizesAt(domain, axiom, m)) {
      const bool ok = fns.Load(rule, m, k);
      if (axiom.axiom == Axiom::kEnlargement) {
        any = (fns.Load(rule, m, k + 1) && ok) || any;
      } else {
        any = ok || any;
      }
    }
    if (any) ms.push_back(m);
  }
  if (ms.empty()) {
    throw Error(ErrorKind::kInput,
                "no committee size of the domain applies to " + axiom.Name() +
                    " for rule '" + rule.spec() + "'");
  }
  const Checker checker(rule, axiom, fns);
  const int threads = ResolveThreads(domain.threads);
  const bool pairs = axiom.axiom == Axiom::kConsistency;
  SearchStats stats;
  uint64_t total = 0;
  std::string unit = pairs ? "pair" : "profile";

  if (domain.mode == SearchMode::kRandom) {
    total = static_cast<uint64_t>(domain.samples);
    unit = pairs ? "sampled pair" : "sampled profile";
    stats = RunSearch(total, domain.budget, threads, [&](uint64_t item) {
      std::mt19937_64 rng = ItemRng(domain.seed, item);
      const int m = ms[Draw(rng, 0, static_cast<int>(ms.size()) - 1)];
      Election e = RandomProfile(rng, m, domain);
      std::optional<Election> second;
      if (pairs) second = RandomProfile(rng, m, domain);
      return checker.Check(e, second, SizesAt(domain, axiom, m));
    });
  } else if (!pairs) {
    const ProfileSpace space(ms, domain.min_n, domain.max_n);
    total = space.size();
    stats = RunSearch(total, domain.budget, threads, [&](uint64_t item) {
      Election e = space.At(item);
      return checker.Check(e, std::nullopt, SizesAt(domain, axiom, e.m()));
    });
  } else {
    // Unordered pairs {i <= j} of profiles with the same m.
    const ProfileSpace space(ms, domain.min_n, domain.max_n);
    std::vector<std::pair<uint64_t, int>> starts;  // first pair index, m
    for (int m : ms) {
      starts.push_back({total, m});
      const uint64_t p = space.Range(m).second;
      total += p * (p + 1) / 2;
    }
    stats = RunSearch(total, domain.budget, threads, [&](uint64_t item) {
      size_t b = starts.size() - 1;
      while (starts[b].first > item) --b;
      const int m = starts[b].second;
      const auto [first, p] = space.Range(m);
      uint64_t r = item - starts[b].first;
      uint64_t i = 0;
      while (r >= p - i) {
        r -= p - i;
        ++i;
      }
      Election e1 = space.At(first + i);
      Election e2 = space.At(first + i + r);
      return checker.Check(e1, e2, SizesAt(domain, axiom, m));
    });
  }
  return Finish(rule, axiom, domain, stats, total, unit, fns);
}

}  // namespace

// ---------------------------------------------------------------------------

std::string AxiomSpec::Name() const {
  switch (axiom) {
    case Axiom::kNonCrossing:
      return "non-crossing";
    case Axiom::kPrefix:
      return t == 1 ? "top-member" : "prefix:" + Itos(t);
    case Axiom::kNarrowTop:
      return "narrow-top";
    case Axiom::kEnlargement:
      return "enlargement";
    case Axiom::kCandidate:
      return "candidate";
    case Axiom::kConsistency:
      return "consistency";
    case Axiom::kNonimposition:
      return "nonimposition";
  }
  return "?";
}

AxiomSpec ParseAxiom(const std::string& name) {
  static const std::map<std::string, Axiom> kNames = {
      {"non-crossing", Axiom::kNonCrossing},
      {"narrow-top", Axiom::kNarrowTop},
      {"enlargement", Axiom::kEnlargement},
      {"candidate", Axiom::kCandidate},
      {"consistency", Axiom::kConsistency},
      {"nonimposition", Axiom::kNonimposition},
  };
  if (auto it = kNames.find(name); it != kNames.end()) {
    return AxiomSpec{it->second, 1};
  }
  if (name == "top-member") return AxiomSpec{Axiom::kPrefix, 1};
  const std::string prefix = "prefix:";
  if (name.rfind(prefix, 0) == 0) {
    const std::string digits = name.substr(prefix.size());
    if (!digits.empty() && digits.size() <= 6 &&
        std::all_of(digits.begin(), digits.end(),
                    [](char ch) { return ch >= '0' && ch <= '9'; })) {
      const int t = std::stoi(digits);
      if (t >= 1) return AxiomSpec{Axiom::kPrefix, t};
    }
  }
  throw Error(ErrorKind::kInput, "unknown axiom '" + name + "'");
}

std::string SearchDomain::ToString() const {
  std::string out = "m=" + Itos(min_m) + ".." + Itos(max_m) +
                    ",n=" + Itos(min_n) + ".." + Itos(max_n) + ",k=";
  out += k ? Itos(*k) : "1..m-1";
  if (mode == SearchMode::kExhaustive) {
    out += ",mode=exhaustive";
  } else {
    out += ",mode=random,samples=" + Itos(samples) +
           ",seed=" + std::to_string(seed);
  }
  return out;
}

const char* AuditVerdictName(AuditVerdict verdict) {
  switch (verdict) {
    case AuditVerdict::kVerified:
      return "verified";
    case AuditVerdict::kCounterexample:
      return "counterexample";
    case AuditVerdict::kPartial:
      return "partial";
  }
  return "?";
}

AuditOutcome Audit(const Rule& rule, const AxiomSpec& axiom,
                   const SearchDomain& domain) {
  if (axiom.axiom == Axiom::kNonimposition) {
    return AuditNonimposition(rule, domain);
  }
  return AuditProfiles(rule, axiom, domain);
}

AuditOutcome AuditNonCrossing(const Rule& rule, const SearchDomain& domain) {
  return Audit(rule, AxiomSpec{Axiom::kNonCrossing, 1}, domain);
}

AuditOutcome AuditPrefix(const Rule& rule, int t, const SearchDomain& domain) {
  return Audit(rule, AxiomSpec{Axiom::kPrefix, t}, domain);
}

AuditOutcome AuditNarrowTop(const Rule& rule, const SearchDomain& domain) {
  return Audit(rule, AxiomSpec{Axiom::kNarrowTop, 1}, domain);
}

AuditOutcome AuditCommitteeEnlargement(const Rule& rule,
                                       const SearchDomain& domain) {
  return Audit(rule, AxiomSpec{Axiom::kEnlargement, 1}, domain);
}

AuditOutcome AuditCandidateMonotonicity(const Rule& rule,
                                        const SearchDomain& domain) {
  return Audit(rule, AxiomSpec{Axiom::kCandidate, 1}, domain);
}

AuditOutcome AuditConsistency(const Rule& rule, const SearchDomain& domain) {
  return Audit(rule, AxiomSpec{Axiom::kConsistency, 1}, domain);
}

AuditOutcome AuditNonimposition(const Rule& rule, const SearchDomain& domain) {
  const AxiomSpec axiom{Axiom::kNonimposition, 1};
  ValidateDomain(domain, axiom);
  struct Item {
    int m;
    int k;
    size_t w;
  };
  Functions fns;
  std::vector<Item> items;
  for (int m = domain.min_m; m <= domain.max_m; ++m) {
    for (int k : SizesAt(domain, axiom, m)) {
      if (!fns.Load(rule, m, k)) continue;
      if (m > kMaxZetaCandidates) {
        throw Error(ErrorKind::kResource,
                    "witness elections support at most " +
                        Itos(kMaxZetaCandidates) + " candidates");
      }
      const Slot* slot = fns.Get(m, k);
      if (slot->f.IsConstant()) {
        items.push_back(Item{m, k, 0});
        continue;
      }
      for (size_t w = 0; w < slot->committees.size(); ++w) {
        items.push_back(Item{m, k, w});
      }
    }
  }
  if (items.empty()) {
    throw Error(ErrorKind::kInput, "no (m, k) of the domain applies to rule '" +
                                       rule.spec() + "'");
  }
  const FunctionAt at = [&rule](int m, int k) { return rule.At(m, k); };
  const SearchStats stats =
      RunSearch(items.size(), domain.budget, ResolveThreads(domain.threads),
                [&](uint64_t i) {
                  const Item& item = items[i];
                  const Slot* slot = fns.Get(item.m, item.k);
                  const Committee& w = slot->committees[item.w];
                  const std::vector<std::string> roster =
                      DefaultRoster(item.m);
                  std::vector<std::string> members;
                  for (int c : w.members()) members.push_back(roster[c]);
                  Election e = ZetaSet(roster, members);
                  ItemResult result;
                  result.evaluations = slot->committees.size() *
                                       e.votes().size();
                  Counterexample cx{axiom, item.k, std::move(e),
                                    std::nullopt, w, std::nullopt,
                                    std::nullopt, {}, {}, Score(), Score(),
                                    ""};
                  result.cx = RecheckWith(at, cx);
                  return result;
                });
  return Finish(rule, axiom, domain, stats, items.size(), "committee", fns);
}

std::optional<Counterexample> CheckElection(
    const Rule& rule, const AxiomSpec& axiom, const Election& election, int k,
    const std::optional<Election>& second) {
  if (axiom.axiom == Axiom::kNonimposition) {
    throw Error(ErrorKind::kInput, "nonimposition is checked per committee");
  }
  if (axiom.axiom == Axiom::kConsistency && !second) {
    throw Error(ErrorKind::kInput, "consistency needs two elections");
  }
  if (axiom.axiom == Axiom::kPrefix && k < axiom.t) {
    throw Error(ErrorKind::kInput, "prefix length exceeds k");
  }
  Functions fns;
  if (!fns.Load(rule, election.m(), k)) {
    throw Error(ErrorKind::kInput, "rule '" + rule.spec() +
                                       "' is undefined at m=" +
                                       Itos(election.m()) + ", k=" + Itos(k));
  }
  if (axiom.axiom == Axiom::kEnlargement) {
    if (k + 1 >= election.m() || !fns.Load(rule, election.m(), k + 1)) {
      throw Error(ErrorKind::kInput, "enlargement needs k + 1 < m");
    }
  }
  const Checker checker(rule, axiom, fns);
  ItemResult result = checker.Check(election, second, {k});
  if (result.cx) Describe(*result.cx);
  return result.cx;
}

std::optional<Counterexample> CheckPrefixShift(const Rule& rule,
                                               const Election& election,
                                               int k, const Committee& w,
                                               int vote_index, int t) {
  if (vote_index < 0 ||
      vote_index >= static_cast<int>(election.votes().size())) {
    throw Error(ErrorKind::kInput, "vote index out of range");
  }
  if (t < 1 || t > k || w.size() != k) {
    throw Error(ErrorKind::kInput, "need 1 <= t <= k = |W|");
  }
  const std::vector<int> top =
      TopMembers(election.votes()[vote_index].ranking(), w, t);
  if (election.votes()[vote_index].ranking()[0] == top[0]) {
    throw Error(ErrorKind::kInvalidShift,
                "the top member of the committee is already ranked first");
  }
  Counterexample cx{AxiomSpec{Axiom::kPrefix, t},
                    k,
                    election,
                    std::nullopt,
                    w,
                    Mutation{vote_index, top},
                    std::nullopt,
                    {},
                    {},
                    Score(),
                    Score(),
                    ""};
  std::optional<Counterexample> out = Recheck(rule, cx);
  if (out) Describe(*out);
  return out;
}

std::optional<Counterexample> Recheck(const Rule& rule,
                                      const Counterexample& cx) {
  return RecheckWith([&rule](int m, int k) { return rule.At(m, k); }, cx);
}

bool Replays(const Rule& rule, const Counterexample& cx) {
  return Recheck(rule, cx).has_value();
}

namespace {

// Drops candidate x from every election of cx and renumbers the rest.
std::optional<Counterexample> WithoutCandidate(const Counterexample& cx,
                                               int x) {
  auto remap = [x](int c) { return c > x ? c - 1 : c; };
  auto strip = [&](const Election& e) {
    std::vector<std::string> roster = e.candidates();
    roster.erase(roster.begin() + x);
    std::vector<Vote> votes;
    for (const Vote& v : e.votes()) {
      std::vector<int> ranking;
      for (int c : v.ranking()) {
        if (c != x) ranking.push_back(remap(c));
      }
      votes.emplace_back(std::move(ranking), v.weight());
    }
    return Election(std::move(roster), std::move(votes));
  };
  const int m = cx.election.m();
  if (m - 1 <= cx.k || m - 1 < 2) return std::nullopt;
  Counterexample out = cx;
  out.election = strip(cx.election);
  if (cx.second) out.second = strip(*cx.second);
  std::vector<int> members;
  for (int c : cx.committee.members()) members.push_back(remap(c));
  out.committee = Committee(m - 1, members);
  if (cx.mutation) {
    for (int& c : out.mutation->shifted) c = remap(c);
  }
  return out;
}

// Lowers the weight of vote i of `e` by `by`, removing it at zero.
std::optional<Election> Lowered(const Election& e, int i, int64_t by) {
  std::vector<Vote> votes = e.votes();
  if (votes[i].weight() > by) {
    votes[i] = Vote(votes[i].ranking(), votes[i].weight() - by);
  } else {
    votes.erase(votes.begin() + i);
  }
  if (votes.empty()) return std::nullopt;
  return Election(e.candidates(), std::move(votes));
}

}  // namespace

Counterexample MinimizeCounterexample(const Rule& rule,
                                      const Counterexample& cx) {
  std::optional<Counterexample> current = Recheck(rule, cx);
  if (!current || cx.axiom.axiom == Axiom::kNonimposition) return cx;
  bool changed = true;
  while (changed) {
    changed = false;
    // Candidates outside the committee and the mutation.
    for (int x = current->election.m() - 1; x >= 0; --x) {
      if (current->committee.Contains(x)) continue;
      if (current->mutation &&
          std::count(current->mutation->shifted.begin(),
                     current->mutation->shifted.end(), x) > 0) {
        continue;
      }
      std::optional<Counterexample> trial = WithoutCandidate(*current, x);
      if (!trial) continue;
      if (auto ok = Recheck(rule, *trial)) {
        current = std::move(ok);
        changed = true;
      }
    }
    // Votes: drop whole votes first, then single units.
    for (int which = 0; which < (current->second ? 2 : 1); ++which) {
      auto votes = [&]() -> const std::vector<Vote>& {
        return which == 0 ? current->election.votes()
                          : current->second->votes();
      };
      // Returns true if lowering vote i by `by` keeps the violation.
      auto attempt = [&](int i, int64_t by) {
        const Election& now =
            which == 0 ? current->election : *current->second;
        std::optional<Election> lowered = Lowered(now, i, by);
        if (!lowered) return false;
        const bool removed = lowered->votes().size() < now.votes().size();
        Counterexample trial = *current;
        (which == 0 ? trial.election : *trial.second) = std::move(*lowered);
        if (removed && which == 0 && trial.mutation &&
            trial.mutation->vote_index > i) {
          --trial.mutation->vote_index;
        }
        std::optional<Counterexample> ok = Recheck(rule, trial);
        if (!ok) return false;
        current = std::move(ok);
        changed = true;
        return true;
      };
      int i = 0;
      while (i < static_cast<int>(votes().size())) {
        const bool mutated_vote = which == 0 && current->mutation &&
                                  current->mutation->vote_index == i;
        if (!mutated_vote && attempt(i, votes()[i].weight())) continue;
        while (votes()[i].weight() > 1 && attempt(i, 1)) {
        }
        ++i;
      }
    }
  }
  return *current;
}

std::string FormatAuditReport(const AuditOutcome& outcome) {
  std::ostringstream out;
  out << "axiom=" << outcome.axiom.Name() << " rule=" << outcome.rule
      << " verdict=" << AuditVerdictName(outcome.verdict)
      << " domain=" << outcome.domain.ToString() << "\n";
  out << "# evaluations=" << outcome.evaluations
      << " checked=" << outcome.items_checked << "/" << outcome.items_total
      << "\n";
  out << "# coverage: " << outcome.coverage << "\n";
  if (!outcome.counterexample) return out.str();
  const Counterexample& cx = *outcome.counterexample;
  const Election& e = cx.election;
  out << "# k=" << cx.k << " committee=" << e.Format(cx.committee) << "\n";
  if (cx.mutation) {
    out << "# mutation: vote " << cx.mutation->vote_index + 1 << " shift "
        << Shifted(e, cx.mutation->shifted) << "\n";
  }
  out << "# winners_before=" << FormatList(e, cx.winners_before) << "\n";
  out << "# winners_after=" << FormatList(e, cx.winners_after) << "\n";
  out << "# score_before=" << cx.score_before.ToString()
      << " score_after=" << cx.score_after.ToString() << "\n";
  out << "# " << cx.description << "\n";
  out << FormatElection(e);
  if (cx.second) {
    out << "# second election\n" << FormatElection(*cx.second);
  }
  return out.str();
}

}  // namespace csr
