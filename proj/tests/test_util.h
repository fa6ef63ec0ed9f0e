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

// Independent oracles for tests: committee scores from closed-form family
// formulas and winners from brute-force subset enumeration. Nothing here
// goes through the library's tables, tallies or solvers.

#ifndef CSR_TESTS_TEST_UTIL_H_
#define CSR_TESTS_TEST_UTIL_H_

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "csr/model.h"

namespace csr::testing {

// Sorted 1-based positions of the members of `mask` in `ranking`.
inline std::vector<int> PositionsOf(const std::vector<int>& ranking,
                                    uint64_t mask) {
  std::vector<int> out;
  for (size_t p = 0; p < ranking.size(); ++p) {
    if (mask >> ranking[p] & 1) out.push_back(static_cast<int>(p) + 1);
  }
  return out;
}

// f(positions) for a committee of size k among m candidates.
using Formula = std::function<mpq_class(const std::vector<int>&, int m)>;

inline mpq_class Indicator(bool b) { return b ? 1 : 0; }

inline Formula SntvFormula() {
  return [](const std::vector<int>& p, int) { return Indicator(p[0] == 1); };
}
inline Formula BlocFormula() {
  return [](const std::vector<int>& p, int) {
    mpq_class s = 0;
    for (int i : p) s += Indicator(i <= static_cast<int>(p.size()));
    return s;
  };
}
inline Formula KBordaFormula() {
  return [](const std::vector<int>& p, int m) {
    mpq_class s = 0;
    for (int i : p) s += m - i;
    return s;
  };
}
inline Formula CcBordaFormula() {
  return [](const std::vector<int>& p, int m) { return mpq_class(m - p[0]); };
}
inline Formula CcApprovalFormula() {
  return [](const std::vector<int>& p, int) {
    return Indicator(p[0] <= static_cast<int>(p.size()));
  };
}
inline Formula PavFormula(int t) {
  return [t](const std::vector<int>& p, int) {
    mpq_class s = 0;
    for (size_t j = 0; j < p.size(); ++j) {
      if (p[j] <= t) s += mpq_class(1, static_cast<unsigned>(j + 1));
    }
    return s;
  };
}
inline Formula Qhb1Formula() {
  return [](const std::vector<int>& p, int m) {
    mpq_class s = 0;
    for (size_t j = 0; j < p.size(); ++j) {
      s += mpq_class(m - p[j], static_cast<unsigned>(j + 1));
    }
    return s;
  };
}

inline mpq_class OracleScore(const Election& e, const Formula& f,
                             uint64_t mask) {
  mpq_class total = 0;
  for (const Vote& v : e.votes()) {
    total += v.weight() * f(PositionsOf(v.ranking(), mask), e.m());
  }
  return total;
}

// Masks of all optimal size-k committees, ascending.
inline std::vector<uint64_t> OracleWinners(const Election& e, const Formula& f,
                                           int k, mpq_class* optimum = nullptr) {
  std::vector<uint64_t> best;
  mpq_class top = -1;
  for (uint64_t mask = 0; mask < (uint64_t{1} << e.m()); ++mask) {
    if (std::popcount(mask) != k) continue;
    const mpq_class s = OracleScore(e, f, mask);
    if (s > top) {
      top = s;
      best.clear();
    }
    if (s == top) best.push_back(mask);
  }
  if (optimum != nullptr) *optimum = top;
  return best;
}

inline std::vector<uint64_t> Masks(const std::vector<Committee>& cs) {
  std::vector<uint64_t> out;
  for (const Committee& c : cs) out.push_back(c.mask());
  std::sort(out.begin(), out.end());
  return out;
}

// Every multiset of n unit rankings over candidates "a", "b", ... as a
// weighted election, by direct recursion over nondecreasing ranking indices.
inline void ForEachProfile(int m, int n,
                           const std::function<void(const Election&)>& fn) {
  std::vector<std::string> roster;
  for (int i = 0; i < m; ++i) roster.push_back(std::string(1, 'a' + i));
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(m);
  for (int i = 0; i < m; ++i) perm[i] = i;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<int> pick(n, 0);
  std::function<void(int, int)> rec = [&](int depth, int from) {
    if (depth == n) {
      std::vector<Vote> votes;
      for (int idx : pick) votes.emplace_back(perms[idx], 1);
      fn(Election(roster, votes));
      return;
    }
    for (int i = from; i < static_cast<int>(perms.size()); ++i) {
      pick[depth] = i;
      rec(depth + 1, i);
    }
  };
  rec(0, 0);
}

// A fresh directory under the system temp dir.
inline std::filesystem::path TempDir(const std::string& tag) {
  std::random_device rd;
  std::filesystem::path dir = std::filesystem::temp_directory_path() /
                              ("csr_" + tag + "_" + std::to_string(rd()));
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace csr::testing

#endif  // CSR_TESTS_TEST_UTIL_H_
