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

// Internal accumulator of committee scores, shared by the solver and the
// axiom auditors. Scores live in the cheapest exact representation the
// scoring function allows, so that incremental updates (add or remove one
// vote) stay fast.

#ifndef CSR_SRC_TALLY_H_
#define CSR_SRC_TALLY_H_

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "csr/model.h"
#include "csr/score.h"
#include "csr/scoring.h"

namespace csr::internal {

class CommitteeTally {
 public:
  // Scores committees[begin, end). `committees` must outlive the tally and
  // hold size-k committees for the function's (m, k).
  CommitteeTally(const ScoringFunction& f,
                 const std::vector<Committee>& committees, size_t begin,
                 size_t end);
  CommitteeTally(const ScoringFunction& f,
                 const std::vector<Committee>& committees)
      : CommitteeTally(f, committees, 0, committees.size()) {}

  size_t size() const { return end_ - begin_; }

  // Adds weight * f(position) for every committee; weight may be negative
  // to remove a vote. Each call costs size() evaluations.
  void AddVote(const std::vector<int>& ranking, int64_t weight);
  void AddElection(const Election& election);

  Score ScoreAt(size_t i) const;
  double DoubleAt(size_t i) const;

  // Index of a maximum-score committee (first in order among exact ties).
  size_t ArgMax() const;
  // Three-way comparison of two committees' scores with tolerance eps for
  // real-valued functions.
  int CompareAt(size_t i, size_t j, double eps = Score::kEpsilon) const;
  // Committee i attains the maximum (within eps for reals).
  bool IsMax(size_t i, size_t argmax, double eps = Score::kEpsilon) const;
  // All committees attaining the maximum, in index order.
  std::vector<size_t> Winners(double eps = Score::kEpsilon) const;

 private:
  uint64_t RankOf(const std::vector<int>& position, size_t committee) const;

  const ScoringFunction& f_;
  const std::vector<Committee>& committees_;
  size_t begin_;
  size_t end_;
  NumericMode mode_;
  std::vector<__int128> ints_;
  std::vector<mpq_class> rationals_;
  std::vector<double> reals_;
  std::vector<uint64_t> binom_;  // binom_[n * (k + 1) + r] = C(n, r)
  mutable std::vector<int> scratch_;
};

}  // namespace csr::internal

#endif  // CSR_SRC_TALLY_H_
