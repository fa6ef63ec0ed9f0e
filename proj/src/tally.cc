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

#include "tally.h"

#include <algorithm>
#include <cmath>

#include "csr/error.h"

namespace csr::internal {

CommitteeTally::CommitteeTally(const ScoringFunction& f,
                               const std::vector<Committee>& committees,
                               size_t begin, size_t end)
    : f_(f),
      committees_(committees),
      begin_(begin),
      end_(end),
      mode_(f.numeric_mode()) {
  const size_t n = end - begin;
  switch (mode_) {
    case NumericMode::kInteger:
      ints_.assign(n, 0);
      break;
    case NumericMode::kRational:
      rationals_.assign(n, mpq_class(0));
      break;
    case NumericMode::kReal:
      reals_.assign(n, 0.0);
      break;
  }
  const int m = f.m();
  const int k = f.k();
  binom_.assign(static_cast<size_t>(m + 1) * (k + 1), 0);
  for (int a = 0; a <= m; ++a) {
    for (int r = 0; r <= k; ++r) binom_[a * (k + 1) + r] = Binomial(a, r);
  }
  scratch_.resize(k);
}

uint64_t CommitteeTally::RankOf(const std::vector<int>& position,
                                size_t committee) const {
  const int m = f_.m();
  const int k = f_.k();
  const std::vector<int>& members = committees_[committee].members();
  for (int t = 0; t < k; ++t) {
    int p = position[members[t]];
    int u = t;
    while (u > 0 && scratch_[u - 1] > p) {
      scratch_[u] = scratch_[u - 1];
      --u;
    }
    scratch_[u] = p;
  }
  uint64_t rank = 0;
  int prev = 0;
  for (int t = 1; t <= k; ++t) {
    for (int v = prev + 1; v < scratch_[t - 1]; ++v) {
      rank += binom_[(m - v) * (k + 1) + (k - t)];
    }
    prev = scratch_[t - 1];
  }
  return rank;
}

void CommitteeTally::AddVote(const std::vector<int>& ranking,
                             int64_t weight) {
  std::vector<int> position(ranking.size());
  for (size_t p = 0; p < ranking.size(); ++p) {
    position[ranking[p]] = static_cast<int>(p) + 1;
  }
  const size_t n = size();
  switch (mode_) {
    case NumericMode::kInteger: {
      const std::vector<int64_t>& v = f_.scaled();
      for (size_t i = 0; i < n; ++i) {
        ints_[i] += static_cast<__int128>(v[RankOf(position, begin_ + i)]) *
                    weight;
      }
      break;
    }
    case NumericMode::kRational: {
      const mpq_class w(static_cast<long>(weight));
      for (size_t i = 0; i < n; ++i) {
        rationals_[i] +=
            f_.ValueAtRank(RankOf(position, begin_ + i)).rational() * w;
      }
      break;
    }
    case NumericMode::kReal: {
      const std::vector<double>& v = f_.doubles();
      const double w = static_cast<double>(weight);
      for (size_t i = 0; i < n; ++i) {
        reals_[i] += v[RankOf(position, begin_ + i)] * w;
      }
      break;
    }
  }
}

void CommitteeTally::AddElection(const Election& election) {
  if (election.m() != f_.m()) {
    throw Error(ErrorKind::kInput,
                "scoring function dimensions do not match the election");
  }
  for (const Vote& v : election.votes()) AddVote(v.ranking(), v.weight());
}

Score CommitteeTally::ScoreAt(size_t i) const {
  switch (mode_) {
    case NumericMode::kInteger: {
      __int128 x = ints_[i];
      bool negative = x < 0;
      unsigned __int128 u = negative ? -static_cast<unsigned __int128>(x)
                                     : static_cast<unsigned __int128>(x);
      mpz_class hi(static_cast<unsigned long>(u >> 64));
      mpz_class lo(static_cast<unsigned long>(u & ~uint64_t{0}));
      mpz_class num = (hi << 64) + lo;
      if (negative) num = -num;
      return Score(mpq_class(num, mpz_class(static_cast<long>(
                                      f_.denominator()))));
    }
    case NumericMode::kRational:
      return Score(rationals_[i]);
    case NumericMode::kReal:
      return Score::Real(reals_[i]);
  }
  return Score();
}

double CommitteeTally::DoubleAt(size_t i) const {
  switch (mode_) {
    case NumericMode::kInteger:
      return static_cast<double>(ints_[i]) /
             static_cast<double>(f_.denominator());
    case NumericMode::kRational:
      return rationals_[i].get_d();
    case NumericMode::kReal:
      return reals_[i];
  }
  return 0.0;
}

int CommitteeTally::CompareAt(size_t i, size_t j, double eps) const {
  switch (mode_) {
    case NumericMode::kInteger:
      return (ints_[i] > ints_[j]) - (ints_[i] < ints_[j]);
    case NumericMode::kRational: {
      int c = cmp(rationals_[i], rationals_[j]);
      return (c > 0) - (c < 0);
    }
    case NumericMode::kReal: {
      double x = reals_[i];
      double y = reals_[j];
      double scale = std::max({1.0, std::fabs(x), std::fabs(y)});
      if (std::fabs(x - y) <= eps * scale) return 0;
      return x < y ? -1 : 1;
    }
  }
  return 0;
}

size_t CommitteeTally::ArgMax() const {
  size_t best = 0;
  const size_t n = size();
  for (size_t i = 1; i < n; ++i) {
    bool better = false;
    switch (mode_) {
      case NumericMode::kInteger:
        better = ints_[i] > ints_[best];
        break;
      case NumericMode::kRational:
        better = rationals_[i] > rationals_[best];
        break;
      case NumericMode::kReal:
        better = reals_[i] > reals_[best];
        break;
    }
    if (better) best = i;
  }
  return best;
}

bool CommitteeTally::IsMax(size_t i, size_t argmax, double eps) const {
  return CompareAt(i, argmax, eps) >= 0;
}

std::vector<size_t> CommitteeTally::Winners(double eps) const {
  std::vector<size_t> out;
  if (size() == 0) return out;
  const size_t best = ArgMax();
  for (size_t i = 0; i < size(); ++i) {
    if (IsMax(i, best, eps)) out.push_back(i);
  }
  return out;
}

}  // namespace csr::internal
