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

#include <gtest/gtest.h>

#include <cmath>

#include "csr/election_io.h"
#include "csr/error.h"
#include "csr/fixtures.h"
#include "test_util.h"

namespace csr {
namespace {

ErrorKind KindOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no csr::Error thrown";
  return ErrorKind::kResource;
}

struct Case {
  const char* name;
  ScoringFunction (*make)(int, int);
  testing::Formula formula;
};

std::vector<Case> Cases() {
  return {
      {"sntv", families::Sntv, testing::SntvFormula()},
      {"bloc", families::Bloc, testing::BlocFormula()},
      {"kborda", families::KBorda, testing::KBordaFormula()},
      {"cc-borda", families::CcBorda, testing::CcBordaFormula()},
      {"cc-approval", families::CcApproval, testing::CcApprovalFormula()},
  };
}

TEST(WinnersExactTest, MatchesBruteForceOnAllSmallProfiles) {
  for (int m = 2; m <= 4; ++m) {
    for (int n = 1; n <= 2; ++n) {
      testing::ForEachProfile(m, n, [&](const Election& e) {
        for (int k = 1; k < m; ++k) {
          for (const Case& c : Cases()) {
            mpq_class optimum;
            const auto expected =
                testing::OracleWinners(e, c.formula, k, &optimum);
            const WinnerSet ws = WinnersExact(e, c.make(m, k));
            ASSERT_EQ(testing::Masks(ws.committees), expected)
                << c.name << " k=" << k << "\n" << FormatElection(e);
            ASSERT_EQ(ws.optimum, Score(optimum));
            ASSERT_EQ(ws.count, expected.size());
          }
        }
      });
    }
  }
}

TEST(WinnersExactTest, TinyPluralityExample) {
  const Election e =
      ParseElection("candidates: a b c\n2: a > b > c\n1: b > a > c\n");
  const WinnerSet ws = WinnersExact(e, families::Sntv(3, 1));
  EXPECT_EQ(ws.optimum.ToString(), "2");
  ASSERT_EQ(ws.committees.size(), 1u);
  EXPECT_EQ(e.Format(ws.committees[0]), "{a}");
}

TEST(WinnersExactTest, ThreadCountDoesNotChangeResults) {
  const Election e = ImpartialCulture(DefaultRoster(8), 400, 11);
  const ScoringFunction f = families::Pav(8, 3, 3);
  const WinnerSet one = WinnersExact(e, f, SolveOptions{1});
  const WinnerSet four = WinnersExact(e, f, SolveOptions{4});
  EXPECT_EQ(one.committees, four.committees);
  EXPECT_EQ(one.optimum, four.optimum);
  EXPECT_EQ(AllCommitteeScores(e, f, SolveOptions{1}).size(), 56u);
}

TEST(WinnersExactTest, CommitteesSortByTokens) {
  const Election e = ParseElection("candidates: z y x\n1: z > y > x\n"
                                   "1: y > x > z\n1: x > z > y\n");
  const WinnerSet ws = WinnersExact(e, families::KBorda(3, 2));
  ASSERT_EQ(ws.committees.size(), 3u);
  EXPECT_EQ(e.Format(ws.committees[0]), "{x,y}");
  EXPECT_EQ(e.Format(ws.committees[1]), "{x,z}");
  EXPECT_EQ(e.Format(ws.committees[2]), "{y,z}");
}

TEST(WinnersSeparableTest, AgreesWithExact) {
  for (int n = 1; n <= 3; ++n) {
    testing::ForEachProfile(4, n, [&](const Election& e) {
      for (int k = 1; k < 4; ++k) {
        for (auto make : {families::Sntv, families::Bloc, families::KBorda}) {
          const ScoringFunction f = make(4, k);
          const WinnerSet a = WinnersSeparable(e, f);
          const WinnerSet b = WinnersExact(e, f);
          ASSERT_EQ(a.committees, b.committees) << f.name();
          ASSERT_EQ(a.count, b.count);
          ASSERT_EQ(a.optimum, b.optimum);
        }
      }
    });
  }
}

TEST(WinnersSeparableTest, CountOnlyAndLimits) {
  const Election e = AllPermutations(DefaultRoster(6));
  const WinnerSet ws = WinnersSeparable(e, families::Sntv(6, 3), true);
  EXPECT_EQ(ws.count, 20u);
  EXPECT_TRUE(ws.committees.empty());
  EXPECT_EQ(KindOf([&] { WinnersSeparable(e, families::Sntv(6, 3), false, 5); }),
            ErrorKind::kResource);
  EXPECT_EQ(KindOf([&] { WinnersSeparable(e, families::CcBorda(6, 3)); }),
            ErrorKind::kUnsupportedRule);
}

TEST(WinnersGreedyTest, TieBreakAndEligibility) {
  const Election e = ParseElection(
      "candidates: a b c d\n1: a > b > c > d\n1: b > a > d > c\n");
  const GreedyResult g = WinnersGreedy(e, families::CcBorda(4, 2));
  EXPECT_EQ(e.Format(g.committee), "{a,b}");
  EXPECT_TRUE(g.guaranteed);
  EXPECT_EQ(g.score, Score(6));
  EXPECT_EQ(KindOf([&] { WinnersGreedy(e, families::Perfectionist(4, 2)); }),
            ErrorKind::kUnsupportedRule);
  EXPECT_FALSE(WinnersGreedy(e, families::Perfectionist(4, 2), true).guaranteed);
}

TEST(WinnersGreedyTest, ApproximationBoundOnRandomElections) {
  const double bound = 1 - std::exp(-1.0);
  for (uint64_t seed = 0; seed < 40; ++seed) {
    const Election e = ImpartialCulture(DefaultRoster(6), 8, seed);
    for (const ScoringFunction& f :
         {families::CcBorda(6, 3), families::Pav(6, 3, 2)}) {
      const GreedyResult g = WinnersGreedy(e, f);
      mpq_class opt;
      testing::OracleWinners(
          e,
          f.name() == "cc-borda" ? testing::CcBordaFormula()
                                 : testing::PavFormula(2),
          3, &opt);
      EXPECT_GE(g.score.ToDouble(), bound * opt.get_d() - 1e-12);
    }
    const ScoringFunction kb = families::KBorda(6, 3);
    EXPECT_EQ(WinnersGreedy(e, kb).score, WinnersExact(e, kb).optimum);
  }
}

TEST(IsWinningTest, Margin) {
  const Election e =
      ParseElection("candidates: a b c\n2: a > b > c\n1: b > a > c\n");
  const ScoringFunction f = families::Sntv(3, 1);
  EXPECT_TRUE(IsWinning(e, f, Committee(3, {0})).winning);
  const WinningCheck check = IsWinning(e, f, Committee(3, {1}));
  EXPECT_FALSE(check.winning);
  EXPECT_EQ(check.margin, Score(1));
  EXPECT_EQ(KindOf([&] { IsWinning(e, f, Committee(3, {0, 1})); }),
            ErrorKind::kInput);
}

TEST(SolveErrorsTest, DimensionMismatch) {
  const Election e = ParseElection("candidates: a b c\n1: a > b > c\n");
  EXPECT_EQ(KindOf([&] { WinnersExact(e, families::Sntv(4, 1)); }),
            ErrorKind::kInput);
}

}  // namespace
}  // namespace csr
