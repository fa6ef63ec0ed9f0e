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

#include <gtest/gtest.h>

#include <algorithm>

#include "csr/election_io.h"
#include "csr/error.h"
#include "csr/fixtures.h"
#include "csr/solve.h"

namespace csr {
namespace {

SearchDomain Small(int max_m = 4, int max_n = 3) {
  SearchDomain d;
  d.max_m = max_m;
  d.max_n = max_n;
  return d;
}

bool HasCommittee(const std::vector<Committee>& ws, const Committee& w) {
  return std::find(ws.begin(), ws.end(), w) != ws.end();
}

TEST(AxiomNamesTest, RoundTrip) {
  for (const char* name :
       {"non-crossing", "top-member", "prefix:2", "narrow-top", "enlargement",
        "candidate", "consistency", "nonimposition"}) {
    EXPECT_EQ(ParseAxiom(name).Name(), name);
  }
  EXPECT_EQ(ParseAxiom("prefix:1").Name(), "top-member");
  EXPECT_EQ(ParseAxiom("prefix:3").t, 3);
  EXPECT_THROW(ParseAxiom("prefix:0"), Error);
  EXPECT_THROW(ParseAxiom("monotone"), Error);
}

TEST(SearchDomainTest, Description) {
  EXPECT_EQ(SearchDomain().ToString(),
            "m=2..4,n=1..3,k=1..m-1,mode=exhaustive");
  SearchDomain d;
  d.k = 2;
  d.mode = SearchMode::kRandom;
  d.samples = 50;
  d.seed = 9;
  EXPECT_EQ(d.ToString(), "m=2..4,n=1..3,k=2,mode=random,samples=50,seed=9");
}

TEST(NonCrossingTest, VerifiedAndViolated) {
  const AuditOutcome bloc = AuditNonCrossing(ParseRule("bloc"), Small());
  EXPECT_EQ(bloc.verdict, AuditVerdict::kVerified);
  EXPECT_EQ(bloc.items_checked, bloc.items_total);
  EXPECT_GT(bloc.evaluations, 0u);
  EXPECT_EQ(AuditNonCrossing(ParseRule("trivial"), Small()).verdict,
            AuditVerdict::kVerified);

  const Rule cc = ParseRule("cc-borda");
  const AuditOutcome out = AuditNonCrossing(cc, Small());
  ASSERT_EQ(out.verdict, AuditVerdict::kCounterexample);
  ASSERT_TRUE(out.counterexample.has_value());
  const Counterexample& cx = *out.counterexample;
  EXPECT_TRUE(Replays(cc, cx));
  ASSERT_TRUE(cx.mutation.has_value());
  EXPECT_EQ(cx.mutation->shifted.size(), 1u);
  EXPECT_TRUE(HasCommittee(cx.winners_before, cx.committee));
  EXPECT_FALSE(HasCommittee(cx.winners_after, cx.committee));
  const std::string report = FormatAuditReport(out);
  EXPECT_EQ(report.rfind("axiom=non-crossing rule=cc-borda "
                         "verdict=counterexample domain=m=2..4",
                         0),
            0u);
  EXPECT_NE(report.find("candidates:"), std::string::npos);
}

TEST(PrefixTest, ApprovalChamberlinCourantExample) {
  const Rule rule = ParseRule("cc-approval");
  const Election e = AllPermutations(DefaultRoster(4));
  int vote = -1;
  for (int i = 0; i < static_cast<int>(e.votes().size()); ++i) {
    if (e.votes()[i].ranking() == std::vector<int>{0, 1, 2, 3}) vote = i;
  }
  ASSERT_GE(vote, 0);
  const Committee w = e.MakeCommittee({"b", "c"});
  const auto cx = CheckPrefixShift(rule, e, 2, w, vote, 2);
  ASSERT_TRUE(cx.has_value());
  EXPECT_EQ(cx->committee, w);
  EXPECT_TRUE(HasCommittee(cx->winners_before, w));
  EXPECT_EQ(cx->winners_before.size(), 6u);
  EXPECT_FALSE(HasCommittee(cx->winners_after, w));
  EXPECT_TRUE(Replays(rule, *cx));
  // The same shift for t = 1 moves b alone; b passes a and {b,c} survives.
  EXPECT_FALSE(CheckPrefixShift(rule, e, 2, w, vote, 1).has_value());
  // A top member already ranked first cannot move.
  try {
    CheckPrefixShift(rule, e, 2, e.MakeCommittee({"a", "c"}), vote, 1);
    ADD_FAILURE() << "expected an invalid shift";
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::kInvalidShift);
  }
}

TEST(PrefixTest, VerifiedRules) {
  EXPECT_EQ(AuditPrefix(ParseRule("cc-borda"), 1, Small()).verdict,
            AuditVerdict::kVerified);
  for (int t = 1; t <= 3; ++t) {
    EXPECT_EQ(AuditPrefix(ParseRule("kborda"), t, Small()).verdict,
              AuditVerdict::kVerified)
        << t;
  }
}

TEST(NarrowTopTest, BordaCounterexampleAtThreeCandidates) {
  const Rule rule = ParseRule("kborda");
  const Election e =
      ParseElection("candidates: a b c\n2: a > c > b\n1: b > c > a\n");
  const auto cx = CheckElection(rule, ParseAxiom("narrow-top"), e, 2);
  ASSERT_TRUE(cx.has_value());
  EXPECT_EQ(e.Format(cx->committee), "{a,c}");
  EXPECT_TRUE(Replays(rule, *cx));
}

TEST(NarrowTopTest, Audits) {
  EXPECT_EQ(AuditNarrowTop(ParseRule("cc-borda"), Small()).verdict,
            AuditVerdict::kVerified);
  EXPECT_EQ(AuditNarrowTop(ParseRule("sntv"), Small()).verdict,
            AuditVerdict::kVerified);
  const Rule bloc = ParseRule("bloc");
  const AuditOutcome out = AuditNarrowTop(bloc, Small());
  ASSERT_EQ(out.verdict, AuditVerdict::kCounterexample);
  EXPECT_TRUE(Replays(bloc, *out.counterexample));
}

TEST(EnlargementTest, Audits) {
  for (const char* spec : {"sntv", "kborda", "trivial"}) {
    EXPECT_EQ(AuditCommitteeEnlargement(ParseRule(spec), Small()).verdict,
              AuditVerdict::kVerified)
        << spec;
  }
  const Rule bloc = ParseRule("bloc");
  const AuditOutcome out = AuditCommitteeEnlargement(bloc, Small());
  ASSERT_EQ(out.verdict, AuditVerdict::kCounterexample);
  const Counterexample min = MinimizeCounterexample(bloc, *out.counterexample);
  EXPECT_TRUE(Replays(bloc, min));
  EXPECT_LE(min.election.n(), out.counterexample->election.n());
  EXPECT_LE(min.election.m(), out.counterexample->election.m());
}

TEST(CandidateMonotonicityTest, CatalogVerified) {
  for (const std::string& spec : CatalogSpecs()) {
    EXPECT_EQ(AuditCandidateMonotonicity(ParseRule(spec), Small(4, 2)).verdict,
              AuditVerdict::kVerified)
        << spec;
  }
}

TEST(CandidateMonotonicityTest, RandomChamberlinCourant) {
  SearchDomain d;
  d.min_m = d.max_m = 5;
  d.min_n = d.max_n = 4;
  d.mode = SearchMode::kRandom;
  d.samples = 10000;
  d.seed = 1;
  const AuditOutcome out =
      AuditCandidateMonotonicity(ParseRule("cc-borda"), d);
  EXPECT_EQ(out.verdict, AuditVerdict::kVerified);
  EXPECT_EQ(out.items_checked, 10000u);
}

TEST(CandidateMonotonicityTest, BrokenTableIsCaught) {
  // f(1) < f(2) violates dominance; validation is bypassed on purpose.
  const Rule broken("broken", [](int m, int k) {
    return MakeTableUnchecked(m, k, {Score(0), Score(1), Score(0)});
  });
  SearchDomain d;
  d.min_m = d.max_m = 3;
  d.k = 1;
  d.max_n = 1;
  const AuditOutcome out = AuditCandidateMonotonicity(broken, d);
  ASSERT_EQ(out.verdict, AuditVerdict::kCounterexample);
  EXPECT_TRUE(Replays(broken, *out.counterexample));
}

TEST(ConsistencyTest, Audits) {
  SearchDomain d;
  d.min_m = d.max_m = 3;
  d.max_n = 2;
  EXPECT_EQ(AuditConsistency(ParseRule("kborda"), d).verdict,
            AuditVerdict::kVerified);
  const Election e =
      ParseElection("candidates: a b c d\n1: a > b > c > d\n1: c > a > d > b\n");
  EXPECT_FALSE(
      CheckElection(ParseRule("sntv"), ParseAxiom("consistency"), e, 2, e)
          .has_value());
  EXPECT_EQ(WinnersExact(Scale(e, 2), families::Sntv(4, 2)).committees,
            WinnersExact(e, families::Sntv(4, 2)).committees);
  SearchDomain r;
  r.min_m = r.max_m = 5;
  r.max_n = 4;
  r.mode = SearchMode::kRandom;
  r.samples = 300;
  r.seed = 3;
  EXPECT_EQ(AuditConsistency(ParseRule("pav:2"), r).verdict,
            AuditVerdict::kVerified);
}

TEST(NonimpositionTest, Audits) {
  SearchDomain d;
  d.min_m = d.max_m = 4;
  d.k = 2;
  EXPECT_EQ(AuditNonimposition(ParseRule("sntv"), d).verdict,
            AuditVerdict::kVerified);
  EXPECT_EQ(AuditNonimposition(ParseRule("lpborda:2"), d).verdict,
            AuditVerdict::kVerified);
  EXPECT_EQ(AuditNonimposition(ParseRule("trivial"), d).verdict,
            AuditVerdict::kCounterexample);
  const Election z = ZetaSet(DefaultRoster(4), {"a", "b"});
  const WinnerSet ws = WinnersExact(z, families::Sntv(4, 2));
  ASSERT_EQ(ws.committees.size(), 1u);
  EXPECT_EQ(z.Format(ws.committees[0]), "{a,b}");
}

TEST(MinimizerTest, ReducesAndReachesFixpoint) {
  const Rule cc = ParseRule("cc-borda");
  const AuditOutcome out = AuditNonCrossing(cc, Small());
  ASSERT_TRUE(out.counterexample.has_value());
  const Counterexample once = MinimizeCounterexample(cc, *out.counterexample);
  EXPECT_TRUE(Replays(cc, once));
  EXPECT_LE(once.election.n(), 3);
  const Counterexample twice = MinimizeCounterexample(cc, once);
  EXPECT_EQ(FormatElection(twice.election), FormatElection(once.election));
  EXPECT_EQ(twice.committee, once.committee);
}

TEST(SearchTest, ThreadCountAndSeedDeterminism) {
  const Rule pav = ParseRule("pav:2");
  SearchDomain d = Small();
  d.threads = 1;
  const std::string one = FormatAuditReport(AuditNonCrossing(pav, d));
  d.threads = 4;
  EXPECT_EQ(FormatAuditReport(AuditNonCrossing(pav, d)), one);

  SearchDomain r;
  r.min_m = r.max_m = 5;
  r.max_n = 5;
  r.mode = SearchMode::kRandom;
  r.samples = 500;
  r.seed = 42;
  r.threads = 1;
  const std::string a = FormatAuditReport(AuditNarrowTop(ParseRule("bloc"), r));
  r.threads = 3;
  EXPECT_EQ(FormatAuditReport(AuditNarrowTop(ParseRule("bloc"), r)), a);
}

TEST(SearchTest, BudgetYieldsPartialVerdict) {
  SearchDomain d = Small();
  d.budget = 10;
  const AuditOutcome out = AuditNonCrossing(ParseRule("sntv"), d);
  EXPECT_EQ(out.verdict, AuditVerdict::kPartial);
  EXPECT_LT(out.items_checked, out.items_total);
  EXPECT_NE(out.coverage.find("budget"), std::string::npos);
}

TEST(SearchTest, InvalidDomains) {
  SearchDomain d = Small();
  d.max_m = 9;
  EXPECT_THROW(AuditNonCrossing(ParseRule("sntv"), d), Error);
  SearchDomain e = Small();
  e.min_n = 4;
  EXPECT_THROW(AuditNonCrossing(ParseRule("sntv"), e), Error);
}

}  // namespace
}  // namespace csr
