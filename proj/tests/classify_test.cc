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

#include "csr/classify.h"

#include <gtest/gtest.h>

#include "csr/error.h"
#include "csr/linear_system.h"
#include "csr/rule.h"
#include "csr/table_io.h"

namespace csr {
namespace {

using Kind = VerdictKind;

Kind KindIn(const ClassReport& r, StructuralClass c) {
  const Verdict* v = r.Find(c);
  EXPECT_NE(v, nullptr);
  return v == nullptr ? Kind::kUnknown : v->kind;
}

// Checks f(I) = sum_t slots[t](i_t) for every I.
void ExpectSlotsReproduce(const ScoringFunction& f, const Verdict& v) {
  ASSERT_EQ(static_cast<int>(v.slots.size()), f.k());
  for (const CommitteePosition& p : EnumeratePositions(f.m(), f.k())) {
    Score sum;
    for (int t = 0; t < f.k(); ++t) {
      ASSERT_TRUE(v.slots[t][p[t] - 1].has_value());
      sum += *v.slots[t][p[t] - 1];
    }
    EXPECT_EQ(sum, f.Evaluate(p)) << p.ToString();
  }
}

TEST(PositionsPTest, Definition) {
  EXPECT_TRUE(PositionsP(5, 2, 1, 1).empty());
  const auto p = PositionsP(5, 1, 1, 4);
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p[0].ToString(), "(4)");
  const auto q = PositionsP(4, 2, 2, 3);
  ASSERT_EQ(q.size(), 1u);
  EXPECT_EQ(q[0].ToString(), "(1,3)");
  auto strings = [](const std::vector<CommitteePosition>& ps) {
    std::vector<std::string> out;
    for (const CommitteePosition& p : ps) out.push_back(p.ToString());
    return out;
  };
  EXPECT_EQ(strings(PositionsP(5, 3, 2, 4)),
            (std::vector<std::string>{"(1,4,5)", "(2,4,5)"}));
  EXPECT_EQ(strings(PositionsP(5, 3, 3, 4)),
            (std::vector<std::string>{"(1,2,4)"}));
  EXPECT_EQ(strings(PositionsPAny(5, 3, 4)),
            (std::vector<std::string>{"(1,4,5)", "(2,4,5)", "(1,2,4)"}));
  // Brute force over [6]_3.
  for (int t = 1; t <= 3; ++t) {
    for (int pos = 2; pos <= 6; ++pos) {
      size_t expected = 0;
      for (const CommitteePosition& i : EnumeratePositions(6, 3)) {
        bool prev = false;
        for (int s = 0; s < 3; ++s) prev = prev || i[s] == pos - 1;
        if (i[t - 1] == pos && !prev) ++expected;
      }
      EXPECT_EQ(PositionsP(6, 3, t, pos).size(), expected);
    }
  }
}

TEST(ClassifyTest, BlocTable) {
  const Rule rule = ParseRule("bloc");
  const ClassReport r = Classify(rule.At(4, 2), &rule);
  EXPECT_FALSE(r.degenerate);
  EXPECT_EQ(KindIn(r, StructuralClass::kWeaklySeparable), Kind::kMember);
  EXPECT_EQ(KindIn(r, StructuralClass::kRepresentationFocused),
            Kind::kNonMember);
  EXPECT_EQ(KindIn(r, StructuralClass::kTopKCounting), Kind::kMember);
  EXPECT_EQ(KindIn(r, StructuralClass::kSeparable), Kind::kNonMember);
  EXPECT_EQ(KindIn(r, StructuralClass::kOwa), Kind::kMember);
  EXPECT_EQ(KindIn(r, StructuralClass::kDecomposable), Kind::kMember);
  const std::string text = r.Format();
  EXPECT_NE(text.find("weakly-separable=member"), std::string::npos);
  EXPECT_NE(text.find("rep-focused=non_member"), std::string::npos);
}

TEST(ClassifyTest, CatalogMemberships) {
  struct Expect {
    const char* spec;
    Kind separable, weakly, rep, topk, owa, decomposable;
  };
  const Kind M = Kind::kMember;
  const Kind N = Kind::kNonMember;
  for (const Expect& e : {
           Expect{"sntv", M, M, M, N, M, M},
           Expect{"kborda", M, M, N, N, M, M},
           Expect{"cc-borda", N, N, M, N, M, M},
           Expect{"cc-approval", N, N, M, M, M, M},
           Expect{"pav:2", N, N, N, N, M, M},
           Expect{"perfectionist", N, N, N, M, M, M},
           Expect{"trivial", M, M, M, M, M, M},
       }) {
    const Rule rule = ParseRule(e.spec);
    const ClassReport r = Classify(rule.At(6, 3), &rule);
    EXPECT_EQ(KindIn(r, StructuralClass::kSeparable), e.separable) << e.spec;
    EXPECT_EQ(KindIn(r, StructuralClass::kWeaklySeparable), e.weakly)
        << e.spec;
    EXPECT_EQ(KindIn(r, StructuralClass::kRepresentationFocused), e.rep)
        << e.spec;
    EXPECT_EQ(KindIn(r, StructuralClass::kTopKCounting), e.topk) << e.spec;
    EXPECT_EQ(KindIn(r, StructuralClass::kOwa), e.owa) << e.spec;
    EXPECT_EQ(KindIn(r, StructuralClass::kDecomposable), e.decomposable)
        << e.spec;
  }
}

TEST(ClassifyTest, WitnessesReproduceTables) {
  const ScoringFunction kb = ParseRule("kborda").At(5, 2);
  const Verdict ws = ClassifyWeaklySeparable(kb);
  ASSERT_TRUE(ws.member());
  for (const CommitteePosition& p : EnumeratePositions(5, 2)) {
    EXPECT_EQ(ws.gamma[p[0] - 1] + ws.gamma[p[1] - 1], kb.Evaluate(p));
  }
  const ScoringFunction cc = ParseRule("cc-borda").At(5, 2);
  const Verdict rf = ClassifyRepresentationFocused(cc);
  ASSERT_TRUE(rf.member());
  for (const CommitteePosition& p : EnumeratePositions(5, 2)) {
    EXPECT_EQ(rf.gamma[p[0] - 1], cc.Evaluate(p));
  }
  const ScoringFunction pav = ParseRule("pav:2").At(5, 3);
  const Verdict owa = ClassifyOwa(pav);
  ASSERT_TRUE(owa.member());
  for (const CommitteePosition& p : EnumeratePositions(5, 3)) {
    Score sum;
    for (int t = 0; t < 3; ++t) sum += owa.lambda[t] * owa.gamma[p[t] - 1];
    EXPECT_EQ(sum, pav.Evaluate(p));
  }
  const Verdict dec = ClassifyDecomposable(pav);
  ASSERT_TRUE(dec.member());
  ExpectSlotsReproduce(pav, dec);
}

TEST(ClassifyTest, NonMembershipCertificates) {
  // Combination rows of the weakly separable system cancel on the left and
  // leave a nonzero right-hand side.
  const ScoringFunction cc = ParseRule("cc-borda").At(4, 2);
  const Verdict v = ClassifyWeaklySeparable(cc);
  ASSERT_TRUE(v.non_member());
  ASSERT_FALSE(v.combination.empty());
  std::vector<Score> lhs(4);
  Score rhs;
  for (const auto& [row, mult] : v.combination) {
    for (int i : row.positions()) lhs[i - 1] += mult;
    rhs += mult * cc.Evaluate(row);
  }
  for (const Score& x : lhs) EXPECT_TRUE(x.IsZero());
  EXPECT_FALSE(rhs.IsZero());
}

TEST(ClassifyTest, MultiThresholdIsDecomposableNotOwa) {
  const ScoringFunction f =
      ParseRule("multithreshold:1,1;4,2").At(8, 2);
  const Verdict dec = ClassifyDecomposable(f);
  ASSERT_TRUE(dec.member());
  ExpectSlotsReproduce(f, dec);
  const Verdict owa = ClassifyOwa(f);
  ASSERT_TRUE(owa.non_member());
  ASSERT_TRUE(owa.minor.has_value());
  const DifferenceMinor& mn = *owa.minor;
  EXPECT_EQ(mn.determinant, mn.d11 * mn.d22 - mn.d12 * mn.d21);
  EXPECT_FALSE(mn.determinant.IsZero());
}

TEST(ClassifyTest, MaxThresholdIsNotDecomposable) {
  const ScoringFunction f = ParseRule("maxthreshold:2,5").At(9, 2);
  EXPECT_TRUE(ClassifyDecomposable(f).non_member());
}

TEST(ClassifyTest, ConstantTableIsDegenerateMemberEverywhere) {
  const ClassReport r = Classify(ParseTable("m: 3\nk: 2\n1 2 : 4\n1 3 : 4\n"
                                            "2 3 : 4\n"));
  EXPECT_TRUE(r.degenerate);
  for (StructuralClass c : AllClasses()) {
    if (c == StructuralClass::kSeparable) continue;
    EXPECT_EQ(KindIn(r, c), Kind::kMember) << ClassName(c);
  }
  EXPECT_NE(r.Format().find("degenerate"), std::string::npos);
}

TEST(ClassifyTest, RealTablesGetApproximateVerdicts) {
  const ScoringFunction lp = ParseRule("lpborda:2").At(4, 2);
  const Verdict ws = ClassifyWeaklySeparable(lp);
  EXPECT_TRUE(ws.approx);
  EXPECT_TRUE(ws.non_member());
  const ScoringFunction scaled = AffineTransform(
      ParseRule("kborda").At(4, 2), Score::Real(0.5), Score::Real(0.25));
  const Verdict v = ClassifyWeaklySeparable(scaled);
  EXPECT_TRUE(v.approx);
  EXPECT_TRUE(v.member());
}

TEST(ClassifyTest, ClassNames) {
  for (StructuralClass c : AllClasses()) {
    EXPECT_EQ(ParseClassName(ClassName(c)), c);
  }
  EXPECT_THROW(ParseClassName("nope"), Error);
}

TEST(DifferencesTest, BordaAndHExample) {
  const DifferenceProfile d = ExtractDifferences(ParseRule("kborda").At(5, 2));
  EXPECT_TRUE(d.consistent);
  for (int t = 1; t <= 2; ++t) {
    for (int q = t; q <= 5 - 2 + t - 1; ++q) {
      ASSERT_TRUE(d.h[t - 1][q - 1].has_value());
      EXPECT_EQ(*d.h[t - 1][q - 1], Score(1));
    }
  }
  EXPECT_FALSE(ExtractDifferences(ParseRule("maxthreshold:2,5").At(9, 2))
                   .consistent);
}

TEST(PrefixSufficientTest, Decompositions) {
  auto beta = [](int m) {
    std::vector<Score> g;
    for (int i = 1; i <= m; ++i) g.push_back(Score(m - i));
    return g;
  };
  const std::vector<Score> zero(5, Score(0));
  EXPECT_TRUE(CheckPrefixSufficient(std::vector<std::vector<Score>>{
                                        beta(5), zero})
                  .holds);
  EXPECT_TRUE(CheckPrefixSufficient(std::vector<std::vector<Score>>{
                                        beta(5), beta(5)})
                  .holds);
  std::vector<Score> alpha2 = {1, 1, 0, 0, 0};
  const PrefixCheck cc = CheckPrefixSufficient(
      std::vector<std::vector<Score>>{alpha2, zero});
  EXPECT_FALSE(cc.holds);
  EXPECT_FALSE(cc.violations.empty());
  // Second slot stronger than the first violates condition (ii).
  EXPECT_FALSE(CheckPrefixSufficient(std::vector<std::vector<Score>>{
                                         zero, beta(5)})
                   .holds);
}

TEST(AffineTest, Equivalence) {
  const ScoringFunction bloc = ParseRule("bloc").At(4, 2);
  const AffineWitness w =
      AffineEquivalent(bloc, AffineTransform(bloc, Score(2), Score(3)));
  ASSERT_TRUE(w.equivalent);
  EXPECT_EQ(w.a, Score(2));
  EXPECT_EQ(w.b, Score(3));
  EXPECT_FALSE(AffineEquivalent(bloc, ParseRule("sntv").At(4, 2)).equivalent);
  EXPECT_TRUE(AffineEquivalent(ParseRule("lpborda:1").At(4, 2),
                               ParseRule("kborda").At(4, 2))
                  .equivalent);
}

TEST(LinearSystemTest, ExactAndLeastSquares) {
  // x0 + x1 = 3, x0 - x1 = 1, 2 x0 = 4.
  std::vector<SparseEquation<mpq_class>> eqs = {
      {{{0, 1}, {1, 1}}, 3},
      {{{0, 1}, {1, -1}}, 1},
      {{{0, 2}}, 4},
  };
  const ExactSolution s = SolveExact(2, eqs);
  ASSERT_TRUE(s.consistent);
  EXPECT_EQ(s.x[0], 2);
  EXPECT_EQ(s.x[1], 1);
  EXPECT_EQ(s.rank, 2);
  eqs.push_back({{{1, 1}}, 5});
  const ExactSolution bad = SolveExact(2, eqs);
  EXPECT_FALSE(bad.consistent);
  ASSERT_FALSE(bad.certificate.empty());
  std::vector<mpq_class> lhs(2);
  mpq_class rhs;
  for (const auto& [row, mult] : bad.certificate) {
    for (const auto& [var, coef] : eqs[row].terms) lhs[var] += mult * coef;
    rhs += mult * eqs[row].rhs;
  }
  EXPECT_EQ(lhs[0], 0);
  EXPECT_EQ(lhs[1], 0);
  EXPECT_NE(rhs, 0);
  EXPECT_EQ(rhs, bad.residual);
  std::vector<SparseEquation<double>> reals = {
      {{{0, 1.0}, {1, 1.0}}, 3.0},
      {{{0, 1.0}, {1, -1.0}}, 1.0},
  };
  const LeastSquaresSolution ls = SolveLeastSquares(2, reals);
  EXPECT_NEAR(ls.x[0], 2.0, 1e-12);
  EXPECT_NEAR(ls.x[1], 1.0, 1e-12);
  EXPECT_LT(ls.max_residual, 1e-12);
}

}  // namespace
}  // namespace csr
