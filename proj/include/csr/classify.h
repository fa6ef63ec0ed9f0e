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

// Structural classification of scoring tables, up to positive affine
// transformation. Exact tables are decided with rational arithmetic; real
// tables use least squares with a residual threshold and report approximate
// verdicts.

#ifndef CSR_CLASSIFY_H_
#define CSR_CLASSIFY_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csr/model.h"
#include "csr/rule.h"
#include "csr/score.h"
#include "csr/scoring.h"

namespace csr {

// Residual threshold for least-squares fits of real-valued tables.
inline constexpr double kApproxTolerance = 1e-6;

enum class StructuralClass {
  kSeparable,
  kWeaklySeparable,
  kRepresentationFocused,
  kTopKCounting,
  kOwa,
  kDecomposable,
};

// "separable", "weakly-separable", "rep-focused", "top-k", "owa",
// "decomposable".
const char* ClassName(StructuralClass c);
// Inverse of ClassName; throws Error(kInput) for unknown names.
StructuralClass ParseClassName(const std::string& name);
std::vector<StructuralClass> AllClasses();

enum class VerdictKind { kMember, kNonMember, kUnknown };

// "member", "non_member", "unknown".
const char* VerdictName(VerdictKind kind);

// A violated 2x2 minor of the slot/position difference matrix:
// D[t1][q1] * D[t2][q2] != D[t1][q2] * D[t2][q1].
struct DifferenceMinor {
  int t1, t2, q1, q2;
  Score d11, d12, d21, d22;
  Score determinant;
};

struct Verdict {
  VerdictKind kind = VerdictKind::kUnknown;
  // Decided on a real-valued table by a tolerance test.
  bool approx = false;
  // One-line witness or certificate summary.
  std::string detail;

  // Witnesses. gamma is indexed by position - 1.
  std::vector<Score> gamma;   // weakly separable, rep-focused, owa
  std::vector<Score> lambda;  // owa
  // Top-k counting function g(0..k); unset where the count is unreachable.
  std::vector<std::optional<Score>> counting;
  // Decomposable slot functions slots[t-1][i-1], set on {t..m-k+t}.
  std::vector<std::vector<std::optional<Score>>> slots;

  // Certificates. `combination` lists (row, multiplier) pairs whose
  // weighted sum of the defining equations has a cancelling left-hand side
  // and a nonzero right-hand side.
  std::vector<std::pair<CommitteePosition, Score>> combination;
  std::optional<DifferenceMinor> minor;

  bool member() const { return kind == VerdictKind::kMember; }
  bool non_member() const { return kind == VerdictKind::kNonMember; }
};

// P(m, k, t, p): every I in [m]_k with i_t = p and p - 1 not in I. Empty
// for p = 1.
std::vector<CommitteePosition> PositionsP(int m, int k, int t, int p);
// Union of PositionsP over t = 1..k, in slot order.
std::vector<CommitteePosition> PositionsPAny(int m, int k, int p);

struct DifferenceProfile {
  int m = 0;
  int k = 0;
  // h[t-1][q-1] = f(U') - f(U) for U in P(m, k, t, q + 1), where U' moves
  // the slot-t member from q + 1 to q. Set for q in {t..m-k+t-1} when all
  // such U agree.
  std::vector<std::vector<std::optional<Score>>> h;
  bool consistent = true;
  std::vector<std::pair<int, int>> inconsistent;  // (t, q)

  bool Defined(int t, int q) const { return q >= t && q <= m - k + t - 1; }
};

DifferenceProfile ExtractDifferences(const ScoringFunction& f);

Verdict ClassifyWeaklySeparable(const ScoringFunction& f);
// Compares the weakly separable witnesses of rule.At(m, k) for k = 1..m-1
// after normalizing each to gamma(1) = 1, gamma(m) = 0.
Verdict ClassifySeparable(const Rule& rule, int m);
// Single-table form: non_member if the table is not weakly separable,
// otherwise unknown (separability constrains every committee size).
Verdict ClassifySeparable(const ScoringFunction& f);
Verdict ClassifyRepresentationFocused(const ScoringFunction& f);
Verdict ClassifyTopKCounting(const ScoringFunction& f);
Verdict ClassifyDecomposable(const ScoringFunction& f);
Verdict ClassifyOwa(const ScoringFunction& f);

struct ClassReport {
  bool degenerate = false;
  std::vector<std::pair<StructuralClass, Verdict>> verdicts;

  // Null when the class was not requested.
  const Verdict* Find(StructuralClass c) const;
  // "degenerate=<bool>", one "class=<name> verdict=<v> ..." line per class
  // and a summary line "<name>=<v> ...".
  std::string Format() const;
};

// Classifies f in the requested classes (all by default). The separable
// class uses `rule` across committee sizes when given.
ClassReport Classify(const ScoringFunction& f, const Rule* rule = nullptr,
                     const std::vector<StructuralClass>& classes =
                         AllClasses());

struct PrefixCheck {
  bool holds = true;
  std::vector<std::string> violations;
};

// Sufficient condition for prefix monotonicity of sum_t gamma^(t)(i_t):
// (i) each slot's differences d_t(p) = gamma^(t)(p) - gamma^(t)(p+1) are
// nonincreasing in p; (ii) d_i(p) >= d_j(p) for i < j and
// j <= p < m - (k - i). Comparisons touching unset values are skipped.
PrefixCheck CheckPrefixSufficient(
    const std::vector<std::vector<std::optional<Score>>>& slots);
// Convenience overload for fully defined slot functions.
PrefixCheck CheckPrefixSufficient(
    const std::vector<std::vector<Score>>& slots);

struct AffineWitness {
  bool equivalent = false;
  // g(I) = a * f(I) + b for every I.
  Score a;
  Score b;
};

AffineWitness AffineEquivalent(const ScoringFunction& f,
                               const ScoringFunction& g);

}  // namespace csr

#endif  // CSR_CLASSIFY_H_
