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

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <sstream>

#include "csr/error.h"
#include "csr/linear_system.h"

namespace csr {

namespace {

double Tolerance(bool approx) {
  return approx ? kApproxTolerance : Score::kEpsilon;
}

bool Same(const Score& a, const Score& b, bool approx) {
  return Compare(a, b, Tolerance(approx)) == 0;
}

bool Less(const Score& a, const Score& b, bool approx) {
  return Compare(a, b, Tolerance(approx)) < 0;
}

bool Positive(const Score& a, bool approx) {
  return Compare(a, Score(0), Tolerance(approx)) > 0;
}

std::string Join(const std::vector<Score>& values) {
  std::string s = "(";
  for (size_t i = 0; i < values.size(); ++i) {
    s += (i ? "," : "") + values[i].ToString();
  }
  return s + ")";
}

std::string Join(const std::vector<std::optional<Score>>& values) {
  std::string s = "(";
  for (size_t i = 0; i < values.size(); ++i) {
    s += (i ? "," : "") + (values[i] ? values[i]->ToString() : "-");
  }
  return s + ")";
}

std::string FValue(const CommitteePosition& p, const Score& v) {
  return "f" + p.ToString() + "=" + v.ToString();
}

// A linear system with one equation per committee position.
struct PositionSystem {
  int num_variables = 0;
  std::vector<CommitteePosition> rows;
  std::vector<std::vector<int>> variables;  // variables used by each row
};

struct SystemResult {
  bool consistent = false;
  bool approx = false;
  std::vector<Score> x;
  int rank = 0;
  int num_variables = 0;
  std::vector<std::pair<CommitteePosition, Score>> combination;
  Score residual;
  std::string detail;
};

SystemResult Solve(const PositionSystem& system, const ScoringFunction& f) {
  SystemResult out;
  out.num_variables = system.num_variables;
  if (f.is_exact()) {
    std::vector<SparseEquation<mpq_class>> rows;
    for (size_t r = 0; r < system.rows.size(); ++r) {
      SparseEquation<mpq_class> eq;
      for (int v : system.variables[r]) eq.terms.emplace_back(v, 1);
      eq.rhs = f.Evaluate(system.rows[r]).rational();
      rows.push_back(std::move(eq));
    }
    ExactSolution s = SolveExact(system.num_variables, rows);
    out.consistent = s.consistent;
    out.rank = s.rank;
    if (s.consistent) {
      for (const mpq_class& v : s.x) out.x.emplace_back(v);
      return out;
    }
    std::string detail = "infeasible combination:";
    for (const auto& [row, mult] : s.certificate) {
      out.combination.emplace_back(system.rows[row], Score(mult));
      std::string coeff = mult.get_str();
      detail += " " + std::string(sgn(mult) > 0 ? "+" : "") + coeff + "*f" +
                system.rows[row].ToString();
    }
    out.residual = Score(s.residual);
    out.detail = detail + " = " + out.residual.ToString() + " (expected 0)";
    return out;
  }
  out.approx = true;
  std::vector<SparseEquation<double>> rows;
  for (size_t r = 0; r < system.rows.size(); ++r) {
    SparseEquation<double> eq;
    for (int v : system.variables[r]) eq.terms.emplace_back(v, 1.0);
    eq.rhs = f.Evaluate(system.rows[r]).ToDouble();
    rows.push_back(std::move(eq));
  }
  LeastSquaresSolution s = SolveLeastSquares(system.num_variables, rows);
  out.rank = s.rank;
  out.consistent = s.max_residual <= kApproxTolerance;
  for (double v : s.x) out.x.push_back(Score::Real(v));
  out.residual = Score::Real(s.max_residual);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3g", s.max_residual);
  out.detail = std::string("least-squares residual ") + buf;
  return out;
}

Verdict Member(std::string detail, bool approx = false) {
  Verdict v;
  v.kind = VerdictKind::kMember;
  v.approx = approx;
  v.detail = std::move(detail);
  return v;
}

Verdict NonMember(std::string detail, bool approx = false) {
  Verdict v;
  v.kind = VerdictKind::kNonMember;
  v.approx = approx;
  v.detail = std::move(detail);
  return v;
}

Verdict Unknown(std::string detail) {
  Verdict v;
  v.kind = VerdictKind::kUnknown;
  v.detail = std::move(detail);
  return v;
}

// gamma normalized to gamma(1) = 1, gamma(m) = 0; nullopt when constant.
std::optional<std::vector<Score>> Normalize(const std::vector<Score>& gamma,
                                            bool approx) {
  const Score& top = gamma.front();
  const Score& bottom = gamma.back();
  if (Same(top, bottom, approx)) return std::nullopt;
  std::vector<Score> out;
  for (const Score& g : gamma) out.push_back((g - bottom) / (top - bottom));
  return out;
}

}  // namespace

const char* ClassName(StructuralClass c) {
  switch (c) {
    case StructuralClass::kSeparable:
      return "separable";
    case StructuralClass::kWeaklySeparable:
      return "weakly-separable";
    case StructuralClass::kRepresentationFocused:
      return "rep-focused";
    case StructuralClass::kTopKCounting:
      return "top-k";
    case StructuralClass::kOwa:
      return "owa";
    case StructuralClass::kDecomposable:
      return "decomposable";
  }
  return "?";
}

StructuralClass ParseClassName(const std::string& name) {
  for (StructuralClass c : AllClasses()) {
    if (name == ClassName(c)) return c;
  }
  throw Error(ErrorKind::kInput, "unknown class '" + name + "'");
}

std::vector<StructuralClass> AllClasses() {
  return {StructuralClass::kSeparable,    StructuralClass::kWeaklySeparable,
          StructuralClass::kRepresentationFocused,
          StructuralClass::kTopKCounting, StructuralClass::kOwa,
          StructuralClass::kDecomposable};
}

const char* VerdictName(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::kMember:
      return "member";
    case VerdictKind::kNonMember:
      return "non_member";
    case VerdictKind::kUnknown:
      return "unknown";
  }
  return "?";
}

std::vector<CommitteePosition> PositionsP(int m, int k, int t, int p) {
  std::vector<CommitteePosition> out;
  if (p <= 1 || p > m || t < 1 || t > k || k > m) return out;
  for (const CommitteePosition& pos : EnumeratePositions(m, k)) {
    if (pos[t - 1] != p) continue;
    const auto& v = pos.positions();
    if (std::find(v.begin(), v.end(), p - 1) != v.end()) continue;
    out.push_back(pos);
  }
  return out;
}

std::vector<CommitteePosition> PositionsPAny(int m, int k, int p) {
  std::vector<CommitteePosition> out;
  for (int t = 1; t <= k; ++t) {
    for (CommitteePosition& pos : PositionsP(m, k, t, p)) {
      out.push_back(std::move(pos));
    }
  }
  return out;
}

DifferenceProfile ExtractDifferences(const ScoringFunction& f) {
  const int m = f.m();
  const int k = f.k();
  DifferenceProfile out;
  out.m = m;
  out.k = k;
  out.h.assign(k, std::vector<std::optional<Score>>(std::max(m - 1, 0)));
  for (int t = 1; t <= k; ++t) {
    for (int q = t; q <= m - k + t - 1; ++q) {
      std::optional<Score> common;
      bool agree = true;
      for (const CommitteePosition& u : PositionsP(m, k, t, q + 1)) {
        std::vector<int> moved = u.positions();
        moved[t - 1] = q;
        Score d = f.ValueAtRank(PositionRank(m, moved)) - f.Evaluate(u);
        if (!common) {
          common = d;
        } else if (!Same(*common, d, false)) {
          agree = false;
        }
      }
      if (agree && common) {
        out.h[t - 1][q - 1] = common;
      } else {
        out.consistent = false;
        out.inconsistent.emplace_back(t, q);
      }
    }
  }
  return out;
}

Verdict ClassifyWeaklySeparable(const ScoringFunction& f) {
  const int m = f.m();
  PositionSystem system;
  system.num_variables = m;
  for (const CommitteePosition& p : EnumeratePositions(m, f.k())) {
    std::vector<int> vars;
    for (int i : p.positions()) vars.push_back(i - 1);
    system.rows.push_back(p);
    system.variables.push_back(std::move(vars));
  }
  SystemResult s = Solve(system, f);
  if (!s.consistent) {
    Verdict v = NonMember(s.detail, s.approx);
    v.combination = std::move(s.combination);
    return v;
  }
  for (int i = 1; i < m; ++i) {
    if (Less(s.x[i - 1], s.x[i], s.approx)) {
      Verdict v = NonMember("forced gamma increases from position " +
                                std::to_string(i) + " to " +
                                std::to_string(i + 1) + ": gamma=" +
                                Join(s.x),
                            s.approx);
      v.gamma = s.x;
      return v;
    }
  }
  std::string detail = "gamma=" + Join(s.x);
  if (s.rank < m) detail += " (one of many solutions)";
  if (s.approx) detail += ", " + s.detail;
  Verdict v = Member(detail, s.approx);
  v.gamma = std::move(s.x);
  return v;
}

Verdict ClassifySeparable(const Rule& rule, int m) {
  if (m < 2) return Unknown("needs m >= 2");
  std::optional<std::vector<Score>> reference;
  int reference_k = 0;
  int constant_k = 0;
  bool approx = false;
  for (int k = 1; k < m; ++k) {
    Verdict ws = ClassifyWeaklySeparable(rule.At(m, k));
    approx = approx || ws.approx;
    if (!ws.member()) {
      Verdict v = NonMember("not weakly separable at k=" + std::to_string(k) +
                                ": " + ws.detail,
                            ws.approx);
      v.combination = std::move(ws.combination);
      return v;
    }
    std::optional<std::vector<Score>> g = Normalize(ws.gamma, ws.approx);
    if (!g) {
      if (reference) {
        return NonMember("gamma is constant at k=" + std::to_string(k) +
                             " but not at k=" + std::to_string(reference_k),
                         approx);
      }
      constant_k = k;
      continue;
    }
    if (constant_k != 0) {
      return NonMember("gamma is constant at k=" + std::to_string(constant_k) +
                           " but not at k=" + std::to_string(k),
                       approx);
    }
    if (!reference) {
      reference = g;
      reference_k = k;
      continue;
    }
    for (int i = 0; i < m; ++i) {
      if (!Same((*g)[i], (*reference)[i], approx)) {
        return NonMember("normalized gamma differs: k=" +
                             std::to_string(reference_k) + " gives " +
                             Join(*reference) + ", k=" + std::to_string(k) +
                             " gives " + Join(*g),
                         approx);
      }
    }
  }
  if (!reference) {
    Verdict v = Member("constant at every k (degenerate)", approx);
    v.gamma.assign(m, Score(0));
    return v;
  }
  Verdict v = Member("normalized gamma=" + Join(*reference) +
                         " for k=1.." + std::to_string(m - 1),
                     approx);
  v.gamma = *reference;
  return v;
}

Verdict ClassifySeparable(const ScoringFunction& f) {
  Verdict ws = ClassifyWeaklySeparable(f);
  if (!ws.member()) {
    Verdict v = NonMember("not weakly separable: " + ws.detail, ws.approx);
    v.combination = std::move(ws.combination);
    return v;
  }
  return Unknown("a single table cannot show agreement across committee "
                 "sizes");
}

Verdict ClassifyRepresentationFocused(const ScoringFunction& f) {
  const int m = f.m();
  const int k = f.k();
  const bool approx = !f.is_exact();
  std::vector<std::optional<CommitteePosition>> first(m - k + 1);
  std::vector<Score> gamma(m - k + 1);
  for (const CommitteePosition& p : EnumeratePositions(m, k)) {
    const int i = p[0];
    const Score& value = f.Evaluate(p);
    if (!first[i - 1]) {
      first[i - 1] = p;
      gamma[i - 1] = value;
    } else if (!Same(gamma[i - 1], value, approx)) {
      return NonMember(FValue(*first[i - 1], gamma[i - 1]) +
                           " differs from " + FValue(p, value) +
                           " with the same top member position",
                       approx);
    }
  }
  Verdict v = Member("gamma(i1)=" + Join(gamma), approx);
  v.gamma = std::move(gamma);
  return v;
}

Verdict ClassifyTopKCounting(const ScoringFunction& f) {
  const int m = f.m();
  const int k = f.k();
  const bool approx = !f.is_exact();
  std::vector<std::optional<CommitteePosition>> first(k + 1);
  std::vector<std::optional<Score>> g(k + 1);
  for (const CommitteePosition& p : EnumeratePositions(m, k)) {
    int count = 0;
    for (int i : p.positions()) count += i <= k ? 1 : 0;
    const Score& value = f.Evaluate(p);
    if (!first[count]) {
      first[count] = p;
      g[count] = value;
    } else if (!Same(*g[count], value, approx)) {
      return NonMember(FValue(*first[count], *g[count]) + " differs from " +
                           FValue(p, value) + " though both place " +
                           std::to_string(count) + " members in the top " +
                           std::to_string(k),
                       approx);
    }
  }
  std::optional<int> last;
  for (int c = 0; c <= k; ++c) {
    if (!g[c]) continue;
    if (last && Less(*g[c], *g[*last], approx)) {
      return NonMember("counting function decreases from " +
                           std::to_string(*last) + " to " + std::to_string(c),
                       approx);
    }
    last = c;
  }
  Verdict v = Member("g=" + Join(g), approx);
  v.counting = std::move(g);
  return v;
}

Verdict ClassifyDecomposable(const ScoringFunction& f) {
  const int m = f.m();
  const int k = f.k();
  const int width = m - k + 1;
  // Variable ids for gamma^(t)(i), i in {t..m-k+t}; the last value of every
  // slot after the first is pinned to zero to fix the additive gauge.
  std::vector<std::vector<int>> id(k, std::vector<int>(width, -1));
  int next = 0;
  for (int t = 1; t <= k; ++t) {
    for (int j = 0; j < width; ++j) {
      if (t >= 2 && j == width - 1) continue;
      id[t - 1][j] = next++;
    }
  }
  PositionSystem system;
  system.num_variables = next;
  for (const CommitteePosition& p : EnumeratePositions(m, k)) {
    std::vector<int> vars;
    for (int t = 1; t <= k; ++t) {
      int var = id[t - 1][p[t - 1] - t];
      if (var >= 0) vars.push_back(var);
    }
    system.rows.push_back(p);
    system.variables.push_back(std::move(vars));
  }
  SystemResult s = Solve(system, f);
  if (!s.consistent) {
    Verdict v = NonMember(s.detail, s.approx);
    v.combination = std::move(s.combination);
    return v;
  }
  std::vector<std::vector<std::optional<Score>>> slots(
      k, std::vector<std::optional<Score>>(m));
  for (int t = 1; t <= k; ++t) {
    for (int j = 0; j < width; ++j) {
      int var = id[t - 1][j];
      slots[t - 1][t - 1 + j] = var >= 0 ? s.x[var] : Score(0);
    }
  }
  if (s.approx) {
    for (auto& slot : slots) {
      for (auto& value : slot) {
        if (value) *value = Score::Real(value->ToDouble());
      }
    }
  }
  for (int t = 1; t <= k; ++t) {
    for (int i = t; i < m - k + t; ++i) {
      if (Less(*slots[t - 1][i - 1], *slots[t - 1][i], s.approx)) {
        Verdict v = NonMember("forced gamma^(" + std::to_string(t) +
                                  ") increases from position " +
                                  std::to_string(i) + " to " +
                                  std::to_string(i + 1),
                              s.approx);
        v.slots = std::move(slots);
        return v;
      }
    }
  }
  std::string detail;
  for (int t = 1; t <= k; ++t) {
    detail += (t > 1 ? " " : "") + std::string("gamma^(") + std::to_string(t) +
              ")=" + Join(slots[t - 1]);
  }
  if (s.rank < s.num_variables) detail += " (one of many solutions)";
  if (s.approx) detail += ", " + s.detail;
  Verdict v = Member(detail, s.approx);
  v.slots = std::move(slots);
  return v;
}

Verdict ClassifyOwa(const ScoringFunction& f) {
  Verdict dec = ClassifyDecomposable(f);
  if (!dec.member()) {
    Verdict v = NonMember("not decomposable: " + dec.detail, dec.approx);
    v.combination = std::move(dec.combination);
    return v;
  }
  const bool approx = dec.approx;
  const int m = f.m();
  const int k = f.k();
  // D[t][q] = gamma^(t)(q) - gamma^(t)(q+1) on q in {t..m-k+t-1}.
  auto defined = [&](int t, int q) { return q >= t && q <= m - k + t - 1; };
  std::vector<std::vector<Score>> d(k + 1, std::vector<Score>(m));
  for (int t = 1; t <= k; ++t) {
    for (int q = t; q <= m - k + t - 1; ++q) {
      d[t][q] = *dec.slots[t - 1][q - 1] - *dec.slots[t - 1][q];
    }
  }
  auto entry = [&](int t, int q) {
    return "D[" + std::to_string(t) + "][" + std::to_string(q) + "]=" +
           d[t][q].ToString();
  };
  // Every fully defined 2x2 minor of a rank-1 matrix vanishes.
  for (int t1 = 1; t1 <= k; ++t1) {
    for (int t2 = t1 + 1; t2 <= k; ++t2) {
      for (int q1 = 1; q1 < m; ++q1) {
        for (int q2 = q1 + 1; q2 < m; ++q2) {
          if (!defined(t1, q1) || !defined(t1, q2) || !defined(t2, q1) ||
              !defined(t2, q2)) {
            continue;
          }
          Score lhs = d[t1][q1] * d[t2][q2];
          Score rhs = d[t1][q2] * d[t2][q1];
          if (Same(lhs, rhs, approx)) continue;
          Verdict v = NonMember(
              "difference minor rows {" + std::to_string(t1) + "," +
                  std::to_string(t2) + "} x columns {" + std::to_string(q1) +
                  "," + std::to_string(q2) + "}: " + entry(t1, q1) + " " +
                  entry(t1, q2) + " " + entry(t2, q1) + " " + entry(t2, q2) +
                  ", determinant " + (lhs - rhs).ToString(),
              approx);
          v.minor = DifferenceMinor{t1,         t2,         q1,
                                    q2,         d[t1][q1],  d[t1][q2],
                                    d[t2][q1],  d[t2][q2],  lhs - rhs};
          return v;
        }
      }
    }
  }
  // Rows and columns holding a positive entry need positive factors.
  std::vector<int> row_witness(k + 1, 0);
  std::vector<int> col_witness(m, 0);
  for (int t = 1; t <= k; ++t) {
    for (int q = t; q <= m - k + t - 1; ++q) {
      if (Positive(d[t][q], approx)) {
        if (!row_witness[t]) row_witness[t] = q;
        if (!col_witness[q]) col_witness[q] = t;
      }
    }
  }
  for (int t = 1; t <= k; ++t) {
    for (int q = t; q <= m - k + t - 1; ++q) {
      if (row_witness[t] && col_witness[q] && !Positive(d[t][q], approx)) {
        return NonMember(entry(t, q) + " although " +
                             entry(t, row_witness[t]) + " and " +
                             entry(col_witness[q], q) +
                             " force both factors positive",
                         approx);
      }
    }
  }
  // Propagate ratios through the graph of positive entries. Components are
  // independent: entries linking two components are undefined, since a
  // defined zero there was rejected above.
  std::vector<std::optional<Score>> lambda(k + 1);
  std::vector<std::optional<Score>> delta(m);
  for (int root = 1; root <= k; ++root) {
    if (!row_witness[root] || lambda[root]) continue;
    lambda[root] = Score(1);
    std::deque<std::pair<bool, int>> queue{{true, root}};
    while (!queue.empty()) {
      auto [is_row, index] = queue.front();
      queue.pop_front();
      if (is_row) {
        const int t = index;
        for (int q = t; q <= m - k + t - 1; ++q) {
          if (!Positive(d[t][q], approx)) continue;
          Score want = d[t][q] / *lambda[t];
          if (!delta[q]) {
            delta[q] = want;
            queue.emplace_back(false, q);
          } else if (!Same(*delta[q], want, approx)) {
            return NonMember("positive differences are not proportional "
                             "around row " + std::to_string(t) +
                                 ", column " + std::to_string(q),
                             approx);
          }
        }
      } else {
        const int q = index;
        for (int t = 1; t <= k; ++t) {
          if (!defined(t, q) || !Positive(d[t][q], approx)) continue;
          Score want = d[t][q] / *delta[q];
          if (!lambda[t]) {
            lambda[t] = want;
            queue.emplace_back(true, t);
          } else if (!Same(*lambda[t], want, approx)) {
            return NonMember("positive differences are not proportional "
                             "around row " + std::to_string(t) +
                                 ", column " + std::to_string(q),
                             approx);
          }
        }
      }
    }
  }
  Verdict v = Member("", approx);
  for (int t = 1; t <= k; ++t) v.lambda.push_back(lambda[t].value_or(Score(0)));
  v.gamma.assign(m, Score(0));
  for (int i = m - 1; i >= 1; --i) {
    v.gamma[i - 1] = v.gamma[i] + delta[i].value_or(Score(0));
  }
  v.detail = "lambda=" + Join(v.lambda) + " gamma=" + Join(v.gamma);
  return v;
}

const Verdict* ClassReport::Find(StructuralClass c) const {
  for (const auto& [cls, verdict] : verdicts) {
    if (cls == c) return &verdict;
  }
  return nullptr;
}

std::string ClassReport::Format() const {
  std::ostringstream out;
  out << "degenerate=" << (degenerate ? "true" : "false") << "\n";
  std::string summary;
  for (const auto& [cls, v] : verdicts) {
    out << "class=" << ClassName(cls) << " verdict=" << VerdictName(v.kind);
    if (v.approx) out << " approx=true";
    out << " detail=" << v.detail << "\n";
    summary += std::string(summary.empty() ? "" : " ") + ClassName(cls) +
               "=" + VerdictName(v.kind) + (v.approx ? "(approx)" : "");
  }
  if (degenerate) summary += " degenerate";
  out << summary << "\n";
  return out.str();
}

ClassReport Classify(const ScoringFunction& f, const Rule* rule,
                     const std::vector<StructuralClass>& classes) {
  ClassReport report;
  report.degenerate = f.IsConstant();
  for (StructuralClass c : classes) {
    Verdict v;
    switch (c) {
      case StructuralClass::kSeparable:
        if (rule != nullptr) {
          try {
            v = ClassifySeparable(*rule, f.m());
            break;
          } catch (const Error&) {
            // The rule is not defined at every committee size.
          }
        }
        v = ClassifySeparable(f);
        break;
      case StructuralClass::kWeaklySeparable:
        v = ClassifyWeaklySeparable(f);
        break;
      case StructuralClass::kRepresentationFocused:
        v = ClassifyRepresentationFocused(f);
        break;
      case StructuralClass::kTopKCounting:
        v = ClassifyTopKCounting(f);
        break;
      case StructuralClass::kOwa:
        v = ClassifyOwa(f);
        break;
      case StructuralClass::kDecomposable:
        v = ClassifyDecomposable(f);
        break;
    }
    if (report.degenerate && v.member()) v.detail += " (degenerate)";
    report.verdicts.emplace_back(c, std::move(v));
  }
  return report;
}

PrefixCheck CheckPrefixSufficient(
    const std::vector<std::vector<std::optional<Score>>>& slots) {
  PrefixCheck out;
  const int k = static_cast<int>(slots.size());
  if (k == 0) return out;
  const int m = static_cast<int>(slots[0].size());
  auto diff = [&](int i, int p) -> std::optional<Score> {
    const auto& g = slots[i - 1];
    if (p < 1 || p >= m || !g[p - 1] || !g[p]) return std::nullopt;
    return *g[p - 1] - *g[p];
  };
  auto name = [](int i, int p) {
    return "d" + std::to_string(i) + "(" + std::to_string(p) + ")";
  };
  for (int i = 1; i <= k; ++i) {
    for (int p = 1; p < m; ++p) {
      for (int q = p + 1; q < m; ++q) {
        auto a = diff(i, p);
        auto b = diff(i, q);
        if (a && b && *a < *b) {
          out.violations.push_back("(i) " + name(i, p) + "=" + a->ToString() +
                                   " < " + name(i, q) + "=" + b->ToString());
        }
      }
    }
  }
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      for (int p = j; p < m - (k - i); ++p) {
        auto a = diff(i, p);
        auto b = diff(j, p);
        if (a && b && *a < *b) {
          out.violations.push_back("(ii) " + name(i, p) + "=" +
                                   a->ToString() + " < " + name(j, p) + "=" +
                                   b->ToString());
        }
      }
    }
  }
  out.holds = out.violations.empty();
  return out;
}

PrefixCheck CheckPrefixSufficient(
    const std::vector<std::vector<Score>>& slots) {
  std::vector<std::vector<std::optional<Score>>> wrapped;
  for (const auto& g : slots) wrapped.emplace_back(g.begin(), g.end());
  return CheckPrefixSufficient(wrapped);
}

AffineWitness AffineEquivalent(const ScoringFunction& f,
                               const ScoringFunction& g) {
  if (f.m() != g.m() || f.k() != g.k()) {
    throw Error(ErrorKind::kInput, "affine comparison needs equal m and k");
  }
  AffineWitness out;
  const Score& f_top = f.values().front();
  const Score& f_bottom = f.values().back();
  const Score& g_top = g.values().front();
  const Score& g_bottom = g.values().back();
  if (f_top == f_bottom) {
    out.a = Score(1);
    out.b = g_top - f_top;
    out.equivalent = g_top == g_bottom && g.IsConstant();
    for (const Score& v : g.values()) {
      out.equivalent = out.equivalent && v == g_top;
    }
    return out;
  }
  out.a = (g_top - g_bottom) / (f_top - f_bottom);
  out.b = g_bottom - out.a * f_bottom;
  if (!(out.a > Score(0))) return out;
  for (uint64_t r = 0; r < f.size(); ++r) {
    if (out.a * f.ValueAtRank(r) + out.b != g.ValueAtRank(r)) return out;
  }
  out.equivalent = true;
  return out;
}

}  // namespace csr
