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

#include "csr/scoring.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "csr/error.h"

namespace csr {

namespace {

// Scaled integer values above this magnitude fall back to rationals so that
// weighted sums stay far from int64 overflow.
constexpr int64_t kMaxScaled = int64_t{1} << 40;

using Formula = std::function<Score(const std::vector<int>&)>;

std::vector<Score> Tabulate(int m, int k, const Formula& formula) {
  std::vector<Score> values;
  for (const CommitteePosition& p : EnumeratePositions(m, k)) {
    values.push_back(formula(p.positions()));
  }
  return values;
}

// Rejects tables that break monotonicity or nonnegativity.
ScoringFunction Checked(ScoringFunction f) {
  std::vector<TableViolation> violations = ValidateTable(f, 3);
  if (!violations.empty()) {
    std::string message = f.name() + " is not a committee scoring function:";
    for (const TableViolation& v : violations) message += " " + v.ToString();
    throw Error(ErrorKind::kInput, message);
  }
  return f;
}

ScoringFunction::PartialFn OwaPartial(OwaForm owa) {
  return [owa = std::move(owa)](const std::vector<int>& p) {
    Score s;
    for (size_t j = 0; j < p.size(); ++j) {
      s += owa.weights[j] * owa.gamma[p[j] - 1];
    }
    return s;
  };
}

ScoringFunction FromOwa(int m, int k, Family family, std::string name,
                        OwaForm owa, bool separable) {
  std::vector<Score> values = Tabulate(m, k, [&](const std::vector<int>& p) {
    Score s;
    for (int j = 0; j < k; ++j) s += owa.weights[j] * owa.gamma[p[j] - 1];
    return s;
  });
  std::optional<std::vector<Score>> gamma;
  if (separable) gamma = owa.gamma;
  ScoringFunction::PartialFn partial = OwaPartial(owa);
  return ScoringFunction(m, k, family, std::move(name), std::move(values),
                         std::move(gamma), std::move(owa),
                         std::move(partial));
}

std::vector<Score> AlphaVector(int m, int t) {
  std::vector<Score> g;
  for (int i = 1; i <= m; ++i) g.push_back(Alpha(t, i));
  return g;
}

std::vector<Score> BetaVector(int m) {
  std::vector<Score> g;
  for (int i = 1; i <= m; ++i) g.push_back(Beta(m, i));
  return g;
}

std::vector<Score> Constant(int k, const Score& value) {
  return std::vector<Score>(k, value);
}

void RequireThreshold(int m, int t) {
  if (t < 1 || t > m) {
    throw Error(ErrorKind::kInput, "threshold " + std::to_string(t) +
                                       " outside [1, " + std::to_string(m) +
                                       "]");
  }
}

// base^(-q) for a positive integer base.
Score InversePower(int base, const Score& q) {
  if (q.is_exact() && q.rational().get_den() == 1 &&
      mpz_fits_ulong_p(q.rational().get_num_mpz_t())) {
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(base),
                  q.rational().get_num().get_ui());
    return Score(mpq_class(mpz_class(1), power));
  }
  return Score::Real(std::pow(static_cast<double>(base), -q.ToDouble()));
}

bool IsOne(const Score& s) { return s.is_exact() && s.rational() == 1; }

}  // namespace

Score Alpha(int t, int i) { return Score(i <= t ? 1 : 0); }

Score Beta(int m, int i) { return Score(m - i); }

ScoringFunction::ScoringFunction(int m, int k, Family family,
                                 std::string name, std::vector<Score> values,
                                 std::optional<std::vector<Score>> gamma,
                                 std::optional<OwaForm> owa,
                                 PartialFn partial)
    : m_(m),
      k_(k),
      family_(family),
      name_(std::move(name)),
      values_(std::move(values)),
      gamma_(std::move(gamma)),
      owa_(std::move(owa)),
      partial_(std::move(partial)) {
  if (k < 1 || k > m) {
    throw Error(ErrorKind::kInput, "scoring function needs 1 <= k <= m");
  }
  if (values_.size() != Binomial(m, k)) {
    throw Error(ErrorKind::kInput, "scoring table needs C(m,k) values");
  }
  doubles_.reserve(values_.size());
  bool exact = true;
  for (const Score& v : values_) {
    doubles_.push_back(v.ToDouble());
    exact = exact && v.is_exact();
  }
  if (!exact) {
    mode_ = NumericMode::kReal;
    return;
  }
  mpz_class lcm = 1;
  for (const Score& v : values_) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
            v.rational().get_den_mpz_t());
  }
  mode_ = NumericMode::kRational;
  if (lcm > kMaxScaled) return;
  std::vector<int64_t> scaled;
  scaled.reserve(values_.size());
  for (const Score& v : values_) {
    mpz_class s = v.rational().get_num() * (lcm / v.rational().get_den());
    if (abs(s) > kMaxScaled) return;
    scaled.push_back(s.get_si());
  }
  scaled_ = std::move(scaled);
  denominator_ = lcm.get_si();
  mode_ = NumericMode::kInteger;
}

const Score& ScoringFunction::Evaluate(
    const CommitteePosition& position) const {
  if (position.m() != m_ || position.k() != k_) {
    throw Error(ErrorKind::kInput, "committee position " +
                                       position.ToString() + " is not in [" +
                                       std::to_string(m_) + "]_" +
                                       std::to_string(k_));
  }
  return values_[position.Rank()];
}

bool ScoringFunction::GreedyEligible() const {
  if (!owa_) return false;
  for (size_t j = 0; j < owa_->weights.size(); ++j) {
    if (owa_->weights[j].IsNegative()) return false;
    if (j > 0 && owa_->weights[j - 1] < owa_->weights[j]) return false;
  }
  return true;
}

Score ScoringFunction::PartialScore(
    const std::vector<int>& sorted_positions) const {
  const int s = static_cast<int>(sorted_positions.size());
  if (s > k_) throw Error(ErrorKind::kInput, "partial committee too large");
  if (s == k_) return values_[PositionRank(m_, sorted_positions)];
  if (partial_) return partial_(sorted_positions);
  std::vector<int> full = sorted_positions;
  for (int p = m_; p >= 1 && static_cast<int>(full.size()) < k_; --p) {
    if (!std::binary_search(sorted_positions.begin(), sorted_positions.end(),
                            p)) {
      full.push_back(p);
    }
  }
  std::sort(full.begin(), full.end());
  return values_[PositionRank(m_, full)];
}

bool ScoringFunction::IsConstant() const {
  return values_.front() == values_.back();
}

std::string TableViolation::ToString() const {
  if (kind == kNegative) return "negative value at " + dominating.ToString();
  return dominating.ToString() + " dominates " + dominated.ToString() +
         " but scores lower";
}

std::vector<TableViolation> ValidateTable(const ScoringFunction& f,
                                          size_t limit) {
  const int m = f.m();
  const int k = f.k();
  std::vector<CommitteePosition> all = EnumeratePositions(m, k);
  std::vector<TableViolation> out;
  auto full = [&] { return limit != 0 && out.size() >= limit; };
  for (size_t r = 0; r < all.size() && !full(); ++r) {
    if (f.ValueAtRank(r).IsNegative()) {
      out.push_back({TableViolation::kNegative, all[r], all[r]});
    }
  }
  // Dominance is the transitive closure of single-slot steps i_t -> i_t + 1,
  // so checking those covering pairs decides validity cheaply.
  bool covering_ok = true;
  for (size_t r = 0; r < all.size() && covering_ok; ++r) {
    std::vector<int> p = all[r].positions();
    for (int t = 0; t < k && covering_ok; ++t) {
      int limit_t = t + 1 < k ? p[t + 1] - 1 : m;
      if (p[t] + 1 > limit_t) continue;
      std::vector<int> q = p;
      ++q[t];
      if (f.ValueAtRank(r) < f.ValueAtRank(PositionRank(m, q))) {
        covering_ok = false;
      }
    }
  }
  if (covering_ok) return out;
  for (size_t i = 0; i < all.size() && !full(); ++i) {
    for (size_t j = 0; j < all.size() && !full(); ++j) {
      if (i != j && Dominates(all[i], all[j]) &&
          f.ValueAtRank(i) < f.ValueAtRank(j)) {
        out.push_back({TableViolation::kDominance, all[i], all[j]});
      }
    }
  }
  return out;
}

ScoringFunction MakeTable(int m, int k, std::vector<Score> values,
                          std::string name) {
  return Checked(MakeTableUnchecked(m, k, std::move(values), std::move(name)));
}

ScoringFunction MakeTableUnchecked(int m, int k, std::vector<Score> values,
                                   std::string name) {
  return ScoringFunction(m, k, Family::kTable, std::move(name),
                         std::move(values));
}

ScoringFunction AffineTransform(const ScoringFunction& f, const Score& a,
                                const Score& b) {
  if (!(a > Score(0))) {
    throw Error(ErrorKind::kInput, "affine factor must be positive");
  }
  std::vector<Score> values;
  values.reserve(f.size());
  for (const Score& v : f.values()) {
    Score x = a * v + b;
    if (x.IsNegative() && x != Score(0)) {
      throw Error(ErrorKind::kRange, "affine transform yields a negative "
                                     "value " + x.ToString());
    }
    values.push_back(std::move(x));
  }
  std::optional<std::vector<Score>> gamma;
  if (f.separable_gamma()) {
    gamma.emplace();
    Score shift = b / Score(f.k());
    for (const Score& g : *f.separable_gamma()) gamma->push_back(a * g + shift);
  }
  return ScoringFunction(f.m(), f.k(), Family::kTable,
                         "affine(" + f.name() + ")", std::move(values),
                         std::move(gamma));
}

Score ScoreOf(const Election& election, const ScoringFunction& f,
              const Committee& committee) {
  if (election.m() != f.m() || committee.size() != f.k()) {
    throw Error(ErrorKind::kInput,
                "scoring function dimensions do not match the election");
  }
  Score total;
  for (const Vote& v : election.votes()) {
    total.AddScaled(f.Evaluate(v.PositionOf(committee)), v.weight());
  }
  return total;
}

namespace families {

ScoringFunction Sntv(int m, int k) {
  return FromOwa(m, k, Family::kSntv, "sntv",
                 {Constant(k, Score(1)), AlphaVector(m, 1)}, true);
}

ScoringFunction Bloc(int m, int k) {
  return FromOwa(m, k, Family::kBloc, "bloc",
                 {Constant(k, Score(1)), AlphaVector(m, k)}, true);
}

ScoringFunction KBorda(int m, int k) {
  return FromOwa(m, k, Family::kKBorda, "kborda",
                 {Constant(k, Score(1)), BetaVector(m)}, true);
}

ScoringFunction CcBorda(int m, int k) {
  std::vector<Score> w = Constant(k, Score(0));
  w[0] = Score(1);
  return FromOwa(m, k, Family::kCcBorda, "cc-borda", {w, BetaVector(m)},
                 k == 1);
}

ScoringFunction CcApproval(int m, int k) {
  std::vector<Score> w = Constant(k, Score(0));
  w[0] = Score(1);
  return FromOwa(m, k, Family::kCcApproval, "cc-approval",
                 {w, AlphaVector(m, k)}, k == 1);
}

ScoringFunction Pav(int m, int k, int t) {
  RequireThreshold(m, t);
  std::vector<Score> w;
  for (int j = 1; j <= k; ++j) w.push_back(Score::Fraction(1, j));
  return FromOwa(m, k, Family::kPav, "pav:" + std::to_string(t),
                 {w, AlphaVector(m, t)}, k == 1);
}

ScoringFunction Qhb(int m, int k, const Score& q) {
  if (q.IsNegative()) throw Error(ErrorKind::kInput, "q must be >= 0");
  std::vector<Score> w;
  for (int j = 1; j <= k; ++j) w.push_back(InversePower(j, q));
  return FromOwa(m, k, Family::kQhb, "qhb:" + q.ToString(),
                 {w, BetaVector(m)}, k == 1 || q.IsZero());
}

ScoringFunction LpBorda(int m, int k, const Score& p) {
  if (p < Score(1)) throw Error(ErrorKind::kInput, "p must be >= 1");
  std::string name = "lpborda:" + p.ToString();
  if (IsOne(p)) {
    std::vector<Score> values = KBorda(m, k).values();
    return ScoringFunction(m, k, Family::kLpBorda, name, std::move(values),
                           BetaVector(m),
                           OwaForm{Constant(k, Score(1)), BetaVector(m)});
  }
  const double pp = p.ToDouble();
  Formula formula = [m, pp](const std::vector<int>& pos) {
    double sum = 0.0;
    for (int i : pos) sum += std::pow(static_cast<double>(m - i), pp);
    return Score::Real(std::pow(sum, 1.0 / pp));
  };
  std::vector<Score> values = Tabulate(m, k, formula);
  return ScoringFunction(m, k, Family::kLpBorda, name, std::move(values), {},
                         {}, formula);
}

ScoringFunction Perfectionist(int m, int k) {
  std::vector<Score> w = Constant(k, Score(0));
  w[k - 1] = Score(1);
  return FromOwa(m, k, Family::kPerfectionist, "perfectionist",
                 {w, AlphaVector(m, k)}, k == 1);
}

ScoringFunction SntvPerf(int m, int k) {
  std::vector<Score> values = Tabulate(m, k, [k](const std::vector<int>& p) {
    return Alpha(1, p[0]) + Alpha(k, p[k - 1]);
  });
  return ScoringFunction(m, k, Family::kSntvPerf, "sntv+perf",
                         std::move(values));
}

ScoringFunction MultiThreshold(int m, int k, std::vector<Score> lambdas,
                               std::vector<int> thresholds) {
  if (static_cast<int>(lambdas.size()) != k ||
      static_cast<int>(thresholds.size()) != k) {
    throw Error(ErrorKind::kInput, "multithreshold needs k weights and k "
                                   "thresholds");
  }
  std::string name = "multithreshold:";
  for (int j = 0; j < k; ++j) {
    RequireThreshold(m, thresholds[j]);
    if (lambdas[j].IsNegative()) {
      throw Error(ErrorKind::kInput, "multithreshold weights must be >= 0");
    }
    name += (j ? "," : "") + lambdas[j].ToString();
  }
  name += ";";
  for (int j = 0; j < k; ++j) {
    name += (j ? "," : "") + std::to_string(thresholds[j]);
  }
  if (std::all_of(thresholds.begin(), thresholds.end(),
                  [&](int t) { return t == thresholds[0]; })) {
    bool uniform = std::all_of(lambdas.begin(), lambdas.end(),
                               [&](const Score& l) { return l == lambdas[0]; });
    OwaForm owa{lambdas, AlphaVector(m, thresholds[0])};
    if (uniform) {
      for (Score& g : owa.gamma) g *= lambdas[0];
      owa.weights = Constant(k, Score(1));
    }
    return FromOwa(m, k, Family::kMultiThreshold, name, std::move(owa),
                   uniform);
  }
  std::vector<Score> values = Tabulate(m, k, [&](const std::vector<int>& p) {
    Score s;
    for (int j = 0; j < k; ++j) s += lambdas[j] * Alpha(thresholds[j], p[j]);
    return s;
  });
  return ScoringFunction(m, k, Family::kMultiThreshold, name,
                         std::move(values));
}

ScoringFunction MaxThreshold(int m, int k, std::vector<int> thresholds) {
  if (static_cast<int>(thresholds.size()) != k) {
    throw Error(ErrorKind::kInput, "maxthreshold needs k thresholds");
  }
  std::string name = "maxthreshold:";
  for (int j = 0; j < k; ++j) {
    RequireThreshold(m, thresholds[j]);
    name += (j ? "," : "") + std::to_string(thresholds[j]);
  }
  Formula formula = [thresholds](const std::vector<int>& p) {
    for (size_t j = 0; j < p.size(); ++j) {
      if (p[j] <= thresholds[j]) return Score(1);
    }
    return Score(0);
  };
  std::vector<Score> values = Tabulate(m, k, formula);
  return ScoringFunction(m, k, Family::kMaxThreshold, name, std::move(values),
                         {}, {}, formula);
}

ScoringFunction Owa(int m, int k, std::vector<Score> weights,
                    std::vector<Score> gamma) {
  if (static_cast<int>(weights.size()) != k ||
      static_cast<int>(gamma.size()) != m) {
    throw Error(ErrorKind::kInput, "owa needs k weights and m gamma values");
  }
  for (const Score& w : weights) {
    if (w.IsNegative()) throw Error(ErrorKind::kInput, "owa weights >= 0");
  }
  for (int i = 1; i < m; ++i) {
    if (gamma[i - 1] < gamma[i]) {
      throw Error(ErrorKind::kInput, "owa gamma must be nonincreasing");
    }
  }
  bool uniform = std::all_of(weights.begin(), weights.end(),
                             [&](const Score& w) { return w == weights[0]; });
  std::optional<std::vector<Score>> separable;
  OwaForm owa{std::move(weights), std::move(gamma)};
  ScoringFunction f = FromOwa(m, k, Family::kOwa, "owa", owa, false);
  if (uniform) {
    separable.emplace();
    for (const Score& g : owa.gamma) separable->push_back(owa.weights[0] * g);
  }
  return ScoringFunction(m, k, Family::kOwa, "owa", f.values(),
                         std::move(separable), owa, OwaPartial(owa));
}

ScoringFunction Decomposable(int m, int k,
                             std::vector<std::vector<Score>> gammas) {
  if (static_cast<int>(gammas.size()) != k) {
    throw Error(ErrorKind::kInput, "decomposable needs k slot functions");
  }
  for (const auto& g : gammas) {
    if (static_cast<int>(g.size()) != m) {
      throw Error(ErrorKind::kInput, "each slot function needs m values");
    }
    for (int i = 1; i < m; ++i) {
      if (g[i - 1] < g[i]) {
        throw Error(ErrorKind::kInput, "slot functions must be "
                                       "nonincreasing");
      }
    }
  }
  std::vector<Score> values = Tabulate(m, k, [&](const std::vector<int>& p) {
    Score s;
    for (int j = 0; j < k; ++j) s += gammas[j][p[j] - 1];
    return s;
  });
  return Checked(ScoringFunction(m, k, Family::kDecomposable, "decomposable",
                                 std::move(values)));
}

ScoringFunction TopKCounting(int m, int k, std::vector<Score> g) {
  if (static_cast<int>(g.size()) != k + 1) {
    throw Error(ErrorKind::kInput, "counting function needs k + 1 values");
  }
  for (int i = 1; i <= k; ++i) {
    if (g[i] < g[i - 1]) {
      throw Error(ErrorKind::kInput, "counting function must be "
                                     "nondecreasing");
    }
  }
  std::vector<Score> values = Tabulate(m, k, [&](const std::vector<int>& p) {
    int count = 0;
    for (int i : p) count += i <= k ? 1 : 0;
    return g[count];
  });
  return Checked(ScoringFunction(m, k, Family::kTopKCounting, "top-k-counting",
                                 std::move(values)));
}

ScoringFunction Trivial(int m, int k) {
  return FromOwa(m, k, Family::kTrivial, "trivial",
                 {Constant(k, Score(0)), Constant(m, Score(0))}, true);
}

}  // namespace families

}  // namespace csr
