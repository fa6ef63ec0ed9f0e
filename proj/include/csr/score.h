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

#ifndef CSR_SCORE_H_
#define CSR_SCORE_H_

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace csr {

// A score value. Exact scores are arbitrary-precision rationals and compare
// exactly. Real scores (produced by irrational-valued rules) are doubles and
// compare with a relative tolerance. Any operation involving a real operand
// yields a real result.
class Score {
 public:
  static constexpr double kEpsilon = 1e-9;

  Score() = default;
  Score(int64_t value) : q_(static_cast<long>(value)) {}  // NOLINT: implicit
  explicit Score(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  static Score Fraction(int64_t numerator, int64_t denominator);
  static Score Real(double value);

  // Accepts "7", "-3", "5/2" (exact) and decimals such as "0.25" or "1e-3"
  // (real). Throws Error(kParse) otherwise.
  static Score Parse(std::string_view text);

  bool is_exact() const { return exact_; }
  // Requires is_exact().
  const mpq_class& rational() const { return q_; }
  double ToDouble() const { return exact_ ? q_.get_d() : x_; }

  // Exact values print as "p/q" (or "p" when integral); reals print with
  // 13 significant digits.
  std::string ToString() const;
  // Like ToString() but reals keep full round-trip precision.
  std::string ToStringFull() const;

  Score& operator+=(const Score& other);
  Score& operator-=(const Score& other);
  Score& operator*=(const Score& other);
  Score& operator/=(const Score& other);

  // Adds weight * other, avoiding temporaries on the exact path.
  void AddScaled(const Score& other, int64_t weight);

  friend Score operator+(Score a, const Score& b) { return a += b; }
  friend Score operator-(Score a, const Score& b) { return a -= b; }
  friend Score operator*(Score a, const Score& b) { return a *= b; }
  friend Score operator/(Score a, const Score& b) { return a /= b; }
  Score operator-() const;

  bool IsZero() const;
  bool IsNegative() const;

 private:
  void Demote();

  bool exact_ = true;
  mpq_class q_;
  double x_ = 0.0;
};

// Three-way comparison. Exact pairs compare exactly; otherwise values within
// eps * max(1, |a|, |b|) compare equal.
int Compare(const Score& a, const Score& b, double eps = Score::kEpsilon);

inline bool operator==(const Score& a, const Score& b) {
  return Compare(a, b) == 0;
}
inline bool operator!=(const Score& a, const Score& b) { return !(a == b); }
inline bool operator<(const Score& a, const Score& b) {
  return Compare(a, b) < 0;
}
inline bool operator>(const Score& a, const Score& b) { return b < a; }
inline bool operator<=(const Score& a, const Score& b) { return !(b < a); }
inline bool operator>=(const Score& a, const Score& b) { return !(a < b); }

std::ostream& operator<<(std::ostream& os, const Score& s);

}  // namespace csr

#endif  // CSR_SCORE_H_
