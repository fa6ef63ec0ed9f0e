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

#include "csr/score.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <string>

#include "csr/error.h"

namespace csr {

const char* ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInput:
      return "input error";
    case ErrorKind::kParse:
      return "parse error";
    case ErrorKind::kInvalidShift:
      return "invalid shift";
    case ErrorKind::kRange:
      return "range error";
    case ErrorKind::kUnsupportedRule:
      return "unsupported rule";
    case ErrorKind::kResource:
      return "resource error";
  }
  return "error";
}

namespace {

bool IsInteger(std::string_view s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string FormatReal(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
  return buf;
}

}  // namespace

Score Score::Fraction(int64_t numerator, int64_t denominator) {
  if (denominator == 0) throw Error(ErrorKind::kInput, "zero denominator");
  return Score(mpq_class(static_cast<long>(numerator),
                         static_cast<long>(denominator)));
}

Score Score::Real(double value) {
  Score s;
  s.exact_ = false;
  s.x_ = value;
  return s;
}

Score Score::Parse(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw Error(ErrorKind::kParse, "empty numeric value");
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!IsInteger(num) || !IsInteger(den) || den[0] == '-' ||
        den[0] == '+') {
      throw Error(ErrorKind::kParse, "malformed rational '" + s + "'");
    }
    mpq_class q(mpz_class(num[0] == '+' ? num.substr(1) : num),
                mpz_class(den));
    if (q.get_den() == 0) throw Error(ErrorKind::kParse, "zero denominator");
    return Score(q);
  }
  if (IsInteger(s)) {
    return Score(mpq_class(mpz_class(s[0] == '+' ? s.substr(1) : s)));
  }
  char* end = nullptr;
  double x = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || !std::isfinite(x)) {
    throw Error(ErrorKind::kParse, "non-numeric value '" + s + "'");
  }
  return Real(x);
}

std::string Score::ToString() const {
  if (exact_) return q_.get_str();
  return FormatReal(x_, 13);
}

std::string Score::ToStringFull() const {
  if (exact_) return q_.get_str();
  std::string s = FormatReal(x_, 17);
  // Keep reals recognizable as reals when re-parsed.
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

void Score::Demote() {
  if (exact_) {
    x_ = q_.get_d();
    exact_ = false;
  }
}

Score& Score::operator+=(const Score& other) {
  if (exact_ && other.exact_) {
    q_ += other.q_;
  } else {
    Demote();
    x_ += other.ToDouble();
  }
  return *this;
}

Score& Score::operator-=(const Score& other) {
  if (exact_ && other.exact_) {
    q_ -= other.q_;
  } else {
    Demote();
    x_ -= other.ToDouble();
  }
  return *this;
}

Score& Score::operator*=(const Score& other) {
  if (exact_ && other.exact_) {
    q_ *= other.q_;
  } else {
    Demote();
    x_ *= other.ToDouble();
  }
  return *this;
}

Score& Score::operator/=(const Score& other) {
  if (other.IsZero()) throw Error(ErrorKind::kRange, "division by zero");
  if (exact_ && other.exact_) {
    q_ /= other.q_;
  } else {
    Demote();
    x_ /= other.ToDouble();
  }
  return *this;
}

void Score::AddScaled(const Score& other, int64_t weight) {
  if (exact_ && other.exact_) {
    if (weight == 1) {
      q_ += other.q_;
    } else {
      q_ += other.q_ * static_cast<long>(weight);
    }
  } else {
    Demote();
    x_ += other.ToDouble() * static_cast<double>(weight);
  }
}

Score Score::operator-() const {
  Score s = *this;
  if (s.exact_) {
    s.q_ = -s.q_;
  } else {
    s.x_ = -s.x_;
  }
  return s;
}

bool Score::IsZero() const { return exact_ ? sgn(q_) == 0 : x_ == 0.0; }

bool Score::IsNegative() const { return exact_ ? sgn(q_) < 0 : x_ < 0.0; }

int Compare(const Score& a, const Score& b, double eps) {
  if (a.is_exact() && b.is_exact()) {
    int c = cmp(a.rational(), b.rational());
    return (c > 0) - (c < 0);
  }
  double x = a.ToDouble();
  double y = b.ToDouble();
  double scale = std::max({1.0, std::fabs(x), std::fabs(y)});
  if (std::fabs(x - y) <= eps * scale) return 0;
  return x < y ? -1 : 1;
}

std::ostream& operator<<(std::ostream& os, const Score& s) {
  return os << s.ToString();
}

}  // namespace csr
