// Copyright 2026 The merging-paths Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "merging/error.hpp"

namespace merging {

using BigInt = boost::multiprecision::cpp_int;

/// Binomial coefficient with the total convention C(a, b) = 0 for b < 0 or b > a.
inline BigInt binomial(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;  // exact: result is C(a-b+i, i) after this step
  }
  return result;
}

inline BigInt pow2(std::int64_t e) {
  if (e < 0) throw DomainError("pow2: negative exponent");
  BigInt r = 1;
  r <<= static_cast<unsigned>(e);
  return r;
}

/// Exact reduced fraction with a positive denominator.
class ExactRational {
 public:
  using value_type = boost::multiprecision::cpp_rational;

  ExactRational() = default;
  ExactRational(std::int64_t v) : value_(v) {}  // NOLINT(implicit)
  ExactRational(const BigInt& v) : value_(v) {}  // NOLINT(implicit)
  ExactRational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("ExactRational: zero denominator");
    value_ = value_type(num, den);
  }

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }
  const value_type& value() const { return value_; }

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const {
    BigInt den = denominator();
    if (den == 1) return numerator().str();
    return numerator().str() + "/" + den.str();
  }

  /// Decimal rendering rounded half away from zero to `digits` places.
  std::string to_decimal(int digits) const {
    if (digits < 0) throw ValidationError("to_decimal: digits must be >= 0");
    BigInt num = numerator();
    BigInt den = denominator();
    bool negative = num < 0;
    if (negative) num = -num;
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    BigInt scaled = (num * scale * 2 + den) / (den * 2);
    BigInt whole = scaled / scale;
    BigInt frac = scaled % scale;
    std::string out = (negative && scaled != 0 ? "-" : "") + whole.str();
    if (digits > 0) {
      std::string f = frac.str();
      out += "." + std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
    }
    return out;
  }

  double to_double() const { return value_.convert_to<double>(); }

  friend ExactRational operator+(const ExactRational& a, const ExactRational& b) {
    return from(a.value_ + b.value_);
  }
  friend ExactRational operator-(const ExactRational& a, const ExactRational& b) {
    return from(a.value_ - b.value_);
  }
  friend ExactRational operator*(const ExactRational& a, const ExactRational& b) {
    return from(a.value_ * b.value_);
  }
  friend ExactRational operator/(const ExactRational& a, const ExactRational& b) {
    if (b.value_ == 0) throw DomainError("ExactRational: division by zero");
    return from(a.value_ / b.value_);
  }
  friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.value_ == b.value_; }
  friend bool operator<(const ExactRational& a, const ExactRational& b) { return a.value_ < b.value_; }
  friend bool operator<=(const ExactRational& a, const ExactRational& b) { return a.value_ <= b.value_; }
  friend bool operator>(const ExactRational& a, const ExactRational& b) { return a.value_ > b.value_; }

  /// |a - b|
  friend ExactRational abs_diff(const ExactRational& a, const ExactRational& b) {
    value_type d = a.value_ - b.value_;
    return from(d < 0 ? value_type(-d) : d);
  }

 private:
  static ExactRational from(value_type v) {
    ExactRational r;
    r.value_ = std::move(v);
    return r;
  }

  value_type value_{0};
};

}  // namespace merging
