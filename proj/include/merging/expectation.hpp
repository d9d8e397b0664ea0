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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "merging/error.hpp"
#include "merging/numeric.hpp"

namespace merging {

using LaneSum = BigInt;

/// Expected right-lane length over all 2^len arrival sequences. E[0] = 0.
inline ExactRational expected_length(std::int64_t len) {
  if (len < 0) throw ValidationError("expected_length: length must be nonnegative");
  if (len == 0) return ExactRational(0);
  if (len % 2 == 1) {
    BigInt bracket = pow2(len - 1) + binomial(len - 1, (len - 1) / 2);
    return ExactRational(len * bracket, pow2(len));
  }
  BigInt bracket = pow2(len) + binomial(len, len / 2);
  return ExactRational(len * bracket, pow2(len + 1));
}

/// Sum of right-lane lengths over all sequences of length `len` (OEIS A230137).
inline LaneSum right_lane_sum(std::int64_t len) {
  ExactRational total = expected_length(len) * ExactRational(pow2(len));
  if (total.denominator() != 1) throw DomainError("right_lane_sum: non-integral result");
  return total.numerator();
}

enum class ExpectationCase {
  kOddLong,   // len odd, len >= 2k+1
  kEvenLong,  // len even, len >= 2k
  kShort,     // len < 2k
};

inline ExpectationCase expectation_case(std::int64_t len, std::int64_t k) {
  if (len % 2 == 1 && len >= 2 * k + 1) return ExpectationCase::kOddLong;
  if (len % 2 == 0 && len >= 2 * k) return ExpectationCase::kEvenLong;
  return ExpectationCase::kShort;
}

namespace detail {

inline void check_len_k(std::int64_t len, std::int64_t k, const char* op) {
  if (len < 0 || k < 0 || k > len) {
    throw DomainError(std::string(op) + ": requires 0 <= k <= length, got length=" + std::to_string(len) +
                      ", k=" + std::to_string(k));
  }
}

// C(len,k) * E[len,k], one branch per case. Empty sums contribute 0 and
// binomials out of range vanish, so upper limits can be taken generously.
inline BigInt scaled_expectation(std::int64_t len, std::int64_t k, ExpectationCase which) {
  const BigInt total = binomial(len, k);
  BigInt sum = 0;
  switch (which) {
    case ExpectationCase::kOddLong: {
      for (std::int64_t i = 0; k - 2 * i - 2 >= 0; ++i) sum += binomial(len, k - 2 * i - 2);
      return (len + 1) / 2 * total + sum;
    }
    case ExpectationCase::kEvenLong: {
      for (std::int64_t i = 0; k - 2 * i - 1 >= 0; ++i) sum += binomial(len, k - 2 * i - 1);
      return len / 2 * total + sum;
    }
    case ExpectationCase::kShort: {
      for (std::int64_t i = 0; k + 2 * i + 1 <= len; ++i) sum += binomial(len, k + 2 * i + 1);
      return k * total + sum;
    }
  }
  return 0;
}

}  // namespace detail

/// Expected right-lane length over sequences of length `len` with exactly k zeros.
inline ExactRational expected_length_k(std::int64_t len, std::int64_t k) {
  detail::check_len_k(len, k, "expected_length_k");
  if (len == 0) return ExactRational(0);
  const BigInt scaled = detail::scaled_expectation(len, k, expectation_case(len, k));
  return ExactRational(scaled, binomial(len, k));
}

/// The short case rewritten with k' = len - k; agrees with expected_length_k for len < 2k.
inline ExactRational expected_length_k_complement(std::int64_t len, std::int64_t k) {
  detail::check_len_k(len, k, "expected_length_k_complement");
  if (!(len < 2 * k)) throw DomainError("expected_length_k_complement: requires length < 2k");
  const std::int64_t kc = len - k;
  BigInt sum = 0;
  for (std::int64_t i = 0; kc - 2 * i - 1 >= 0; ++i) sum += binomial(len, kc - 2 * i - 1);
  const BigInt total = binomial(len, k);
  return ExactRational(k * total + sum, total);
}

/// Sum of right-lane lengths over B_{len,k}.
inline LaneSum right_lane_sum_k(std::int64_t len, std::int64_t k) {
  detail::check_len_k(len, k, "right_lane_sum_k");
  if (len == 0) return 0;
  return detail::scaled_expectation(len, k, expectation_case(len, k));
}

/// Either every sequence (E[len]) or a fixed red-car ratio k/len = b/a.
struct RatioRule {
  bool all = true;
  std::int64_t a = 1;
  std::int64_t b = 0;

  static RatioRule all_sequences() { return RatioRule{}; }
  static RatioRule fixed(std::int64_t a, std::int64_t b) { return RatioRule{false, a, b}; }
};

struct RatioPoint {
  std::int64_t len = 0;
  std::int64_t k = -1;  // -1 for the all-sequences rule
  ExactRational ratio;  // E / len
};

/// Exact E/len for len = a, 2a, ... <= len_max (step 1 for the all-sequences rule).
inline std::vector<RatioPoint> ratio_trace(std::int64_t len_max, const RatioRule& rule) {
  if (len_max < 1) throw DomainError("ratio_trace: len_max must be >= 1");
  std::vector<RatioPoint> out;
  if (rule.all) {
    for (std::int64_t len = 1; len <= len_max; ++len) {
      out.push_back({len, -1, expected_length(len) / ExactRational(len)});
    }
    return out;
  }
  if (rule.a < 1 || rule.b < 1) throw DomainError("ratio_trace: ratio b/a needs positive integers a, b");
  if (rule.b > rule.a) throw DomainError("ratio_trace: ratio b/a must not exceed 1 (b > a)");
  for (std::int64_t r = 1; rule.a * r <= len_max; ++r) {
    const std::int64_t len = rule.a * r;
    const std::int64_t k = rule.b * r;
    out.push_back({len, k, expected_length_k(len, k) / ExactRational(len)});
  }
  return out;
}

}  // namespace merging
