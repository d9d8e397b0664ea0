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

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "merging/error.hpp"

namespace merging {

/// Car types: 0 is a red car (always takes the right lane), 1 is a green car
/// (takes the shorter lane, ties go right). Positions are 1-based.
class ArrivalSequence {
 public:
  ArrivalSequence() = default;

  explicit ArrivalSequence(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i] > 1) {
        throw ValidationError("arrival sequence: element " + std::to_string(i + 1) + " is not 0 or 1");
      }
    }
  }

  /// Parses an ASCII string of '0'/'1'. The empty string is the empty sequence.
  static ArrivalSequence parse(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      char ch = text[i];
      if (ch != '0' && ch != '1') {
        throw ValidationError("malformed bit string: character '" + std::string(1, ch) + "' at position " +
                              std::to_string(i + 1) + " (expected '0' or '1')");
      }
      bits.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    return ArrivalSequence(std::move(bits));
  }

  /// Bit i of `mask` is car i+1.
  static ArrivalSequence from_mask(std::uint64_t mask, std::size_t length) {
    if (length > 64) throw ValidationError("from_mask: length exceeds 64");
    std::vector<std::uint8_t> bits(length);
    for (std::size_t i = 0; i < length; ++i) bits[i] = static_cast<std::uint8_t>((mask >> i) & 1U);
    return ArrivalSequence(std::move(bits));
  }

  std::uint64_t to_mask() const {
    if (bits_.size() > 64) throw ValidationError("to_mask: length exceeds 64");
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < bits_.size(); ++i) mask |= static_cast<std::uint64_t>(bits_[i]) << i;
    return mask;
  }

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }

  /// 1-based access.
  std::uint8_t bit(std::size_t position) const {
    if (position == 0 || position > bits_.size()) {
      throw DomainError("arrival sequence: position " + std::to_string(position) + " out of range 1.." +
                        std::to_string(bits_.size()));
    }
    return bits_[position - 1];
  }

  std::span<const std::uint8_t> bits() const { return bits_; }

  std::size_t zeros() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 0)); }
  std::size_t ones() const { return bits_.size() - zeros(); }

  std::string str() const {
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
    return s;
  }

  friend bool operator==(const ArrivalSequence&, const ArrivalSequence&) = default;
  friend auto operator<=>(const ArrivalSequence& a, const ArrivalSequence& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.bits_ <=> b.bits_;
  }

 private:
  std::vector<std::uint8_t> bits_;
};

/// p_1 = 0; p_{i+1} differs from p_i exactly when car i bounced.
struct ParityVector {
  std::vector<std::uint8_t> bits;

  std::string str() const {
    std::string s;
    for (auto b : bits) s.push_back(static_cast<char>('0' + b));
    return s;
  }
  friend bool operator==(const ParityVector&, const ParityVector&) = default;
};

/// Lattice point: x = left-lane length, y = right-lane length.
struct Endpoint {
  std::size_t n = 0;
  std::size_t m = 0;
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

struct MergeResult {
  std::vector<std::size_t> right_lane;
  std::vector<std::size_t> left_lane;
  std::vector<std::size_t> bounce_positions;
  std::vector<std::size_t> touch_positions;
  ParityVector parity;
  Endpoint endpoint;

  std::size_t r() const { return right_lane.size(); }
  friend bool operator==(const MergeResult&, const MergeResult&) = default;
};

enum class Step : std::uint8_t { kRight, kUp, kUpBounce };

struct MergingPath {
  std::vector<Step> steps;

  Endpoint endpoint() const {
    Endpoint e;
    for (Step s : steps) (s == Step::kRight ? e.n : e.m) += 1;
    return e;
  }

  /// Compact form: R, U, and U* for a bounce.
  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      if (i) s.push_back(',');
      switch (steps[i]) {
        case Step::kRight: s += "R"; break;
        case Step::kUp: s += "U"; break;
        case Step::kUpBounce: s += "U*"; break;
      }
    }
    return s;
  }
  friend bool operator==(const MergingPath&, const MergingPath&) = default;
};

/// Replays the lane rule car by car.
inline MergeResult simulate(const ArrivalSequence& b) {
  MergeResult out;
  const std::size_t len = b.size();
  out.parity.bits.assign(len, 0);
  std::size_t right = 0;
  std::size_t left = 0;
  std::uint8_t parity = 0;
  for (std::size_t i = 1; i <= len; ++i) {
    out.parity.bits[i - 1] = parity;
    const bool tie = right == left;
    if (tie) out.touch_positions.push_back(i);
    const std::uint8_t car = b.bit(i);
    if (car == 0 || left >= right) {
      // A green car only reaches this branch on a tie.
      if (car == 1) {
        out.bounce_positions.push_back(i);
        parity ^= 1U;
      }
      out.right_lane.push_back(i);
      ++right;
    } else {
      out.left_lane.push_back(i);
      ++left;
    }
  }
  out.endpoint = Endpoint{left, right};
  return out;
}

inline ParityVector parity_vector(const ArrivalSequence& b) { return simulate(b).parity; }

inline std::vector<std::size_t> touch_positions(const ArrivalSequence& b) { return simulate(b).touch_positions; }

inline MergingPath merging_path(const ArrivalSequence& b) {
  const MergeResult result = simulate(b);
  MergingPath path;
  path.steps.assign(b.size(), Step::kRight);
  for (std::size_t pos : result.right_lane) path.steps[pos - 1] = Step::kUp;
  for (std::size_t pos : result.bounce_positions) path.steps[pos - 1] = Step::kUpBounce;
  return path;
}

}  // namespace merging
