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
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "merging/arrival.hpp"
#include "merging/error.hpp"

namespace merging {

/// Sequences sharing a right-lane vector. Members are sorted; the
/// representative is the smallest one.
struct ColorBlindClass {
  ArrivalSequence representative;
  std::vector<std::size_t> right_lane_vector;
  std::vector<std::size_t> touch_vector;
  std::vector<ArrivalSequence> members;

  std::size_t size() const { return members.size(); }
};

inline constexpr std::int64_t kDefaultPartitionCap = 20;

/// Frees exactly the bits at the touch positions of b.
inline ColorBlindClass class_of(const ArrivalSequence& b) {
  const MergeResult r = simulate(b);
  ColorBlindClass cls;
  cls.right_lane_vector = r.right_lane;
  cls.touch_vector = r.touch_positions;
  const std::size_t t = r.touch_positions.size();
  if (t >= 63) throw ResourceError("class_of: 2^" + std::to_string(t) + " members is too many to list");
  std::vector<std::uint8_t> base(b.bits().begin(), b.bits().end());
  cls.members.reserve(std::size_t{1} << t);
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << t); ++choice) {
    std::vector<std::uint8_t> bits = base;
    // Highest touch position takes the lowest choice bit so members come out sorted.
    for (std::size_t q = 0; q < t; ++q) {
      bits[r.touch_positions[t - 1 - q] - 1] = static_cast<std::uint8_t>((choice >> q) & 1U);
    }
    cls.members.emplace_back(std::move(bits));
  }
  cls.representative = cls.members.front();
  return cls;
}

/// 2^t(b).
inline std::uint64_t class_size(const ArrivalSequence& b) {
  const std::size_t t = touch_positions(b).size();
  if (t >= 64) throw ResourceError("class_size: overflow");
  return std::uint64_t{1} << t;
}

/// All color-blind classes of B_len, ordered by representative.
inline std::vector<ColorBlindClass> partition(std::int64_t len, std::int64_t cap = kDefaultPartitionCap) {
  if (len < 0) throw ValidationError("partition: length must be nonnegative");
  if (len > cap || len > 62) {
    throw ResourceError("partition: length " + std::to_string(len) + " exceeds enumeration cap " +
                        std::to_string(cap));
  }
  std::map<std::vector<std::size_t>, std::vector<ArrivalSequence>> groups;
  const auto n = static_cast<std::size_t>(len);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    ArrivalSequence b = ArrivalSequence::from_mask(mask, n);
    groups[simulate(b).right_lane].push_back(std::move(b));
  }
  std::vector<ColorBlindClass> out;
  out.reserve(groups.size());
  for (auto& [right_lane, members] : groups) {
    std::sort(members.begin(), members.end());
    ColorBlindClass cls;
    cls.representative = members.front();
    cls.right_lane_vector = right_lane;
    cls.touch_vector = touch_positions(cls.representative);
    cls.members = std::move(members);
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(),
            [](const ColorBlindClass& a, const ColorBlindClass& b) { return a.representative < b.representative; });
  return out;
}

}  // namespace merging
