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

#include <gtest/gtest.h>

#include <map>
#include <set>
#include <string>

#include "merging/classes.hpp"
#include "support.hpp"

namespace {

using merging::ArrivalSequence;

TEST(ColorBlindClass, LengthSixListing) {
  const auto parts = merging::partition(6);
  ASSERT_EQ(parts.size(), testsupport::kSixClasses.size());
  std::map<std::size_t, int> sizes;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& want = testsupport::kSixClasses[i];
    EXPECT_EQ(parts[i].representative.str(), want.representative);
    EXPECT_EQ(parts[i].right_lane_vector, want.right_lane);
    EXPECT_EQ(parts[i].size(), want.size);
    sizes[parts[i].size()] += 1;
  }
  EXPECT_EQ(sizes, (std::map<std::size_t, int>{{2, 12}, {4, 6}, {8, 2}}));
}

TEST(ColorBlindClass, ClassOfFreesTouchBits) {
  const auto cls = merging::class_of(ArrivalSequence::parse("111111"));
  EXPECT_EQ(cls.touch_vector, (std::vector<std::size_t>{1, 3, 5}));
  EXPECT_EQ(cls.size(), 8u);
  EXPECT_EQ(cls.representative.str(), "010101");
  EXPECT_EQ(merging::class_size(ArrivalSequence::parse("000000")), 2u);
}

TEST(ColorBlindClass, EmptySequenceIsItsOwnClass) {
  const auto parts = merging::partition(0);
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts[0].size(), 1u);
  EXPECT_EQ(merging::class_size(ArrivalSequence{}), 1u);
}

TEST(ColorBlindClass, CapIsEnforced) {
  EXPECT_THROW(merging::partition(21), merging::ResourceError);
  EXPECT_THROW(merging::partition(8, 6), merging::ResourceError);
  EXPECT_THROW(merging::partition(-1), merging::ValidationError);
}

TEST(ColorBlindClassProperty, PartitionUpToLength14) {
  for (int len = 1; len <= 14; ++len) {
    // Reference grouping by replayed right lane.
    std::map<std::vector<int>, std::set<std::string>> groups;
    for (const auto& s : testsupport::all_strings(len)) groups[testsupport::replay(s).right].insert(s);

    const auto parts = merging::partition(len);
    ASSERT_EQ(parts.size(), groups.size()) << len;
    std::size_t covered = 0;
    for (const auto& cls : parts) {
      const std::vector<int> key(cls.right_lane_vector.begin(), cls.right_lane_vector.end());
      const auto& want = groups.at(key);
      ASSERT_EQ(cls.size(), want.size()) << len;
      ASSERT_EQ(cls.size() % 2, 0u) << len;
      for (const auto& m : cls.members) {
        ASSERT_TRUE(want.count(m.str())) << m.str();
        ASSERT_EQ(merging::class_size(m), cls.size()) << m.str();
      }
      const auto built = merging::class_of(cls.members.back());
      ASSERT_EQ(built.members, cls.members) << len;
      covered += cls.size();
    }
    ASSERT_EQ(covered, std::size_t{1} << len);
  }
}

}  // namespace
