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

#include <set>
#include <string>

#include "merging/trails.hpp"
#include "support.hpp"

namespace {

using merging::ArrivalSequence;
using merging::Edge;
using merging::rho;

std::set<Edge> edges(std::initializer_list<std::pair<int, int>> list) {
  std::set<Edge> out;
  for (auto [a, b] : list) out.insert(Edge::between(a, b));
  return out;
}

std::string one_zero(int len, int p) {
  std::string s(static_cast<std::size_t>(len), '1');
  s[static_cast<std::size_t>(p - 1)] = '0';
  return s;
}

TEST(Rho, ImagesOfLengthFourSequences) {
  EXPECT_EQ(merging::rho_image(ArrivalSequence::parse("0111")), edges({{1, 1}, {1, 3}}));
  EXPECT_EQ(merging::rho_image(ArrivalSequence::parse("1110")), edges({{1, 4}, {3, 4}, {4, 4}}));
  EXPECT_EQ(merging::rho_image(ArrivalSequence::parse("1101")), edges({{2, 3}, {3, 3}}));
}

TEST(Rho, SixAndSeven) {
  EXPECT_EQ(merging::rho_image(ArrivalSequence::parse("011111")), edges({{1, 1}, {1, 3}, {1, 5}}));
  EXPECT_EQ(merging::rho_image(ArrivalSequence::parse("101111")), edges({{2, 6}, {2, 2}, {2, 4}}));
  EXPECT_EQ(rho(1, 2, 6), Edge::between(2, 6));
  EXPECT_EQ(merging::rho_image(ArrivalSequence::parse("1111110")), edges({{2, 7}, {4, 7}, {6, 7}, {7, 7}}));
}

TEST(Rho, EvenLengthZeroAtTheEnd) {
  // c = p - 1 with p = len takes the (c, p) branch; the loop stays unique.
  EXPECT_EQ(rho(5, 6, 6), Edge::between(5, 6));
  EXPECT_EQ(rho(6, 6, 6), Edge::between(6, 6));
}

TEST(Rho, RejectsBadArguments) {
  EXPECT_THROW(rho(0, 1, 4), merging::DomainError);
  EXPECT_THROW(rho(2, 1, 4), merging::DomainError);  // car 2 is in the left lane of 0111
  EXPECT_THROW(merging::rho_image(ArrivalSequence::parse("0011")), merging::DomainError);
  EXPECT_THROW(merging::rho_inverse(Edge{1, 2}, 6), merging::DomainError);
  EXPECT_THROW(merging::rho_inverse(Edge{1, 9}, 6), merging::DomainError);
}

TEST(RhoInverse, WorkedValues) {
  EXPECT_EQ(merging::rho_inverse(Edge{2, 6}, 6), (merging::CarAtZero{1, 2}));
  EXPECT_EQ(merging::rho_inverse(Edge{3, 3}, 5), (merging::CarAtZero{3, 3}));
}

TEST(RhoProperty, PartitionsTheLongestTrailUpToLength14) {
  for (int len = 1; len <= 14; ++len) {
    const auto trail = merging::longest_trail(len);
    const std::set<Edge> trail_edges(trail.edges.begin(), trail.edges.end());
    std::set<Edge> seen;
    std::size_t total = 0;
    for (int p = 1; p <= len; ++p) {
      const auto s = one_zero(len, p);
      const auto image = merging::rho_image(ArrivalSequence::parse(s));
      ASSERT_EQ(image.size(), testsupport::replay(s).right.size()) << s;
      for (const Edge& e : image) {
        ASSERT_TRUE(seen.insert(e).second) << s << " repeats " << e.str();
        const auto back = merging::rho_inverse(e, len);
        ASSERT_EQ(back.zero_position, p) << s << " " << e.str();
        ASSERT_EQ(rho(back.car, back.zero_position, len), e) << s;
      }
      total += image.size();
    }
    EXPECT_EQ(seen, trail_edges) << len;
    EXPECT_EQ(static_cast<std::int64_t>(total), merging::longest_trail_length(len)) << len;
  }
}

TEST(LongestTrail, LengthSequence) {
  for (std::size_t i = 0; i < testsupport::kTrailLengths.size(); ++i) {
    const auto len = static_cast<std::int64_t>(i + 1);
    EXPECT_EQ(merging::longest_trail_length(len), testsupport::kTrailLengths[i]);
    EXPECT_EQ(static_cast<std::int64_t>(merging::longest_trail(len).length()), testsupport::kTrailLengths[i]);
  }
  EXPECT_THROW(merging::longest_trail_length(0), merging::DomainError);
}

TEST(LongestTrail, FourVertexSnake) {
  const auto trail = merging::longest_trail(4);
  EXPECT_EQ(merging::trail_to_snake(trail).str(), testsupport::kFourSnake);
  EXPECT_EQ(trail.str(), "4 -> 1 -> 1 -> 3 -> 2 -> 2 -> 4 -> 4 -> 3 -> 3");
}

TEST(LongestTrail, SingleVertex) {
  const auto trail = merging::longest_trail(1);
  ASSERT_EQ(trail.edges.size(), 1u);
  EXPECT_TRUE(trail.edges[0].is_loop());
}

TEST(LongestTrail, ShapeUpToLength30) {
  for (int len = 1; len <= 30; ++len) {
    const auto trail = merging::longest_trail(len);
    ASSERT_TRUE(merging::is_valid_trail(trail, len)) << len;
    ASSERT_TRUE(merging::is_valid_snake(merging::trail_to_snake(trail), len)) << len;
    std::set<Edge> loops;
    for (const Edge& e : trail.edges) {
      if (e.is_loop()) loops.insert(e);
      // No edge of the removed matching is used for even lengths.
      if (len % 2 == 0 && !e.is_loop() && e.i % 2 == 1 && e.j == e.i + 1) {
        ASSERT_GT(e.j, len - 2) << len;
      }
    }
    ASSERT_EQ(static_cast<int>(loops.size()), len);
    const auto odd = merging::odd_degree_vertices(trail);
    if (len % 2 == 1) {
      EXPECT_TRUE(odd.empty()) << len;
      EXPECT_EQ(trail.vertices.front(), trail.vertices.back()) << len;
    } else if (len > 2) {
      EXPECT_EQ(odd, (std::vector<std::int64_t>{len - 1, len})) << len;
    }
  }
}

TEST(TrailValidation, RejectsBrokenTrails) {
  merging::Trail t;
  t.vertices = {1, 2, 1, 2};
  t.edges = {Edge{1, 2}, Edge{1, 2}, Edge{1, 2}};
  EXPECT_FALSE(merging::is_valid_trail(t, 3));
  t.vertices = {1, 5};
  t.edges = {Edge{1, 5}};
  EXPECT_FALSE(merging::is_valid_trail(t, 4));
  merging::DominoSnake snake{{{1, 2}, {3, 3}}};
  EXPECT_FALSE(merging::is_valid_snake(snake, 4));
}

}  // namespace
