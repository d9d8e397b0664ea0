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

#include "merging/bijections.hpp"
#include "support.hpp"

namespace {

using merging::ArrivalSequence;
using merging::CoinSequence;

std::string reference_phi(const std::string& bits) {
  const auto p = testsupport::replay(bits).parity;
  std::string c;
  for (std::size_t i = 0; i < bits.size(); ++i) c.push_back(bits[i] == p[i] ? 'H' : 'T');
  return c;
}

std::string reference_psi(const std::string& bits, int s) {
  const auto r = testsupport::replay(bits);
  std::string out = bits;
  for (std::size_t i = static_cast<std::size_t>(r.bounces[static_cast<std::size_t>(s - 1)]); i < out.size(); ++i) {
    out[i] = out[i] == '0' ? '1' : '0';
  }
  return out;
}

std::string reference_step(const std::string& bits) {
  const auto r = testsupport::replay(bits);
  const auto q = static_cast<std::size_t>(r.bounces.back());
  std::string out = bits;
  out[q - 1] = '0';
  out[q - 2] = '0';
  return out;
}

TEST(CoinSequence, ParsesAndCounts) {
  const auto c = CoinSequence::parse("HTTH");
  EXPECT_EQ(c.heads(), 2u);
  EXPECT_EQ(c.tails(), 2u);
  EXPECT_EQ(c.str(), "HTTH");
  EXPECT_EQ(merging::max_heads_tails(CoinSequence::parse("TTTH")), 3u);
  EXPECT_THROW(CoinSequence::parse("HX"), merging::ValidationError);
}

TEST(Phi, LengthFourListing) {
  for (const auto& row : testsupport::kPhiRows) {
    const auto b = ArrivalSequence::parse(row.b);
    const auto r = merging::simulate(b);
    const auto c = merging::phi(b);
    EXPECT_EQ(static_cast<int>(r.r()), row.r) << row.b;
    EXPECT_EQ(r.parity.str(), row.p) << row.b;
    EXPECT_EQ(c.str(), row.c) << row.b;
    EXPECT_EQ(static_cast<int>(merging::max_heads_tails(c)), row.max) << row.b;
    EXPECT_EQ(merging::phi_inverse(c), b) << row.b;
  }
}

TEST(Phi, RoundTripFromCoins) {
  const auto c = CoinSequence::parse("THHHTTTHHTHH");
  const auto b = merging::phi_inverse(c);
  EXPECT_EQ(merging::phi(b), c);
}

TEST(PhiProperty, BijectionCarryingRightLaneToMaxUpToLength14) {
  for (int len = 0; len <= 14; ++len) {
    std::set<std::string> images;
    for (const auto& s : testsupport::all_strings(len)) {
      const auto b = ArrivalSequence::parse(s);
      const auto c = merging::phi(b);
      ASSERT_EQ(c.str(), reference_phi(s)) << s;
      ASSERT_EQ(merging::max_heads_tails(c), testsupport::replay(s).right.size()) << s;
      ASSERT_EQ(merging::phi_inverse(c), b) << s;
      ASSERT_EQ(merging::coin_parity(c).str(), testsupport::replay(s).parity) << s;
      images.insert(c.str());
    }
    ASSERT_EQ(images.size(), std::size_t{1} << len);
  }
}

TEST(Psi, ComplementsAfterChosenBounce) {
  EXPECT_EQ(merging::psi(ArrivalSequence::parse("1111"), 1).str(), "1000");
  EXPECT_EQ(merging::psi(ArrivalSequence::parse("1111"), 2).str(), "1110");
  EXPECT_THROW(merging::psi(ArrivalSequence::parse("1111"), 3), merging::DomainError);
  EXPECT_THROW(merging::psi(ArrivalSequence::parse("0000"), 1), merging::DomainError);
}

TEST(PsiProperty, MatchesReferenceAndInvertsUpToLength12) {
  for (int len = 1; len <= 12; ++len) {
    for (const auto& s : testsupport::all_strings(len)) {
      const auto bounces = static_cast<int>(testsupport::replay(s).bounces.size());
      const auto b = ArrivalSequence::parse(s);
      for (int sidx = 1; sidx <= bounces; ++sidx) {
        const auto image = merging::psi(b, sidx);
        ASSERT_EQ(image.str(), reference_psi(s, sidx)) << s << " s=" << sidx;
        ASSERT_EQ(merging::psi_inverse(image, sidx), b) << s << " s=" << sidx;
      }
    }
  }
}

// psi restricted to (k zeros, at least s bounces, m > n) lands in
// sequences with n - s + 1 zeros and covers them exactly once.
TEST(PsiProperty, CountsMatchTheTargetSet) {
  for (int len = 1; len <= 12; ++len) {
    std::map<std::pair<int, int>, std::set<std::string>> images;
    for (const auto& s : testsupport::all_strings(len)) {
      const int k = testsupport::zeros_in(s);
      const int bounces = static_cast<int>(testsupport::replay(s).bounces.size());
      for (int sidx = 1; sidx <= bounces; ++sidx) {
        const int m = k + sidx;
        const int n = len - m;
        if (m <= n) continue;
        const std::string image = reference_psi(s, sidx);
        ASSERT_EQ(testsupport::zeros_in(image), n - sidx + 1) << s;
        ASSERT_TRUE((images[{sidx, k}].insert(image).second)) << s;
      }
    }
    for (const auto& [key, set] : images) {
      const int m = key.second + key.first;
      const int n = len - m;
      EXPECT_EQ(set.size(), testsupport::choose(len, n - key.first + 1)) << len;
    }
  }
}

TEST(StepMap, WorkedValue) {
  const auto b = ArrivalSequence::parse("01101110");
  EXPECT_EQ(merging::step_map(b).str(), "01101000");
  EXPECT_EQ(merging::step_map_inverse(ArrivalSequence::parse("01101000")), b);
}

TEST(StepMap, DomainChecks) {
  EXPECT_THROW(merging::step_map(ArrivalSequence::parse("0000")), merging::DomainError);  // n = 0
  EXPECT_THROW(merging::step_map(ArrivalSequence::parse("0101")), merging::DomainError);  // m = n
  EXPECT_THROW(merging::step_map_inverse(ArrivalSequence::parse("1111")), merging::DomainError);
}

TEST(StepMapProperty, BijectiveBetweenShiftedClassesUpToLength12) {
  for (int len = 1; len <= 12; ++len) {
    std::map<std::tuple<int, int, int>, int> domain;
    std::map<std::tuple<int, int, int>, int> codomain;
    std::set<std::string> images;
    for (const auto& s : testsupport::all_strings(len)) {
      const auto r = testsupport::replay(s);
      const int n = static_cast<int>(r.left.size());
      const int m = static_cast<int>(r.right.size());
      const int k = testsupport::zeros_in(s);
      const auto b = ArrivalSequence::parse(s);
      if (m > k + 1 && m > n && n > 0) {
        const auto image = merging::step_map(b);
        ASSERT_EQ(image.str(), reference_step(s)) << s;
        const auto ri = testsupport::replay(image.str());
        ASSERT_EQ(static_cast<int>(ri.left.size()), n - 1) << s;
        ASSERT_EQ(static_cast<int>(ri.right.size()), m + 1) << s;
        ASSERT_EQ(merging::step_map_inverse(image), b) << s;
        ASSERT_TRUE(images.insert(image.str()).second) << s;
        domain[{n, m, k}] += 1;
      } else {
        EXPECT_THROW(merging::step_map(b), merging::DomainError) << s;
      }
      if (k >= 2 && m > k && m > n + 2) {
        codomain[{n + 1, m - 1, k - 2}] += 1;
        ASSERT_EQ(merging::step_map(merging::step_map_inverse(b)), b) << s;
      }
    }
    EXPECT_EQ(domain, codomain) << len;
  }
}

}  // namespace
