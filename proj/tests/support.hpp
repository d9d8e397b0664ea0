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

// Test-side reference implementations. These replay the merging rule on plain
// strings and count by brute force; they share no code with the library.

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace testsupport {

struct Replay {
  std::vector<int> right;
  std::vector<int> left;
  std::vector<int> bounces;
  std::vector<int> touches;
  std::string parity;
};

inline Replay replay(const std::string& bits) {
  Replay out;
  char p = '0';
  for (std::size_t idx = 0; idx < bits.size(); ++idx) {
    const int car = static_cast<int>(idx) + 1;
    const auto l = out.left.size();
    const auto r = out.right.size();
    out.parity.push_back(p);
    if (l == r) out.touches.push_back(car);
    bool goes_left = bits[idx] == '1' && l < r;
    if (goes_left) {
      out.left.push_back(car);
    } else {
      out.right.push_back(car);
      if (bits[idx] == '1') {
        out.bounces.push_back(car);
        p = p == '0' ? '1' : '0';
      }
    }
  }
  return out;
}

inline std::string bits_of(std::uint64_t mask, int len) {
  // Car 1 is the most significant bit, so masks count in string order.
  std::string s(static_cast<std::size_t>(len), '0');
  for (int i = 0; i < len; ++i) {
    if ((mask >> (len - 1 - i)) & 1U) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

inline std::vector<std::string> all_strings(int len) {
  std::vector<std::string> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) out.push_back(bits_of(mask, len));
  return out;
}

inline int zeros_in(const std::string& s) {
  int z = 0;
  for (char c : s) z += c == '0';
  return z;
}

/// Pascal's triangle in 64 bits, rows 0..60.
inline std::uint64_t choose(int a, int b) {
  if (b < 0 || a < 0 || b > a) return 0;
  static std::vector<std::vector<std::uint64_t>> rows;
  if (rows.empty()) {
    rows.resize(61);
    for (int n = 0; n <= 60; ++n) {
      rows[n].assign(static_cast<std::size_t>(n) + 1, 1);
      for (int k = 1; k < n; ++k) rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
    }
  }
  return rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

/// (n, m, k) -> number of length-(n+m) strings ending at (n, m) with k zeros.
inline std::map<std::tuple<int, int, int>, std::uint64_t> brute_counts(int len_max) {
  std::map<std::tuple<int, int, int>, std::uint64_t> out;
  for (int len = 0; len <= len_max; ++len) {
    for (const auto& s : all_strings(len)) {
      const Replay r = replay(s);
      out[{static_cast<int>(r.left.size()), static_cast<int>(r.right.size()), zeros_in(s)}] += 1;
    }
  }
  return out;
}

/// Sum of right-lane lengths over strings of length len with k zeros (k = -1: all).
inline std::uint64_t brute_lane_sum(int len, int k = -1) {
  std::uint64_t total = 0;
  for (const auto& s : all_strings(len)) {
    if (k >= 0 && zeros_in(s) != k) continue;
    total += replay(s).right.size();
  }
  return total;
}

// Reference tables transcribed from the source material.

// Paths ending at (n, m); row m = 7 down to 0, columns n = 0..m.
inline const std::vector<std::vector<std::uint64_t>> kPathCountRows = {
    {2, 16, 72, 240, 660, 1584, 3432, 3432}, {2, 14, 56, 168, 420, 924, 924}, {2, 12, 42, 112, 252, 252},
    {2, 10, 30, 70, 70}, {2, 8, 20, 20}, {2, 6, 6}, {2, 2}, {1}};

// Lane sums; row l = 8 down to 0, columns k = 0..l.
inline const std::vector<std::vector<std::uint64_t>> kLaneSumRows = {
    {4, 33, 120, 253, 344, 309, 176, 57, 8}, {4, 28, 85, 147, 162, 112, 43, 7}, {3, 19, 51, 76, 66, 31, 6},
    {3, 15, 31, 35, 21, 5}, {2, 9, 16, 13, 4}, {2, 6, 7, 3}, {1, 3, 2}, {1, 1}, {0}};

// Small-k blocks: [k][row m = 6 down to 0][n = 0..min(m,5)]. The printed origin
// cell of the k = 0 block reads 0; it is kept here as printed.
inline const std::vector<std::vector<std::vector<std::uint64_t>>> kSmallKBlocks = {
    {{0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 1, 1}, {0, 0, 0, 1, 1}, {0, 0, 1, 1}, {0, 1, 1}, {1, 1}, {0}},
    {{0, 0, 0, 0, 1, 11}, {0, 0, 0, 1, 9, 9}, {0, 0, 1, 7, 7}, {0, 1, 5, 5}, {1, 3, 3}, {1, 1}, {0}},
    {{0, 0, 0, 1, 10, 54}, {0, 0, 1, 8, 35, 35}, {0, 1, 6, 20, 20}, {1, 4, 9, 9}, {1, 2, 2}, {0, 0}, {0}},
    {{0, 0, 1, 9, 44, 154}, {0, 1, 7, 27, 75, 75}, {1, 5, 14, 28, 28}, {1, 3, 5, 5}, {0, 0, 0}, {0, 0}, {0}},
};

// k = 6; row m = 11 down to 6, columns n = 0..m.
inline const std::vector<std::vector<std::uint64_t>> kFixedKRows = {
    {0, 0, 0, 0, 1, 16, 135, 798, 3705, 14364, 48279, 48279},
    {0, 0, 0, 1, 14, 104, 544, 2244, 7752, 23256, 23256},
    {0, 0, 1, 12, 77, 350, 1260, 3808, 9996, 9996},
    {0, 1, 10, 54, 208, 637, 1638, 3640, 3640},
    {1, 8, 35, 110, 275, 572, 1001, 1001},
    {1, 6, 20, 48, 90, 132, 132}};

inline const std::vector<std::uint64_t> kLaneSumSequence = {0,    2,    6,     18,    44,    110,   252,  588,
                                                            1304, 2934, 6380, 14036, 30120, 65260, 138712};

inline const std::vector<std::int64_t> kTrailLengths = {1, 3, 6, 9, 15, 19, 28, 33, 45, 51, 66, 73, 91, 99};

struct PhiRow {
  std::string b;
  int r;
  std::string p;
  std::string c;
  int max;
};

// Length-4 phi listing, in the printed row order.
inline const std::vector<PhiRow> kPhiRows = {
    {"0000", 4, "0000", "HHHH", 4}, {"0100", 3, "0000", "HTHH", 3}, {"0010", 3, "0000", "HHTH", 3},
    {"0001", 3, "0000", "HHHT", 3}, {"0011", 2, "0000", "HHTT", 2}, {"0110", 3, "0001", "HTTT", 3},
    {"0101", 2, "0000", "HTHT", 2}, {"0111", 2, "0001", "HTTH", 2}, {"1000", 4, "0111", "TTTT", 4},
    {"1100", 3, "0111", "THTT", 3}, {"1010", 3, "0111", "TTHT", 3}, {"1001", 3, "0111", "TTTH", 3},
    {"1011", 2, "0111", "TTHH", 2}, {"1110", 3, "0110", "THHH", 3}, {"1101", 2, "0111", "THTH", 2},
    {"1111", 2, "0110", "THHT", 2}};

inline const std::string kFourSnake = "[4:1][1:1][1:3][3:2][2:2][2:4][4:4][4:3][3:3]";

struct ClassRow {
  std::string representative;
  std::vector<std::size_t> right_lane;
  std::size_t size;
};

// Length-6 color-blind classes, touch bits set to 0 in each representative.
inline const std::vector<ClassRow> kSixClasses = {
    {"000000", {1, 2, 3, 4, 5, 6}, 2}, {"000001", {1, 2, 3, 4, 5}, 2}, {"000010", {1, 2, 3, 4, 6}, 2},
    {"000011", {1, 2, 3, 4}, 2},       {"000100", {1, 2, 3, 5, 6}, 2}, {"000101", {1, 2, 3, 5}, 2},
    {"000110", {1, 2, 3, 6}, 2},       {"000111", {1, 2, 3}, 2},       {"001000", {1, 2, 4, 5, 6}, 2},
    {"001001", {1, 2, 4, 5}, 2},       {"001010", {1, 2, 4, 6}, 2},    {"001011", {1, 2, 4}, 2},
    {"001100", {1, 2, 5, 6}, 4},       {"001101", {1, 2, 5}, 4},       {"010000", {1, 3, 4, 5, 6}, 4},
    {"010001", {1, 3, 4, 5}, 4},       {"010010", {1, 3, 4, 6}, 4},    {"010011", {1, 3, 4}, 4},
    {"010100", {1, 3, 5, 6}, 8},       {"010101", {1, 3, 5}, 8}};

}  // namespace testsupport
