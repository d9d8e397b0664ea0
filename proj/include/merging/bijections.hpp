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
#include <string>
#include <string_view>
#include <vector>

#include "merging/arrival.hpp"
#include "merging/error.hpp"

namespace merging {

/// Heads/tails string. H encodes 0 and T encodes 1.
class CoinSequence {
 public:
  CoinSequence() = default;

  explicit CoinSequence(std::vector<std::uint8_t> flips) : flips_(std::move(flips)) {
    for (auto f : flips_) {
      if (f > 1) throw ValidationError("coin sequence: flips must be 0 (H) or 1 (T)");
    }
  }

  static CoinSequence parse(std::string_view text) {
    std::vector<std::uint8_t> flips;
    for (std::size_t i = 0; i < text.size(); ++i) {
      char ch = text[i];
      if (ch == 'H') {
        flips.push_back(0);
      } else if (ch == 'T') {
        flips.push_back(1);
      } else {
        throw ValidationError("malformed coin string: character '" + std::string(1, ch) + "' at position " +
                              std::to_string(i + 1) + " (expected 'H' or 'T')");
      }
    }
    return CoinSequence(std::move(flips));
  }

  std::size_t size() const { return flips_.size(); }
  std::span<const std::uint8_t> flips() const { return flips_; }
  std::size_t heads() const { return static_cast<std::size_t>(std::count(flips_.begin(), flips_.end(), 0)); }
  std::size_t tails() const { return flips_.size() - heads(); }

  std::string str() const {
    std::string s;
    for (auto f : flips_) s.push_back(f ? 'T' : 'H');
    return s;
  }

  friend bool operator==(const CoinSequence&, const CoinSequence&) = default;
  friend auto operator<=>(const CoinSequence&, const CoinSequence&) = default;

 private:
  std::vector<std::uint8_t> flips_;
};

inline std::size_t max_heads_tails(const CoinSequence& c) { return std::max(c.heads(), c.tails()); }

/// c = b + p (mod 2). max(phi(b)) equals the right-lane length of b.
inline CoinSequence phi(const ArrivalSequence& b) {
  const ParityVector p = parity_vector(b);
  std::vector<std::uint8_t> flips(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) flips[i] = static_cast<std::uint8_t>(b.bits()[i] ^ p.bits[i]);
  return CoinSequence(std::move(flips));
}

/// Parity read off the coin string alone: it flips after the prefix where tails
/// first lead (while even), then after heads first lead again (while odd), etc.
inline ParityVector coin_parity(const CoinSequence& c) {
  ParityVector p;
  p.bits.resize(c.size());
  std::uint8_t parity = 0;
  std::int64_t lead = 0;  // tails minus heads
  for (std::size_t i = 0; i < c.size(); ++i) {
    p.bits[i] = parity;
    lead += c.flips()[i] ? 1 : -1;
    if ((parity == 0 && lead > 0) || (parity == 1 && lead < 0)) parity ^= 1U;
  }
  return p;
}

inline ArrivalSequence phi_inverse(const CoinSequence& c) {
  const ParityVector p = coin_parity(c);
  std::vector<std::uint8_t> bits(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) bits[i] = static_cast<std::uint8_t>(c.flips()[i] ^ p.bits[i]);
  return ArrivalSequence(std::move(bits));
}

namespace detail {

inline ArrivalSequence complement_after(const ArrivalSequence& b, std::size_t split) {
  std::vector<std::uint8_t> bits(b.bits().begin(), b.bits().end());
  for (std::size_t i = split; i < bits.size(); ++i) bits[i] ^= 1U;
  return ArrivalSequence(std::move(bits));
}

inline ArrivalSequence split_and_complement(const ArrivalSequence& b, std::int64_t s, const char* op) {
  if (s < 1) throw DomainError(std::string(op) + ": split index s must be positive");
  const MergeResult r = simulate(b);
  if (r.bounce_positions.size() < static_cast<std::size_t>(s)) {
    throw DomainError(std::string(op) + ": sequence " + b.str() + " has " +
                      std::to_string(r.bounce_positions.size()) + " bounces, fewer than s=" + std::to_string(s));
  }
  return complement_after(b, r.bounce_positions[static_cast<std::size_t>(s) - 1]);
}

}  // namespace detail

/// Complements everything after the s-th bounce.
inline ArrivalSequence psi(const ArrivalSequence& b, std::int64_t s) {
  return detail::split_and_complement(b, s, "psi");
}

/// The prefix through the s-th bounce is untouched by psi, so the same
/// construction undoes it.
inline ArrivalSequence psi_inverse(const ArrivalSequence& b_prime, std::int64_t s) {
  return detail::split_and_complement(b_prime, s, "psi_inverse");
}

/// Turns the two 1s ending at the last bounce (which must not be car 1) into 0s,
/// mapping a path to (n, m) with k zeros onto one to (n-1, m+1) with k+2 zeros.
inline ArrivalSequence step_map(const ArrivalSequence& b) {
  const MergeResult r = simulate(b);
  const auto n = static_cast<std::int64_t>(r.endpoint.n);
  const auto m = static_cast<std::int64_t>(r.endpoint.m);
  const auto k = static_cast<std::int64_t>(b.zeros());
  if (!(m > k + 1 && m > n && n > 0)) {
    throw DomainError("step_map: " + b.str() + " ends at (" + std::to_string(n) + "," + std::to_string(m) +
                      ") with k=" + std::to_string(k) + " zeros; requires m > k+1 and m > n > 0");
  }
  const std::size_t last = r.bounce_positions.back();
  // last >= 2 here; car last-1 moved onto the diagonal, so it is a 1.
  std::vector<std::uint8_t> bits(b.bits().begin(), b.bits().end());
  bits[last - 2] = 0;
  bits[last - 1] = 0;
  return ArrivalSequence(std::move(bits));
}

inline ArrivalSequence step_map_inverse(const ArrivalSequence& b_prime) {
  const MergeResult r = simulate(b_prime);
  const auto n = static_cast<std::int64_t>(r.endpoint.n);
  const auto m = static_cast<std::int64_t>(r.endpoint.m);
  const auto k = static_cast<std::int64_t>(b_prime.zeros());
  if (!(k >= 2 && m > k && m > n + 2)) {
    throw DomainError("step_map_inverse: " + b_prime.str() + " ends at (" + std::to_string(n) + "," +
                      std::to_string(m) + ") with k=" + std::to_string(k) +
                      " zeros; requires k >= 2, m > k and m > n + 2");
  }
  // Last lattice point at distance one above the diagonal, as a 0-based car index.
  std::size_t right = 0;
  std::size_t left = 0;
  std::size_t found = b_prime.size();
  const auto bits_in = b_prime.bits();
  for (std::size_t i = 0; i < bits_in.size(); ++i) {
    if (right == left + 1) found = i;
    if (bits_in[i] == 0 || left >= right) {
      ++right;
    } else {
      ++left;
    }
  }
  if (found + 1 >= bits_in.size() || bits_in[found] != 0 || bits_in[found + 1] != 0) {
    throw DomainError("step_map_inverse: last near-diagonal point of " + b_prime.str() +
                      " is not followed by two 0s");
  }
  std::vector<std::uint8_t> bits(bits_in.begin(), bits_in.end());
  bits[found] = 1;
  bits[found + 1] = 1;
  return ArrivalSequence(std::move(bits));
}

}  // namespace merging
