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
#include <map>
#include <string>
#include <tuple>

#include "merging/error.hpp"
#include "merging/numeric.hpp"

namespace merging {

using PathCount = BigInt;

struct BounceBounds {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  bool contains(std::int64_t b) const { return lo <= b && b <= hi; }
  friend bool operator==(const BounceBounds&, const BounceBounds&) = default;
};

namespace detail {

inline void require_nonnegative(std::int64_t v, const char* name) {
  if (v < 0) throw ValidationError(std::string(name) + " must be nonnegative, got " + std::to_string(v));
}

// Memo tables live for one top-level call.
class RecursiveCounter {
 public:
  // M_n(m)
  PathCount paths(std::int64_t n, std::int64_t m) {
    if (n < 0 || m < 0 || m < n) return 0;
    if (n == 0) return m == 0 ? 1 : 2;
    auto key = std::make_pair(n, m);
    if (auto it = paths_memo_.find(key); it != paths_memo_.end()) return it->second;
    PathCount v;
    if (m == n) {
      v = paths(n - 1, n);
    } else if (m == n + 1) {
      v = paths(n - 1, m) + 2 * paths(n, m - 1);
    } else {
      v = paths(n - 1, m) + paths(n, m - 1);
    }
    paths_memo_.emplace(key, v);
    return v;
  }

  // M_{n,k}(m)
  PathCount paths_k(std::int64_t n, std::int64_t m, std::int64_t k) {
    if (n < 0 || m < 0 || k < 0 || m < n) return 0;
    if (n == 0) return (m == k || m == k + 1) ? 1 : 0;
    auto key = std::make_tuple(n, m, k);
    if (auto it = paths_k_memo_.find(key); it != paths_k_memo_.end()) return it->second;
    PathCount v;
    if (m == n) {
      v = paths_k(n - 1, n, k);
    } else if (m == n + 1) {
      v = paths_k(n - 1, m, k) + paths_k(n, m - 1, k - 1) + paths_k(n, m - 1, k);
    } else {
      v = paths_k(n - 1, m, k) + paths_k(n, m - 1, k - 1);
    }
    paths_k_memo_.emplace(key, v);
    return v;
  }

 private:
  std::map<std::pair<std::int64_t, std::int64_t>, PathCount> paths_memo_;
  std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, PathCount> paths_k_memo_;
};

}  // namespace detail

/// Number of merging paths ending at (n, m); zero below the diagonal.
inline PathCount m_count_recursive(std::int64_t n, std::int64_t m) {
  detail::RecursiveCounter counter;
  return counter.paths(n, m);
}

/// Folded Pascal triangle: 2*C(m+n, n) off the diagonal, C(2n, n) on it.
inline PathCount m_count_closed(std::int64_t n, std::int64_t m) {
  detail::require_nonnegative(n, "n");
  detail::require_nonnegative(m, "m");
  if (m < n) {
    throw DomainError("m_count_closed: requires m >= n, got n=" + std::to_string(n) + ", m=" + std::to_string(m));
  }
  if (m == n) return binomial(2 * n, n);
  return 2 * binomial(m + n, n);
}

/// Number of merging paths ending at (n, m) with exactly k zeros; total over
/// all integer arguments (zero outside the feasible region).
inline PathCount m_count_k_recursive(std::int64_t n, std::int64_t m, std::int64_t k) {
  detail::RecursiveCounter counter;
  return counter.paths_k(n, m, k);
}

enum class ClosedRegion {
  kOffDiagonal,  // m > k and m > n
  kDiagonal,     // m = n >= k
  kBallot,       // m = k, n <= k
};

/// Which closed-form region a query falls in; throws DomainError when none.
inline ClosedRegion closed_region(std::int64_t n, std::int64_t m, std::int64_t k) {
  detail::require_nonnegative(n, "n");
  detail::require_nonnegative(m, "m");
  detail::require_nonnegative(k, "k");
  if (m > k && m > n) return ClosedRegion::kOffDiagonal;
  if (m == n && n >= k) return ClosedRegion::kDiagonal;
  if (m == k && n <= k) return ClosedRegion::kBallot;
  throw DomainError("m_count_k_closed: (n=" + std::to_string(n) + ", m=" + std::to_string(m) + ", k=" +
                    std::to_string(k) +
                    ") lies outside every closed-form region; need (m > k and m > n) or (m = n >= k) or "
                    "(m = k >= n)");
}

inline PathCount m_count_k_closed(std::int64_t n, std::int64_t m, std::int64_t k) {
  switch (closed_region(n, m, k)) {
    case ClosedRegion::kOffDiagonal:
      return binomial(m + n, n - (m - k) + 1) - binomial(m + n, n - (m - k) - 1);
    case ClosedRegion::kDiagonal:
      return binomial(2 * n, k) - binomial(2 * n, k - 1);
    case ClosedRegion::kBallot:
      return binomial(k + n, n) - binomial(k + n, n - 1);
  }
  return 0;  // unreachable
}

/// |T_{len, b, k}|: sequences of length `len` with k zeros and at least b bounces,
/// valid where m = k + b and n = len - m satisfy m > k and m > n.
inline PathCount t_count(std::int64_t len, std::int64_t bounces_at_least, std::int64_t k) {
  detail::require_nonnegative(len, "length");
  detail::require_nonnegative(bounces_at_least, "bounces_at_least");
  detail::require_nonnegative(k, "k");
  const std::int64_t m = k + bounces_at_least;
  const std::int64_t n = len - m;
  if (!(m > k)) {
    throw DomainError("t_count: requires at least one bounce (m > k); use m_count for bounce-free paths");
  }
  if (!(m > n) || n < 0) {
    throw DomainError("t_count: requires m > n >= 0 with m = k + bounces, n = length - m (got m=" +
                      std::to_string(m) + ", n=" + std::to_string(n) + ")");
  }
  return binomial(m + n, n - (m - k) + 1);
}

/// Range of possible bounce counts for sequences of length `len` with k zeros.
inline BounceBounds bounce_bounds(std::int64_t len, std::int64_t k) {
  detail::require_nonnegative(len, "length");
  detail::require_nonnegative(k, "k");
  if (k > len) {
    throw DomainError("bounce_bounds: k=" + std::to_string(k) + " exceeds length " + std::to_string(len));
  }
  const std::int64_t twice_lo = len - 2 * k;
  std::int64_t lo = twice_lo <= 0 ? 0 : (twice_lo + 1) / 2;
  std::int64_t hi = (len - k + 1) / 2;
  return BounceBounds{lo, hi};
}

}  // namespace merging
