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
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "merging/arrival.hpp"
#include "merging/bijections.hpp"
#include "merging/classes.hpp"
#include "merging/counting.hpp"
#include "merging/error.hpp"
#include "merging/expectation.hpp"
#include "merging/numeric.hpp"
#include "merging/trails.hpp"

namespace merging::oracle {

inline constexpr std::int64_t kDefaultEnumerationCap = 24;

struct VerificationReport {
  std::string claim;
  std::string range;
  bool passed = true;
  std::optional<std::string> counterexample;
  std::uint64_t compared = 0;
};

inline bool all_passed(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
}

namespace detail {

inline void check_cap(std::int64_t len, std::int64_t cap, const char* op) {
  if (len < 0) throw ValidationError(std::string(op) + ": length must be nonnegative");
  if (len > cap || len > 62) {
    throw ResourceError(std::string(op) + ": length " + std::to_string(len) + " exceeds enumeration cap " +
                        std::to_string(cap));
  }
}

// Keeps the first counterexample.
class Checker {
 public:
  Checker(std::string claim, std::string range) {
    report_.claim = std::move(claim);
    report_.range = std::move(range);
  }

  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    ++report_.compared;
    if (!ok && report_.passed) {
      report_.passed = false;
      report_.counterexample = describe();
    }
  }

  VerificationReport done() && { return std::move(report_); }

 private:
  VerificationReport report_;
};

inline std::string triple(std::int64_t n, std::int64_t m, std::int64_t k) {
  return "n=" + std::to_string(n) + ",m=" + std::to_string(m) + ",k=" + std::to_string(k);
}

}  // namespace detail

/// Visits every sequence of length `len` in ascending mask order (bit i is car i+1).
template <class Visitor>
void enumerate(std::int64_t len, Visitor&& visit, std::int64_t cap = kDefaultEnumerationCap) {
  detail::check_cap(len, cap, "enumerate");
  const auto n = static_cast<std::size_t>(len);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const ArrivalSequence b = ArrivalSequence::from_mask(mask, n);
    visit(b, simulate(b));
  }
}

inline std::vector<std::pair<ArrivalSequence, MergeResult>> enumerate_all(std::int64_t len,
                                                                        std::int64_t cap = kDefaultEnumerationCap) {
  std::vector<std::pair<ArrivalSequence, MergeResult>> out;
  enumerate(len, [&](const ArrivalSequence& b, const MergeResult& r) { out.emplace_back(b, r); }, cap);
  return out;
}

/// Splits B_len into shards by the high-order mask bits, folds each shard on a
/// worker thread and merges shard results in shard order.
/// fold(Acc&, const ArrivalSequence&, const MergeResult&); merge(Acc&, Acc&&).
template <class Acc, class Fold, class Merge>
Acc sharded_reduce(std::int64_t len, unsigned workers, const Acc& init, Fold fold, Merge merge,
                   std::int64_t cap = kDefaultEnumerationCap) {
  detail::check_cap(len, cap, "sharded_reduce");
  if (workers == 0) workers = 1;
  const auto n = static_cast<std::size_t>(len);
  std::size_t shard_bits = 0;
  while ((std::size_t{1} << shard_bits) < workers && shard_bits < n) ++shard_bits;
  const std::size_t shards = std::size_t{1} << shard_bits;
  const std::size_t low_bits = n - shard_bits;

  std::vector<Acc> partial(shards, init);
  auto run = [&](std::size_t first) {
    for (std::size_t s = first; s < shards; s += workers) {
      const std::uint64_t base = static_cast<std::uint64_t>(s) << low_bits;
      for (std::uint64_t low = 0; low < (std::uint64_t{1} << low_bits); ++low) {
        const ArrivalSequence b = ArrivalSequence::from_mask(base | low, n);
        fold(partial[s], b, simulate(b));
      }
    }
  };
  if (workers == 1 || shards == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers && w < shards; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  Acc result = init;
  for (auto& p : partial) merge(result, std::move(p));
  return result;
}

inline unsigned default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Exhaustive per-length tallies: counts by (n, m, k), by (k, bounces), and lane sums.
struct LengthTally {
  std::int64_t len = 0;
  std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, std::uint64_t> paths;  // (n,m,k)
  std::map<std::pair<std::int64_t, std::int64_t>, std::uint64_t> bounces;              // (k,b)
  std::map<std::int64_t, std::uint64_t> lane_sum_by_k;
  std::uint64_t lane_sum = 0;

  std::uint64_t count(std::int64_t n, std::int64_t m, std::int64_t k) const {
    auto it = paths.find({n, m, k});
    return it == paths.end() ? 0 : it->second;
  }
  std::uint64_t count(std::int64_t n, std::int64_t m) const {
    std::uint64_t total = 0;
    for (const auto& [key, v] : paths) {
      if (std::get<0>(key) == n && std::get<1>(key) == m) total += v;
    }
    return total;
  }
  /// Sequences with k zeros and at least b bounces.
  std::uint64_t at_least_bounces(std::int64_t k, std::int64_t b) const {
    std::uint64_t total = 0;
    for (const auto& [key, v] : bounces) {
      if (key.first == k && key.second >= b) total += v;
    }
    return total;
  }
};

inline LengthTally tally(std::int64_t len, unsigned workers = default_workers(),
                         std::int64_t cap = kDefaultEnumerationCap) {
  LengthTally init;
  init.len = len;
  return sharded_reduce(
      len, workers, init,
      [](LengthTally& acc, const ArrivalSequence& b, const MergeResult& r) {
        const auto k = static_cast<std::int64_t>(b.zeros());
        acc.paths[{static_cast<std::int64_t>(r.endpoint.n), static_cast<std::int64_t>(r.endpoint.m), k}] += 1;
        acc.bounces[{k, static_cast<std::int64_t>(r.bounce_positions.size())}] += 1;
        acc.lane_sum_by_k[k] += r.r();
        acc.lane_sum += r.r();
      },
      [](LengthTally& into, LengthTally&& part) {
        for (const auto& [key, v] : part.paths) into.paths[key] += v;
        for (const auto& [key, v] : part.bounces) into.bounces[key] += v;
        for (const auto& [key, v] : part.lane_sum_by_k) into.lane_sum_by_k[key] += v;
        into.lane_sum += part.lane_sum;
      },
      cap);
}

/// Checks every counting formula against exhaustive enumeration for
/// n + m <= len_max, 0 <= k <= k_max.
inline std::vector<VerificationReport> verify_counts(std::int64_t len_max, std::int64_t k_max,
                                                     unsigned workers = default_workers(),
                                                     std::int64_t cap = kDefaultEnumerationCap) {
  if (len_max < 0 || k_max < 0) throw ValidationError("verify_counts: bounds must be nonnegative");
  detail::check_cap(len_max, cap, "verify_counts");
  std::vector<LengthTally> tallies;
  for (std::int64_t len = 0; len <= len_max; ++len) tallies.push_back(tally(len, workers, cap));
  auto brute = [&](std::int64_t n, std::int64_t m, std::int64_t k) -> BigInt {
    if (n < 0 || m < 0 || k < 0) return 0;
    return tallies[static_cast<std::size_t>(n + m)].count(n, m, k);
  };
  const std::string range = "n+m<=" + std::to_string(len_max) + ",k<=" + std::to_string(k_max);

  detail::Checker paths("m-count", range);
  detail::Checker paths_k("m-count-k", range);
  detail::Checker sum_over_k("m-count-k-sums-to-m-count", range);
  detail::Checker t_union("t-set-union", range);
  detail::Checker t_difference("t-set-difference", range);
  detail::Checker period("step-period", range);
  detail::Checker bounds("bounce-bounds", "length<=" + std::to_string(len_max));

  for (std::int64_t n = 0; n <= len_max; ++n) {
    for (std::int64_t m = 0; n + m <= len_max; ++m) {
      const BigInt rec = m_count_recursive(n, m);
      const BigInt all = tallies[static_cast<std::size_t>(n + m)].count(n, m);
      if (m >= n) {
        const BigInt closed = m_count_closed(n, m);
        paths.expect(rec == closed && closed == all, [&] {
          return "n=" + std::to_string(n) + ",m=" + std::to_string(m) + ": recursive=" + rec.str() +
                 " closed=" + closed.str() + " brute=" + all.str();
        });
      } else {
        paths.expect(rec == 0 && all == 0, [&] { return "below diagonal n=" + std::to_string(n); });
      }

      BigInt over_k = 0;
      for (std::int64_t k = 0; k <= n + m; ++k) over_k += m_count_k_recursive(n, m, k);
      sum_over_k.expect(over_k == rec, [&] {
        return "n=" + std::to_string(n) + ",m=" + std::to_string(m) + ": sum=" + over_k.str() + " M=" + rec.str();
      });

      for (std::int64_t k = 0; k <= k_max; ++k) {
        const BigInt rec_k = m_count_k_recursive(n, m, k);
        const BigInt b = brute(n, m, k);
        std::optional<BigInt> closed_k;
        try {
          closed_k = m_count_k_closed(n, m, k);
        } catch (const DomainError&) {
        }
        paths_k.expect(rec_k == b && (!closed_k || *closed_k == b), [&] {
          return detail::triple(n, m, k) + ": recursive=" + rec_k.str() +
                 " closed=" + (closed_k ? closed_k->str() : std::string("n/a")) + " brute=" + b.str();
        });

        if (m > k && m > n) {
          const auto& tl = tallies[static_cast<std::size_t>(n + m)];
          const BigInt t = t_count(m + n, m - k, k);
          BigInt sum = 0;
          for (std::int64_t i = 0; i <= n; ++i) sum += m_count_k_recursive(n - i, m + i, k);
          const BigInt t_brute = tl.at_least_bounces(k, m - k);
          t_union.expect(t == sum && t == t_brute, [&] {
            return detail::triple(n, m, k) + ": t_count=" + t.str() + " union=" + sum.str() +
                   " brute=" + t_brute.str();
          });
          // One more bounce moves the endpoint to (n-1, m+1); none exist when n = 0.
          const BigInt next = n > 0 ? t_count(m + n, m - k + 1, k) : BigInt(0);
          const BigInt diff = t - next;
          t_difference.expect(diff == rec_k, [&] {
            return detail::triple(n, m, k) + ": difference=" + diff.str() + " M=" + rec_k.str();
          });
        }
        if (m > k + 1 && m > n && n > 0) {
          const BigInt shifted = brute(n - 1, m + 1, k + 2);
          period.expect(b == shifted, [&] {
            return detail::triple(n, m, k) + ": " + b.str() + " vs shifted " + shifted.str();
          });
        }
      }
    }
  }

  for (const auto& tl : tallies) {
    for (const auto& [key, v] : tl.bounces) {
      const auto [k, b] = key;
      const BounceBounds bb = bounce_bounds(tl.len, k);
      bounds.expect(bb.contains(b), [&] {
        return "length=" + std::to_string(tl.len) + ",k=" + std::to_string(k) + ": " + std::to_string(b) +
               " bounces outside [" + std::to_string(bb.lo) + "," + std::to_string(bb.hi) + "]";
      });
    }
  }

  return {std::move(paths).done(),        std::move(paths_k).done(), std::move(sum_over_k).done(),
          std::move(t_union).done(),      std::move(t_difference).done(), std::move(period).done(),
          std::move(bounds).done()};
}

/// Lane sums (all sequences and per zero count) against the closed forms.
inline VerificationReport verify_lane_sums(std::int64_t len_max, unsigned workers = default_workers(),
                                           std::int64_t cap = kDefaultEnumerationCap) {
  detail::check_cap(len_max, cap, "verify_lane_sums");
  detail::Checker check("lane-sums", "length<=" + std::to_string(len_max));
  for (std::int64_t len = 0; len <= len_max; ++len) {
    const LengthTally tl = tally(len, workers, cap);
    const BigInt closed = right_lane_sum(len);
    check.expect(closed == tl.lane_sum, [&] {
      return "length=" + std::to_string(len) + ": closed=" + closed.str() +
             " brute=" + std::to_string(tl.lane_sum);
    });
    for (std::int64_t k = 0; k <= len; ++k) {
      auto it = tl.lane_sum_by_k.find(k);
      const std::uint64_t brute = it == tl.lane_sum_by_k.end() ? 0 : it->second;
      const BigInt closed_k = right_lane_sum_k(len, k);
      check.expect(closed_k == brute, [&] {
        return "length=" + std::to_string(len) + ",k=" + std::to_string(k) + ": closed=" + closed_k.str() +
               " brute=" + std::to_string(brute);
      });
    }
  }
  return std::move(check).done();
}

/// phi is injective and onto C_len, inverts through the coin-only parity rule,
/// and carries the right-lane length to max(heads, tails). Also checks the
/// fibre sizes |{c : max(c) = m}| against the closed path counts.
inline std::vector<VerificationReport> verify_phi(std::int64_t len_max, std::int64_t cap = kDefaultEnumerationCap) {
  detail::check_cap(len_max, cap, "verify_phi");
  const std::string range = "length<=" + std::to_string(len_max);
  detail::Checker bijective("phi-bijection", range);
  detail::Checker statistic("phi-max-equals-right-lane", range);
  detail::Checker fibres("coin-max-fibres", range);
  for (std::int64_t len = 0; len <= len_max; ++len) {
    const auto n = static_cast<std::size_t>(len);
    std::vector<bool> hit(std::size_t{1} << n, false);
    std::map<std::size_t, std::uint64_t> by_max;
    enumerate(
        len,
        [&](const ArrivalSequence& b, const MergeResult& r) {
          const CoinSequence c = phi(b);
          std::uint64_t code = 0;
          for (std::size_t i = 0; i < c.size(); ++i) code |= static_cast<std::uint64_t>(c.flips()[i]) << i;
          bijective.expect(!hit[code] && phi_inverse(c) == b, [&] {
            return b.str() + " -> " + c.str() + (hit[code] ? " (collision)" : " (inverse mismatch)");
          });
          hit[code] = true;
          const std::size_t mx = max_heads_tails(c);
          statistic.expect(mx == r.r(), [&] {
            return b.str() + ": max=" + std::to_string(mx) + " r=" + std::to_string(r.r());
          });
          by_max[mx] += 1;
        },
        cap);
    const bool onto = std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
    bijective.expect(onto, [&] { return "length=" + std::to_string(len) + ": phi not onto"; });
    for (std::int64_t m = (len + 1) / 2; m <= len && len > 0; ++m) {
      const BigInt expected = m_count_closed(len - m, m);
      const std::uint64_t got = by_max[static_cast<std::size_t>(m)];
      fibres.expect(expected == got, [&] {
        return "length=" + std::to_string(len) + ",max=" + std::to_string(m) + ": coins=" + std::to_string(got) +
               " paths=" + expected.str();
      });
    }
  }
  return {std::move(bijective).done(), std::move(statistic).done(), std::move(fibres).done()};
}

/// For every (n, m, k) with m > k, m > n and n + m <= len_max: psi maps the
/// sequences with k zeros and at least m-k bounces one-to-one onto B_{n+m, n-(m-k)+1}.
inline VerificationReport verify_psi(std::int64_t len_max, std::int64_t cap = kDefaultEnumerationCap) {
  detail::check_cap(len_max, cap, "verify_psi");
  detail::Checker check("psi-bijection", "n+m<=" + std::to_string(len_max));
  for (std::int64_t len = 1; len <= len_max; ++len) {
    // (s, k) -> images
    std::map<std::pair<std::int64_t, std::int64_t>, std::set<ArrivalSequence>> images;
    std::map<std::pair<std::int64_t, std::int64_t>, std::uint64_t> domain_size;
    enumerate(
        len,
        [&](const ArrivalSequence& b, const MergeResult& r) {
          const auto k = static_cast<std::int64_t>(b.zeros());
          const auto bounces = static_cast<std::int64_t>(r.bounce_positions.size());
          for (std::int64_t s = 1; s <= bounces; ++s) {
            const std::int64_t m = k + s;
            const std::int64_t n = len - m;
            if (!(m > n)) continue;
            const ArrivalSequence image = psi(b, s);
            const auto want_zeros = static_cast<std::size_t>(n - s + 1);
            check.expect(image.zeros() == want_zeros && psi_inverse(image, s) == b, [&] {
              return b.str() + " s=" + std::to_string(s) + " -> " + image.str();
            });
            images[{s, k}].insert(image);
            domain_size[{s, k}] += 1;
          }
        },
        cap);
    for (std::int64_t k = 0; k <= len; ++k) {
      for (std::int64_t s = 1; k + s <= len; ++s) {
        const std::int64_t m = k + s;
        const std::int64_t n = len - m;
        if (!(m > n)) continue;
        const std::uint64_t dom = domain_size[{s, k}];
        const std::uint64_t img = images[{s, k}].size();
        const BigInt target = binomial(len, n - s + 1);
        check.expect(dom == img && target == img && t_count(len, s, k) == dom, [&] {
          return detail::triple(n, m, k) + ": |T|=" + std::to_string(dom) + " |image|=" + std::to_string(img) +
                 " |B|=" + target.str();
        });
      }
    }
  }
  return std::move(check).done();
}

/// step_map is a bijection W_{n,m,k} -> W_{n-1,m+1,k+2} (m > k+1, m > n > 0)
/// for all lengths up to len_max.
inline VerificationReport verify_step_map(std::int64_t len_max, std::int64_t cap = kDefaultEnumerationCap) {
  detail::check_cap(len_max, cap, "verify_step_map");
  detail::Checker check("step-map-bijection", "n+m<=" + std::to_string(len_max));
  for (std::int64_t len = 1; len <= len_max; ++len) {
    std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, std::uint64_t> domain;
    std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, std::uint64_t> codomain;
    std::set<ArrivalSequence> images;
    enumerate(
        len,
        [&](const ArrivalSequence& b, const MergeResult& r) {
          const auto n = static_cast<std::int64_t>(r.endpoint.n);
          const auto m = static_cast<std::int64_t>(r.endpoint.m);
          const auto k = static_cast<std::int64_t>(b.zeros());
          if (m > k + 1 && m > n && n > 0) {
            const ArrivalSequence image = step_map(b);
            const MergeResult ri = simulate(image);
            check.expect(ri.endpoint == Endpoint{r.endpoint.n - 1, r.endpoint.m + 1} &&
                             image.zeros() == b.zeros() + 2 && step_map_inverse(image) == b,
                         [&] { return b.str() + " -> " + image.str(); });
            images.insert(image);
            domain[{n, m, k}] += 1;
          }
          if (k >= 2 && m > k && m > n + 2) codomain[{n + 1, m - 1, k - 2}] += 1;
        },
        cap);
    check.expect(domain == codomain, [&] { return "length=" + std::to_string(len) + ": class sizes differ"; });
    std::uint64_t total = 0;
    for (const auto& [key, v] : codomain) total += v;
    check.expect(images.size() == total, [&] { return "length=" + std::to_string(len) + ": not onto"; });
  }
  return std::move(check).done();
}

/// rho images over B_{len,1} are disjoint, cover the longest trail's edge set
/// and have sizes r(b).
inline std::vector<VerificationReport> verify_trails(std::int64_t len_max) {
  if (len_max < 1) throw ValidationError("verify_trails: len_max must be >= 1");
  const std::string range = "1<=length<=" + std::to_string(len_max);
  detail::Checker partition_check("rho-partition", range);
  detail::Checker trail_check("longest-trail-validity", range);
  for (std::int64_t len = 1; len <= len_max; ++len) {
    const Trail trail = longest_trail(len);
    const auto odd = odd_degree_vertices(trail);
    const bool degree_ok = len % 2 == 1 ? odd.empty()
                                        : (len == 2 ? odd == std::vector<std::int64_t>{1, 2}
                                                    : odd == std::vector<std::int64_t>{len - 1, len});
    trail_check.expect(is_valid_trail(trail, len) && degree_ok &&
                           static_cast<std::int64_t>(trail.length()) == longest_trail_length(len) &&
                           is_valid_snake(trail_to_snake(trail), len),
                       [&] { return "length=" + std::to_string(len) + ": " + trail.str(); });

    std::set<Edge> seen;
    std::uint64_t total = 0;
    bool disjoint = true;
    for (std::int64_t p = 1; p <= len; ++p) {
      const ArrivalSequence b = merging::detail::single_zero(len, p);
      const std::set<Edge> image = rho_image(b);
      partition_check.expect(image.size() == simulate(b).r(), [&] { return b.str() + ": |image| != r"; });
      for (const Edge& e : image) {
        disjoint = seen.insert(e).second && disjoint;
        const CarAtZero back = rho_inverse(e, len);
        partition_check.expect(back.zero_position == p && rho(back.car, back.zero_position, len) == e,
                               [&] { return b.str() + ": rho_inverse" + e.str() + " mismatch"; });
      }
      total += image.size();
    }
    const std::set<Edge> trail_edges(trail.edges.begin(), trail.edges.end());
    partition_check.expect(disjoint && seen == trail_edges &&
                               static_cast<std::int64_t>(total) == longest_trail_length(len) &&
                               BigInt(total) == right_lane_sum_k(len, 1),
                           [&] { return "length=" + std::to_string(len) + ": images do not partition the trail"; });
  }
  return {std::move(partition_check).done(), std::move(trail_check).done()};
}

/// Class sizes equal 2^t(b), are even, and the classes partition B_len.
inline VerificationReport verify_classes(std::int64_t len_max, std::int64_t cap = kDefaultPartitionCap) {
  detail::check_cap(len_max, cap, "verify_classes");
  detail::Checker check("class-sizes", "1<=length<=" + std::to_string(len_max));
  for (std::int64_t len = 1; len <= len_max; ++len) {
    const auto classes = partition(len, cap);
    std::uint64_t covered = 0;
    for (const auto& cls : classes) {
      covered += cls.size();
      const std::uint64_t expected = std::uint64_t{1} << cls.touch_vector.size();
      bool members_ok = true;
      for (const auto& member : cls.members) {
        members_ok = members_ok && touch_positions(member).size() == cls.touch_vector.size() &&
                     class_size(member) == expected;
      }
      const ColorBlindClass built = class_of(cls.representative);
      check.expect(cls.size() == expected && cls.size() % 2 == 0 && members_ok && built.members == cls.members,
                   [&] { return cls.representative.str() + ": class size " + std::to_string(cls.size()); });
    }
    check.expect(covered == (std::uint64_t{1} << len), [&] { return "length=" + std::to_string(len); });
  }
  return std::move(check).done();
}

struct BijectionLimits {
  std::int64_t phi = 16;
  std::int64_t psi = 12;
  std::int64_t step = 12;
  std::int64_t trails = 14;
  std::int64_t classes = 14;

  static BijectionLimits uniform(std::int64_t len_max) {
    return BijectionLimits{len_max, len_max, len_max, len_max, len_max};
  }
};

inline std::vector<VerificationReport> verify_bijections(const BijectionLimits& limits) {
  std::vector<VerificationReport> out = verify_phi(limits.phi);
  out.push_back(verify_psi(limits.psi));
  out.push_back(verify_step_map(limits.step));
  for (auto& r : verify_trails(limits.trails)) out.push_back(std::move(r));
  out.push_back(verify_classes(limits.classes));
  return out;
}

inline std::vector<VerificationReport> verify_bijections(std::int64_t len_max) {
  return verify_bijections(BijectionLimits::uniform(len_max));
}

struct MonteCarloEstimate {
  std::int64_t len = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double mean = 0.0;
  double standard_error = 0.0;
};

/// Mean right-lane length over uniformly drawn sequences. Bits come from
/// std::mt19937_64(seed): car i+1 is bit (i mod 64) of word i/64 of each sample.
inline MonteCarloEstimate monte_carlo_expected(std::int64_t len, std::uint64_t samples, std::uint64_t seed) {
  if (len < 0) throw ValidationError("monte_carlo_expected: length must be nonnegative");
  if (samples < 1) throw ValidationError("monte_carlo_expected: samples must be >= 1");
  std::mt19937_64 rng(seed);
  const auto n = static_cast<std::size_t>(len);
  std::vector<std::uint8_t> bits(n);
  long double sum = 0;
  long double sum_sq = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i % 64 == 0) word = rng();
      bits[i] = static_cast<std::uint8_t>((word >> (i % 64)) & 1U);
    }
    const auto r = static_cast<long double>(simulate(ArrivalSequence(bits)).r());
    sum += r;
    sum_sq += r * r;
  }
  MonteCarloEstimate est;
  est.len = len;
  est.samples = samples;
  est.seed = seed;
  const long double count = static_cast<long double>(samples);
  const long double mean = sum / count;
  est.mean = static_cast<double>(mean);
  if (samples > 1) {
    const long double variance = (sum_sq - count * mean * mean) / (count - 1);
    est.standard_error = static_cast<double>(std::sqrt(std::max<long double>(variance, 0) / count));
  }
  return est;
}

}  // namespace merging::oracle
