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
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "merging/arrival.hpp"
#include "merging/error.hpp"

namespace merging {

/// Unordered edge of the looped complete graph on vertices 1..len, stored with i <= j.
struct Edge {
  std::int64_t i = 0;
  std::int64_t j = 0;

  static Edge between(std::int64_t a, std::int64_t b) { return a <= b ? Edge{a, b} : Edge{b, a}; }
  bool is_loop() const { return i == j; }
  std::string str() const { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Trail {
  std::vector<std::int64_t> vertices;
  std::vector<Edge> edges;

  std::size_t length() const { return edges.size(); }

  /// "4 -> 1 -> 1 -> 3"
  std::string str() const {
    std::string s;
    for (std::size_t v = 0; v < vertices.size(); ++v) {
      if (v) s += " -> ";
      s += std::to_string(vertices[v]);
    }
    return s;
  }
};

struct Domino {
  std::int64_t left = 0;
  std::int64_t right = 0;
  friend bool operator==(const Domino&, const Domino&) = default;
};

struct DominoSnake {
  std::vector<Domino> pieces;

  /// "[4:1][1:1][1:3]"
  std::string str() const {
    std::string s;
    for (const auto& d : pieces) s += "[" + std::to_string(d.left) + ":" + std::to_string(d.right) + "]";
    return s;
  }
};

namespace detail {

inline void check_trail_length(std::int64_t len) {
  if (len < 1) throw DomainError("trail: length must be >= 1, got " + std::to_string(len));
}

inline bool in_removed_matching(std::int64_t i, std::int64_t j, std::int64_t len) {
  // (1,2), (3,4), ..., (len-3, len-2) for even len
  return len % 2 == 0 && i % 2 == 1 && j == i + 1 && j <= len - 2;
}

inline ArrivalSequence single_zero(std::int64_t len, std::int64_t p) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(len), 1);
  bits[static_cast<std::size_t>(p - 1)] = 0;
  return ArrivalSequence(std::move(bits));
}

}  // namespace detail

/// Edge assigned to right-lane car c of the length-`len` sequence whose only 0 is at p.
inline Edge rho(std::int64_t c, std::int64_t p, std::int64_t len) {
  detail::check_trail_length(len);
  if (c < 1 || c > len || p < 1 || p > len) {
    throw DomainError("rho: indices c=" + std::to_string(c) + ", p=" + std::to_string(p) + " out of range 1.." +
                      std::to_string(len));
  }
  const MergeResult r = simulate(detail::single_zero(len, p));
  if (!std::binary_search(r.right_lane.begin(), r.right_lane.end(), static_cast<std::size_t>(c))) {
    throw DomainError("rho: car " + std::to_string(c) + " is not in the right lane when the 0 is at " +
                      std::to_string(p));
  }
  const bool p_odd = p % 2 == 1;
  if (len % 2 == 0) {
    if (c < p && p_odd) return Edge::between(c + 1, p);
    if (c == p - 1 && !p_odd && p < len) return Edge::between(p, len);
    if (c <= p && !p_odd) return Edge::between(c, p);
    if (c >= p && p_odd) return Edge::between(p, c);
    return Edge::between(p, c - 1);  // c > p, p even
  }
  if (c < p && p_odd) return Edge::between(c + 1, p);
  if (c == p) return Edge{p, p};
  if (c > p && p_odd) return Edge::between(p, c);
  if (c < p) return Edge::between(c, p);  // p even
  return Edge::between(p, c - 1);         // c > p, p even
}

struct CarAtZero {
  std::int64_t car = 0;
  std::int64_t zero_position = 0;
  friend bool operator==(const CarAtZero&, const CarAtZero&) = default;
};

inline CarAtZero rho_inverse(Edge e, std::int64_t len) {
  detail::check_trail_length(len);
  e = Edge::between(e.i, e.j);
  if (e.i < 1 || e.j > len) throw DomainError("rho_inverse: edge " + e.str() + " out of range");
  if (detail::in_removed_matching(e.i, e.j, len)) {
    throw DomainError("rho_inverse: edge " + e.str() + " is not in the image for even length " +
                      std::to_string(len));
  }
  const auto [i, j] = e;
  if (i == j) return {i, j};
  const bool i_odd = i % 2 == 1;
  const bool j_odd = j % 2 == 1;
  if (i_odd && j_odd) return {j, i};
  if (!i_odd && !j_odd) {
    if (len % 2 == 0 && j == len) return {i - 1, i};
    return {j + 1, i};
  }
  if (!i_odd) return {i - 1, j};  // j odd
  return {i, j};                  // i odd, j even
}

/// rho applied to every right-lane car of a sequence with exactly one 0.
inline std::set<Edge> rho_image(const ArrivalSequence& b) {
  if (b.zeros() != 1) {
    throw DomainError("rho_image: sequence " + b.str() + " must contain exactly one 0, has " +
                      std::to_string(b.zeros()));
  }
  const auto len = static_cast<std::int64_t>(b.size());
  std::int64_t p = 0;
  for (std::size_t i = 1; i <= b.size(); ++i) {
    if (b.bit(i) == 0) p = static_cast<std::int64_t>(i);
  }
  std::set<Edge> out;
  for (std::size_t c : simulate(b).right_lane) out.insert(rho(static_cast<std::int64_t>(c), p, len));
  return out;
}

/// C(len,2) + len for odd len, C(len,2) + len/2 + 1 for even len.
inline std::int64_t longest_trail_length(std::int64_t len) {
  detail::check_trail_length(len);
  const std::int64_t pairs = len * (len - 1) / 2;
  return len % 2 == 1 ? pairs + len : pairs + len / 2 + 1;
}

/// One longest trail: an Euler circuit (odd len) or an Euler trail from len to
/// len-1 of K_len minus the matching (1,2),(3,4),...,(len-3,len-2) (even len),
/// with each loop taken the last time its vertex appears. Neighbours are tried
/// lowest first.
inline Trail longest_trail(std::int64_t len) {
  detail::check_trail_length(len);
  const auto n = static_cast<std::size_t>(len);
  std::vector<std::vector<bool>> open(n + 1, std::vector<bool>(n + 1, false));
  for (std::int64_t a = 1; a <= len; ++a) {
    for (std::int64_t b = a + 1; b <= len; ++b) {
      if (!detail::in_removed_matching(a, b, len)) open[a][b] = open[b][a] = true;
    }
  }

  const std::int64_t start = len % 2 == 1 ? 1 : len;
  std::vector<std::int64_t> stack{start};
  std::vector<std::int64_t> walk;
  while (!stack.empty()) {
    const std::int64_t v = stack.back();
    std::int64_t next = 0;
    for (std::int64_t u = 1; u <= len; ++u) {
      if (open[v][u]) {
        next = u;
        break;
      }
    }
    if (next != 0) {
      open[v][next] = open[next][v] = false;
      stack.push_back(next);
    } else {
      walk.push_back(v);
      stack.pop_back();
    }
  }
  std::reverse(walk.begin(), walk.end());

  std::vector<std::size_t> last(n + 1, 0);
  for (std::size_t s = 0; s < walk.size(); ++s) last[static_cast<std::size_t>(walk[s])] = s;
  Trail trail;
  for (std::size_t s = 0; s < walk.size(); ++s) {
    trail.vertices.push_back(walk[s]);
    if (last[static_cast<std::size_t>(walk[s])] == s) trail.vertices.push_back(walk[s]);
  }
  for (std::size_t s = 0; s + 1 < trail.vertices.size(); ++s) {
    trail.edges.push_back(Edge::between(trail.vertices[s], trail.vertices[s + 1]));
  }
  return trail;
}

inline DominoSnake trail_to_snake(const Trail& t) {
  DominoSnake snake;
  for (std::size_t s = 0; s + 1 < t.vertices.size(); ++s) {
    snake.pieces.push_back(Domino{t.vertices[s], t.vertices[s + 1]});
  }
  return snake;
}

/// Consecutive incidence, no repeated edge, vertices within 1..len.
inline bool is_valid_trail(const Trail& t, std::int64_t len) {
  if (t.vertices.empty()) return t.edges.empty();
  if (t.edges.size() + 1 != t.vertices.size()) return false;
  std::set<Edge> used;
  for (std::size_t s = 0; s < t.edges.size(); ++s) {
    const std::int64_t a = t.vertices[s];
    const std::int64_t b = t.vertices[s + 1];
    if (a < 1 || a > len || b < 1 || b > len) return false;
    if (t.edges[s] != Edge::between(a, b)) return false;
    if (!used.insert(t.edges[s]).second) return false;
  }
  return true;
}

/// Vertices with odd degree in the trail's edge multiset (a loop adds 2).
inline std::vector<std::int64_t> odd_degree_vertices(const Trail& t) {
  std::map<std::int64_t, std::int64_t> degree;
  for (const Edge& e : t.edges) {
    degree[e.i] += 1;
    degree[e.j] += 1;
  }
  std::vector<std::int64_t> out;
  for (const auto& [v, d] : degree) {
    if (d % 2 == 1) out.push_back(v);
  }
  return out;
}

/// Adjacent pieces match end to end, no piece repeats, values within 1..len.
inline bool is_valid_snake(const DominoSnake& s, std::int64_t len) {
  std::set<Edge> used;
  for (std::size_t q = 0; q < s.pieces.size(); ++q) {
    const Domino& d = s.pieces[q];
    if (d.left < 1 || d.left > len || d.right < 1 || d.right > len) return false;
    if (q > 0 && s.pieces[q - 1].right != d.left) return false;
    if (!used.insert(Edge::between(d.left, d.right)).second) return false;
  }
  return true;
}

}  // namespace merging
