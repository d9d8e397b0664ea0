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
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "merging/bijections.hpp"
#include "merging/classes.hpp"
#include "merging/counting.hpp"
#include "merging/expectation.hpp"
#include "merging/io.hpp"

namespace merging::tables {

/// Rectangular grid of optional integers; rows are printed top to bottom in
/// the order given (the lattice tables put the largest row key first).
struct Grid {
  std::string title;
  std::string row_label;
  std::string col_label;
  std::vector<std::int64_t> rows;
  std::vector<std::int64_t> cols;
  std::vector<std::vector<std::optional<BigInt>>> cells;

  const std::optional<BigInt>& at(std::int64_t row, std::int64_t col) const {
    static const std::optional<BigInt> kEmpty;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r] != row) continue;
      for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c] == col) return cells[r][c];
      }
    }
    return kEmpty;
  }
};

/// Header "<row>\<col>,c0,c1,..." then one line per row; empty cells stay empty.
inline std::string to_csv(const Grid& g) {
  std::ostringstream out;
  out << g.row_label << "\\" << g.col_label;
  for (auto c : g.cols) out << "," << c;
  out << "\n";
  for (std::size_t r = 0; r < g.rows.size(); ++r) {
    out << g.rows[r];
    for (const auto& cell : g.cells[r]) {
      out << ",";
      if (cell) out << cell->str();
    }
    out << "\n";
  }
  return out.str();
}

inline std::string to_text(const Grid& g) {
  std::size_t width = 1;
  for (const auto& row : g.cells) {
    for (const auto& cell : row) {
      if (cell) width = std::max(width, cell->str().size());
    }
  }
  for (auto c : g.cols) width = std::max(width, std::to_string(c).size());
  auto pad = [&](const std::string& s) { return std::string(width + 1 - std::min(width + 1, s.size()), ' ') + s; };
  std::ostringstream out;
  if (!g.title.empty()) out << g.title << "\n";
  for (std::size_t r = 0; r < g.rows.size(); ++r) {
    out << pad(std::to_string(g.rows[r])) << " |";
    for (const auto& cell : g.cells[r]) out << pad(cell ? cell->str() : "");
    out << "\n";
  }
  out << std::string(width + 3, ' ') << std::string((width + 1) * g.cols.size(), '-') << "\n";
  out << pad(g.row_label + "/" + g.col_label) << "  ";
  for (auto c : g.cols) out << pad(std::to_string(c));
  out << "\n";
  return out.str();
}

inline io::Json to_json(const Grid& g) {
  io::Json j;
  j["title"] = g.title;
  j["row_label"] = g.row_label;
  j["col_label"] = g.col_label;
  j["rows"] = g.rows;
  j["cols"] = g.cols;
  j["cells"] = io::Json::array();
  for (const auto& row : g.cells) {
    io::Json jr = io::Json::array();
    for (const auto& cell : row) jr.push_back(cell ? io::big(*cell) : io::Json(nullptr));
    j["cells"].push_back(jr);
  }
  return j;
}

namespace detail {

inline std::vector<std::int64_t> descending(std::int64_t hi, std::int64_t lo) {
  std::vector<std::int64_t> v;
  for (std::int64_t x = hi; x >= lo; --x) v.push_back(x);
  return v;
}

inline std::vector<std::int64_t> ascending(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> v;
  for (std::int64_t x = lo; x <= hi; ++x) v.push_back(x);
  return v;
}

inline void check_max(std::int64_t v, const char* name) {
  if (v < 0) throw ValidationError(std::string(name) + " must be nonnegative");
  if (v > 200) throw ResourceError(std::string(name) + " exceeds the table limit of 200");
}

}  // namespace detail

/// Merging paths ending at (n, m), 0 <= n <= m <= max_index.
inline Grid path_counts(std::int64_t max_index) {
  detail::check_max(max_index, "max");
  Grid g{"Number of merging paths ending at (n,m)", "m", "n", detail::descending(max_index, 0),
         detail::ascending(0, max_index), {}};
  for (auto m : g.rows) {
    auto& row = g.cells.emplace_back();
    for (auto n : g.cols) row.push_back(n <= m ? std::optional<BigInt>(m_count_closed(n, m)) : std::nullopt);
  }
  return g;
}

/// Right-lane sums over B_{len,k}, 0 <= k <= len <= max_len.
inline Grid lane_sums(std::int64_t max_len) {
  detail::check_max(max_len, "max");
  Grid g{"Sum of right lane lengths over sequences of length l with k zeros", "l", "k",
         detail::descending(max_len, 0), detail::ascending(0, max_len), {}};
  for (auto len : g.rows) {
    auto& row = g.cells.emplace_back();
    for (auto k : g.cols) row.push_back(k <= len ? std::optional<BigInt>(right_lane_sum_k(len, k)) : std::nullopt);
  }
  return g;
}

/// Paths to (n, m) with exactly k zeros for m_min <= m <= m_max, 0 <= n <= min(m, n_max).
inline Grid path_counts_k(std::int64_t k, std::int64_t m_min, std::int64_t m_max, std::int64_t n_max) {
  detail::check_max(k, "k");
  detail::check_max(m_max, "m");
  detail::check_max(n_max, "n");
  if (m_min < 0 || m_min > m_max) throw ValidationError("path_counts_k: need 0 <= m_min <= m_max");
  Grid g{"Merging paths ending at (n,m) with k=" + std::to_string(k) + " zeros", "m", "n",
         detail::descending(m_max, m_min), detail::ascending(0, n_max), {}};
  for (auto m : g.rows) {
    auto& row = g.cells.emplace_back();
    for (auto n : g.cols) {
      row.push_back(n <= m ? std::optional<BigInt>(m_count_k_recursive(n, m, k)) : std::nullopt);
    }
  }
  return g;
}

/// Blocks for k = 0..k_max, rows m = 0..n_max+1, columns n = 0..n_max.
inline std::vector<Grid> small_k_blocks(std::int64_t k_max, std::int64_t n_max) {
  std::vector<Grid> out;
  for (std::int64_t k = 0; k <= k_max; ++k) out.push_back(path_counts_k(k, 0, n_max + 1, n_max));
  return out;
}

/// Single-k layout: rows m = k..n_max+1, columns n = 0..n_max+1.
inline Grid fixed_k_block(std::int64_t k, std::int64_t n_max) {
  return path_counts_k(k, k, std::max(k, n_max + 1), std::max(k, n_max + 1));
}

/// One row per sequence of length len: b, r(b), p, phi(b), max.
inline std::string phi_table_csv(std::int64_t len) {
  detail::check_max(len, "length");
  if (len > 20) throw ResourceError("phi table: length exceeds 20");
  std::ostringstream out;
  out << "b,r,p,c,max\n";
  const auto n = static_cast<std::size_t>(len);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    // Lexicographic order on the printed string: car 1 is the most significant bit.
    std::vector<std::uint8_t> bits(n);
    for (std::size_t i = 0; i < n; ++i) bits[i] = static_cast<std::uint8_t>((mask >> (n - 1 - i)) & 1U);
    const ArrivalSequence b(bits);
    const MergeResult r = simulate(b);
    const CoinSequence c = phi(b);
    out << b.str() << "," << r.r() << "," << r.parity.str() << "," << c.str() << "," << max_heads_tails(c) << "\n";
  }
  return out.str();
}

inline std::string classes_csv(const std::vector<ColorBlindClass>& classes) {
  std::ostringstream out;
  out << "class,member,right_lane,touches,size\n";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    auto join = [](const std::vector<std::size_t>& v) {
      std::string s;
      for (std::size_t q = 0; q < v.size(); ++q) s += (q ? " " : "") + std::to_string(v[q]);
      return s;
    };
    for (const auto& m : classes[i].members) {
      out << i + 1 << "," << m.str() << "," << join(classes[i].right_lane_vector) << ","
          << join(classes[i].touch_vector) << "," << classes[i].size() << "\n";
    }
  }
  return out.str();
}

inline std::string classes_text(const std::vector<ColorBlindClass>& classes) {
  std::ostringstream out;
  for (const auto& cls : classes) {
    out << "right lane (";
    for (std::size_t q = 0; q < cls.right_lane_vector.size(); ++q) out << (q ? "," : "") << cls.right_lane_vector[q];
    out << ")  touches (";
    for (std::size_t q = 0; q < cls.touch_vector.size(); ++q) out << (q ? "," : "") << cls.touch_vector[q];
    out << ")  size " << cls.size() << "\n";
    for (const auto& m : cls.members) out << "  " << m.str() << "\n";
  }
  return out.str();
}

/// OEIS b-file: "index value" per line from offset 0.
inline std::string lane_sum_bfile(std::int64_t max_len) {
  if (max_len < 0) throw ValidationError("b-file: max must be nonnegative");
  std::ostringstream out;
  for (std::int64_t len = 0; len <= max_len; ++len) out << len << " " << right_lane_sum(len).str() << "\n";
  return out.str();
}

}  // namespace merging::tables
